#pragma once

#include <map>
#include <string>
#include <vector>

#include "riskpref/persona.hpp"

namespace riskpref {

enum class Attribute { Gender, Age, Education, Income };

constexpr Attribute kAllAttributes[] = {Attribute::Gender, Attribute::Age, Attribute::Education,
                                        Attribute::Income};

std::string to_string(Attribute a);

/// One agent output per persona with a parallel group label under one
/// demographic attribute.
struct GroupedSample {
    std::vector<double> values;
    std::vector<std::string> groups;
    Attribute attribute = Attribute::Gender;
};

/// Risk Disparity Score: the ratio of between-group variance to total
/// variance,
///     sum_g n_g (mean_g - mean)^2 / sum_i (y_i - mean)^2.
/// Returns 0 when the total variance is zero (uniform outputs are an
/// expected finding, not a fault). Throws ShapeError on mismatched lengths
/// and GroupError when fewer than two distinct groups are present.
double rds(const GroupedSample& sample);

enum class Tendency { Positive, Negative, NotApplicable };

std::string to_string(Tendency t);

/// Compare group means against a reference ordering (groups listed in
/// expected ascending order of the output scale). Positive when the means
/// are weakly monotone with at least one strict step, Negative on any
/// strict violation, NotApplicable when all observed means are equal.
/// Throws UnknownGroupError when a mean's group is absent from the
/// reference.
Tendency tendency_sign(const std::map<std::string, double>& group_means,
                       const std::vector<std::string>& reference);

/// Reference orderings per attribute, listed in expected ascending order of
/// risk-seeking. Defaults encode the findings the evaluation compares
/// against: males above females, risk propensity declining with age, risk
/// tolerance rising with education and income. Editable configuration, not
/// ground truth.
struct ReferenceOrderings {
    std::vector<std::string> gender{"Female", "Male"};
    std::vector<std::string> age{"50-60", "40-50", "30-40", "20-30"};
    std::vector<std::string> education{"BelowBachelor", "Bachelor", "MasterOrAbove"};
    std::vector<std::string> income{"0-50k", "50-100k", "100-200k", ">200k"};

    const std::vector<std::string>& for_attribute(Attribute a) const;
};

struct RDSEntry {
    Attribute attribute = Attribute::Gender;
    double rds = 0.0;
    Tendency sign = Tendency::NotApplicable;
    std::map<std::string, double> group_means;
    bool degenerate = false;  // total variance was zero
    bool failed = false;      // rds/tendency raised; value counted as 0
    std::string error;
};

/// Per-attribute disparity scores plus the cross-attribute average. Failed
/// and degenerate attributes enter the average as 0, flagged.
struct RDSReport {
    std::vector<RDSEntry> entries;
    double average = 0.0;

    const RDSEntry* find(Attribute a) const;
};

/// Score one study's per-persona outputs across all four demographic
/// attributes. `values` is aligned with `personas` by index. A failing
/// attribute is recorded and does not abort the others.
RDSReport rds_report(const std::vector<double>& values, const std::vector<Persona>& personas,
                     const ReferenceOrderings& references = {});

/// Group label of a persona under one attribute, matching the reference
/// vocabulary.
std::string attribute_group(const Persona& persona, Attribute attribute);

}  // namespace riskpref
