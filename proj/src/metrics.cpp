#include "riskpref/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "riskpref/errors.hpp"

namespace riskpref {

std::string to_string(Attribute a) {
    switch (a) {
        case Attribute::Gender: return "Gender";
        case Attribute::Age: return "Age";
        case Attribute::Education: return "Education";
        case Attribute::Income: return "Income";
    }
    return {};
}

std::string to_string(Tendency t) {
    switch (t) {
        case Tendency::Positive: return "+";
        case Tendency::Negative: return "-";
        case Tendency::NotApplicable: return "n/a";
    }
    return {};
}

double rds(const GroupedSample& sample) {
    if (sample.values.size() != sample.groups.size()) {
        throw ShapeError("grouped sample: values and groups differ in length");
    }
    const std::size_t n = sample.values.size();
    if (n < 2) throw ShapeError("grouped sample needs at least two observations");

    std::map<std::string, std::pair<double, std::size_t>> by_group;  // sum, count
    double total_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        auto& [sum, count] = by_group[sample.groups[i]];
        sum += sample.values[i];
        ++count;
        total_sum += sample.values[i];
    }
    if (by_group.size() < 2) {
        throw GroupError("grouped sample has a single group: '" + by_group.begin()->first + "'");
    }

    const double grand_mean = total_sum / static_cast<double>(n);
    double total_ss = 0.0;
    for (double y : sample.values) total_ss += (y - grand_mean) * (y - grand_mean);
    if (total_ss == 0.0) return 0.0;

    double between_ss = 0.0;
    for (const auto& [group, agg] : by_group) {
        const double mean_g = agg.first / static_cast<double>(agg.second);
        between_ss += static_cast<double>(agg.second) * (mean_g - grand_mean) * (mean_g - grand_mean);
    }
    return between_ss / total_ss;
}

Tendency tendency_sign(const std::map<std::string, double>& group_means,
                       const std::vector<std::string>& reference) {
    for (const auto& [group, mean] : group_means) {
        if (std::find(reference.begin(), reference.end(), group) == reference.end()) {
            throw UnknownGroupError("group '" + group + "' absent from the reference ordering");
        }
    }
    // Walk the reference restricted to observed groups.
    std::vector<double> means;
    for (const std::string& group : reference) {
        auto it = group_means.find(group);
        if (it != group_means.end()) means.push_back(it->second);
    }
    bool strict_step = false;
    for (std::size_t i = 1; i < means.size(); ++i) {
        if (means[i] < means[i - 1]) return Tendency::Negative;
        if (means[i] > means[i - 1]) strict_step = true;
    }
    return strict_step ? Tendency::Positive : Tendency::NotApplicable;
}

const std::vector<std::string>& ReferenceOrderings::for_attribute(Attribute a) const {
    switch (a) {
        case Attribute::Gender: return gender;
        case Attribute::Age: return age;
        case Attribute::Education: return education;
        case Attribute::Income: return income;
    }
    return gender;
}

std::string attribute_group(const Persona& persona, Attribute attribute) {
    switch (attribute) {
        case Attribute::Gender: return to_string(persona.gender);
        case Attribute::Age: return to_string(persona.age_band);
        case Attribute::Education: return to_string(persona.education);
        case Attribute::Income: return to_string(persona.income_band);
    }
    return {};
}

const RDSEntry* RDSReport::find(Attribute a) const {
    for (const RDSEntry& e : entries) {
        if (e.attribute == a) return &e;
    }
    return nullptr;
}

RDSReport rds_report(const std::vector<double>& values, const std::vector<Persona>& personas,
                     const ReferenceOrderings& references) {
    if (values.size() != personas.size()) {
        throw ShapeError("rds_report: values and personas differ in length");
    }
    RDSReport report;
    double sum = 0.0;
    for (Attribute attribute : kAllAttributes) {
        RDSEntry entry;
        entry.attribute = attribute;
        GroupedSample sample;
        sample.attribute = attribute;
        sample.values = values;
        sample.groups.reserve(personas.size());
        for (const Persona& p : personas) sample.groups.push_back(attribute_group(p, attribute));
        try {
            entry.rds = rds(sample);
            std::map<std::string, std::pair<double, std::size_t>> agg;
            for (std::size_t i = 0; i < values.size(); ++i) {
                auto& [s, c] = agg[sample.groups[i]];
                s += values[i];
                ++c;
            }
            for (const auto& [group, sc] : agg) {
                entry.group_means[group] = sc.first / static_cast<double>(sc.second);
            }
            double total = 0.0, mean = 0.0;
            for (double y : values) mean += y;
            mean /= static_cast<double>(values.size());
            for (double y : values) total += (y - mean) * (y - mean);
            entry.degenerate = total == 0.0;
            entry.sign = tendency_sign(entry.group_means, references.for_attribute(attribute));
        } catch (const Error& e) {
            entry.failed = true;
            entry.error = e.what();
            entry.rds = 0.0;
            entry.sign = Tendency::NotApplicable;
        }
        sum += entry.rds;
        report.entries.push_back(std::move(entry));
    }
    report.average = sum / static_cast<double>(report.entries.size());
    return report;
}

}  // namespace riskpref
