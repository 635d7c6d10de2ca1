#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace riskpref {

enum class Gender { Male, Female };
enum class AgeBand { A20_30, A30_40, A40_50, A50_60 };
enum class Education { BelowBachelor, Bachelor, MasterOrAbove };
enum class IncomeBand { I0_50k, I50_100k, I100_200k, IOver200k };

/// Evaluation-dataset class: risk-seeking/averse combinations over gains
/// and losses, encoded by the expected size of alpha and beta.
enum class RiskClass { C1, C2, C3, C4 };

std::string to_string(Gender g);
std::string to_string(AgeBand a);
std::string to_string(Education e);
std::string to_string(IncomeBand i);
std::string to_string(RiskClass c);

Gender gender_from_string(const std::string& s);
AgeBand age_band_from_string(const std::string& s);
Education education_from_string(const std::string& s);
IncomeBand income_band_from_string(const std::string& s);
RiskClass risk_class_from_string(const std::string& s);

constexpr RiskClass kAllClasses[] = {RiskClass::C1, RiskClass::C2, RiskClass::C3, RiskClass::C4};

/// A described individual with four demographic attributes; the unit of
/// evaluation. `risk_class` is the optional evaluation-dataset tag.
struct Persona {
    std::string id;
    std::string description;
    Gender gender = Gender::Male;
    AgeBand age_band = AgeBand::A20_30;
    Education education = Education::Bachelor;
    IncomeBand income_band = IncomeBand::I0_50k;
    std::optional<RiskClass> risk_class;
};

/// Parse a line-delimited JSON persona file. Every record must carry all
/// four demographic attributes with values from their enumerations and a
/// non-empty description. Throws SchemaError (with the line number) or
/// DuplicateIdError.
std::vector<Persona> load_personas(const std::filesystem::path& path);

void save_personas(const std::vector<Persona>& personas, const std::filesystem::path& path);

}  // namespace riskpref
