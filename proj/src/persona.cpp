#include "riskpref/persona.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

#include "riskpref/errors.hpp"

namespace riskpref {

using nlohmann::json;

std::string to_string(Gender g) { return g == Gender::Male ? "Male" : "Female"; }

std::string to_string(AgeBand a) {
    switch (a) {
        case AgeBand::A20_30: return "20-30";
        case AgeBand::A30_40: return "30-40";
        case AgeBand::A40_50: return "40-50";
        case AgeBand::A50_60: return "50-60";
    }
    return {};
}

std::string to_string(Education e) {
    switch (e) {
        case Education::BelowBachelor: return "BelowBachelor";
        case Education::Bachelor: return "Bachelor";
        case Education::MasterOrAbove: return "MasterOrAbove";
    }
    return {};
}

std::string to_string(IncomeBand i) {
    switch (i) {
        case IncomeBand::I0_50k: return "0-50k";
        case IncomeBand::I50_100k: return "50-100k";
        case IncomeBand::I100_200k: return "100-200k";
        case IncomeBand::IOver200k: return ">200k";
    }
    return {};
}

std::string to_string(RiskClass c) {
    switch (c) {
        case RiskClass::C1: return "C1";
        case RiskClass::C2: return "C2";
        case RiskClass::C3: return "C3";
        case RiskClass::C4: return "C4";
    }
    return {};
}

namespace {

template <typename E>
E enum_from_string(const std::string& s, std::initializer_list<E> values, const char* what) {
    for (E v : values) {
        if (to_string(v) == s) return v;
    }
    throw SchemaError(std::string("unknown ") + what + ": '" + s + "'");
}

}  // namespace

Gender gender_from_string(const std::string& s) {
    return enum_from_string(s, {Gender::Male, Gender::Female}, "gender");
}

AgeBand age_band_from_string(const std::string& s) {
    return enum_from_string(
        s, {AgeBand::A20_30, AgeBand::A30_40, AgeBand::A40_50, AgeBand::A50_60}, "age_band");
}

Education education_from_string(const std::string& s) {
    return enum_from_string(
        s, {Education::BelowBachelor, Education::Bachelor, Education::MasterOrAbove}, "education");
}

IncomeBand income_band_from_string(const std::string& s) {
    return enum_from_string(
        s, {IncomeBand::I0_50k, IncomeBand::I50_100k, IncomeBand::I100_200k, IncomeBand::IOver200k},
        "income_band");
}

RiskClass risk_class_from_string(const std::string& s) {
    return enum_from_string(s, {RiskClass::C1, RiskClass::C2, RiskClass::C3, RiskClass::C4},
                            "risk_class");
}

std::vector<Persona> load_personas(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open persona file: " + path.string());

    std::vector<Persona> personas;
    std::set<std::string> seen_ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json record;
        try {
            record = json::parse(line);
        } catch (const json::exception& e) {
            throw SchemaError("persona file line " + std::to_string(line_no) +
                              ": invalid JSON: " + e.what());
        }
        try {
            Persona p;
            p.id = record.at("id").get<std::string>();
            p.description = record.at("description").get<std::string>();
            if (p.description.empty()) throw SchemaError("description must be non-empty");
            p.gender = gender_from_string(record.at("gender").get<std::string>());
            p.age_band = age_band_from_string(record.at("age_band").get<std::string>());
            p.education = education_from_string(record.at("education").get<std::string>());
            p.income_band = income_band_from_string(record.at("income_band").get<std::string>());
            if (record.contains("risk_class")) {
                p.risk_class = risk_class_from_string(record.at("risk_class").get<std::string>());
            }
            if (!seen_ids.insert(p.id).second) {
                throw DuplicateIdError("duplicate persona id '" + p.id + "' at line " +
                                       std::to_string(line_no));
            }
            personas.push_back(std::move(p));
        } catch (const DuplicateIdError&) {
            throw;
        } catch (const json::exception& e) {
            throw SchemaError("persona file line " + std::to_string(line_no) + ": " + e.what());
        } catch (const SchemaError& e) {
            throw SchemaError("persona file line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return personas;
}

void save_personas(const std::vector<Persona>& personas, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write persona file: " + path.string());
    for (const Persona& p : personas) {
        json record;
        record["id"] = p.id;
        record["description"] = p.description;
        record["gender"] = to_string(p.gender);
        record["age_band"] = to_string(p.age_band);
        record["education"] = to_string(p.education);
        record["income_band"] = to_string(p.income_band);
        if (p.risk_class) record["risk_class"] = to_string(*p.risk_class);
        out << record.dump() << '\n';
    }
}

}  // namespace riskpref
