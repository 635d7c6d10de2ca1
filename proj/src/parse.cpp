#include "riskpref/parse.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <regex>

#include "riskpref/text.hpp"

namespace riskpref {

namespace {

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

/// Position where an answer's trailing "Reason:" clause begins, or npos.
std::size_t reason_clause_start(const std::string& lower) {
    static const std::regex re(R"(\breason\s*:)");
    std::smatch m;
    if (std::regex_search(lower, m, re)) return static_cast<std::size_t>(m.position(0));
    return std::string::npos;
}

}  // namespace

DecisionSequence parse_decision_sequence(const std::string& text, const SureOptionLadder& ladder) {
    const std::size_t n = ladder.size();
    std::string lower = to_lower(text);
    const std::size_t cut = reason_clause_start(lower);
    if (cut != std::string::npos) lower.resize(cut);

    // Structured pass: a token after each "]:" marker, as the answer format
    // prescribes. Tokens may themselves be bracketed ("[accept]").
    std::vector<Decision> decisions;
    std::size_t markers = 0;
    for (std::size_t pos = lower.find("]:"); pos != std::string::npos;
         pos = lower.find("]:", pos + 2)) {
        ++markers;
        std::size_t i = pos + 2;
        while (i < lower.size() && (std::isspace(static_cast<unsigned char>(lower[i])) != 0 ||
                                    lower[i] == '[')) {
            ++i;
        }
        std::size_t j = i;
        while (j < lower.size() && is_word_char(lower[j])) ++j;
        const std::string token = lower.substr(i, j - i);
        if (token == "accept") {
            decisions.push_back(Decision::Accept);
        } else if (token == "reject") {
            decisions.push_back(Decision::Reject);
        } else {
            throw ParseError("decision token is neither accept nor reject: '" + token + "'");
        }
    }

    if (markers == 0) {
        // Fallback: bare accept/reject words in order.
        static const std::regex re(R"(\b(accept|reject)\b)");
        for (auto it = std::sregex_iterator(lower.begin(), lower.end(), re);
             it != std::sregex_iterator(); ++it) {
            decisions.push_back((*it)[1] == "accept" ? Decision::Accept : Decision::Reject);
        }
    }

    if (decisions.size() != n) {
        throw ParseError("expected " + std::to_string(n) + " decision tokens, found " +
                         std::to_string(decisions.size()));
    }
    return decisions;
}

int parse_choice_token(const std::string& text) {
    static const std::regex paren(R"(\(\s*([123])\s*\))");
    std::smatch m;
    if (std::regex_search(text, m, paren)) return m[1].str()[0] - '0';

    // Tolerate a bare digit standing alone.
    static const std::regex bare(R"((^|[^\w.])([123])($|[^\w.]))");
    if (std::regex_search(text, m, bare)) return m[2].str()[0] - '0';

    throw ParseError("no (1)/(2)/(3) choice token found in answer");
}

double parse_allocation_amount(const std::string& text, double endowment) {
    static const std::regex number(R"([-+]?\d+(\.\d+)?)");
    std::smatch m;
    if (!std::regex_search(text, m, number)) {
        throw ParseError("no numeric token found in allocation answer");
    }
    const double amount = std::strtod(m.str(0).c_str(), nullptr);
    if (amount < 0.0 || amount > endowment) {
        throw RangeError("allocation " + m.str(0) + " outside [0, " + format_money_trim(endowment) +
                         "]");
    }
    return amount;
}

CaseAllocation parse_case_allocation(const std::string& text) {
    const std::string lower = to_lower(text);
    CaseAllocation alloc;
    for (std::size_t k = 0; k < kCaseStudyAssets.size(); ++k) {
        const std::string name = to_lower(kCaseStudyAssets[k]);
        const std::size_t at = lower.find(name);
        if (at == std::string::npos) {
            throw FormatError(std::string("missing asset '") + kCaseStudyAssets[k] +
                              "' in case-study answer");
        }
        std::size_t i = at + name.size();
        while (i < lower.size() && std::isspace(static_cast<unsigned char>(lower[i])) != 0) ++i;
        if (i >= lower.size() || lower[i] != ':') {
            throw FormatError(std::string("expected ':' after asset '") + kCaseStudyAssets[k] +
                              "'");
        }
        ++i;
        while (i < lower.size() && (std::isspace(static_cast<unsigned char>(lower[i])) != 0 ||
                                    lower[i] == '[' || lower[i] == '$')) {
            ++i;
        }
        static const std::regex number(R"(^[-+]?\d+(\.\d+)?)");
        std::smatch m;
        const std::string rest = lower.substr(i);
        if (!std::regex_search(rest, m, number)) {
            throw FormatError(std::string("malformed number for asset '") + kCaseStudyAssets[k] +
                              "'");
        }
        alloc.amounts[k] = std::strtod(m.str(0).c_str(), nullptr);
    }
    if (std::abs(alloc.sum() - 100.0) > 0.01) {
        throw SumError("case-study allocation sums to " + format_money_2f(alloc.sum()) +
                       ", expected 100");
    }
    return alloc;
}

}  // namespace riskpref
