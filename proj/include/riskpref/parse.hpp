#pragma once

#include <array>
#include <string>

#include "riskpref/ladder.hpp"
#include "riskpref/prospect.hpp"

namespace riskpref {

/// Extract one accept/reject token per rung, in rendered order. Tolerates
/// surrounding prose and a trailing "Reason:" clause. Throws ParseError when
/// the token count differs from the ladder length or a token is neither
/// accept nor reject.
DecisionSequence parse_decision_sequence(const std::string& text, const SureOptionLadder& ladder);

/// Leading (1)/(2)/(3) choice of the study-1 answer. Returns 1, 2 or 3.
int parse_choice_token(const std::string& text);

/// First numeric token of a study-2 answer, validated against the
/// endowment. Throws ParseError (no number) or RangeError (outside
/// [0, endowment]).
double parse_allocation_amount(const std::string& text, double endowment = 10.0);

inline constexpr std::array<const char*, 4> kCaseStudyAssets = {
    "Cryptocurrencies", "Growth Stocks", "Distressed Bonds", "Government Bonds"};

/// Dollar split across the four case-study assets, in kCaseStudyAssets
/// order.
struct CaseAllocation {
    std::array<double, 4> amounts{};

    double sum() const { return amounts[0] + amounts[1] + amounts[2] + amounts[3]; }
};

/// Parse "Cryptocurrencies : [x], Growth Stocks : [x], Distressed Bonds :
/// [x], Government Bonds : [x]". Throws FormatError for a missing asset or
/// malformed number, SumError when the amounts do not total 100 +- 0.01.
CaseAllocation parse_case_allocation(const std::string& text);

}  // namespace riskpref
