#pragma once

#include <string>

#include "riskpref/ladder.hpp"
#include "riskpref/persona.hpp"
#include "riskpref/prospect.hpp"

namespace riskpref {

/// Bump when any template text changes; emitted with run metadata so stored
/// journals can be matched to the template that produced them.
inline constexpr const char* kPromptTemplateVersion = "1";

/// Study 2 market-statistics text blocks. The prompt leaves these as
/// placeholders; values are configuration, never shipped constants.
struct MarketConfig {
    std::string sp500;
    std::string treasury;
};

/// Direct risk-preference classification question.
std::string render_study1_prompt(const Persona& persona);

/// Stock/bond investment allocation question (10-dollar endowment).
std::string render_study2_prompt(const Persona& persona, const MarketConfig& market);

/// Gamble-versus-sure-options elicitation prompt with Premise / Persona /
/// Instructions / Answer Format / User Prompt sections. Sure options carry
/// two decimals; the expected value is stated with trailing zeros trimmed.
std::string render_study3_prompt(const Persona& persona, const Prospect& prospect,
                                 const SureOptionLadder& ladder);

/// Four-asset allocation question (100-dollar endowment).
std::string render_case_study_prompt(const Persona& persona);

/// Answer text in the study-3 answer format:
/// "[<option> dollars with 100% probability]: accept ... Reason: <text>."
std::string render_decision_answer(const SureOptionLadder& ladder, const DecisionSequence& seq,
                                   const std::string& reason);

/// The sure-option line used inside prompts and answers, without brackets.
std::string sure_option_text(double rung);

}  // namespace riskpref
