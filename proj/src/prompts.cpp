#include "riskpref/prompts.hpp"

#include "riskpref/text.hpp"

namespace riskpref {

std::string render_study1_prompt(const Persona& persona) {
    return persona.description +
           " What is his/her attitude towards risk as an investor? Choose the following type "
           "that fits he/she the most: Is he/she (1) risk-loving, (2) risk-neutral, or (3) "
           "risk-averse? Directly output you answer as (1), (2), or (3). ANSWER:";
}

std::string render_study2_prompt(const Persona& persona, const MarketConfig& market) {
    if (market.sp500.empty() || market.treasury.empty()) {
        throw ValidationError("study 2 requires configured market statistics text blocks");
    }
    return "Pretend you are an agent with this following persona. Persona Description: " +
           persona.description +
           ". You have an endowment of 10 dollars. You can choose any part of it to invest in "
           "S&P 500 ETF (risky asset), or 10-year Treasury note (safe asset) for one month "
           "period. Here are the historical average monthly returns and standard deviations "
           "for both options. " +
           market.sp500 + ". " + market.treasury +
           ". Output the amount of money you choose to invest in S&P 500 ETF (range from 0 to "
           "10 dollars). ANSWER:";
}

std::string sure_option_text(double rung) {
    return format_money_2f(rung) + " dollars with 100% probability";
}

std::string render_study3_prompt(const Persona& persona, const Prospect& prospect,
                                 const SureOptionLadder& ladder) {
    if (!(ladder.prospect == prospect)) {
        throw ValidationError("render_study3_prompt: ladder was built for a different prospect");
    }
    std::string text;
    text +=
        "Premise: Pretend you are an agent with the given following persona. You are given a "
        "prospect and a set of sure options. You will compare the prospect to each of the sure "
        "options one-by-one. If you reject the sure option, you would play the prospect. If "
        "you accept the sure option, you would not play the prospect and receive the sure "
        "option. If the dollar values are positive, you win that amount. If the dollar values "
        "are negative, you lose that amount.\n";
    text += "Persona: " + persona.description + "\n";
    text +=
        "Instructions: For each sure option, indicate whether you would accept or reject the "
        "sure option. Your decision must meet two requirements: 1) Your decision should be "
        "based on the risk preference inferred from your persona. 2) Your decision must follow "
        "economic logic, meaning that it should start with accept, include exactly one turning "
        "point to reject, and then remain reject thereafter. The timing of the turning point "
        "should reflect your inferred risk preference. Your answer must strictly adhere to "
        "these two requirements.\n";
    text +=
        "Answer Format: Please answer in the following format. Do not deviate from the format, "
        "and do not add any additional words to response outside of the format. The order of "
        "the sure option in your answer should be the same with in User Prompt: "
        "[sure option 1]: [accept/reject] [sure option 2]: [accept/reject] ... [sure option " +
        std::to_string(ladder.size()) + "]: [accept/reject] Reason: [reason for choices].\n";
    text += "User Prompt: The prospect is " + format_money_2f(prospect.x1) + " dollars with " +
            format_percent(prospect.p1) + "% probability and " + format_money_2f(prospect.x2) +
            " dollars with " + format_percent(prospect.p2) +
            "% probability. The expected value of the prospect is " +
            format_money_trim(prospect.expected_value()) +
            " dollars. Below are the alternative sure outcomes. ";
    for (std::size_t i = 0; i < ladder.size(); ++i) {
        if (i > 0) text += ' ';
        text += sure_option_text(ladder.rungs[i]);
    }
    text += ". OUTPUT:";
    return text;
}

std::string render_case_study_prompt(const Persona& persona) {
    return "Pretend you are an agent with this following persona: " + persona.description +
           ". You have an endowment of 100 dollars. Based on your risk preference for gain and "
           "loss, you can choose any part of it to invest in Cryptocurrencies (unpredictable "
           "gain or loss), Growth Stocks (unpredictable gain, predictable loss), Distressed "
           "Bonds (unpredictable loss, predictable gain), Government Bonds (predictable gain "
           "or loss) for one month period. Your answer must be in following format: "
           "Cryptocurrencies : [dollar amount], Growth Stocks : [dollar amount], Distressed "
           "Bonds : [dollar amount], Government Bonds : [dollar amount]. The sum of four "
           "assets must equal to 100 dollars. ANSWER:";
}

std::string render_decision_answer(const SureOptionLadder& ladder, const DecisionSequence& seq,
                                   const std::string& reason) {
    if (seq.size() != ladder.size()) {
        throw ValidationError("render_decision_answer: sequence length does not match ladder");
    }
    std::string text;
    for (std::size_t i = 0; i < ladder.size(); ++i) {
        if (i > 0) text += ' ';
        text += '[' + sure_option_text(ladder.rungs[i]) +
                "]: " + (seq[i] == Decision::Accept ? "accept" : "reject");
    }
    text += " Reason: " + reason + ".";
    return text;
}

}  // namespace riskpref
