#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace riskpref {

// Dollar/percent formatting used by the prompt templates. The three styles
// coexist because the templates themselves mix them: option lines carry two
// decimals, expected-value lines drop trailing zeros, and demonstration
// ladders keep at least one decimal.

/// "1234.5" -> "1234.50", "-75" -> "-75.00"
std::string format_money_2f(double x);

/// Two decimals with trailing zeros (and a trailing dot) stripped:
/// 130.0 -> "130", 178.18 -> "178.18", -70.0 -> "-70"
std::string format_money_trim(double x);

/// Two decimals with at most one trailing zero stripped, keeping one
/// decimal place: -75.0 -> "-75.0", -71.22 -> "-71.22", 112.2 -> "112.2"
std::string format_money_min1(double x);

/// Probability as a percent string without trailing zeros: 0.3 -> "30",
/// 0.125 -> "12.5"
std::string format_percent(double p);

/// 64-bit FNV-1a digest rendered as 16 lowercase hex characters.
std::string digest_hex(std::string_view data);

/// splitmix64 bit mixer; used to derive independent deterministic seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b = 0x9e3779b97f4a7c15ull);

std::string to_lower(std::string_view s);

/// Whitespace-trimmed copy.
std::string trim(std::string_view s);

}  // namespace riskpref
