#include "args.hpp"

#include <charconv>

namespace numrange::cli {

namespace {

double parse_real(std::string_view text, std::string_view whole) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw UsageError("cannot parse number '" + std::string(text) + "' in '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
    throw UsageError("expected re,im but got '" + std::string(text) + "'");
  }
  return {parse_real(text.substr(0, comma), text), parse_real(text.substr(comma + 1), text)};
}

BlaschkeFactor parse_zero(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return {parse_complex(text), 1};
  const std::string_view mult = text.substr(colon + 1);
  int m = 0;
  const auto [ptr, ec] = std::from_chars(mult.data(), mult.data() + mult.size(), m);
  if (mult.empty() || ec != std::errc() || ptr != mult.data() + mult.size() || m < 1) {
    throw UsageError("bad multiplicity in '" + std::string(text) + "'");
  }
  return {parse_complex(text.substr(0, colon)), m};
}

std::vector<BlaschkeFactor> resolve_factors(const ZeroSpec& spec) {
  const bool single = spec.alpha.has_value() || spec.n.has_value();
  if (single && !spec.zeros.empty()) throw UsageError("use either --alpha/--n or --zero, not both");
  if (single) {
    if (!spec.alpha || !spec.n) throw UsageError("--alpha and --n must be given together");
    if (*spec.n < 1) throw UsageError("--n must be >= 1");
    return {{parse_complex(*spec.alpha), *spec.n}};
  }
  if (spec.zeros.empty()) throw UsageError("no operator given: pass --alpha and --n, or --zero");
  std::vector<BlaschkeFactor> factors;
  for (const auto& z : spec.zeros) factors.push_back(parse_zero(z));
  return factors;
}

}  // namespace numrange::cli
