#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "numrange/blaschke.hpp"

namespace numrange::cli {

/// Malformed command-line input (exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "re,im"
Complex parse_complex(std::string_view text);

/// "re,im" or "re,im:m" with m >= 1.
BlaschkeFactor parse_zero(std::string_view text);

/// Operator selection shared by radius, boundary and poncelet:
/// either --alpha with --n, or one or more --zero.
struct ZeroSpec {
  std::optional<std::string> alpha;
  std::optional<int> n;
  std::vector<std::string> zeros;
};

std::vector<BlaschkeFactor> resolve_factors(const ZeroSpec& spec);

}  // namespace numrange::cli
