#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "args.hpp"
#include "report.hpp"

namespace numrange::cli {

struct RadiusOptions {
  ZeroSpec spec;
  std::size_t grid = 256;
  double agreement_tol = 1e-9;
};

struct BoundaryOptions {
  ZeroSpec spec;
  std::size_t grid = 256;
  std::optional<std::string> poncelet;  // overlay vertex λ as "re,im"
};

struct PonceletOptions {
  ZeroSpec spec;
  std::string lambda = "1,0";
  int samples = 0;  // > 0 replaces --lambda by that many equally spaced vertices
  std::size_t grid = 512;
  double circumscription_tol = 1e-6;
};

struct KmsOptions {
  double alpha = 0.0;
  int n = 1;
  double agreement_tol = 1e-9;
};

struct AnglesOptions {
  std::vector<std::string> zeros;
  double angle_tol = 1e-6;
};

struct VerifyOptions {
  std::string suite = "all";
  int trials = 10;
  std::uint64_t seed = 0;
  double agreement_tol = 1e-9;
  double margin_tol = 1e-9;
  double circumscription_tol = 1e-6;
  double angle_tol = 1e-6;
};

RunReport cmd_radius(const RadiusOptions& options);
RunReport cmd_boundary(const BoundaryOptions& options);
RunReport cmd_poncelet(const PonceletOptions& options);
RunReport cmd_kms(const KmsOptions& options);
RunReport cmd_angles(const AnglesOptions& options);
RunReport cmd_verify(const VerifyOptions& options);

/// Exit codes: 0 ok, 1 certification failure, 2 usage error, 3 domain error,
/// 4 I/O error. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace numrange::cli
