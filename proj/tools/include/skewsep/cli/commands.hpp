#pragma once

// The skewsep command-line front end. Every command writes its report to
// `out` and diagnostics to `err`, and returns the process exit code.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "skewsep/quotient_ring.hpp"
#include "skewsep/sweep.hpp"

namespace skewsep::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 2,
  kExitScope = 3,
  kExitInternal = 4,
};

/// Submodule as {"rank", "basis"} (plus "order" over Z/n), basis rows in
/// canonical Hermite order.
nlohmann::json submodule_json(const Submodule& s);

nlohmann::json validate_report(const std::vector<std::string>& problems);
nlohmann::json r0_report(const SkewPolyRing& ring, const SkewPoly& f);
nlohmann::json decide_report(const QuotientRing& a, bool with_witness);
nlohmann::json oracle_report(const QuotientRing& a);

struct SweepCliOptions {
  std::size_t min_degree = 1;
  std::size_t max_degree = 2;
  bool oracle = true;
  /// Include polynomials outside R0 or B^rho[X] in the listing.
  bool all = false;
  unsigned jobs = 0;
};

nlohmann::json sweep_report(const SkewPolyRing& ring, const std::vector<Classification>& rows,
                            const SweepCliOptions& opts);

int cmd_validate(const std::string& path, bool json, std::ostream& out, std::ostream& err);
int cmd_check_r0(const std::string& path, bool json, std::ostream& out, std::ostream& err);
int cmd_decide(const std::string& path, bool json, bool witness, std::ostream& out,
               std::ostream& err);
int cmd_oracle(const std::string& path, bool json, std::ostream& out, std::ostream& err);
int cmd_sweep(const std::string& path, const SweepCliOptions& opts, bool json, std::ostream& out,
              std::ostream& err);

/// Full argument parsing; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewsep::cli
