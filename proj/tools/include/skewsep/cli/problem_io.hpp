#pragma once

// Problem files: one JSON object describing B (structure constants over Z or
// Z/n), rho, D and optionally a monic polynomial f.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "skewsep/skew_poly.hpp"

namespace skewsep::cli {

/// Malformed or inconsistent input. Maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProblemFile {
  std::string source = "<input>";
  long coeff_modulus = 0;
  std::size_t rank = 0;
  std::vector<std::string> basis_names;
  Vec unit;
  /// [(i*r + j)*r + k]
  Vec structure_constants;
  /// Row-major r x r; column i is the image of e_i.
  std::vector<Vec> rho;
  std::vector<Vec> derivation;
  /// Degree-ascending right coefficients; empty when the file has no poly.
  std::vector<Vec> poly;
  /// Source line of the poly field, 0 if unknown.
  std::size_t poly_line = 0;
};

ProblemFile parse_problem(std::string_view text, const std::string& source = "<input>");
ProblemFile load_problem(const std::string& path);

nlohmann::json problem_to_json(const ProblemFile& p);
std::string problem_to_string(const ProblemFile& p);

/// Encode a ring (and optionally f) as a problem file.
ProblemFile problem_from_ring(const SkewPolyRing& ring, const SkewPoly* f = nullptr);

BaseRing make_base(const ProblemFile& p);
/// Every violated axiom, prefixed with "ring", "rho" or "derivation".
std::vector<std::string> validation_problems(const ProblemFile& p);
/// Throws InputError listing the violations when the ring is invalid.
std::shared_ptr<const SkewPolyRing> make_ring(const ProblemFile& p);
/// Throws InputError when the file has no polynomial or it is not monic.
SkewPoly make_poly(const SkewPolyRing& ring, const ProblemFile& p);

/// JSON integer from an Int: a number when it fits in 64 bits, else a
/// decimal string.
nlohmann::json int_to_json(const Int& v);
nlohmann::json vec_to_json(const Vec& v);

}  // namespace skewsep::cli
