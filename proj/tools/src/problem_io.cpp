#include "skewsep/cli/problem_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "skewsep/errors.hpp"

namespace skewsep::cli {

using nlohmann::json;

namespace {

// Line of a top-level key, for diagnostics; 0 when not found.
std::size_t key_line(std::string_view text, std::string_view key) {
  std::size_t line = 1;
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
    } else if (c == '{' || c == '[') {
      ++depth;
    } else if (c == '}' || c == ']') {
      --depth;
    } else if (c == '"') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != '"') j += text[j] == '\\' ? 2 : 1;
      if (depth == 1 && text.substr(i + 1, j - i - 1) == key) {
        std::size_t k = j + 1;
        while (k < text.size() && (text[k] == ' ' || text[k] == '\t' || text[k] == '\r' || text[k] == '\n')) ++k;
        if (k < text.size() && text[k] == ':') return line;
      }
      for (std::size_t t = i; t < j && t < text.size(); ++t)
        if (text[t] == '\n') ++line;
      i = j;
    }
  }
  return 0;
}

class Reader {
 public:
  Reader(std::string_view text, std::string source) : text_(text), source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& field, const std::string& what) const {
    std::ostringstream os;
    os << source_;
    const std::string top = field.substr(0, field.find_first_of(".["));
    if (const std::size_t line = key_line(text_, top)) os << ':' << line;
    os << ": field '" << field << "': " << what;
    throw InputError(os.str());
  }

  Int integer(const json& j, const std::string& field) const {
    if (j.is_number_integer()) {
      if (j.is_number_unsigned()) return Int(std::to_string(j.get<std::uint64_t>()));
      return Int(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
      const std::string s = j.get<std::string>();
      const std::size_t start = !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
      bool ok = s.size() > start;
      for (std::size_t i = start; i < s.size(); ++i) ok = ok && s[i] >= '0' && s[i] <= '9';
      if (!ok) fail(field, "expected a decimal integer, got \"" + s + "\"");
      return Int(s[0] == '+' ? s.substr(1) : s);
    }
    fail(field, std::string("expected an integer, got ") + j.type_name());
  }

  Vec vector(const json& j, std::size_t len, const std::string& field) const {
    if (!j.is_array()) fail(field, std::string("expected an array, got ") + j.type_name());
    if (j.size() != len) {
      fail(field, "expected " + std::to_string(len) + " entries, got " + std::to_string(j.size()));
    }
    Vec out;
    for (std::size_t i = 0; i < len; ++i) out.push_back(integer(j[i], field + "[" + std::to_string(i) + "]"));
    return out;
  }

  std::vector<Vec> square(const json& j, std::size_t r, const std::string& field) const {
    if (!j.is_array()) fail(field, std::string("expected an array, got ") + j.type_name());
    if (j.size() != r) {
      fail(field, "expected " + std::to_string(r) + " rows, got " + std::to_string(j.size()));
    }
    std::vector<Vec> out;
    for (std::size_t i = 0; i < r; ++i) out.push_back(vector(j[i], r, field + "[" + std::to_string(i) + "]"));
    return out;
  }

  const json& required(const json& root, const char* key) const {
    if (!root.contains(key)) fail(key, "missing");
    return root.at(key);
  }

 private:
  std::string_view text_;
  std::string source_;
};

const char* const kKnownKeys[] = {"coeff_modulus", "rank", "basis_names", "unit",
                                  "structure_constants", "rho", "derivation", "poly"};

}  // namespace

ProblemFile parse_problem(std::string_view text, const std::string& source) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": JSON syntax error: " + e.what());
  }
  Reader rd(text, source);
  if (!root.is_object()) throw InputError(source + ": expected a JSON object at the top level");
  for (const auto& [key, value] : root.items()) {
    bool known = false;
    for (const char* k : kKnownKeys) known = known || key == k;
    if (!known) rd.fail(key, "unknown field");
  }

  ProblemFile p;
  p.source = source;
  const Int modulus = rd.integer(rd.required(root, "coeff_modulus"), "coeff_modulus");
  if (modulus < 0 || modulus == 1 || !modulus.fits_slong_p()) {
    rd.fail("coeff_modulus", "must be 0 (integers) or at least 2, got " + modulus.get_str());
  }
  p.coeff_modulus = modulus.get_si();
  const Int rank = rd.integer(rd.required(root, "rank"), "rank");
  if (rank < 1 || rank > 64) rd.fail("rank", "must be between 1 and 64, got " + rank.get_str());
  const std::size_t r = rank.get_ui();
  p.rank = r;

  if (root.contains("basis_names")) {
    const json& names = root.at("basis_names");
    if (!names.is_array() || names.size() != r) {
      rd.fail("basis_names", "expected an array of " + std::to_string(r) + " strings");
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (!names[i].is_string()) rd.fail("basis_names[" + std::to_string(i) + "]", "expected a string");
      p.basis_names.push_back(names[i].get<std::string>());
    }
  }

  p.unit = rd.vector(rd.required(root, "unit"), r, "unit");

  const json& sc = rd.required(root, "structure_constants");
  if (!sc.is_array() || sc.size() != r) {
    rd.fail("structure_constants", "expected an r x r x r array with r = " + std::to_string(r));
  }
  p.structure_constants.reserve(r * r * r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::string fi = "structure_constants[" + std::to_string(i) + "]";
    if (!sc[i].is_array() || sc[i].size() != r) rd.fail(fi, "expected " + std::to_string(r) + " rows");
    for (std::size_t j = 0; j < r; ++j) {
      const Vec v = rd.vector(sc[i][j], r, fi + "[" + std::to_string(j) + "]");
      p.structure_constants.insert(p.structure_constants.end(), v.begin(), v.end());
    }
  }

  p.rho = rd.square(rd.required(root, "rho"), r, "rho");
  p.derivation = rd.square(rd.required(root, "derivation"), r, "derivation");

  if (root.contains("poly")) {
    const json& poly = root.at("poly");
    if (!poly.is_array() || poly.size() < 2) {
      rd.fail("poly", "expected a list of at least 2 coefficient vectors (degree >= 1)");
    }
    p.poly_line = key_line(text, "poly");
    for (std::size_t i = 0; i < poly.size(); ++i) {
      p.poly.push_back(rd.vector(poly[i], r, "poly[" + std::to_string(i) + "]"));
    }
  }
  return p;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str(), path);
}

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(int_to_json(x));
  return out;
}

json problem_to_json(const ProblemFile& p) {
  const std::size_t r = p.rank;
  json out;
  out["coeff_modulus"] = p.coeff_modulus;
  out["rank"] = r;
  if (!p.basis_names.empty()) out["basis_names"] = p.basis_names;
  out["unit"] = vec_to_json(p.unit);
  json sc = json::array();
  for (std::size_t i = 0; i < r; ++i) {
    json rows = json::array();
    for (std::size_t j = 0; j < r; ++j) {
      rows.push_back(vec_to_json(Vec(p.structure_constants.begin() + static_cast<std::ptrdiff_t>((i * r + j) * r),
                                     p.structure_constants.begin() + static_cast<std::ptrdiff_t>((i * r + j + 1) * r))));
    }
    sc.push_back(std::move(rows));
  }
  out["structure_constants"] = std::move(sc);
  auto square = [](const std::vector<Vec>& m) {
    json a = json::array();
    for (const auto& row : m) a.push_back(vec_to_json(row));
    return a;
  };
  out["rho"] = square(p.rho);
  out["derivation"] = square(p.derivation);
  if (!p.poly.empty()) out["poly"] = square(p.poly);
  return out;
}

std::string problem_to_string(const ProblemFile& p) { return problem_to_json(p).dump(2) + "\n"; }

ProblemFile problem_from_ring(const SkewPolyRing& ring, const SkewPoly* f) {
  const BaseRing& b = ring.base();
  const std::size_t r = b.rank();
  ProblemFile p;
  p.coeff_modulus = b.coeff().modulus().get_si();
  p.rank = r;
  p.basis_names = b.names();
  p.unit = b.one().coords();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) p.structure_constants.push_back(b.structure(i, j, k));
  p.rho = ring.rho().matrix().to_rows();
  p.derivation = ring.deriv().matrix().to_rows();
  if (f) {
    for (const auto& c : f->coeffs()) p.poly.push_back(c.coords());
  }
  return p;
}

BaseRing make_base(const ProblemFile& p) {
  const CoeffRing k = p.coeff_modulus == 0 ? CoeffRing::integers() : CoeffRing::modulo(p.coeff_modulus);
  return BaseRing(k, p.rank, p.structure_constants, p.unit, p.basis_names);
}

std::vector<std::string> validation_problems(const ProblemFile& p) {
  const BaseRing b = make_base(p);
  std::vector<std::string> out;
  for (const auto& v : validate_ring(b)) out.push_back("ring: " + v);
  const RingMap rho(Matrix::from_rows(p.rho, p.rank, b.coeff()));
  const RingMap d(Matrix::from_rows(p.derivation, p.rank, b.coeff()));
  if (!out.empty()) return out;
  for (const auto& v : validate_automorphism(b, rho)) out.push_back("rho: " + v);
  if (!out.empty()) return out;
  for (const auto& v : validate_derivation(b, d, rho)) out.push_back("derivation: " + v);
  return out;
}

std::shared_ptr<const SkewPolyRing> make_ring(const ProblemFile& p) {
  const auto problems = validation_problems(p);
  if (!problems.empty()) {
    std::string msg = p.source + ": invalid ring";
    for (const auto& v : problems) msg += "\n  " + v;
    throw InputError(msg);
  }
  BaseRing b = make_base(p);
  RingMap rho(Matrix::from_rows(p.rho, p.rank, b.coeff()));
  RingMap d(Matrix::from_rows(p.derivation, p.rank, b.coeff()));
  return SkewPolyRing::create(std::move(b), std::move(rho), std::move(d));
}

SkewPoly make_poly(const SkewPolyRing& ring, const ProblemFile& p) {
  if (p.poly.empty()) throw InputError(p.source + ": field 'poly': missing");
  std::vector<RingElement> c;
  for (const auto& v : p.poly) c.push_back(ring.base().element(v));
  SkewPoly f = ring.from_coeffs(c);
  if (f.degree() != static_cast<int>(p.poly.size()) - 1 || !ring.is_monic(f)) {
    std::string msg = p.source;
    if (p.poly_line) msg += ":" + std::to_string(p.poly_line);
    throw InputError(msg + ": field 'poly': leading coefficient is not the unit (f must be monic)");
  }
  return f;
}

}  // namespace skewsep::cli
