#include "skewsep/cli/commands.hpp"

#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "skewsep/cli/problem_io.hpp"
#include "skewsep/errors.hpp"
#include "skewsep/separability.hpp"

namespace skewsep::cli {

using nlohmann::json;

namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ScopeError& e) {
    err << "scope: " << e.what() << '\n';
    return kExitScope;
  } catch (const InternalError& e) {
    err << "internal invariant breach: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string ring_summary(const SkewPolyRing& ring) {
  std::ostringstream os;
  os << "B over " << ring.base().coeff().to_string() << ", rank " << ring.base().rank()
     << ", rho " << (ring.rho().is_identity() ? "= id" : "!= id") << ", D "
     << (ring.deriv().is_zero() ? "= 0" : "!= 0");
  return os.str();
}

json element_json(const QuotientRing& a, const AElement& z) {
  return {{"flat", vec_to_json(z.flat())}, {"text", a.to_string(z)}};
}

std::string row_text(const json& row) {
  std::string s = "[";
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) s += ", ";
    s += row[i].is_string() ? row[i].get<std::string>() : row[i].dump();
  }
  return s + "]";
}

void print_submodule(std::ostream& out, const std::string& name, const json& s) {
  out << name << ": rank " << s["rank"].get<std::size_t>();
  if (s.contains("order")) {
    out << ", order " << (s["order"].is_string() ? s["order"].get<std::string>() : s["order"].dump());
  }
  out << '\n';
  for (const auto& row : s["basis"]) out << "  " << row_text(row) << '\n';
}

struct Loaded {
  ProblemFile file;
  std::shared_ptr<const SkewPolyRing> ring;
};

Loaded load_ring(const std::string& path) {
  Loaded l{load_problem(path), nullptr};
  l.ring = make_ring(l.file);
  return l;
}

}  // namespace

json submodule_json(const Submodule& s) {
  json basis = json::array();
  for (const auto& g : s.generators()) basis.push_back(vec_to_json(g));
  json out{{"rank", s.rank()}, {"basis", std::move(basis)}};
  if (s.coeff().is_finite()) out["order"] = int_to_json(s.order());
  return out;
}

json validate_report(const std::vector<std::string>& problems) {
  return {{"ring_valid", problems.empty()}, {"violations", problems}};
}

json r0_report(const SkewPolyRing& ring, const SkewPoly& f) {
  const R0Certificate cert = ring.is_r0_lemma(f);
  json out{{"ring_valid", true},
           {"f", ring.to_string(f)},
           {"degree", f.degree()},
           {"in_r0", cert.in_r0},
           {"in_r0_direct", ring.is_r0_direct(f)},
           {"coefficients_fixed", ring.coefficients_fixed_by_rho(f)}};
  if (!cert.in_r0) {
    json c{{"condition", cert.condition}, {"message", cert.message}};
    if (cert.condition == 1) {
      c["j"] = cert.j;
      c["basis_element"] = ring.base().names()[cert.basis_index];
    } else {
      c["i"] = cert.i;
    }
    out["certificate"] = std::move(c);
  }
  return out;
}

json decide_report(const QuotientRing& a, bool with_witness) {
  const Verdict v = decide(a);
  const int m = static_cast<int>(a.degree());
  const Submodule vv = a.centralizer_of_b();
  json out{{"ring_valid", true},
           {"f", a.ring().to_string(a.f())},
           {"degree", m},
           {"in_r0", true},
           {"coefficients_fixed", true},
           {"separable", v.separable},
           {"weakly_separable", v.weakly_separable},
           {"exactness",
            {{"exact_at_a1", v.exactness.exact_at_a1},
             {"ker_ix_is_center", v.exactness.ker_ix_is_center}}}};
  out["submodules"] = {{"V", submodule_json(vv)},
                       {"center", submodule_json(a.center())},
                       {"A_1", submodule_json(a.twisted_centralizer(1))},
                       {"A_1_minus_m", submodule_json(a.twisted_centralizer(1 - m))},
                       {"ker_tau", submodule_json(a.tau_kernel())},
                       {"A_1_cap_ker_tau", submodule_json(v.s1)},
                       {"I_x_V", submodule_json(v.s2)}};
  if (with_witness) out["witness"] = v.witness ? element_json(a, *v.witness) : json(nullptr);
  if (a.ring().is_derivation_type()) {
    const DTypeReport d = d_type_checks(a);
    if (!d.agrees_with_general) {
      throw InternalError("derivation-type verdicts disagree with the general procedures");
    }
    out["d_type"] = {{"weakly_separable", d.weakly_separable},
                     {"separable", d.separable},
                     {"tau_v_in_center", d.tau_v_in_center},
                     {"tau_V", submodule_json(d.tau_image)}};
  }
  return out;
}

json oracle_report(const QuotientRing& a) {
  const OracleResult o = oracle_weakly_separable(a);
  const bool general = is_weakly_separable(a).weakly_separable;
  return {{"ring_valid", true},
          {"f", a.ring().to_string(a.f())},
          {"degree", a.degree()},
          {"oracle_weakly_separable", o.weakly_separable},
          {"weakly_separable", general},
          {"agrees", o.weakly_separable == general},
          {"delta_x_matches", o.delta_x_matches},
          {"derivations", submodule_json(o.module.derivations)},
          {"inner_derivations", submodule_json(o.module.inner)},
          {"delta_x_image", submodule_json(o.delta_x_image)}};
}

json sweep_report(const SkewPolyRing& ring, const std::vector<Classification>& rows,
                  const SweepCliOptions& opts) {
  std::size_t in_r0 = 0, scoped = 0, sep = 0, ws = 0, agree = 0, breaches = 0;
  json listing = json::array();
  for (const auto& c : rows) {
    in_r0 += c.in_r0;
    if (!c.internal_error.empty()) ++breaches;
    if (c.in_scope()) {
      ++scoped;
      sep += c.separable;
      ws += c.weakly_separable;
      agree += c.oracle_run && c.oracle_agrees();
    }
    if (!c.in_scope() && !opts.all) continue;
    json poly = json::array();
    for (const auto& k : c.f.coeffs()) poly.push_back(vec_to_json(k.coords()));
    json row{{"f", ring.to_string(c.f)},
             {"poly", std::move(poly)},
             {"degree", c.f.degree()},
             {"in_r0", c.in_r0},
             {"coefficients_fixed", c.coefficients_fixed}};
    if (c.in_scope()) {
      row["separable"] = c.separable;
      row["weakly_separable"] = c.weakly_separable;
      if (c.oracle_run) {
        row["oracle_weakly_separable"] = c.oracle_weakly_separable;
        row["delta_x_matches"] = c.delta_x_matches;
      }
    }
    if (!c.internal_error.empty()) row["internal_error"] = c.internal_error;
    listing.push_back(std::move(row));
  }
  return {{"ring", ring_summary(ring)},
          {"min_degree", opts.min_degree},
          {"max_degree", opts.max_degree},
          {"oracle", opts.oracle},
          {"summary",
           {{"monic", rows.size()},
            {"in_r0", in_r0},
            {"in_scope", scoped},
            {"separable", sep},
            {"weakly_separable", ws},
            {"oracle_agreements", agree},
            {"internal_breaches", breaches}}},
          {"instances", std::move(listing)}};
}

int cmd_validate(const std::string& path, bool as_json, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ProblemFile p = load_problem(path);
    const auto problems = validation_problems(p);
    if (as_json) {
      out << validate_report(problems).dump(2) << '\n';
    } else if (problems.empty()) {
      out << "ring_valid: true\n";
    } else {
      out << "ring_valid: false\n";
      for (const auto& v : problems) out << "  " << v << '\n';
    }
    return problems.empty() ? kExitOk : kExitInput;
  });
}

int cmd_check_r0(const std::string& path, bool as_json, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Loaded l = load_ring(path);
    const SkewPoly f = make_poly(*l.ring, l.file);
    const json r = r0_report(*l.ring, f);
    if (r["in_r0"] != r["in_r0_direct"]) {
      throw InternalError("coefficient test and direct test disagree on membership in R0");
    }
    if (as_json) {
      out << r.dump(2) << '\n';
      return kExitOk;
    }
    out << "f = " << r["f"].get<std::string>() << '\n'
        << "in_r0: " << yes_no(r["in_r0"]) << '\n'
        << "coefficients_fixed: " << yes_no(r["coefficients_fixed"]) << '\n';
    if (r.contains("certificate")) out << "certificate: " << r["certificate"]["message"].get<std::string>() << '\n';
    return kExitOk;
  });
}

int cmd_decide(const std::string& path, bool as_json, bool witness, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const Loaded l = load_ring(path);
    auto a = QuotientRing::build(l.ring, make_poly(*l.ring, l.file));
    const json r = decide_report(*a, witness);
    if (as_json) {
      out << r.dump(2) << '\n';
      return kExitOk;
    }
    out << ring_summary(*l.ring) << '\n' << "coordinates:";
    for (std::size_t i = 0; i < a->degree(); ++i)
      for (const auto& name : l.ring->base().names())
        out << ' ' << (i == 0 ? "" : i == 1 ? "x*" : "x^" + std::to_string(i) + "*") << name;
    out << '\n'
        << "f = " << r["f"].get<std::string>() << '\n'
        << "in_r0: true\n"
        << "separable: " << yes_no(r["separable"]) << '\n'
        << "weakly_separable: " << yes_no(r["weakly_separable"]) << '\n'
        << "exact_at_a1: " << yes_no(r["exactness"]["exact_at_a1"]) << '\n'
        << "ker_ix_is_center: " << yes_no(r["exactness"]["ker_ix_is_center"]) << '\n';
    if (r.contains("witness")) {
      out << "witness: " << (r["witness"].is_null() ? "none" : r["witness"]["text"].get<std::string>())
          << '\n';
    }
    for (const char* key : {"V", "center", "A_1", "A_1_minus_m", "ker_tau", "A_1_cap_ker_tau", "I_x_V"}) {
      print_submodule(out, key, r["submodules"][key]);
    }
    if (r.contains("d_type")) {
      const json& d = r["d_type"];
      out << "d_type: weakly_separable " << yes_no(d["weakly_separable"]) << ", separable "
          << yes_no(d["separable"]) << ", tau(V) in C(A) " << yes_no(d["tau_v_in_center"]) << '\n';
      print_submodule(out, "tau_V", d["tau_V"]);
    }
    return kExitOk;
  });
}

int cmd_oracle(const std::string& path, bool as_json, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Loaded l = load_ring(path);
    auto a = QuotientRing::build(l.ring, make_poly(*l.ring, l.file));
    const json r = oracle_report(*a);
    if (as_json) {
      out << r.dump(2) << '\n';
    } else {
      out << "f = " << r["f"].get<std::string>() << '\n'
          << "oracle_weakly_separable: " << yes_no(r["oracle_weakly_separable"]) << '\n'
          << "weakly_separable: " << yes_no(r["weakly_separable"]) << '\n'
          << "delta_x_matches: " << yes_no(r["delta_x_matches"]) << '\n';
      print_submodule(out, "derivations", r["derivations"]);
      print_submodule(out, "inner_derivations", r["inner_derivations"]);
    }
    if (!r["agrees"].get<bool>() || !r["delta_x_matches"].get<bool>()) {
      err << "internal invariant breach: oracle disagrees with the decision procedure\n";
      return kExitInternal;
    }
    return kExitOk;
  });
}

int cmd_sweep(const std::string& path, const SweepCliOptions& opts, bool as_json, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const Loaded l = load_ring(path);
    if (!l.ring->base().coeff().is_finite()) {
      throw InputError(path + ": field 'coeff_modulus': sweep needs a finite coefficient ring");
    }
    SweepOptions so;
    so.min_degree = opts.min_degree;
    so.max_degree = opts.max_degree;
    so.run_oracle = opts.oracle;
    so.jobs = opts.jobs;
    const auto rows = sweep(l.ring, so);
    const json r = sweep_report(*l.ring, rows, opts);
    if (as_json) {
      out << r.dump(2) << '\n';
    } else {
      out << "# " << r["ring"].get<std::string>() << ", degrees " << opts.min_degree << ".."
          << opts.max_degree << '\n';
      out << std::left << std::setw(48) << "f" << std::setw(7) << "R0" << std::setw(7) << "fixed"
          << std::setw(7) << "sep" << std::setw(7) << "ws" << "oracle\n";
      for (const auto& row : r["instances"]) {
        auto flag = [&](const char* key) -> std::string {
          return row.contains(key) ? (row[key].get<bool>() ? "yes" : "no") : "-";
        };
        std::string oracle = "-";
        if (row.contains("oracle_weakly_separable")) {
          oracle = row["oracle_weakly_separable"] == row["weakly_separable"] && row["delta_x_matches"].get<bool>()
                       ? "agree"
                       : "DISAGREE";
        }
        out << std::setw(48) << row["f"].get<std::string>() << std::setw(7) << flag("in_r0")
            << std::setw(7) << flag("coefficients_fixed") << std::setw(7) << flag("separable")
            << std::setw(7) << flag("weakly_separable") << oracle << '\n';
      }
      const json& s = r["summary"];
      out << "summary: " << s["monic"] << " monic, " << s["in_r0"] << " in R0, " << s["in_scope"]
          << " in scope, " << s["separable"] << " separable, " << s["weakly_separable"]
          << " weakly separable, " << s["oracle_agreements"] << " oracle agreements, "
          << s["internal_breaches"] << " internal breaches\n";
    }
    for (const auto& c : rows) {
      if (!c.internal_error.empty()) {
        err << "internal invariant breach on " << l.ring->to_string(c.f) << ": " << c.internal_error << '\n';
      }
    }
    bool bad = r["summary"]["internal_breaches"].get<std::size_t>() > 0;
    for (const auto& c : rows) bad = bad || !c.oracle_agrees();
    return bad ? kExitInternal : kExitOk;
  });
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Separability of quotients of skew polynomial rings", "skewsep"};
  app.require_subcommand(1);
  std::string path;
  bool as_json = false, witness = false;
  SweepCliOptions sweep_opts;
  bool no_oracle = false;

  auto* validate = app.add_subcommand("validate", "Check the ring axioms, rho and D");
  validate->add_option("file", path, "Problem file")->required();
  validate->add_flag("--json", as_json, "Machine-readable report");

  auto* check = app.add_subcommand("check-r0", "Decide whether fR = Rf");
  check->add_option("file", path, "Problem file")->required();
  check->add_flag("--json", as_json, "Machine-readable report");

  auto* dec = app.add_subcommand("decide", "Decide separability and weak separability of R/fR");
  dec->add_option("file", path, "Problem file")->required();
  dec->add_flag("--json", as_json, "Machine-readable report");
  dec->add_flag("--witness", witness, "Include a separability witness");

  auto* orc = app.add_subcommand("oracle", "Compute Der_B(A) directly and compare");
  orc->add_option("file", path, "Problem file")->required();
  orc->add_flag("--json", as_json, "Machine-readable report");

  auto* swp = app.add_subcommand("sweep", "Classify every monic f of bounded degree");
  swp->add_option("file", path, "Problem file (poly is ignored)")->required();
  swp->add_option("--max-degree", sweep_opts.max_degree, "Largest degree")->required()->check(CLI::Range(1, 16));
  swp->add_option("--min-degree", sweep_opts.min_degree, "Smallest degree")->check(CLI::Range(1, 16));
  swp->add_option("--jobs", sweep_opts.jobs, "Worker threads (0 = all cores)");
  swp->add_flag("--no-oracle", no_oracle, "Skip the derivation oracle");
  swp->add_flag("--all", sweep_opts.all, "List polynomials outside the scope too");
  swp->add_flag("--json", as_json, "Machine-readable report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitInput;
  }

  if (*validate) return cmd_validate(path, as_json, out, err);
  if (*check) return cmd_check_r0(path, as_json, out, err);
  if (*dec) return cmd_decide(path, as_json, witness, out, err);
  if (*orc) return cmd_oracle(path, as_json, out, err);
  sweep_opts.oracle = !no_oracle;
  if (sweep_opts.min_degree > sweep_opts.max_degree) {
    err << "error: --min-degree exceeds --max-degree\n";
    return kExitInput;
  }
  return cmd_sweep(path, sweep_opts, as_json, out, err);
}

}  // namespace skewsep::cli
