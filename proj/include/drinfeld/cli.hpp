// Copyright 2026 The drinfeld-bounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DRINFELD_CLI_HPP
#define DRINFELD_CLI_HPP

// Command-line front end. run() takes the argument list and two streams so
// the whole pipeline can be driven in-process.
//
// Exit codes: 0 success, 2 input or parse error, 3 mathematical
// precondition (bad reduction, lemma hypothesis, ...), 4 internal error.

#include <chrono>
#include <ctime>
#include <iomanip>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "drinfeld/bounds.hpp"
#include "drinfeld/drinfeld.hpp"
#include "drinfeld/error.hpp"
#include "drinfeld/expr.hpp"
#include "drinfeld/galois_probe.hpp"
#include "drinfeld/heights.hpp"
#include "drinfeld/module_file.hpp"

namespace drinfeld::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kMathError = 3, kInternalError = 4 };

enum class Format { table, json, csv };

struct RunConfig {
  std::string subcommand;
  std::string module_path;
  std::string height_table;
  std::string ell;
  int ell_deg_max = 0;
  std::int64_t deg_ell = 0;
  std::string places;
  int place_deg_max = 0;
  double log_c2 = 0.0;
  ExpBase exp_base = ExpBase::d;
  Format format = Format::table;
  std::uint64_t seed = 1;
  bool reproducible = false;
  std::string a;
  std::string target_path;
  std::string isogeny;
  std::uint64_t max_field = ProbeOptions{}.max_field_size;
};

using json = nlohmann::ordered_json;

namespace detail {

inline std::string num(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

inline json rational_json(const Rational& r) {
  json j;
  j["exact"] = r.str();
  j["value"] = static_cast<double>(r);
  return j;
}

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

inline std::string set_text(const std::set<int>& s) {
  std::vector<std::string> v;
  for (int k : s) v.push_back(std::to_string(k));
  return "{" + join(v, ", ") + "}";
}

inline std::string timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

/// Assumption knobs, echoed into every report.
inline json assumptions(const RunConfig& c) {
  json a;
  a["log_c2"] = c.log_c2;
  a["exp_base"] = to_string(c.exp_base);
  a["ineq2_reading"] = "log_q(d*h)";
  a["clamps"] = "log_q arguments clamped below at 1; heights use log+ (max(0, .)) per place";
  a["log_base"] = "q";
  return a;
}

inline json header(const RunConfig& c, const ModuleSpec& spec) {
  json h;
  h["command"] = c.subcommand;
  h["q"] = spec.fq.q();
  h["p"] = spec.fq.p();
  h["e"] = spec.fq.e();
  h["d"] = spec.d;
  h["rank"] = spec.rank;
  h["seed"] = c.seed;
  if (!c.reproducible) h["timestamp"] = timestamp();
  h["assumptions"] = assumptions(c);
  return h;
}

/// Generic human-readable rendering of a JSON document.
inline void render_table(std::ostream& out, const json& j, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    if (v.is_object()) {
      if (v.contains("exact") && v.size() == 2) {
        out << pad << it.key() << ": " << v["exact"].get<std::string>() << " (" << num(v["value"].get<double>()) << ")\n";
        continue;
      }
      out << pad << it.key() << ":\n";
      render_table(out, v, indent + 1);
    } else if (v.is_array()) {
      out << pad << it.key() << ":";
      if (v.empty()) out << " (none)";
      out << "\n";
      for (const auto& el : v) {
        if (el.is_object()) {
          out << pad << "  -\n";
          render_table(out, el, indent + 2);
        } else {
          out << pad << "  - " << (el.is_string() ? el.get<std::string>() : el.dump()) << "\n";
        }
      }
    } else if (v.is_number_float()) {
      out << pad << it.key() << ": " << num(v.get<double>()) << "\n";
    } else {
      out << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

inline std::string csv_cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return num(v.get<double>());
  if (v.is_object() && v.contains("exact")) return v["exact"].get<std::string>();
  return v.dump();
}

/// key,value lines for the scalar entries of a document.
inline void csv_scalars(std::ostream& out, const json& j, const std::string& prefix = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    const std::string key = prefix + it.key();
    if (v.is_object() && !v.contains("exact")) {
      csv_scalars(out, v, key + ".");
    } else if (!v.is_array()) {
      out << key << "," << csv_cell(v) << "\n";
    }
  }
}

inline Poly parse_poly_arg(const FqContext& fq, const std::string& text, const char* what) {
  try {
    return parse_poly(fq, text);
  } catch (const ParseError& e) {
    throw ParseError(std::string(what) + ": " + e.what(), e.offset());
  }
}

inline Poly monic_irreducible_arg(const FqContext& fq, const std::string& text, const char* what) {
  const PolyRing A = fq.poly_ring();
  Poly f = parse_poly_arg(fq, text, what);
  if (f.is_zero() || f.degree() < 1) throw DomainError(std::string(what) + " must be a nonconstant polynomial");
  f = A.monic(f);
  if (!A.is_irreducible(f)) throw DomainError(std::string(what) + " '" + text + "' is not irreducible");
  return f;
}

inline std::vector<Poly> irreducibles_up_to(const FqContext& fq, int max_deg) {
  std::vector<Poly> out;
  const PolyRing A = fq.poly_ring();
  for (int n = 1; n <= max_deg; ++n) {
    for (auto& f : A.irreducibles_of_degree(static_cast<std::size_t>(n))) out.push_back(f);
  }
  return out;
}

inline std::vector<Poly> place_list(const RunConfig& c, const FqContext& fq) {
  if (!c.places.empty()) {
    std::vector<Poly> out;
    std::size_t start = 0;
    while (start <= c.places.size()) {
      std::size_t comma = c.places.find(',', start);
      if (comma == std::string::npos) comma = c.places.size();
      const std::string item(drinfeld::detail::trim(std::string_view(c.places).substr(start, comma - start)));
      if (!item.empty()) out.push_back(monic_irreducible_arg(fq, item, "place"));
      start = comma + 1;
    }
    if (out.empty()) throw ParseError("--places is empty", 0);
    return out;
  }
  return irreducibles_up_to(fq, c.place_deg_max > 0 ? c.place_deg_max : 1);
}

inline ModuleSpec load_spec(const RunConfig& c) {
  if (c.module_path.empty()) throw ParseError("--module is required", 0);
  return load_module_file(c.module_path);
}

inline const DrinfeldModule<RationalField>& require_module(const ModuleSpec& spec) {
  if (!spec.module) throw ParseError("the module file gives no coefficients (needed for this command)", 0);
  return *spec.module;
}

inline HeightReport heights_for(const RunConfig& c, const ModuleSpec& spec) {
  if (!c.height_table.empty()) {
    return heights_from_data(spec.fq.q(), spec.rank, spec.d, load_height_table(c.height_table, spec.rank), true);
  }
  if (spec.d > 1) throw ParseError("d > 1 requires --height-table", 0);
  return height_report(require_module(spec));
}

inline json heights_json(const HeightReport& rep) {
  json j;
  j["source"] = rep.from_table ? "table (taken on trust)" : "computed from coefficients";
  j["naive_height"] = rational_json(rep.naive);
  j["graded_height"] = rational_json(rep.graded);
  j["graded_height_unclamped"] = rational_json(rep.graded_unclamped);
  j["height_ineq_slack"] = rational_json(rep.slack);
  json ch = json::array();
  for (const auto& h : rep.coefficient_heights) ch.push_back(rational_json(h));
  j["coefficient_heights"] = ch;
  json places = json::array();
  for (const auto& pc : rep.places) {
    json p;
    p["place"] = pc.label;
    p["deg"] = pc.degree;
    p["n_nu"] = pc.local_degree;
    json vals = json::array();
    for (const auto& v : pc.valuations) vals.push_back(v ? json(*v) : json(nullptr));
    p["valuations"] = vals;
    p["graded_term"] = rational_json(pc.graded_term);
    places.push_back(p);
  }
  j["places"] = places;
  return j;
}

inline json bound_json(const BoundReport& br, const std::vector<std::int64_t>& degs) {
  json j;
  j["n_d"] = br.n;
  j["ineq1_rhs"] = br.ineq1_rhs;
  j["ineq2_rhs"] = br.ineq2_rhs;
  j["ineq2_rhs_literal"] = br.ineq2_rhs_literal;
  j["omega"] = br.omega;
  j["lemma_hypothesis"] = br.lemma.hypothesis;
  j["w_argument"] = br.lemma.w_argument;
  j["w_value"] = br.lemma.w_value;
  j["c_threshold"] = br.c_threshold;
  j["threshold"] = br.threshold;
  json cases = json::array();
  for (auto deg : degs) {
    const auto e1 = ineq1_holds(deg, br.params);
    const auto e2 = ineq2_holds(deg, br.params);
    json row;
    row["deg_ell"] = deg;
    row["case1"] = {{"lhs", e1.lhs}, {"rhs", e1.rhs}, {"holds", e1.holds}};
    row["case2"] = {{"lhs", e2.lhs}, {"rhs", e2.rhs}, {"holds", e2.holds}};
    row["excluded_by_threshold"] = static_cast<double>(deg) > br.threshold;
    cases.push_back(row);
  }
  j["cases"] = cases;
  return j;
}

/// An element of A/l, printed through its representative of degree < deg l.
inline Printed residue_printed(const FqContext& fq, gf_t code) {
  std::vector<gf_t> digits;
  for (std::uint64_t x = code; x; x /= fq.q()) digits.push_back(static_cast<gf_t>(x % fq.q()));
  return format_poly(fq, Poly(digits));
}

inline std::string char_poly_text(const FqContext& fq, const Poly& cp) {
  return format_univariate(cp, "X", [&](gf_t c) { return residue_printed(fq, c); }).text;
}

// ---- subcommands -------------------------------------------------------

inline int cmd_heights(const RunConfig& c, std::ostream& out) {
  const ModuleSpec spec = load_spec(c);
  const HeightReport rep = heights_for(c, spec);
  json doc = header(c, spec);
  if (spec.module) doc["module"] = format_twisted(spec.module->field(), spec.module->phi_T());
  doc["heights"] = heights_json(rep);
  if (c.format == Format::json) {
    out << doc.dump(2) << "\n";
  } else if (c.format == Format::csv) {
    csv_scalars(out, doc);
    out << "\nplace,deg,n_nu";
    for (int i = 1; i <= spec.rank; ++i) out << ",v_g" << i;
    out << ",graded_term\n";
    for (const auto& pc : rep.places) {
      out << pc.label << "," << pc.degree << "," << pc.local_degree;
      for (const auto& v : pc.valuations) out << "," << (v ? std::to_string(*v) : std::string("inf"));
      out << "," << pc.graded_term.str() << "\n";
    }
  } else {
    render_table(out, doc);
  }
  return kOk;
}

inline int cmd_bound(const RunConfig& c, std::ostream& out) {
  const ModuleSpec spec = load_spec(c);
  const HeightReport rep = heights_for(c, spec);
  BoundParams bp;
  bp.q = spec.fq.q();
  bp.d = spec.d;
  bp.r = spec.rank;
  bp.h = rep.naive;
  bp.h_G = rep.graded;
  bp.log_c2 = c.log_c2;
  bp.exp_base = c.exp_base;
  const BoundReport br = irreducibility_threshold(bp);
  std::vector<std::int64_t> degs;
  if (c.deg_ell > 0) degs.push_back(c.deg_ell);
  if (!c.ell.empty()) degs.push_back(monic_irreducible_arg(spec.fq, c.ell, "--ell").degree());
  for (int k = 1; k <= c.ell_deg_max; ++k) degs.push_back(k);
  std::sort(degs.begin(), degs.end());
  degs.erase(std::unique(degs.begin(), degs.end()), degs.end());

  json doc = header(c, spec);
  doc["naive_height"] = rational_json(rep.naive);
  doc["graded_height"] = rational_json(rep.graded);
  doc["bound"] = bound_json(br, degs);
  if (c.format == Format::json) {
    out << doc.dump(2) << "\n";
  } else if (c.format == Format::csv) {
    csv_scalars(out, doc);
    out << "\ndeg_ell,case1_lhs,case1_rhs,case1_holds,case2_lhs,case2_rhs,case2_holds,excluded_by_threshold\n";
    for (const auto& row : doc["bound"]["cases"]) {
      out << row["deg_ell"].get<std::int64_t>() << "," << num(row["case1"]["lhs"].get<double>()) << ","
          << num(row["case1"]["rhs"].get<double>()) << "," << row["case1"]["holds"].dump() << ","
          << num(row["case2"]["lhs"].get<double>()) << "," << num(row["case2"]["rhs"].get<double>()) << ","
          << row["case2"]["holds"].dump() << "," << row["excluded_by_threshold"].dump() << "\n";
    }
  } else {
    render_table(out, doc);
  }
  return kOk;
}

inline int cmd_probe(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const ModuleSpec spec = load_spec(c);
  const auto& phi = require_module(spec);
  const FqContext& fq = spec.fq;
  std::vector<Poly> ells;
  if (!c.ell.empty()) {
    ells.push_back(monic_irreducible_arg(fq, c.ell, "--ell"));
  } else if (c.ell_deg_max > 0) {
    ells = irreducibles_up_to(fq, c.ell_deg_max);
  } else {
    throw ParseError("probe needs --ell or --ell-deg-max", 0);
  }
  const std::vector<Poly> places = place_list(c, fq);
  ProbeOptions opt;
  opt.max_field_size = c.max_field;

  json doc = header(c, spec);
  doc["module"] = format_twisted(phi.field(), phi.phi_T());
  json results = json::array();
  json warnings = json::array();
  bool any_verdict = false;
  for (const auto& ell : ells) {
    const std::string ell_text = format_poly(fq, ell).text;
    std::vector<std::pair<Poly, FrobeniusData>> data;
    for (const auto& p : places) {
      std::string why;
      if (p == ell) {
        why = "place equals l";
      } else if (!has_good_reduction(phi, p)) {
        why = "bad reduction";
      } else {
        try {
          data.emplace_back(p, frobenius_matrix(phi, p, ell, opt));
          continue;
        } catch (const DomainError& e) {
          why = e.what();
        }
      }
      const std::string w = "l = " + ell_text + ": skipping place " + format_poly(fq, p).text + " (" + why + ")";
      err << "warning: " << w << "\n";
      warnings.push_back(w);
    }
    json r;
    r["ell"] = ell_text;
    r["deg_ell"] = ell.degree();
    if (data.empty()) {
      r["verdict"] = "no usable places";
      results.push_back(r);
      continue;
    }
    any_verdict = true;
    const Verdict v = certify_from_data(phi.rank(), std::move(data));
    json rows = json::array();
    for (const auto& t : v.trace) {
      json row;
      row["place"] = format_poly(fq, t.place).text;
      row["deg_p"] = t.place.degree();
      row["char_poly"] = char_poly_text(fq, t.data.char_poly);
      row["factor_degrees"] = t.data.factor_degrees;
      row["dim_set"] = std::vector<int>(t.dims.begin(), t.dims.end());
      json mat = json::array();
      for (const auto& mrow : t.data.matrix) {
        json jr = json::array();
        for (gf_t x : mrow) jr.push_back(residue_printed(fq, x).text);
        mat.push_back(jr);
      }
      row["matrix"] = mat;
      rows.push_back(row);
    }
    r["places"] = rows;
    r["verdict"] = to_string(v.status);
    r["surviving_dims"] = std::vector<int>(v.surviving.begin(), v.surviving.end());
    results.push_back(r);
  }
  doc["results"] = results;
  doc["warnings"] = warnings;

  if (c.format == Format::json) {
    out << doc.dump(2) << "\n";
  } else if (c.format == Format::csv) {
    out << "place,deg_p,char_poly,factor_degrees,dim_set,ell\n";
    auto ints = [](const json& a) {
      std::vector<std::string> v;
      for (const auto& x : a) v.push_back(std::to_string(x.get<int>()));
      return join(v, ";");
    };
    for (const auto& r : results) {
      if (r.contains("places")) {
        for (const auto& row : r["places"]) {
          out << row["place"].get<std::string>() << "," << row["deg_p"].get<int>() << "," << row["char_poly"].get<std::string>()
              << "," << ints(row["factor_degrees"]) << "," << ints(row["dim_set"]) << "," << r["ell"].get<std::string>() << "\n";
        }
      }
      out << "verdict,," << r["verdict"].get<std::string>() << ",,"
          << (r.contains("surviving_dims") ? ints(r["surviving_dims"]) : std::string()) << "," << r["ell"].get<std::string>()
          << "\n";
    }
  } else {
    render_table(out, doc);
  }
  if (!any_verdict) throw DomainError("no usable places for any l");
  return kOk;
}

inline int cmd_phi_at(const RunConfig& c, std::ostream& out) {
  const ModuleSpec spec = load_spec(c);
  const auto& phi = require_module(spec);
  if (c.a.empty()) throw ParseError("phi-at needs --a", 0);
  const Poly a = parse_poly_arg(spec.fq, c.a, "--a");
  const auto u = phi_at(phi, a);
  json doc = header(c, spec);
  doc["module"] = format_twisted(phi.field(), phi.phi_T());
  doc["a"] = format_poly(spec.fq, a).text;
  doc["phi_a"] = format_twisted(phi.field(), u);
  doc["deg_tau"] = u.degree();
  doc["d_part"] = format_rational(spec.fq, d_part(u)).text;
  if (c.format == Format::json) {
    out << doc.dump(2) << "\n";
  } else if (c.format == Format::csv) {
    csv_scalars(out, doc);
  } else {
    render_table(out, doc);
  }
  return kOk;
}

inline int cmd_check_isogeny(const RunConfig& c, std::ostream& out) {
  const ModuleSpec spec = load_spec(c);
  const auto& phi = require_module(spec);
  ModuleSpec target_spec = c.target_path.empty() ? spec : load_module_file(c.target_path);
  const auto& psi = require_module(target_spec);
  if (!(psi.field() == phi.field())) throw DomainError("source and target are over different fields");
  if (c.isogeny.empty()) throw ParseError("check-isogeny needs --isogeny", 0);
  const auto u = parse_twisted(phi.field(), c.isogeny);
  json doc = header(c, spec);
  doc["source"] = format_twisted(phi.field(), phi.phi_T());
  doc["target"] = format_twisted(psi.field(), psi.phi_T());
  doc["isogeny"] = format_twisted(phi.field(), u);
  const bool morph = !u.is_zero() && is_morphism(u, phi, psi);
  doc["is_morphism"] = morph;
  if (morph) {
    const auto f = make_isogeny(phi, psi, u);
    doc["degree"] = isogeny_degree(f).str();
    doc["degree_log_q"] = isogeny_degree_exponent(f);
    if (!c.a.empty()) {
      const Poly a = parse_poly_arg(spec.fq, c.a, "--a");
      const auto fh = dual_isogeny(f, a);
      doc["a"] = format_poly(spec.fq, a).text;
      doc["dual"] = format_twisted(phi.field(), fh.poly);
      doc["dual_degree"] = isogeny_degree(fh).str();
      const bool ok = fh.poly * f.poly == phi_at(phi, a) &&
                      isogeny_degree_exponent(f) + isogeny_degree_exponent(fh) == phi.rank() * a.degree();
      doc["degree_identity_holds"] = ok;
    }
  }
  if (c.format == Format::json) {
    out << doc.dump(2) << "\n";
  } else if (c.format == Format::csv) {
    csv_scalars(out, doc);
  } else {
    render_table(out, doc);
  }
  return kOk;
}

}  // namespace detail

/// Runs one command. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Drinfeld module heights, irreducibility bounds and Frobenius probes", "drinfeld"};
  app.require_subcommand(1, 1);
  std::string format = "table";
  std::string exp_base = "d";

  auto add_common = [&](CLI::App* s) {
    s->add_option("--module", c.module_path, "module description file")->required();
    s->add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json", "csv"}));
    s->add_option("--seed", c.seed, "seed for randomized routines");
    s->add_flag("--reproducible", c.reproducible, "omit the timestamp");
    s->add_option("--log-c2", c.log_c2, "log_q of the constant c2 (assumption, echoed)");
    s->add_option("--exp-base", exp_base, "exponent base for 10(x+1)^7")->check(CLI::IsMember({"d", "r"}));
  };

  auto* heights = app.add_subcommand("heights", "naive and graded heights");
  add_common(heights);
  heights->add_option("--height-table", c.height_table, "per-place CSV for d > 1");

  auto* bound = app.add_subcommand("bound", "irreducibility threshold and case verdicts");
  add_common(bound);
  bound->add_option("--height-table", c.height_table, "per-place CSV for d > 1");
  auto* b_ell = bound->add_option("--ell", c.ell, "prime l whose degree is tested");
  auto* b_deg = bound->add_option("--deg-ell", c.deg_ell, "single deg l to test")->check(CLI::PositiveNumber);
  auto* b_max = bound->add_option("--ell-deg-max", c.ell_deg_max, "test every deg l in 1..N")->check(CLI::PositiveNumber);
  b_ell->excludes(b_max);
  (void)b_deg;

  auto* probe = app.add_subcommand("probe", "Frobenius certificate of irreducibility");
  add_common(probe);
  auto* p_ell = probe->add_option("--ell", c.ell, "prime l");
  auto* p_max = probe->add_option("--ell-deg-max", c.ell_deg_max, "every prime l of degree <= N")->check(CLI::Range(1, 4));
  p_ell->excludes(p_max);
  auto* p_places = probe->add_option("--places", c.places, "comma-separated monic irreducibles");
  auto* p_pmax = probe->add_option("--place-deg-max", c.place_deg_max, "every place of degree <= N")->check(CLI::Range(1, 6));
  p_places->excludes(p_pmax);
  probe->add_option("--max-field", c.max_field, "largest splitting field searched")->check(CLI::Range(2, 4194304));

  auto* phiat = app.add_subcommand("phi-at", "the twisted polynomial phi_a");
  add_common(phiat);
  phiat->add_option("--a", c.a, "element a of F_q[T]")->required();

  auto* iso = app.add_subcommand("check-isogeny", "morphism test, degree and dual");
  add_common(iso);
  iso->add_option("--target", c.target_path, "target module file (default: the source)");
  iso->add_option("--isogeny", c.isogeny, "twisted polynomial, e.g. \"t - 1\"")->required();
  iso->add_option("--a", c.a, "a with ker f inside phi[a], for the dual");

  std::vector<const char*> argv{"drinfeld"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  c.format = format == "json" ? Format::json : (format == "csv" ? Format::csv : Format::table);
  c.exp_base = exp_base == "r" ? ExpBase::r : ExpBase::d;
  c.subcommand = app.get_subcommands().front()->get_name();

  try {
    if (c.subcommand == "heights") return detail::cmd_heights(c, out);
    if (c.subcommand == "bound") return detail::cmd_bound(c, out);
    if (c.subcommand == "probe") return detail::cmd_probe(c, out, err);
    if (c.subcommand == "phi-at") return detail::cmd_phi_at(c, out);
    if (c.subcommand == "check-isogeny") return detail::cmd_check_isogeny(c, out);
    throw InvariantError("unhandled subcommand");
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kMathError;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace drinfeld::cli

#endif  // DRINFELD_CLI_HPP
