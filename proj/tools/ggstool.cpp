// ggstool: command-line driver for GGS-curve code computations.
//
// Subcommands: semigroup, nu, dord, table, quantum, conv, orbits, code-aut.
// Tabular commands honor --format csv|json; certificate commands always emit
// JSON. Identical invocations produce byte-identical output.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ggs/agcode.hpp"
#include "ggs/automorphisms.hpp"
#include "ggs/curve.hpp"
#include "ggs/derived_codes.hpp"
#include "ggs/error.hpp"
#include "ggs/order_bound.hpp"
#include "ggs/p0_semigroup.hpp"
#include "ggs/semigroup.hpp"

using json = nlohmann::ordered_json;

namespace {

std::string f6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string frac(int64_t num, uint64_t den) {
  return std::to_string(num) + "/" + std::to_string(den);
}

// Semigroup of the chosen point, built out to at least `bound`.
ggs::Semigroup point_semigroup(const ggs::CurveParams& par, const std::string& point,
                               uint64_t bound) {
  if (point == "infinity") {
    return ggs::Semigroup::from_generators({par.pole_z, par.pole_y, par.pole_x}, bound);
  }
  if (point == "p0") {
    return ggs::h_p0(par.q, par.n, bound);
  }
  ggs::fail("UsageError", "--point must be infinity or p0");
}

json hypotheses_json(const std::vector<ggs::Hypothesis>& hs) {
  json arr = json::array();
  for (const auto& h : hs) arr.push_back({{"name", h.name}, {"pass", h.pass}});
  return arr;
}

json quantum_json(const ggs::QuantumParams& qp) {
  json j;
  j["family"] = qp.family;
  j["q"] = qp.q;
  j["n"] = qp.n;
  j["N"] = qp.length;
  j["k"] = qp.k;
  j["D_lower"] = qp.d_lower;
  j["delta_Q"] = qp.delta_q;
  j["Delta_Q"] = frac(qp.delta_q_num, qp.delta_q_den);
  j["Delta_Q_float"] = f6(double(qp.delta_q_num) / double(qp.delta_q_den));
  j["bound_exceeds_singleton"] = qp.bound_exceeds_singleton;
  j["hypotheses"] = hypotheses_json(qp.hypotheses);
  j["provenance"] = qp.provenance;
  return j;
}

struct Args {
  uint32_t q = 2, n = 5;
  std::string point = "infinity";
  std::string format = "csv";
  uint64_t seed = 42;
  std::string out_path;

  uint64_t max = 100;
  int64_t l = -1;
  int64_t lmin = -1, lmax = -1;
  bool compare = false;
  std::string family;
  uint64_t s = 0;
  uint64_t a = 0, b = 0;
  uint64_t rho = 0;
};

// Resolves --l / --lmin,--lmax into an inclusive index range.
std::pair<uint64_t, uint64_t> index_range(const Args& args) {
  if (args.l >= 0) {
    ggs::require(args.lmin < 0 && args.lmax < 0, "UsageError",
                 "give either --l or --lmin/--lmax, not both");
    return {uint64_t(args.l), uint64_t(args.l)};
  }
  ggs::require(args.lmin >= 0 && args.lmax >= 0, "UsageError",
               "need --l or both --lmin and --lmax");
  return {uint64_t(args.lmin), uint64_t(args.lmax)};
}

std::string run_semigroup(const Args& args) {
  ggs::CurveParams par = ggs::curve_params(args.q, args.n);
  ggs::Semigroup sg = point_semigroup(par, args.point, args.max + 1);
  std::vector<uint64_t> values;
  for (uint64_t v = 0; v <= args.max; ++v) {
    if (sg.contains(v)) values.push_back(v);
  }
  bool triples = (args.point == "infinity" && args.q == 2 && args.n >= 5);
  ggs::LSets lsets;
  if (args.point == "p0") lsets = ggs::build_lsets(args.q, args.n);
  auto lset_tag = [&](uint64_t v) -> std::string {
    for (size_t i = 0; i < lsets.sets.size(); ++i) {
      const auto& set = lsets.sets[i];
      if (std::binary_search(set.begin(), set.end(), int64_t(v)))
        return "L" + std::to_string(i + 1);
    }
    return "tail";  // past the enumerated L-sets, closed-form region
  };
  if (args.format == "json") {
    json rows = json::array();
    for (uint64_t v : values) {
      json row;
      row["value"] = v;
      if (triples) {
        ggs::Triple t = ggs::triple_of(int64_t(v), args.n);
        row["i"] = t.i;
        row["j"] = t.j;
        row["k"] = t.k;
      } else if (args.point == "p0") {
        row["lset"] = lset_tag(v);
      }
      rows.push_back(row);
    }
    return rows.dump(2) + "\n";
  }
  std::string out;
  if (triples) {
    out = "value,i,j,k\n";
    for (uint64_t v : values) {
      ggs::Triple t = ggs::triple_of(int64_t(v), args.n);
      out += std::to_string(v) + "," + std::to_string(t.i) + "," +
             std::to_string(t.j) + "," + std::to_string(t.k) + "\n";
    }
  } else if (args.point == "p0") {
    out = "value,lset\n";
    for (uint64_t v : values) out += std::to_string(v) + "," + lset_tag(v) + "\n";
  } else {
    out = "value\n";
    for (uint64_t v : values) out += std::to_string(v) + "\n";
  }
  return out;
}

std::string run_nu(const Args& args) {
  auto [lo, hi] = index_range(args);
  ggs::require(lo >= 1, "IndexBeyondBound", "nu indices are 1-based");
  ggs::CurveParams par = ggs::curve_params(args.q, args.n);
  ggs::Semigroup sg = point_semigroup(par, args.point, 0);
  json rows = json::array();
  std::string csv = "l,rho_next,nu\n";
  for (uint64_t l = lo; l <= hi; ++l) {
    uint64_t rho_next = sg.value_at(l + 1);
    uint64_t nu = sg.nu(l);
    rows.push_back({{"l", l}, {"rho_next", rho_next}, {"nu", nu}});
    csv += std::to_string(l) + "," + std::to_string(rho_next) + "," +
           std::to_string(nu) + "\n";
  }
  return args.format == "json" ? rows.dump(2) + "\n" : csv;
}

std::string run_dord(const Args& args) {
  auto [lo, hi] = index_range(args);
  ggs::require(lo >= 1, "IndexBeyondBound", "dord indices are 1-based");
  ggs::CurveParams par = ggs::curve_params(args.q, args.n);
  ggs::Semigroup sg = point_semigroup(par, args.point, 0);
  bool closed_ok = (args.point == "infinity" && args.q == 2 && args.n >= 5);
  json rows = json::array();
  std::string csv = "l,rho,d_ord,method\n";
  for (uint64_t l = lo; l <= hi; ++l) {
    ggs::DualParams dp = closed_ok ? ggs::dual_params(l, par, sg)
                                   : ggs::dual_params_oracle(l, par, sg);
    std::string method = "oracle";
    if (closed_ok) {
      ggs::OrderBoundResult r =
          ggs::dord_closed(int64_t(sg.value_at(l + 1)), args.n);
      method = dp.closed_form ? r.method : "oracle";
    }
    rows.push_back(
        {{"l", l}, {"rho", dp.rho}, {"d_ord", dp.d_ord}, {"method", method}});
    csv += std::to_string(l) + "," + std::to_string(dp.rho) + "," +
           std::to_string(dp.d_ord) + "," + method + "\n";
  }
  return args.format == "json" ? rows.dump(2) + "\n" : csv;
}

std::string run_table(const Args& args) {
  auto [lo, hi] = index_range(args);
  ggs::require(lo >= 1, "IndexBeyondBound", "table indices are 1-based");
  ggs::CurveParams par = ggs::curve_params(args.q, args.n);
  if (args.compare) {
    ggs::Semigroup h_inf = point_semigroup(par, "infinity", 0);
    ggs::Semigroup hp0 = point_semigroup(par, "p0", 0);
    auto rows = ggs::improvement_table(par, h_inf, hp0, lo, hi);
    if (args.format == "json") {
      json arr = json::array();
      for (const auto& r : rows) {
        arr.push_back({{"l0", r.l0},
                       {"l_inf", r.l_inf},
                       {"d0", r.d0},
                       {"d_inf", r.d_inf},
                       {"delta0", r.delta0},
                       {"delta_inf", r.delta_inf},
                       {"diff", r.delta_inf - r.delta0}});
      }
      return arr.dump(2) + "\n";
    }
    std::string csv = "l0,l_inf,d0,d_inf,delta0,delta_inf,diff\n";
    for (const auto& r : rows) {
      csv += std::to_string(r.l0) + "," + std::to_string(r.l_inf) + "," +
             std::to_string(r.d0) + "," + std::to_string(r.d_inf) + "," +
             std::to_string(r.delta0) + "," + std::to_string(r.delta_inf) + "," +
             std::to_string(r.delta_inf - r.delta0) + "\n";
    }
    return csv;
  }
  ggs::Semigroup sg = point_semigroup(par, args.point, 0);
  bool closed_ok = (args.point == "infinity" && args.q == 2 && args.n >= 5);
  json arr = json::array();
  std::string csv = "l,rho,k_dual,d_ord,delta,Delta,Delta_float\n";
  for (uint64_t l = lo; l <= hi; ++l) {
    ggs::DualParams dp = closed_ok ? ggs::dual_params(l, par, sg)
                                   : ggs::dual_params_oracle(l, par, sg);
    std::string fr = frac(dp.delta, dp.length);
    std::string fl = f6(double(dp.delta) / double(dp.length));
    arr.push_back({{"l", l},
                   {"rho", dp.rho},
                   {"k_dual", dp.k_dual},
                   {"d_ord", dp.d_ord},
                   {"delta", dp.delta},
                   {"Delta", fr},
                   {"Delta_float", fl}});
    csv += std::to_string(l) + "," + std::to_string(dp.rho) + "," +
           std::to_string(dp.k_dual) + "," + std::to_string(dp.d_ord) + "," +
           std::to_string(dp.delta) + "," + fr + "," + fl + "\n";
  }
  return args.format == "json" ? arr.dump(2) + "\n" : csv;
}

std::string run_quantum(const Args& args) {
  ggs::CurveParams par = ggs::curve_params(args.q, args.n);
  ggs::QuantumParams qp;
  if (args.family == "twopoint") {
    qp = ggs::css_two_point(args.a, args.b, par);
  } else if (args.family == "t1") {
    ggs::require(args.l >= 0, "UsageError", "--l required for family t1");
    qp = ggs::css_family_t1(uint64_t(args.l), args.s, par);
  } else if (args.family == "improved") {
    ggs::require(args.l >= 0, "UsageError", "--l required for family improved");
    ggs::Semigroup h_inf = point_semigroup(par, "infinity", 0);
    qp = ggs::css_improved(uint64_t(args.l), args.s, par, h_inf);
  } else {
    ggs::fail("UsageError", "--family must be twopoint, t1, or improved");
  }
  return quantum_json(qp).dump(2) + "\n";
}

std::string run_conv(const Args& args) {
  ggs::CurveParams par = ggs::curve_params(args.q, args.n);
  ggs::Semigroup h_inf = point_semigroup(par, "infinity", args.rho + 2);
  ggs::ConvolutionalParams cp = ggs::conv_params(args.rho, args.s, par, h_inf);
  json j;
  j["q"] = cp.q;
  j["n"] = cp.n;
  j["N"] = cp.length;
  j["k_conv"] = cp.k_conv;
  j["degree"] = cp.degree;
  j["memory"] = cp.memory;
  j["df_lower"] = cp.df_lower;
  j["hypotheses"] = hypotheses_json(cp.hypotheses);
  j["provenance"] = cp.provenance;
  return j.dump(2) + "\n";
}

std::string run_orbits(const Args& args) {
  ggs::Curve curve(args.q, args.n);
  ggs::AutContext aut(curve);
  std::vector<ggs::CurveAut> gens = aut.q_group();
  gens.push_back(aut.sigma_generator());
  std::vector<uint64_t> sizes = aut.orbit_sizes(gens);
  uint64_t order = aut.group_order();
  json j;
  j["group_order"] = order;
  j["orbit_sizes"] = sizes;
  json shorts = json::array();
  for (uint64_t s : sizes) {
    if (s < order) shorts.push_back(s);
  }
  j["short_orbits"] = shorts;
  return j.dump(2) + "\n";
}

std::string run_code_aut(const Args& args) {
  ggs::require(args.l >= 0, "UsageError", "--l required");
  ggs::CurveParams par = ggs::curve_params(args.q, args.n);
  ggs::Semigroup h_inf = point_semigroup(par, "infinity", uint64_t(args.l) + 2);
  uint64_t order = ggs::code_aut_order(uint64_t(args.l), par, h_inf);
  uint64_t qn = par.pole_x - 1;
  json j;
  j["l"] = args.l;
  j["q"] = args.q;
  j["n"] = args.n;
  j["curve_group_order"] = uint64_t(par.q) * par.q * par.q * (par.q - 1) * (qn + 1);
  j["field_aut_order"] = 2ull * par.n * par.h;
  j["scalar_order"] = qn * qn - 1;
  j["code_aut_order"] = order;
  return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"One-point AG codes on GGS maximal curves"};
  app.require_subcommand(1);
  Args args;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--q", args.q, "base field size q (prime power)");
    cmd->add_option("--n", args.n, "tower exponent n (odd, >= 3)");
    cmd->add_option("--format", args.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--seed", args.seed, "RNG seed (reserved for sampling)");
    cmd->add_option("--out", args.out_path, "write output to this file");
  };

  CLI::App* c_semi = app.add_subcommand("semigroup", "list semigroup elements");
  c_semi->add_option("--point", args.point, "infinity or p0");
  c_semi->add_option("--max", args.max, "largest value to list")->required();
  add_common(c_semi);

  CLI::App* c_nu = app.add_subcommand("nu", "Feng-Rao nu values");
  c_nu->add_option("--point", args.point, "infinity or p0");
  c_nu->add_option("--l", args.l, "single 1-based index");
  c_nu->add_option("--lmin", args.lmin, "range start");
  c_nu->add_option("--lmax", args.lmax, "range end");
  add_common(c_nu);

  CLI::App* c_dord = app.add_subcommand("dord", "order bound on dual distance");
  c_dord->add_option("--point", args.point, "infinity or p0");
  c_dord->add_option("--l", args.l, "single 1-based index");
  c_dord->add_option("--lmin", args.lmin, "range start");
  c_dord->add_option("--lmax", args.lmax, "range end");
  add_common(c_dord);

  CLI::App* c_table = app.add_subcommand("table", "dual-code parameter table");
  c_table->add_option("--point", args.point, "infinity or p0");
  c_table->add_option("--l", args.l, "single 1-based index");
  c_table->add_option("--lmin", args.lmin, "range start");
  c_table->add_option("--lmax", args.lmax, "range end");
  c_table->add_flag("--compare", args.compare, "emit the two-point comparison table");
  add_common(c_table);

  CLI::App* c_quant = app.add_subcommand("quantum", "CSS quantum certificates");
  c_quant->add_option("--family", args.family, "twopoint, t1, or improved")->required();
  c_quant->add_option("--l", args.l, "degree (t1) or 1-based index (improved)");
  c_quant->add_option("--s", args.s, "family parameter s");
  c_quant->add_option("--a", args.a, "smaller degree (twopoint)");
  c_quant->add_option("--b", args.b, "larger degree (twopoint)");
  add_common(c_quant);

  CLI::App* c_conv = app.add_subcommand("conv", "convolutional certificates");
  c_conv->add_option("--rho", args.rho, "degree rho_l (an element)")->required();
  c_conv->add_option("--s", args.s, "degree/unit-memory parameter")->required();
  add_common(c_conv);

  CLI::App* c_orb = app.add_subcommand("orbits", "automorphism orbit report");
  add_common(c_orb);

  CLI::App* c_caut = app.add_subcommand("code-aut", "code automorphism group order");
  c_caut->add_option("--l", args.l, "code degree l")->required();
  add_common(c_caut);

  CLI11_PARSE(app, argc, argv);

  std::string out;
  try {
    if (c_semi->parsed()) out = run_semigroup(args);
    if (c_nu->parsed()) out = run_nu(args);
    if (c_dord->parsed()) out = run_dord(args);
    if (c_table->parsed()) out = run_table(args);
    if (c_quant->parsed()) out = run_quantum(args);
    if (c_conv->parsed()) out = run_conv(args);
    if (c_orb->parsed()) out = run_orbits(args);
    if (c_caut->parsed()) out = run_code_aut(args);
  } catch (const ggs::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error " << e.what() << "\n";
    return 1;
  }

  if (!args.out_path.empty()) {
    std::ofstream f(args.out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error [IoFailure] cannot open " << args.out_path << "\n";
      return 1;
    }
    f << out;
  } else {
    std::cout << out;
  }
  return 0;
}
