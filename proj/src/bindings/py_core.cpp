// Python bindings: thin typed wrappers over the main library operations.
// Exact rational and Laurent values cross the boundary as strings; weights
// and multiplicities as plain integer lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dualpair/branching.hpp"
#include "dualpair/charring.hpp"
#include "dualpair/laurent.hpp"
#include "dualpair/octonion.hpp"
#include "dualpair/rootsys.hpp"
#include "dualpair/satake.hpp"
#include "dualpair/verify.hpp"

namespace py = pybind11;

namespace {

using dualpair::Coords;

std::vector<std::pair<Coords, long long>> map_to_list(const std::map<Coords, long long>& m) {
  std::vector<std::pair<Coords, long long>> out;
  out.reserve(m.size());
  for (const auto& [wt, mult] : m) out.emplace_back(wt, mult);
  return out;
}

dualpair::Oct<dualpair::Rat> oct_from_ints(const std::vector<long long>& v) {
  if (v.size() != 8) throw std::invalid_argument("octonion needs 8 integer coordinates");
  dualpair::Oct<dualpair::Rat> o;
  for (int i = 0; i < 8; ++i) o.c[i] = dualpair::rat(v[i]);
  return o;
}

std::vector<long long> oct_to_ints(const dualpair::Oct<dualpair::Rat>& o) {
  std::vector<long long> v(8);
  for (int i = 0; i < 8; ++i) v[i] = dualpair::rat_to_ll(o.c[i]);
  return v;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact dual-pair computations: root systems, characters, branching, "
      "parabolic exponents, split octonions, and the verification suites. "
      "Laurent strings use v = q^(1/2) with terms in descending exponent.";

  m.def(
      "dim",
      [](const std::string& label, const Coords& wt) {
        return dualpair::dim_weyl(dualpair::RootSystem::build(label), wt);
      },
      py::arg("label"), py::arg("weight"), "Dimension of the irreducible with this highest weight.");

  m.def(
      "weights",
      [](const std::string& label, const Coords& wt) {
        dualpair::RootSystem rs = dualpair::RootSystem::build(label);
        return map_to_list(dualpair::irr_character(rs, wt).w);
      },
      py::arg("label"), py::arg("weight"),
      "Weight multiplicities of the irreducible, as (weight, multiplicity) pairs.");

  m.def(
      "decompose_tensor",
      [](const std::string& label, const Coords& a, const Coords& b) {
        dualpair::RootSystem rs = dualpair::RootSystem::build(label);
        auto t = dualpair::tensor(rs, dualpair::irr_character(rs, a),
                                  dualpair::irr_character(rs, b));
        return map_to_list(dualpair::decompose(rs, t));
      },
      py::arg("label"), py::arg("weight_a"), py::arg("weight_b"),
      "Irreducible constituents of a tensor product, as (weight, multiplicity) pairs.");

  m.def(
      "transfer",
      [](const std::string& pair, const Coords& wt) {
        dualpair::TransferResult tr = dualpair::transfer_rtilde(pair, wt);
        std::vector<std::tuple<Coords, std::string, long long>> out;
        for (const auto& c : tr.comps)
          out.emplace_back(c.target_wt, c.coeff.str(), c.coeff.eval_at_one());
        return out;
      },
      py::arg("pair"), py::arg("weight"),
      "Transfer of an irreducible source character for pair D5, E6, E7 or E8; "
      "returns (target weight, Laurent coefficient, value at v=1) triples.");

  m.def(
      "restrict_map",
      [](const std::string& map_name, const Coords& wt) {
        dualpair::LatticeMap lm;
        if (map_name == "g2-spin7") {
          lm = dualpair::g2_in_spin7_map();
        } else if (map_name == "sl3-g2") {
          lm = dualpair::sl3_in_g2_map();
        } else if (map_name == "sl2l-sl2s-g2") {
          lm = dualpair::sl2l_sl2s_in_g2_map();
        } else {
          throw std::invalid_argument("unknown map: " + map_name);
        }
        dualpair::RootSystem src = dualpair::RootSystem::build(lm.source);
        dualpair::RootSystem tgt = dualpair::RootSystem::build(lm.target);
        auto dec = dualpair::decompose(
            tgt, dualpair::restrict_character(lm, dualpair::irr_character(src, wt)));
        return map_to_list(dec);
      },
      py::arg("map_name"), py::arg("weight"),
      "Decomposition of an irreducible restricted along a stored subgroup map "
      "(g2-spin7, sl3-g2, sl2l-sl2s-g2).");

  m.def(
      "graded_branch_f4",
      [](const Coords& wt) {
        dualpair::F4LeviB3 fl = dualpair::f4_levi_b3();
        dualpair::RootSystem f4 = dualpair::RootSystem::build("F4");
        dualpair::GradedDecomp gd =
            dualpair::levi_branch(f4, wt, fl.levi_nodes, fl.grading_node);
        std::vector<std::tuple<long long, Coords, long long>> out;
        for (const auto& p : gd.pieces) out.emplace_back(p.grade2, p.levi_wt, p.mult);
        return out;
      },
      py::arg("weight"),
      "Graded restriction of an F4 irreducible to its B3 Levi; returns "
      "(twice the grade, Levi weight, multiplicity) triples.");

  m.def("table3", [] {
    std::vector<std::tuple<std::string, long long, long long, std::string, std::string>> out;
    for (const auto& r : dualpair::table3())
      out.emplace_back(r.name, r.d, r.center, dualpair::rat_str(r.delta_ubar),
                       dualpair::rat_str(r.delta_nbar));
    return out;
  });

  m.def(
      "delta_exponent",
      [](const std::string& label, int node, long long divisor) {
        dualpair::RootSystem rs = dualpair::RootSystem::build(label);
        dualpair::ParabolicData pd = dualpair::nilradical(rs, node);
        dualpair::Rat e = (divisor == 0)
                              ? dualpair::delta_exponent_primitive(rs, pd)
                              : dualpair::delta_exponent(rs, pd, dualpair::rat(divisor));
        return dualpair::rat_str(e);
      },
      py::arg("label"), py::arg("node"), py::arg("divisor") = 0,
      "Modular-character exponent of a maximal parabolic (divisor 0 = primitive).");

  m.def("g2_delta_exponents", [] {
    auto e = dualpair::g2_delta_exponents();
    return std::make_pair(dualpair::rat_str(e[0]), dualpair::rat_str(e[1]));
  });

  m.def(
      "minuscule_identity",
      [](int n, int i) {
        dualpair::MinusculePair mp = dualpair::minuscule_identity(n, i);
        return std::make_tuple(mp.lhs.str(), mp.rhs.str(), mp.lhs == mp.rhs);
      },
      py::arg("n"), py::arg("i"));

  m.def("oct_mul", [](const std::vector<long long>& a, const std::vector<long long>& b) {
    return oct_to_ints(oct_from_ints(a) * oct_from_ints(b));
  });
  m.def("oct_norm", [](const std::vector<long long>& a) {
    return dualpair::rat_to_ll(dualpair::oct_norm(oct_from_ints(a)));
  });
  m.def("oct_trace", [](const std::vector<long long>& a) {
    return dualpair::rat_to_ll(dualpair::oct_trace(oct_from_ints(a)));
  });

  m.def(
      "run_suite",
      [](const std::string& suite, std::uint64_t seed, long long trials) {
        dualpair::SuiteReport r = dualpair::run_suite(suite, seed, trials);
        py::dict d;
        d["suite"] = r.suite;
        d["seed"] = r.seed;
        d["pass"] = r.pass;
        py::list checks;
        for (const auto& c : r.checks) {
          py::dict cd;
          cd["id"] = c.id;
          cd["pass"] = c.pass;
          cd["lhs"] = c.lhs;
          cd["rhs"] = c.rhs;
          checks.append(cd);
        }
        d["checks"] = checks;
        return d;
      },
      py::arg("suite"), py::arg("seed") = 0, py::arg("trials") = 0,
      "Run one verification suite; trials 0 selects per-check defaults.");

  m.def("suite_names", [] { return dualpair::suite_names(); });
}
