// Command-line front end.  Subcommands expose the verification suites and the
// main table/branching computations with machine-readable output.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.
// Output on stdout is byte-deterministic for a fixed (command, flags, seed);
// timing goes to stderr.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dualpair/branching.hpp"
#include "dualpair/charring.hpp"
#include "dualpair/laurent.hpp"
#include "dualpair/rootsys.hpp"
#include "dualpair/satake.hpp"
#include "dualpair/verify.hpp"

namespace {

using dualpair::Coords;
using ordered_json = nlohmann::ordered_json;

std::string coords_str(const Coords& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

Coords parse_weight(const std::string& text, std::size_t rank) {
  Coords out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    std::size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw CLI::ValidationError("--weight", "bad coordinate: " + tok);
    out.push_back(v);
  }
  if (out.size() != rank)
    throw CLI::ValidationError("--weight", "expected " + std::to_string(rank) +
                                               " comma-separated coordinates, got " +
                                               std::to_string(out.size()));
  return out;
}

long long parse_field_prime(const std::string& field) {
  // "Q" or "Fp:<p>"; returns 0 for Q.
  if (field == "Q") return 0;
  if (field.rfind("Fp:", 0) != 0)
    throw CLI::ValidationError("--field", "expected Q or Fp:<p>, got " + field);
  std::size_t pos = 0;
  long long p = 0;
  try {
    p = std::stoll(field.substr(3), &pos);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--field", "bad prime in " + field);
  }
  if (pos != field.size() - 3 || p < 2) throw CLI::ValidationError("--field", "bad prime in " + field);
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw CLI::ValidationError("--field", std::to_string(p) + " is not prime");
  return p;
}

using Rows = std::vector<std::pair<std::string, std::string>>;

int emit(const std::string& command, const ordered_json& inputs, const Rows& results, bool pass,
         const std::string& format) {
  if (format == "json") {
    ordered_json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = ordered_json::array();
    for (const auto& [k, v] : results) {
      ordered_json r;
      r["key"] = k;
      r["value"] = v;
      j["results"].push_back(std::move(r));
    }
    j["pass"] = pass;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& [k, v] : results) std::cout << k << "\t" << v << "\n";
    std::cout << "pass\t" << (pass ? "true" : "false") << "\n";
  }
  return pass ? 0 : 1;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, long long trials,
               const std::string& field, const std::string& format) {
  auto t0 = std::chrono::steady_clock::now();
  dualpair::SuiteReport rep = dualpair::run_suite(suite, seed, trials);
  auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
          .count();
  std::cerr << "suite " << suite << " elapsed_ms=" << ms << "\n";

  Rows rows;
  for (const auto& c : rep.checks) {
    std::string v = c.pass ? ("pass: " + c.lhs) : ("fail: " + c.lhs + " != " + c.rhs);
    rows.emplace_back(c.id, v);
  }
  ordered_json inputs;
  inputs["suite"] = suite;
  inputs["seed"] = seed;
  inputs["trials"] = trials;
  inputs["field"] = field;
  return emit("verify", inputs, rows, rep.pass, format);
}

int cmd_rtilde(const std::string& pair, const std::string& weight, const std::string& format) {
  static const std::map<std::string, std::size_t> ranks = {
      {"D5", 2}, {"E6", 2}, {"E7", 3}, {"E8", 4}};
  Coords wt = parse_weight(weight, ranks.at(pair));
  dualpair::TransferResult tr = dualpair::transfer_rtilde(pair, wt);
  Rows rows;
  for (const auto& c : tr.comps) rows.emplace_back(coords_str(c.target_wt), c.coeff.str());
  ordered_json inputs;
  inputs["pair"] = pair;
  inputs["weight"] = coords_str(wt);
  inputs["source"] = tr.source_label;
  inputs["target"] = tr.target_label;
  return emit("rtilde", inputs, rows, true, format);
}

int cmd_branch(const std::string& map_name, const std::string& weight, const std::string& from,
               const std::string& format) {
  using namespace dualpair;
  Rows rows;
  ordered_json inputs;
  inputs["map"] = map_name;
  std::string source;
  if (map_name == "f4-levi-b3") {
    source = "F4";
    Coords wt = parse_weight(weight, 4);
    F4LeviB3 fl = f4_levi_b3();
    RootSystem f4 = RootSystem::build("F4");
    GradedDecomp gd = levi_branch(f4, wt, fl.levi_nodes, fl.grading_node);
    for (const auto& p : gd.pieces) {
      rows.emplace_back("[" + std::to_string(p.grade2) + "/2] " + coords_str(p.levi_wt),
                        std::to_string(p.mult));
    }
    inputs["weight"] = coords_str(wt);
  } else {
    LatticeMap m;
    if (map_name == "g2-spin7") {
      m = g2_in_spin7_map();
    } else if (map_name == "sl3-g2") {
      m = sl3_in_g2_map();
    } else if (map_name == "sl2l-sl2s-g2") {
      m = sl2l_sl2s_in_g2_map();
    } else {
      throw CLI::ValidationError("--map", "unknown map: " + map_name);
    }
    source = m.source;
    RootSystem src = RootSystem::build(m.source);
    RootSystem tgt = RootSystem::build(m.target);
    Coords wt = parse_weight(weight, static_cast<std::size_t>(src.rank()));
    auto dec = decompose(tgt, restrict_character(m, irr_character(src, wt)));
    for (const auto& [w, mult] : dec) rows.emplace_back(coords_str(w), std::to_string(mult));
    inputs["weight"] = coords_str(wt);
    inputs["target"] = m.target;
  }
  if (!from.empty() && from != source)
    throw CLI::ValidationError("--from", "map " + map_name + " branches from " + source);
  inputs["source"] = source;
  return emit("branch", inputs, rows, true, format);
}

int cmd_delta(const std::string& ambient, int node, long long restrict_to,
              const std::string& format) {
  using namespace dualpair;
  RootSystem rs = RootSystem::build(ambient);
  if (node < 0 || node >= rs.num_simple())
    throw CLI::ValidationError("--node", "node out of range for " + ambient);
  ParabolicData pd = nilradical(rs, node);
  Rat e = (restrict_to == 0) ? delta_exponent_primitive(rs, pd)
                             : delta_exponent(rs, pd, rat(restrict_to));
  Rows rows;
  rows.emplace_back("exponent", rat_str(e));
  rows.emplace_back("nilradical-dim", std::to_string(pd.nilrad.size()));
  rows.emplace_back("levels", "level1=" + std::to_string(pd.level1) +
                                  " level2=" + std::to_string(pd.level2) +
                                  " max=" + std::to_string(pd.max_level));
  rows.emplace_back("root-sum", coords_str(pd.root_sum));
  ordered_json inputs;
  inputs["ambient"] = ambient;
  inputs["node"] = node;
  inputs["restrict-to"] = restrict_to;
  return emit("delta", inputs, rows, true, format);
}

int cmd_table(const std::string& name, const std::string& format) {
  using namespace dualpair;
  Rows rows;
  if (name == "table3") {
    for (const auto& r : table3()) {
      rows.emplace_back(r.name, "d=" + std::to_string(r.d) + " z=" + std::to_string(r.center) +
                                    " dU=" + rat_str(r.delta_ubar) +
                                    " dN=" + rat_str(r.delta_nbar));
    }
  } else if (name == "gaussian") {
    for (int n = 1; n <= 6; ++n)
      for (int k = 0; k <= n; ++k)
        rows.emplace_back("(" + std::to_string(n) + "," + std::to_string(k) + ")",
                          gaussian_binomial(n, k).str());
  } else if (name == "v8") {
    RootSystem b3 = RootSystem::build("B3");
    GradedDecomp gd = levi_branch(b3, {0, 0, 1}, {0, 1}, 2);
    RootSystem a2 = b3.levi_subsystem({0, 1});
    for (const auto& p : gd.pieces) {
      rows.emplace_back("[" + std::to_string(p.grade2) + "/2]",
                        coords_str(p.levi_wt) + " dim " +
                            std::to_string(p.mult * dim_weyl(a2, p.levi_wt)));
    }
  }
  ordered_json inputs;
  inputs["name"] = name;
  return emit("table", inputs, rows, true, format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "dualpair: exact computations for dual-pair Hecke correspondences.\n"
      "Laurent values use the half-power variable v with v = q^(1/2); terms are\n"
      "printed by descending exponent, e.g. \"v^2 + 1 + v^-2\".  Weights are\n"
      "fundamental-weight coordinates, comma-separated.  Randomized suites are\n"
      "fully determined by --seed; --field selects Q or Fp:<p> where a command\n"
      "supports a field choice (the verify suites fix their own fields)."};
  app.require_subcommand(1);

  std::string format = "json";
  std::uint64_t seed = 0;
  long long trials = 0;
  std::string field = "Q";
  int rc = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--seed", seed, "seed for randomized checks");
    sub->add_option("--trials", trials, "trial count override (0 = per-check defaults)");
    sub->add_option("--field", field, "coefficient field: Q or Fp:<p>");
  };

  std::string suite = "all";
  auto* sv = app.add_subcommand("verify", "run a named verification suite");
  sv->add_option("--suite", suite, "suite name")->check(CLI::IsMember(dualpair::suite_names()));
  add_common(sv);
  sv->callback([&] {
    parse_field_prime(field);
    rc = cmd_verify(suite, seed, trials, field, format);
  });

  std::string pair;
  std::string weight;
  auto* sr = app.add_subcommand("rtilde", "transfer of an irreducible source character");
  sr->add_option("--pair", pair, "dual pair by ambient group")
      ->required()
      ->check(CLI::IsMember({"D5", "E6", "E7", "E8"}));
  sr->add_option("--weight", weight, "source highest weight")->required();
  add_common(sr);
  sr->callback([&] {
    parse_field_prime(field);
    rc = cmd_rtilde(pair, weight, format);
  });

  std::string map_name;
  std::string from;
  auto* sb = app.add_subcommand("branch", "restriction along a stored subgroup map");
  sb->add_option("--map", map_name, "map name")
      ->required()
      ->check(CLI::IsMember({"g2-spin7", "sl3-g2", "sl2l-sl2s-g2", "f4-levi-b3"}));
  sb->add_option("--weight", weight, "source highest weight")->required();
  sb->add_option("--from", from, "optional source label cross-check");
  add_common(sb);
  sb->callback([&] {
    parse_field_prime(field);
    rc = cmd_branch(map_name, weight, from, format);
  });

  std::string ambient;
  int node = 0;
  long long restrict_to = 0;
  auto* sd = app.add_subcommand("delta", "modular-character exponent of a maximal parabolic");
  sd->add_option("--ambient", ambient, "ambient root system label")->required();
  sd->add_option("--node", node, "simple root index of the parabolic")->required();
  sd->add_option("--restrict-to", restrict_to,
                 "pairing of the restricting character with the node coweight "
                 "(0 = primitive Levi character)");
  add_common(sd);
  sd->callback([&] {
    parse_field_prime(field);
    rc = cmd_delta(ambient, node, restrict_to, format);
  });

  std::string table_name;
  auto* st = app.add_subcommand("table", "print a stored table");
  st->add_option("--name", table_name, "table name")
      ->required()
      ->check(CLI::IsMember({"table3", "gaussian", "v8"}));
  add_common(st);
  st->callback([&] {
    parse_field_prime(field);
    rc = cmd_table(table_name, format);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
