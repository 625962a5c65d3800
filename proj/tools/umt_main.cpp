#include "umt/ballmap.hpp"
#include "umt/error.hpp"
#include "umt/generate.hpp"
#include "umt/io.hpp"
#include "umt/selfcheck.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace umt;
using ordered_json = nlohmann::ordered_json;

// exit codes: 0 = yes/success, 1 = semantic "no" (not isomorphic, map not
// ball-preserving), 2 = errors (bad input, I/O, internal failures)
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

UltrametricSpace load_or_fail(const std::string& path) {
  ValidationResult res = load_space(path);
  if (!res.ok())
    throw Error(path + ": not a valid ultrametric space\n" +
                validation_report_to_text(res.report));
  return std::move(*res.space);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open output file: " + path);
  f << text;
  f.flush();
  if (!f) throw Error("cannot write output file: " + path);
}

ordered_json members_json(const std::vector<int>& members, const UltrametricSpace& s) {
  ordered_json arr = ordered_json::array();
  for (int p : members) arr.push_back(s.point_name(p));
  return arr;
}

std::string members_text(const std::vector<int>& members, const UltrametricSpace& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ", ";
    out += s.point_name(members[i]);
  }
  return out + "}";
}

struct IsoOptions {
  std::string file_a, file_b;
  std::string mode = "ball";
  bool oracle = false;
  bool json = false;
};

int run_iso(const IsoOptions& opt) {
  UltrametricSpace x = load_or_fail(opt.file_a);
  UltrametricSpace y = load_or_fail(opt.file_b);

  bool equivalent = false;
  ordered_json witness;

  if (opt.mode == "ball") {
    BallDecision dec = exists_ball_preserving_bijection(x, y);
    if (opt.oracle) {
      if (x.size() <= 7 && y.size() <= 7) {
        BallDecision bf = brute_force_exists(x, y);
        if (bf.equivalent != dec.equivalent)
          throw Error("oracle disagreement: tree decision says " +
                      std::string(dec.equivalent ? "yes" : "no") + ", brute force says " +
                      std::string(bf.equivalent ? "yes" : "no"));
      } else {
        std::cerr << "note: oracle skipped, space exceeds the brute-force cap of 7 points\n";
      }
    }
    equivalent = dec.equivalent;
    if (dec.witness) {
      witness = ordered_json::object();
      for (int i = 0; i < x.size(); ++i)
        witness[x.point_name(i)] = y.point_name(dec.witness->to[i]);
    }
  } else if (opt.mode == "isometry") {
    RepTree tx = build_rep_tree(x);
    RepTree ty = build_rep_tree(y);
    auto iso = labeled_tree_isomorphism(tx, ty);
    if (opt.oracle) {
      if (x.size() <= 7 && y.size() <= 7) {
        auto bf = brute_force_isometry(x, y);
        if (bf.has_value() != iso.has_value())
          throw Error("oracle disagreement: canonical decision says " +
                      std::string(iso ? "yes" : "no") + ", brute force says " +
                      std::string(bf ? "yes" : "no"));
      } else {
        std::cerr << "note: oracle skipped, space exceeds the brute-force cap of 7 points\n";
      }
    }
    equivalent = iso.has_value();
    if (iso) {
      PointBijection f;
      f.to.assign(x.size(), -1);
      for (int p = 0; p < x.size(); ++p)
        f.to[p] = ty.nodes[iso->to[tx.leaf_of_point[p]]].point;
      for (int i = 0; i < x.size(); ++i)
        for (int j = 0; j < x.size(); ++j)
          if (x.dist(i, j) != y.dist(f.to[i], f.to[j]))
            throw Error("internal error: tree-derived bijection is not an isometry");
      witness = ordered_json::object();
      for (int i = 0; i < x.size(); ++i) witness[x.point_name(i)] = y.point_name(f.to[i]);
    }
  } else {  // poset
    Ballean bx = enumerate_ballean(x);
    Ballean by = enumerate_ballean(y);
    HasseDigraph hx = hasse(bx);
    HasseDigraph hy = hasse(by);
    std::optional<std::vector<int>> pw;
    if (bx.size() == by.size()) pw = poset_isomorphism(hx, hy);
    if (opt.oracle) {
      if (bx.size() <= 10 && by.size() <= 10) {
        bool bf = false;
        if (bx.size() == by.size())
          bf = brute_force_tree_iso(hasse_to_tree(hx), hasse_to_tree(hy)).has_value();
        if (bf != pw.has_value())
          throw Error("oracle disagreement: canonical decision says " +
                      std::string(pw ? "yes" : "no") + ", brute force says " +
                      std::string(bf ? "yes" : "no"));
      } else {
        std::cerr << "note: oracle skipped, ballean exceeds the brute-force cap of 10 balls\n";
      }
    }
    equivalent = pw.has_value();
    if (pw) {
      witness = ordered_json::array();
      for (int i = 0; i < bx.size(); ++i) {
        ordered_json pair;
        pair["from"] = members_json(bx.balls[i].members, x);
        pair["to"] = members_json(by.balls[(*pw)[i]].members, y);
        witness.push_back(std::move(pair));
      }
    }
  }

  if (opt.json) {
    ordered_json doc;
    doc["mode"] = opt.mode;
    doc["equivalent"] = equivalent;
    doc["witness"] = equivalent ? witness : ordered_json(nullptr);
    std::cout << doc.dump(2) << "\n";
  } else if (equivalent) {
    std::cout << witness.dump(2) << "\n";
  } else {
    std::cout << "not isomorphic\n";
  }
  return equivalent ? 0 : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite ultrametric spaces: representing trees, balleans, ball-preserving maps"};
  app.require_subcommand(1);

  // validate
  auto* cmd_validate = app.add_subcommand("validate", "check a distance matrix file");
  std::string validate_file;
  bool validate_json = false;
  cmd_validate->add_option("file", validate_file, "space file (JSON or CSV)")->required();
  cmd_validate->add_flag("--json", validate_json, "machine-readable report");

  // tree
  auto* cmd_tree = app.add_subcommand("tree", "export the representing tree");
  std::string tree_file, tree_format = "json", tree_out;
  cmd_tree->add_option("file", tree_file, "space file (JSON or CSV)")->required();
  cmd_tree->add_option("--format", tree_format, "json, dot or newick")
      ->check(CLI::IsMember({"json", "dot", "newick"}));
  cmd_tree->add_option("-o,--output", tree_out, "output file (default stdout)");

  // ballean
  auto* cmd_ballean = app.add_subcommand("ballean", "list balls and cover arcs");
  std::string ballean_file;
  bool ballean_json = false;
  cmd_ballean->add_option("file", ballean_file, "space file (JSON or CSV)")->required();
  cmd_ballean->add_flag("--json", ballean_json, "machine-readable output");

  // iso
  auto* cmd_iso = app.add_subcommand("iso", "decide equivalence of two spaces");
  IsoOptions iso_opt;
  cmd_iso->add_option("A", iso_opt.file_a, "first space file")->required();
  cmd_iso->add_option("B", iso_opt.file_b, "second space file")->required();
  cmd_iso->add_option("--mode", iso_opt.mode, "ball (default), isometry or poset")
      ->check(CLI::IsMember({"ball", "isometry", "poset"}));
  cmd_iso->add_flag("--oracle", iso_opt.oracle, "cross-check with brute force when small enough");
  cmd_iso->add_flag("--json", iso_opt.json, "machine-readable output");

  // check-map
  auto* cmd_checkmap = app.add_subcommand("check-map", "test a point map for ball preservation");
  std::string cm_a, cm_b, cm_map;
  bool cm_explain = false, cm_json = false;
  cmd_checkmap->add_option("A", cm_a, "first space file")->required();
  cmd_checkmap->add_option("B", cm_b, "second space file")->required();
  cmd_checkmap->add_option("map", cm_map, "JSON map {\"a\": \"p\", ...}")->required();
  cmd_checkmap->add_flag("--explain", cm_explain, "print the violating ball");
  cmd_checkmap->add_flag("--json", cm_json, "machine-readable output");

  // gen
  auto* cmd_gen = app.add_subcommand("gen", "generate a random ultrametric space");
  std::uint64_t gen_seed = 1;
  int gen_n = 8, gen_depth = 12;
  std::string gen_format = "json", gen_out;
  cmd_gen->add_option("--seed", gen_seed, "RNG seed (default 1)");
  cmd_gen->add_option("--n", gen_n, "number of points (default 8)")->check(CLI::PositiveNumber);
  cmd_gen->add_option("--depth-bound", gen_depth, "max tree height (default 12)")
      ->check(CLI::PositiveNumber);
  cmd_gen->add_option("--format", gen_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd_gen->add_option("-o,--output", gen_out, "output file (default stdout)");

  // selfcheck
  auto* cmd_selfcheck = app.add_subcommand("selfcheck", "run the oracle-backed test suite");
  std::uint64_t sc_seed = 1;
  int sc_count = 50, sc_max_n = 6;
  bool sc_json = false;
  cmd_selfcheck->add_option("--seed", sc_seed, "RNG seed (default 1)");
  cmd_selfcheck->add_option("--count", sc_count, "number of random spaces (default 50)")
      ->check(CLI::PositiveNumber);
  cmd_selfcheck->add_option("--max-n", sc_max_n, "max points per space (default 6)")
      ->check(CLI::PositiveNumber);
  cmd_selfcheck->add_flag("--json", sc_json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  try {
    if (*cmd_validate) {
      ValidationResult res = load_space(validate_file);
      if (validate_json) {
        std::cout << validation_report_to_json(res.report);
      } else if (res.ok()) {
        std::cout << "valid ultrametric space (" << res.space->size() << " points)\n";
      } else {
        std::cout << validation_report_to_text(res.report);
      }
      return res.ok() ? 0 : kExitError;
    }

    if (*cmd_tree) {
      UltrametricSpace s = load_or_fail(tree_file);
      RepTree t = build_rep_tree(s);
      std::string text;
      if (tree_format == "dot") text = tree_to_dot(t, s.points());
      else if (tree_format == "newick") text = tree_to_newick(t, s.points());
      else text = tree_to_json(t, s.points());
      write_output(tree_out, text);
      return 0;
    }

    if (*cmd_ballean) {
      UltrametricSpace s = load_or_fail(ballean_file);
      Ballean b = enumerate_ballean(s);
      HasseDigraph h = hasse(b);
      std::cout << (ballean_json ? ballean_to_json(b, h, s.points())
                                 : ballean_to_text(b, h, s.points()));
      return 0;
    }

    if (*cmd_iso) return run_iso(iso_opt);

    if (*cmd_checkmap) {
      UltrametricSpace x = load_or_fail(cm_a);
      UltrametricSpace y = load_or_fail(cm_b);
      PointBijection f = parse_witness_json(read_file(cm_map), x, y);
      BallPreservation bp = is_ball_preserving(f, x, y);
      if (cm_json) {
        ordered_json doc;
        doc["preserved"] = bp.preserved;
        if (!bp.preserved) {
          bool image = bp.direction == BallPreservation::Direction::Image;
          doc["direction"] = image ? "image" : "preimage";
          doc["ball"] = members_json(bp.ball, image ? x : y);
        }
        std::cout << doc.dump(2) << "\n";
      } else if (bp.preserved) {
        std::cout << "ball-preserving\n";
      } else {
        std::cout << "not ball-preserving\n";
        if (cm_explain) {
          if (bp.direction == BallPreservation::Direction::Image)
            std::cout << "image of ball " << members_text(bp.ball, x)
                      << " is not a ball of the second space\n";
          else
            std::cout << "preimage of ball " << members_text(bp.ball, y)
                      << " is not a ball of the first space\n";
        }
      }
      return bp.preserved ? 0 : kExitNo;
    }

    if (*cmd_gen) {
      UltrametricSpace s = generate_random(gen_seed, gen_n, gen_depth);
      write_output(gen_out, gen_format == "csv" ? space_to_csv(s) : space_to_json(s));
      return 0;
    }

    if (*cmd_selfcheck) {
      SelfCheckReport rep = run_selfcheck(sc_seed, sc_count, sc_max_n);
      if (sc_json) {
        ordered_json doc;
        doc["passed"] = rep.all_passed();
        ordered_json checks = ordered_json::array();
        for (const auto& c : rep.checks) {
          ordered_json j;
          j["name"] = c.name;
          j["passed"] = c.passed;
          j["cases"] = c.cases;
          j["detail"] = c.detail;
          checks.push_back(std::move(j));
        }
        doc["checks"] = std::move(checks);
        std::cout << doc.dump(2) << "\n";
      } else {
        for (const auto& c : rep.checks) {
          std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases
                    << " cases)";
          if (!c.passed) std::cout << ": " << c.detail;
          std::cout << "\n";
        }
      }
      return rep.all_passed() ? 0 : kExitError;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
