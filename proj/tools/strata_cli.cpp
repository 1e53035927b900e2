// Command-line surface: enumerate strata, print the degeneration poset,
// Fenchel-Nielsen dimension tables, nerve homology, invariant checks, and
// the brute-force oracle diff.

#include <iostream>

#include <CLI11.hpp>

#include "strata/checks.hpp"
#include "strata/oracle.hpp"
#include "strata/render.hpp"

namespace {

using namespace strata;

struct TypeArgs {
  int genus = 0;
  int legs = 0;
  bool force = false;
  EnumerateOptions options() const { return EnumerateOptions{force, 0}; }
};

void add_type_options(CLI::App* cmd, TypeArgs& args) {
  cmd->add_option("-g,--genus", args.genus, "total genus g")->required();
  cmd->add_option("-n,--legs", args.legs, "number of marked points n")->required();
  cmd->add_flag("--force", args.force, "lift the boundary-depth guard (3g-3+n <= 12)");
}

int run(int argc, char** argv) {
  CLI::App app{"boundary strata of the moduli of stable curves: stable dual graphs, "
               "the degeneration poset, Fenchel-Nielsen dimensions, nerve homology"};
  app.require_subcommand(1);

  TypeArgs en_args, po_args, di_args, ho_args, ch_args, or_args;
  std::string en_format = "table", po_format = "table", di_format = "table",
              ho_format = "table";
  bool po_dot = false, ho_boundary_only = false;

  CLI::App* cmd_enumerate = app.add_subcommand("enumerate", "list strata by codimension");
  add_type_options(cmd_enumerate, en_args);
  cmd_enumerate->add_option("--format", en_format, "table|json|dot")
      ->check(CLI::IsMember({"table", "json", "dot"}));

  CLI::App* cmd_poset = app.add_subcommand("poset", "degeneration poset with cover multiplicities");
  add_type_options(cmd_poset, po_args);
  cmd_poset->add_option("--format", po_format, "table|json|dot")
      ->check(CLI::IsMember({"table", "json", "dot"}));
  cmd_poset->add_flag("--dot", po_dot, "emit the Hasse diagram as DOT (same as --format dot)");

  CLI::App* cmd_dims = app.add_subcommand("dims", "Fenchel-Nielsen chart dimensions per stratum");
  add_type_options(cmd_dims, di_args);
  cmd_dims->add_option("--format", di_format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));

  CLI::App* cmd_homology =
      app.add_subcommand("homology", "integer homology of the order complex of the poset");
  add_type_options(cmd_homology, ho_args);
  cmd_homology->add_option("--format", ho_format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));
  cmd_homology->add_flag("--boundary-only", ho_boundary_only,
                         "restrict to the boundary strata (codim >= 1)");

  CLI::App* cmd_check = app.add_subcommand("check", "run every invariant suite for the type");
  add_type_options(cmd_check, ch_args);

  CLI::App* cmd_oracle = app.add_subcommand(
      "oracle", "diff the engine against the exhaustive bottom-up enumerator");
  add_type_options(cmd_oracle, or_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(cmd_enumerate)) {
      StrataEnumeration en = enumerate_strata(en_args.genus, en_args.legs, en_args.options());
      if (en_format == "json")
        std::cout << enumerate_json(en).dump(2) << "\n";
      else if (en_format == "dot")
        std::cout << enumerate_dot(en);
      else
        std::cout << enumerate_table(en);
    } else if (app.got_subcommand(cmd_poset)) {
      StrataPoset p = build_poset(po_args.genus, po_args.legs, po_args.options());
      if (po_dot || po_format == "dot")
        std::cout << poset_dot(p);
      else if (po_format == "json")
        std::cout << poset_json(p).dump(2) << "\n";
      else
        std::cout << poset_table(p);
    } else if (app.got_subcommand(cmd_dims)) {
      StrataEnumeration en = enumerate_strata(di_args.genus, di_args.legs, di_args.options());
      if (di_format == "json")
        std::cout << dims_json(en).dump(2) << "\n";
      else
        std::cout << dims_table(en);
    } else if (app.got_subcommand(cmd_homology)) {
      StrataPoset p = build_poset(ho_args.genus, ho_args.legs, ho_args.options());
      OrderComplex x = ho_boundary_only ? boundary_order_complex(p) : order_complex(p);
      std::vector<HomologyGroup> h = homology(x);
      if (ho_format == "json")
        std::cout << homology_json(x, h, ho_args.genus, ho_args.legs, ho_boundary_only).dump(2)
                  << "\n";
      else
        std::cout << homology_table(x, h, ho_args.genus, ho_args.legs, ho_boundary_only);
    } else if (app.got_subcommand(cmd_check)) {
      std::vector<CheckResult> results =
          run_invariant_suites(ch_args.genus, ch_args.legs, ch_args.options());
      bool all_ok = true;
      for (const CheckResult& r : results) {
        if (r.passed)
          std::cout << "ok " << r.name << "\n";
        else {
          std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
          all_ok = false;
        }
      }
      return all_ok ? 0 : 1;
    } else if (app.got_subcommand(cmd_oracle)) {
      StrataEnumeration en = enumerate_strata(or_args.genus, or_args.legs, or_args.options());
      std::vector<std::vector<StableGraph>> engine;
      for (const auto& level : en.by_codim) {
        engine.emplace_back();
        for (const StratumClass& cls : level) engine.back().push_back(cls.graph);
      }
      OracleDiff diff = diff_enumerations(engine, oracle_enumerate(or_args.genus, or_args.legs));
      for (size_t c = 0; c < diff.counts.size(); ++c)
        std::cout << "codim " << c << ": engine " << diff.counts[c].first << ", oracle "
                  << diff.counts[c].second << "\n";
      if (!diff.ok()) {
        for (const std::string& m : diff.mismatches) std::cout << "DIFF " << m << "\n";
        return 1;
      }
      std::cout << "no diffs\n";
      return 0;
    }
  } catch (const UnstableTypeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const GuardRailError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
