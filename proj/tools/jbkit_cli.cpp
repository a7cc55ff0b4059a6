// jbkit command line: loads algebra/pair files, dispatches the constructions
// and verifications, and prints deterministic reports. Exit codes: 0 all
// executed checks passed, 1 a check failed, 2 usage or parse error. Timing
// goes to stderr so stdout stays byte-identical for identical inputs.

#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "jbkit/bernoulli.hpp"
#include "jbkit/cone.hpp"
#include "jbkit/io.hpp"
#include "jbkit/operad/evaluate.hpp"
#include "jbkit/operad/jb.hpp"
#include "jbkit/operad/lift.hpp"
#include "jbkit/report.hpp"

using namespace jbkit;

namespace {

struct Options {
  bool json = false;
  bool serial = false;
  Exec exec() const { return serial ? Exec::serial : Exec::parallel; }
};

int finish(const RunReport& rep, const Options& opt, double seconds) {
  std::cout << (opt.json ? rep.json() + "\n" : rep.text());
  std::cerr << "wall-clock: " << static_cast<long>(seconds * 1000) << " ms\n";
  return rep.exit_code();
}

void add_violations(RunReport& rep, const std::string& name, const ValidationReport& v) {
  if (v.ok()) {
    rep.add(name, true);
    return;
  }
  std::string details;
  std::size_t shown = 0;
  for (const auto& viol : v.violations) {
    if (shown++ == 8) {
      details += " ... (" + std::to_string(v.violations.size()) + " total)";
      break;
    }
    details += (details.empty() ? "" : "; ") + viol.check + " at " + viol.witness;
  }
  rep.add(name, false, details);
}

ConeMode parse_mode(const std::string& s) {
  if (s == "strict") return ConeMode::strict;
  if (s == "dg") return ConeMode::dg;
  if (s == "linf") return ConeMode::linf_morphism;
  throw CLI::ValidationError("mode", "must be strict, dg or linf");
}

operad::OperadId parse_operad(const std::string& s) {
  if (s == "hs") return operad::OperadId::hs_inf;
  if (s == "lp") return operad::OperadId::lp_inf;
  if (s == "lp-half") return operad::OperadId::lp_half;
  throw CLI::ValidationError("operad", "must be hs, lp or lp-half");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computer algebra for Lie pairs, their Bernoulli-twisted actions "
               "and the associated operadic differentials"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "emit the machine-readable report");
  app.add_flag("--serial", opt.serial, "run the checking kernels on one thread");
  app.set_help_all_flag("--help-all");

  // bernoulli
  auto* c_bern = app.add_subcommand("bernoulli", "print B_n");
  c_bern->fallthrough();
  int bern_n = 0;
  c_bern->add_option("n", bern_n, "index")->required()->check(CLI::NonNegativeNumber);

  // solve-cn
  auto* c_cn = app.add_subcommand("solve-cn", "solve the ladder-coefficient recursion and "
                                              "compare against B_n/n!");
  c_cn->fallthrough();
  int cn_max = 0;
  int cn_weight = -1;
  c_cn->add_option("max_n", cn_max, "largest index")->required()->check(CLI::NonNegativeNumber);
  c_cn->add_option("--weight", cn_weight, "free Lie truncation weight (default max_n + 2)");

  // action / verify-action
  std::string pair_file, emit_path;
  int order = 4;
  auto* c_action = app.add_subcommand("action", "compute the twisted action Taylor tables");
  c_action->fallthrough();
  c_action->add_option("pair", pair_file, "pair file")->required();
  c_action->add_option("--order", order, "Taylor order")->capture_default_str();
  c_action->add_option("--emit", emit_path, "write the tables to this path");
  auto* c_verify = app.add_subcommand("verify-action",
                                      "check the twisted action is a morphism into formal "
                                      "vector fields");
  c_verify->fallthrough();
  c_verify->add_option("pair", pair_file, "pair file")->required();
  c_verify->add_option("--order", order, "Taylor order")->capture_default_str();

  // cone
  auto* c_cone = app.add_subcommand("cone", "build the pair's codifferential, square it and "
                                            "check the exported cone brackets");
  c_cone->fallthrough();
  std::string mode_str = "strict";
  int max_weight = 5, arity_cap = 4;
  c_cone->add_option("pair", pair_file, "pair file")->required();
  c_cone->add_option("--mode", mode_str, "strict | dg | linf")->capture_default_str();
  c_cone->add_option("--max-weight", max_weight, "word weight cap")->capture_default_str();
  c_cone->add_option("--max-arity", arity_cap, "bracket arity cap")->capture_default_str();
  c_cone->add_option("--emit", emit_path, "write the exported cone brackets to this path");

  // operad
  auto* c_operad = app.add_subcommand("operad", "symbolic checks in the free operads");
  c_operad->fallthrough();
  std::string op_sub, operad_str = "hs";
  int max_arity = 4, max_codegree = 2, ladder_span = 5;
  c_operad->add_option("check", op_sub, "delta2 | jb | jb-half | lift | dilation")->required();
  c_operad->add_option("--operad", operad_str, "hs | lp | lp-half (delta2 only)")->capture_default_str();
  c_operad->add_option("--max-arity", max_arity, "generator arity cap")->capture_default_str();
  c_operad->add_option("--max-codegree", max_codegree, "lift codegree cap")->capture_default_str();
  c_operad->add_option("--ladder-span", ladder_span,
                       "extra wavy span for the morphism-corolla chain checks")
      ->capture_default_str();

  // validate
  auto* c_validate = app.add_subcommand("validate", "validate an algebra, pair or atom file");
  c_validate->fallthrough();
  std::string kind, file;
  c_validate->add_option("kind", kind, "lie | atom | affine | pair")->required();
  c_validate->add_option("file", file, "input file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  RunReport rep;
  try {
    if (*c_bern) {
      rep.command = "bernoulli " + std::to_string(bern_n);
      rep.add("B_" + std::to_string(bern_n), true, rat_str(bernoulli(bern_n)));
      return finish(rep, opt, elapsed());
    }
    if (*c_cn) {
      rep.command = "solve-cn " + std::to_string(cn_max);
      if (cn_weight >= 0 && cn_weight < cn_max + 2) {
        std::cerr << "error: --weight below max_n + 2 truncates the defining equation\n";
        return 2;
      }
      CnSolution sol = solve_cn(cn_max);
      if (!sol.consistent) {
        rep.add("recursion_consistency", false, sol.detail);
        return finish(rep, opt, elapsed());
      }
      bool all = true;
      for (int n = 0; n <= cn_max; ++n) {
        Rat want = bernoulli_over_factorial(n);
        bool same = sol.c[n] == want;
        all = all && same;
        rep.add("c_" + std::to_string(n), same,
                rat_str(sol.c[n]) + " vs B_n/n! = " + rat_str(want));
      }
      rep.add("verdict", all);
      return finish(rep, opt, elapsed());
    }
    if (*c_action || *c_verify) {
      rep.command = std::string(*c_action ? "action " : "verify-action ") + pair_file;
      LiePair pair = load_pair(pair_file);
      ValidationReport pv = validate_pair(pair, pair.g.has_differential() ||
                                                    pair.h.has_differential());
      add_violations(rep, "pair_valid", pv);
      if (!pv.ok()) return finish(rep, opt, elapsed());
      if (*c_action) {
        auto fields = twisted_action(pair, order);
        std::string doc = emit_taylor_tables(pair, fields, order);
        if (emit_path.empty()) {
          std::cout << doc << "\n";
          rep.add("emit", true, "stdout");
        } else {
          std::ofstream out(emit_path);
          out << doc << "\n";
          rep.add("emit", true, emit_path);
        }
      } else {
        auto fields = twisted_action(pair, order + 1);
        add_violations(rep, "field_morphism_to_order_" + std::to_string(order),
                       verify_field_morphism(fields, pair.g, pair.h, order, opt.exec()));
      }
      return finish(rep, opt, elapsed());
    }
    if (*c_cone) {
      rep.command = "cone " + pair_file + " --mode " + mode_str;
      LiePair pair = load_pair(pair_file);
      ConeMode mode = parse_mode(mode_str);
      auto cd = build_codifferential(pair, mode, max_weight);
      add_violations(rep, "d_squared_weight_" + std::to_string(max_weight),
                     check_D_squared(cd, max_weight, opt.exec()));
      AlgebraSpec cone = export_cone_brackets(cd, arity_cap);
      add_violations(rep, "cone_linfinity_arity_" + std::to_string(arity_cap),
                     check_linfinity(cone, arity_cap, opt.exec()));
      add_violations(rep, "structural_zeros",
                     check_structural_zeros(cone, pair.g.dim(), mode != ConeMode::strict));
      if (!emit_path.empty()) {
        std::ofstream out(emit_path);
        out << emit_algebra(cone) << "\n";
        rep.add("emit", true, emit_path);
      }
      return finish(rep, opt, elapsed());
    }
    if (*c_operad) {
      rep.command = "operad " + op_sub;
      using namespace operad;
      if (op_sub == "delta2") {
        add_violations(rep, "delta_squared(" + operad_str + ")",
                       check_delta_squared(parse_operad(operad_str), max_arity, opt.exec()));
      } else if (op_sub == "jb") {
        std::vector<Gen> gens = generators(OperadId::hs_inf, max_arity);
        for (int n = 0; n <= ladder_span; ++n) {
          gens.push_back(Gen::f(1, n));
          gens.push_back(Gen::f(2, n));
        }
        add_violations(rep, "jb_chain_map", check_chain_map_jb(gens, {}, opt.exec()));
      } else if (op_sub == "jb-half") {
        add_violations(rep, "jb_half_chain_map",
                       check_chain_map_jb_half(generators(OperadId::hs_inf, max_arity), {},
                                               opt.exec()));
      } else if (op_sub == "lift") {
        LiftResult res = lift_jb_infinity(max_arity, max_codegree);
        add_violations(rep, "lift", res.report);
        if (res.ok())
          rep.add("lifted_generators", true, std::to_string(res.images.size()) + " rows");
      } else if (op_sub == "dilation") {
        add_violations(rep, "dilation_grading", check_dilation_grading(max_arity, opt.exec()));
      } else {
        std::cerr << "error: unknown operad check '" << op_sub << "'\n";
        return 2;
      }
      return finish(rep, opt, elapsed());
    }
    if (*c_validate) {
      rep.command = "validate " + kind + " " + file;
      if (kind == "lie") {
        add_violations(rep, "lie_axioms", validate_lie(load_algebra(file), opt.exec()));
      } else if (kind == "pair") {
        LiePair p = load_pair(file);
        add_violations(rep, "pair",
                       validate_pair(p, p.g.has_differential() || p.h.has_differential()));
      } else if (kind == "atom" || kind == "affine") {
        AtomData d = load_atom(file);
        ValidationReport atom = validate_atom(d);
        ValidationReport affine = validate_affine(d);
        // the report names which compatibility shape the data satisfies
        if (kind == "atom")
          add_violations(rep, "atom_axioms", atom);
        else
          add_violations(rep, "affine_axioms", affine);
        rep.add_skip("classification", std::string("atom:") + (atom.ok() ? "yes" : "no") +
                                           " affine:" + (affine.ok() ? "yes" : "no"));
      } else {
        std::cerr << "error: unknown kind '" << kind << "'\n";
        return 2;
      }
      return finish(rep, opt, elapsed());
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
