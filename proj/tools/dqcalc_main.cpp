// Command-line front end: evaluate functions at dual quaternions, run the
// verification suites, print anti-commuting binomial rows.
//
// Exit codes: 0 success, 1 verification failure, 2 parse/usage error,
// 3 domain or singular-input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dqcalc/builtins.hpp"
#include "dqcalc/calculus.hpp"
#include "dqcalc/errors.hpp"
#include "dqcalc/json_io.hpp"
#include "dqcalc/pauli.hpp"
#include "dqcalc/verify.hpp"

namespace {

using namespace dqcalc;

std::string load_input(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw ParseError("cannot open input file: " + arg.substr(1));
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
  }
  return arg;
}

Vector3 parse_axis(const std::string& text) {
  Vector3 v;
  char trailing = 0;
  if (std::sscanf(text.c_str(), "%lf,%lf,%lf%c", &v.x, &v.y, &v.z, &trailing) != 3)
    throw ParseError("axis must be given as x,y,z");
  return v;
}

struct EvalArgs {
  std::string fn;
  std::string dq_text;
  std::optional<double> branch_t;
  std::optional<long long> branch_n;
  std::optional<std::string> axis;
};

int cmd_eval(const EvalArgs& args) {
  const DualQuaternion eta = dual_quaternion_from_json(load_input(args.dq_text));
  if (args.fn == "log") {
    LogBranch branch;
    branch.t = args.branch_t;
    branch.n = args.branch_n;
    if (args.axis) branch.axis_fallback = parse_axis(*args.axis);
    const LogResult res = log_dq_detailed(eta, branch);
    std::cout << "{\"result\":" << to_json(res.value) << ",\"branch\":{\"t\":"
              << format_double(res.t) << ",\"n\":" << res.n << ",\"axis\":["
              << format_double(res.axis.x) << "," << format_double(res.axis.y) << ","
              << format_double(res.axis.z) << "]}}\n";
    return 0;
  }
  if (args.fn == "inv") {
    std::cout << to_json(inv_dq(eta)) << "\n";
    return 0;
  }
  if (args.fn == "abs") {
    std::cout << to_json(dq_abs(eta)) << "\n";
    return 0;
  }
  if (args.fn == "exp") {
    std::cout << to_json(exp_dq(eta)) << "\n";
    return 0;
  }
  if (args.fn.starts_with("pow:")) {
    const ValidFunction f = parse_function_spec(args.fn);  // validates alpha
    const std::string arg = args.fn.substr(4);
    std::cout << to_json(pow_dq(eta, std::stod(arg))) << "\n";
    return 0;
  }
  if (args.fn == "cayley") {
    std::cout << to_json(cayley_dq(eta)) << "\n";
    return 0;
  }
  std::cout << to_json(apply(parse_function_spec(args.fn), eta)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dual-quaternion function evaluation and verification"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  double branch_t = 0.0;
  long long branch_n = 0;
  std::string axis_text;
  CLI::App* eval = app.add_subcommand("eval", "evaluate a function at a dual quaternion");
  eval->add_option("--fn", eval_args.fn,
                   "exp | log | pow:<alpha> | cayley | inv | abs | poly:@<file>")
      ->required();
  eval->add_option("--dq", eval_args.dq_text, "dual quaternion JSON, inline or @file")
      ->required();
  CLI::Option* t_opt = eval->add_option("--branch-t", branch_t, "log branch angle");
  CLI::Option* n_opt = eval->add_option("--branch-n", branch_n, "log branch winding");
  CLI::Option* axis_opt =
      eval->add_option("--axis", axis_text, "log fallback axis as x,y,z");

  verify::Options vopt;
  std::string suite_name = "all";
  double tol = 0.0;
  bool serial = false;
  CLI::App* ver = app.add_subcommand("verify", "run the verification suites");
  ver->add_option("--suite", suite_name, "all|oracle|roundtrip|screw|axioms|pauli");
  ver->add_option("--trials", vopt.trials, "trial count for the primary checks")
      ->check(CLI::PositiveNumber);
  ver->add_option("--seed", vopt.seed, "root seed");
  CLI::Option* tol_opt =
      ver->add_option("--tol", tol, "override every check tolerance");
  ver->add_flag("--serial", serial, "run trials on a single thread");

  int pascal_n = 0;
  CLI::App* pascal = app.add_subcommand("pascal", "print anti-commuting binomial rows");
  pascal->add_option("--n", pascal_n, "last row index (0..32)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (eval->parsed()) {
      if (*t_opt) eval_args.branch_t = branch_t;
      if (*n_opt) eval_args.branch_n = branch_n;
      if (*axis_opt) eval_args.axis = axis_text;
      return cmd_eval(eval_args);
    }
    if (ver->parsed()) {
      vopt.suite = verify::parse_suite(suite_name);
      if (*tol_opt) {
        if (!(tol > 0.0)) throw InvalidParameter("tolerance must be positive");
        vopt.tol_override = tol;
      }
      vopt.parallel = !serial;
      const verify::Report report = verify::run(vopt);
      std::cout << verify::render(report);
      return report.all_pass() ? 0 : 1;
    }
    if (pascal->parsed()) {
      if (pascal_n < 0 || pascal_n > 32) {
        std::cerr << "pascal: n must lie in [0, 32]\n";
        return 2;
      }
      for (int n = 0; n <= pascal_n; ++n) {
        const auto row = pauli::pauli_pascal_row(n);
        for (std::size_t j = 0; j < row.size(); ++j) {
          if (j) std::cout << ' ';
          std::cout << row[j];
        }
        std::cout << '\n';
      }
      return 0;
    }
  } catch (const DomainError& e) {
    std::cerr << "DomainError: " << e.what() << "\n";
    return 3;
  } catch (const SingularInput& e) {
    std::cerr << "SingularInput: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "ParseError: " << e.what() << "\n";
    return 2;
  } catch (const InvalidParameter& e) {
    std::cerr << "InvalidParameter: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
