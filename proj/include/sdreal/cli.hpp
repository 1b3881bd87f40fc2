#pragma once

#include <CLI11.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "heron.hpp"
#include "limit.hpp"
#include "oracle.hpp"
#include "render.hpp"
#include "transforms.hpp"

namespace sdreal::cli {

namespace detail {

inline void emit(const Stream& s, unsigned n, std::ostream& out) {
  out << format_digits(prefix(s, n)) << "\n";
  out << decimal_approx(s, n) << "\n";
}

inline Rat parse_in_range(const std::string& text, const Rat& lo,
                          const Rat& hi, const std::string& what) {
  Rat q = parse_rational(text);
  if (q < lo || q > hi)
    throw std::domain_error(what + ": " + format_rational(q) + " outside [" +
                            format_rational(lo) + ", " + format_rational(hi) +
                            "]");
  return q;
}

inline void check_div_precondition(const Rat& a, const Rat& b) {
  if (b < Rat(1, 4))
    throw precondition_error("div: denominator " + format_rational(b) +
                             " is below 1/4");
  if (abs(a) > b)
    throw precondition_error("div: |" + format_rational(a) + "| exceeds " +
                             format_rational(b));
}

}  // namespace detail

// Runs one CLI invocation (args exclude the program name). Exit status:
// 0 success, 1 usage error, 2 violated precondition or failed verification.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"exact real arithmetic on [-1, 1] over signed-digit streams"};
  app.require_subcommand(1);

  unsigned n = 20;
  std::string modulus = "iota";
  std::string shift = "max";
  std::string x;
  std::string y;
  std::string op;

  auto add_n = [&n](CLI::App* cmd) {
    cmd->add_option("-n", n, "number of digits to produce (default 20)")
        ->check(CLI::PositiveNumber);
  };
  auto add_shift = [&shift](CLI::App* cmd) {
    cmd->add_option("--seq-shift", shift,
                    "how limit pushes sequence indices (default max)")
        ->check(CLI::IsMember({"max", "plus"}));
  };

  CLI::App* digits_cmd =
      app.add_subcommand("digits", "print the canonical digits of a rational");
  digits_cmd->add_option("value", x, "rational in [-1, 1], as p/q or p")
      ->required();
  add_n(digits_cmd);

  CLI::App* sqrt_cmd =
      app.add_subcommand("sqrt", "square root of a rational in [0, 1]");
  sqrt_cmd->add_option("value", x, "rational in [0, 1]")->required();
  add_n(sqrt_cmd);
  sqrt_cmd
      ->add_option("--modulus", modulus,
                   "convergence modulus for the Heron limit (default iota)")
      ->check(CLI::IsMember({"iota", "poslog"}));
  add_shift(sqrt_cmd);

  CLI::App* avg_cmd =
      app.add_subcommand("avg", "average of two rationals in [-1, 1]");
  avg_cmd->add_option("x", x, "rational in [-1, 1]")->required();
  avg_cmd->add_option("y", y, "rational in [-1, 1]")->required();
  add_n(avg_cmd);

  CLI::App* div_cmd = app.add_subcommand(
      "div", "quotient of rationals, |x| <= y and y >= 1/4");
  div_cmd->add_option("x", x, "rational numerator")->required();
  div_cmd->add_option("y", y, "rational denominator")->required();
  add_n(div_cmd);

  CLI::App* limit_cmd = app.add_subcommand(
      "limit-demo", "run the limit operator on a constant sequence");
  limit_cmd->add_option("value", x, "rational in [-1, 1]")->required();
  add_n(limit_cmd);
  add_shift(limit_cmd);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "recompute a result and check it against the exact answer");
  verify_cmd->add_option("op", op, "one of digits, sqrt, avg, div")
      ->required()
      ->check(CLI::IsMember({"digits", "sqrt", "avg", "div"}));
  verify_cmd->add_option("x", x, "first argument")->required();
  verify_cmd->add_option("y", y, "second argument (avg and div)");
  add_n(verify_cmd);

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("sdreal");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (app.got_subcommand(digits_cmd)) {
      Rat q = detail::parse_in_range(x, Rat(-1), Rat(1), "digits");
      detail::emit(embed(q), n, out);
      return 0;
    }

    if (app.got_subcommand(sqrt_cmd)) {
      Rat q = detail::parse_in_range(x, Rat(0), Rat(1), "sqrt");
      SqrtOptions opts;
      opts.shift = shift == "max" ? SeqShift::max : SeqShift::plus;
      Stream root = modulus == "iota" ? sqrt_stream(embed(q), opts)
                                      : sqrt_stream_fast(embed(q), opts);
      detail::emit(root, n, out);
      return 0;
    }

    if (app.got_subcommand(avg_cmd)) {
      Rat a = detail::parse_in_range(x, Rat(-1), Rat(1), "avg");
      Rat b = detail::parse_in_range(y, Rat(-1), Rat(1), "avg");
      detail::emit(average(embed(a), embed(b)), n, out);
      return 0;
    }

    if (app.got_subcommand(div_cmd)) {
      Rat a = detail::parse_in_range(x, Rat(-1), Rat(1), "div");
      Rat b = detail::parse_in_range(y, Rat(-1), Rat(1), "div");
      detail::check_div_precondition(a, b);
      detail::emit(divide(embed(a), embed(b)), n, out);
      return 0;
    }

    if (app.got_subcommand(limit_cmd)) {
      Rat q = detail::parse_in_range(x, Rat(-1), Rat(1), "limit-demo");
      Stream fixed = embed(q);
      Stream lim = limit([](unsigned) { return 0u; },
                         [fixed](unsigned) { return fixed; },
                         shift == "max" ? SeqShift::max : SeqShift::plus);
      detail::emit(lim, n, out);
      return 0;
    }

    if (app.got_subcommand(verify_cmd)) {
      bool needs_y = op == "avg" || op == "div";
      if (needs_y && y.empty()) {
        err << "error: verify " << op << " needs two arguments\n";
        return 1;
      }
      bool ok = false;
      std::string claim;
      Enclosure e{Rat(0), Rat(0)};
      if (op == "digits") {
        Rat q = detail::parse_in_range(x, Rat(-1), Rat(1), "digits");
        e = enclosure(embed(q), n);
        ok = e.contains(q);
        claim = "value " + format_rational(q);
      } else if (op == "sqrt") {
        Rat q = detail::parse_in_range(x, Rat(0), Rat(1), "sqrt");
        e = enclosure(sqrt_stream(embed(q)), n);
        ok = encloses_sqrt(e, q);
        claim = "sqrt(" + format_rational(q) + ")";
      } else if (op == "avg") {
        Rat a = detail::parse_in_range(x, Rat(-1), Rat(1), "avg");
        Rat b = detail::parse_in_range(y, Rat(-1), Rat(1), "avg");
        e = enclosure(average(embed(a), embed(b)), n);
        ok = e.contains((a + b) / 2);
        claim = "average of " + format_rational(a) + " and " +
                format_rational(b);
      } else {
        Rat a = detail::parse_in_range(x, Rat(-1), Rat(1), "div");
        Rat b = detail::parse_in_range(y, Rat(-1), Rat(1), "div");
        detail::check_div_precondition(a, b);
        e = enclosure(divide(embed(a), embed(b)), n);
        ok = e.contains(a / b);
        claim = "quotient " + format_rational(a) + " / " + format_rational(b);
      }
      out << (ok ? "PASS" : "FAIL") << ": depth-" << n << " enclosure ["
          << format_rational(e.lo) << ", " << format_rational(e.hi) << "] "
          << (ok ? "contains " : "misses ") << claim << "\n";
      return ok ? 0 : 2;
    }
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 1;
}

}  // namespace sdreal::cli
