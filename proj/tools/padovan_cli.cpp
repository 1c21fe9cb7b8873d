// padovan: arithmetic of the Padovan sequence modulo primes.
//
// Exit codes: 0 success, 1 usage or validation error, 2 budget or cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "padovan/plastic.hpp"
#include "padovan/report.hpp"

using namespace padovan;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;

struct Common {
  std::string format = "table";
  std::string out;
  int threads = 0;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  cmd->add_option("--out", c.out, "Write the report to FILE instead of stdout");
  cmd->add_option("--threads", c.threads, "Worker threads (0 = auto)")->check(CLI::NonNegativeNumber);
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw std::invalid_argument("cannot open " + c.out);
  f << text;
}

u64 require_prime(u64 p) {
  PrimeField checked(p);
  return p;
}

template <typename T, typename Fn>
std::string format_list(const std::vector<T>& items, Format fmt, const std::string& csv_header, Fn&& row) {
  std::ostringstream os;
  if (fmt == Format::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& it : items) arr.push_back(row(it).first);
    os << arr.dump() << '\n';
  } else {
    if (fmt == Format::Csv) os << csv_header << '\n';
    for (const auto& it : items) os << row(it).second << '\n';
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Padovan sequence T(n+3) = T(n+1) + T(n), T(0..2) = 0, 1, 1 (OEIS A000931) modulo primes:\n"
      "splitting of X^3 - X - 1, periods, ranks of apparition, root orders, x^2 + 23y^2,\n"
      "and exploratory scans."};
  app.require_subcommand(1);

  Common common;
  u64 budget = kDefaultApparitionBudget;

  u64 analyze_p = 0;
  auto* analyze = app.add_subcommand("analyze", "Full report for one prime");
  analyze->add_option("p", analyze_p, "Prime")->required();
  analyze->add_option("--budget-steps", budget, "Apparition scan budget");
  add_common(analyze, common);

  u64 scan_max = 0;
  std::string checks = "theorem,q1,q2,q3,equiv";
  bool strict = false;
  auto* scan = app.add_subcommand("scan", "One record per prime up to --max");
  scan->add_option("--max", scan_max, "Largest prime considered")->required();
  scan->add_option("--checks", checks, "Comma list from theorem,q1,q2,q3,equiv");
  scan->add_flag("--strict", strict, "Exit 2 if any apparition scan exceeds its budget");
  scan->add_option("--budget-steps", budget, "Per-prime apparition scan budget");
  add_common(scan, common);

  i64 list_max = 0;
  auto* exceptions = app.add_subcommand("exceptions", "Indices n whose T_n has no primitive prime divisor");
  exceptions->add_option("--max", list_max, "Largest index")->required();
  add_common(exceptions, common);

  auto* prime_terms_cmd = app.add_subcommand("prime-terms", "Indices n with T_n prime");
  prime_terms_cmd->add_option("--max", list_max, "Largest index")->required();
  add_common(prime_terms_cmd, common);

  auto* squares = app.add_subcommand("squares", "Perfect squares T_n > 1");
  squares->add_option("--max", list_max, "Largest index")->required();
  add_common(squares, common);

  u64 perrin_max = 0;
  auto* perrin = app.add_subcommand("perrin-pseudo", "Composite n <= --max dividing the Perrin number P_n");
  perrin->add_option("--max", perrin_max, "Largest n")->required();
  add_common(perrin, common);

  int digits = 7;
  auto* psi = app.add_subcommand("psi", "Plastic number to the given number of significant digits");
  psi->add_option("digits,--digits", digits, "Significant digits")->check(CLI::PositiveNumber);
  add_common(psi, common);

  u64 represent_p = 0;
  auto* represent_cmd = app.add_subcommand("represent", "Solve p = x^2 + 23y^2");
  represent_cmd->add_option("p", represent_p, "Prime")->required();
  add_common(represent_cmd, common);

  i64 term_n = 0;
  u64 term_modulus = 0;
  std::string seq = "padovan";
  auto* term_cmd = app.add_subcommand("term", "n-th term of a preset sequence, optionally reduced");
  term_cmd->add_option("n", term_n, "Index (>= -3)")->required()->allow_extra_args(false);
  term_cmd->add_option("--mod", term_modulus, "Modulus >= 2");
  term_cmd->add_option("--seq", seq, "padovan, perrin or tribonacci");
  add_common(term_cmd, common);

  u64 period_p = 0;
  auto* period_cmd = app.add_subcommand("period", "Splitting degree, period and first zero of a preset mod p");
  period_cmd->add_option("p", period_p, "Prime")->required();
  period_cmd->add_option("--seq", seq, "padovan, perrin or tribonacci");
  period_cmd->add_option("--budget-steps", budget, "Iteration cap");
  add_common(period_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const Format fmt = parse_format(common.format);

    if (*analyze) {
      Analysis a = padovan::analyze(require_prime(analyze_p), budget);
      emit(common, format_analysis(a, fmt));
      if (a.period.partial) {
        std::cerr << "apparition scan exceeded " << budget << " steps\n";
        return kExitBudget;
      }
      return a.period.checks.all_hold() ? kExitOk : kExitUsage;
    }

    if (*scan) {
      ScanOptions opts{false, false, false, false, false, budget, common.threads};
      std::stringstream ss(checks);
      for (std::string item; std::getline(ss, item, ',');) {
        if (item == "theorem") opts.theorem = true;
        else if (item == "q1") opts.q1 = true;
        else if (item == "q2") opts.q2 = true;
        else if (item == "q3") opts.q3 = true;
        else if (item == "equiv") opts.equiv = true;
        else throw std::invalid_argument("unknown check '" + item + "'");
      }
      auto records = scan_primes(scan_max, opts);
      emit(common, format_scan(records, fmt));
      bool any_partial = false, any_violation = false;
      for (const auto& r : records) {
        any_partial = any_partial || r.report.partial;
        any_violation = any_violation || r.violation();
      }
      if (any_violation) return kExitUsage;
      if (strict && any_partial) return kExitBudget;
      return kExitOk;
    }

    if (*exceptions) {
      auto v = primitive_divisor_exceptions(list_max, common.threads);
      emit(common, format_list(v, fmt, "n", [](i64 n) { return std::pair{nlohmann::json(n), std::to_string(n)}; }));
      return kExitOk;
    }

    if (*prime_terms_cmd) {
      auto v = prime_terms(list_max, common.threads);
      emit(common, format_list(v, fmt, "n,proven", [fmt](const PrimeTerm& t) {
             nlohmann::json j = {{"n", t.index}, {"proven", t.proven}};
             std::string line = fmt == Format::Csv ? std::to_string(t.index) + "," + (t.proven ? "true" : "false")
                                                   : std::to_string(t.index) + (t.proven ? "" : " (probable)");
             return std::pair{j, line};
           }));
      return kExitOk;
    }

    if (*squares) {
      auto v = square_terms(list_max, common.threads);
      emit(common, format_list(v, fmt, "n,value,root,root_index", [fmt](const SquareTerm& s) {
             nlohmann::json j = {{"n", s.index},
                                 {"value", s.value.get_str()},
                                 {"root", s.root.get_str()},
                                 {"root_index", s.root_index ? nlohmann::json(*s.root_index) : nlohmann::json(nullptr)}};
             std::string idx = s.root_index ? std::to_string(*s.root_index) : "";
             std::string line =
                 fmt == Format::Csv
                     ? std::to_string(s.index) + "," + s.value.get_str() + "," + s.root.get_str() + "," + idx
                     : "T_" + std::to_string(s.index) + " = " + s.value.get_str() + " = " + s.root.get_str() + "^2" +
                           (s.root_index ? "  (" + s.root.get_str() + " = T_" + idx + ")" : "");
             return std::pair{j, line};
           }));
      return kExitOk;
    }

    if (*perrin) {
      auto v = perrin_pseudoprimes(perrin_max, common.threads);
      emit(common, format_list(v, fmt, "n", [](u64 n) { return std::pair{nlohmann::json(n), std::to_string(n)}; }));
      return kExitOk;
    }

    if (*psi) {
      std::string value = plastic_number(digits);
      if (fmt == Format::Json) {
        emit(common, nlohmann::json{{"digits", digits}, {"psi", value}}.dump() + "\n");
      } else if (fmt == Format::Csv) {
        emit(common, "digits,psi\n" + std::to_string(digits) + "," + value + "\n");
      } else {
        emit(common, value + "\n");
      }
      return kExitOk;
    }

    if (*represent_cmd) {
      Representation r = represent(represent_p);
      std::string text;
      if (fmt == Format::Json) {
        text = nlohmann::json{{"p", r.p},
                              {"x", r.found ? nlohmann::json(r.x) : nlohmann::json(nullptr)},
                              {"y", r.found ? nlohmann::json(r.y) : nlohmann::json(nullptr)},
                              {"found", r.found}}
                   .dump() +
               "\n";
      } else if (fmt == Format::Csv) {
        text = "p,x,y,found\n" + std::to_string(r.p) + "," + (r.found ? std::to_string(r.x) : "") + "," +
               (r.found ? std::to_string(r.y) : "") + "," + (r.found ? "true" : "false") + "\n";
      } else {
        text = r.found ? "x=" + std::to_string(r.x) + ", y=" + std::to_string(r.y) + "\n" : "none\n";
      }
      emit(common, text);
      return kExitOk;
    }

    if (*term_cmd) {
      const RecurrenceSpec spec = RecurrenceSpec::preset(seq);
      std::string value;
      if (term_modulus != 0) {
        if (term_n < 0) throw std::invalid_argument("--mod needs n >= 0");
        value = std::to_string(term_mod(spec, static_cast<u64>(term_n), term_modulus));
      } else {
        value = term(spec, term_n).get_str();
      }
      if (fmt == Format::Json) {
        emit(common, nlohmann::json{{"seq", seq}, {"n", term_n}, {"value", value}}.dump() + "\n");
      } else if (fmt == Format::Csv) {
        emit(common, "seq,n,value\n" + seq + "," + std::to_string(term_n) + "," + value + "\n");
      } else {
        emit(common, value + "\n");
      }
      return kExitOk;
    }

    if (*period_cmd) {
      const RecurrenceSpec spec = RecurrenceSpec::preset(seq);
      require_prime(period_p);
      const int r = splitting_degree(spec.coeffs, period_p);
      const u64 t = period_direct(spec, period_p, budget);
      std::optional<u64> first_zero;
      for (u64 n = 1; n <= t && !first_zero; ++n) {
        if (term_mod(spec, n, period_p) == 0) first_zero = n;
      }
      const bool exploratory = spec.name == "tribonacci";
      std::string text;
      if (fmt == Format::Json) {
        text = nlohmann::json{{"seq", seq},
                              {"p", period_p},
                              {"r", r},
                              {"t", t},
                              {"omega", first_zero ? nlohmann::json(*first_zero) : nlohmann::json(nullptr)},
                              {"exploratory", exploratory}}
                   .dump() +
               "\n";
      } else if (fmt == Format::Csv) {
        text = "seq,p,r,t,omega\n" + seq + "," + std::to_string(period_p) + "," + std::to_string(r) + "," +
               std::to_string(t) + "," + (first_zero ? std::to_string(*first_zero) : "") + "\n";
      } else {
        text = seq + " mod " + std::to_string(period_p) + ": r_p = " + std::to_string(r) +
               "  t_p = " + std::to_string(t) + "  first zero = " +
               (first_zero ? std::to_string(*first_zero) : "none") +
               (exploratory ? "  [exploratory: initial values (0,1,1) are a convention]" : "") + "\n";
      }
      emit(common, text);
      return kExitOk;
    }
  } catch (const ScanCapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const PrecisionCapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
