#include "padovan/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace padovan {

Format parse_format(const std::string& name) {
  if (name == "table") return Format::Table;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + name + "'");
}

Analysis analyze(u64 p, u64 budget) {
  Analysis a{split(p), {}, represent(p)};
  a.period = verify_theorem(a.splitting, a.representation, budget);
  return a;
}

namespace {

i64 signed_residue(u64 v, u64 p) { return v > p / 2 ? -static_cast<i64>(p - v) : static_cast<i64>(v); }

// Appends c·sym with sign handling; sym empty means a constant term.
void append_term(std::string& out, i64 c, const std::string& sym) {
  if (c == 0) return;
  const bool first = out.empty();
  if (c < 0) {
    out += "-";
  } else if (!first) {
    out += "+";
  }
  const i64 mag = c < 0 ? -c : c;
  if (mag != 1 || sym.empty()) out += std::to_string(mag);
  out += sym;
}

nlohmann::json order_json(u128 v) {
  if (v <= static_cast<u128>(UINT64_MAX)) return static_cast<u64>(v);
  return to_string(v);
}

nlohmann::json flag_json(const std::optional<bool>& f) {
  if (!f) return nullptr;
  return *f;
}

std::string flag_text(const std::optional<bool>& f) {
  if (!f) return "-";
  return *f ? "yes" : "NO";
}

std::string csv_flag(const std::optional<bool>& f) {
  if (!f) return "";
  return *f ? "true" : "false";
}

nlohmann::json checks_json(const TheoremChecks& c) {
  return {{"last_three", flag_json(c.last_three)},
          {"omega_bound", flag_json(c.omega_bound)},
          {"divides_group_order", flag_json(c.divides_group_order)},
          {"period_match", flag_json(c.period_match)},
          {"case2_b_eq_c", flag_json(c.case2_b_eq_c)},
          {"case2_b_div", flag_json(c.case2_b_div)},
          {"case2_omega_bound", flag_json(c.case2_omega_bound)},
          {"case3_all_equal", flag_json(c.case3_all_equal)},
          {"case3_div", flag_json(c.case3_div)},
          {"equiv", flag_json(c.equiv)}};
}

nlohmann::json period_json(const PeriodReport& r, const Representation& rep) {
  nlohmann::json j;
  j["p"] = r.p;
  j["r"] = r.r;
  j["t"] = order_json(r.t);
  j["omega"] = r.omega ? nlohmann::json(*r.omega) : nlohmann::json(nullptr);
  j["apparition"] = r.apparition ? nlohmann::json(*r.apparition) : nlohmann::json(nullptr);
  j["orders"] = {{"a", order_json(r.orders.a)}, {"b", order_json(r.orders.b)}, {"c", order_json(r.orders.c)}};
  j["delta"] = r.delta_in_fp ? nlohmann::json::array({r.delta_in_fp->first, r.delta_in_fp->second})
                             : nlohmann::json(nullptr);
  j["checks"] = checks_json(r.checks);
  j["representation"] = {{"x", rep.found ? nlohmann::json(rep.x) : nlohmann::json(nullptr)},
                         {"y", rep.found ? nlohmann::json(rep.y) : nlohmann::json(nullptr)},
                         {"found", rep.found}};
  return j;
}

std::string sqrt_minus23_text(const SplittingReport& sp, const PeriodReport& pr) {
  if (pr.delta_in_fp) {
    const i64 s = signed_residue(pr.delta_in_fp->first, sp.p);
    if (s == 0) return "0";
    return "±" + std::to_string(s < 0 ? -s : s);
  }
  return "±√" + std::to_string(signed_residue(reduce(-23, sp.p), sp.p));
}

std::string join(const std::vector<u64>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::string format_element(const ExtElement& x) {
  const u64 p = x.field().p();
  if (x.in_prime_subfield()) return std::to_string(x[0]);
  std::string out;
  switch (x.field().degree()) {
    case 2: {
      const u64 nonresidue = sub_mod(0, x.field().modulus_low()[0], p);
      const std::string sym = "√" + std::to_string(signed_residue(nonresidue, p));
      append_term(out, signed_residue(x[0], p), "");
      append_term(out, signed_residue(x[1], p), sym);
      break;
    }
    default:
      append_term(out, signed_residue(x[2], p), "α^2");
      append_term(out, signed_residue(x[1], p), "α");
      append_term(out, signed_residue(x[0], p), "");
      break;
  }
  return out.empty() ? "0" : out;
}

nlohmann::json to_json(const Analysis& a) { return period_json(a.period, a.representation); }

nlohmann::json to_json(const ScanRecord& rec) {
  nlohmann::json j = period_json(rec.report, rec.representation);
  j["checks"]["q1"] = flag_json(rec.q1);
  j["checks"]["q2"] = flag_json(rec.q2);
  j["checks"]["q3"] = flag_json(rec.q3);
  j["checks"]["theorem"] = flag_json(rec.theorem);
  j["checks"]["partial"] = rec.report.partial;
  return j;
}

std::string format_analysis(const Analysis& a, Format fmt) {
  const SplittingReport& sp = a.splitting;
  const PeriodReport& pr = a.period;
  const Representation& rep = a.representation;
  std::ostringstream os;
  if (fmt == Format::Json) {
    os << to_json(a).dump() << '\n';
    return os.str();
  }
  if (fmt == Format::Csv) {
    os << "p,r,t,omega,a,b,c,equiv\n";
    os << pr.p << ',' << pr.r << ',' << to_string(pr.t) << ',' << (pr.omega ? std::to_string(*pr.omega) : "")
       << ',' << to_string(pr.orders.a) << ',' << to_string(pr.orders.b) << ',' << to_string(pr.orders.c) << ','
       << csv_flag(pr.checks.equiv) << '\n';
    return os.str();
  }

  os << "p = " << sp.p << "  r_p = " << sp.r << "  " << to_string(sp.kind) << '\n';
  os << "roots and orders\n";
  const std::array<std::pair<const char*, const ExtElement*>, 3> roots = {
      {{"α", &sp.alpha}, {"β", &sp.beta}, {"γ", &sp.gamma}}};
  const std::array<std::pair<const char*, u128>, 3> orders = {
      {{"a", pr.orders.a}, {"b", pr.orders.b}, {"c", pr.orders.c}}};
  for (int i = 0; i < 3; ++i) {
    std::string lhs = std::string("  ") + roots[i].first + " = " + format_element(*roots[i].second);
    os << lhs;
    // Pad by code points, not bytes, so the order column lines up.
    size_t width = 0;
    for (unsigned char ch : lhs) width += (ch & 0xC0) != 0x80;
    os << std::string(width < 24 ? 24 - width : 1, ' ') << orders[i].first << " = " << to_string(orders[i].second)
       << '\n';
  }
  os << "√-23 = " << sqrt_minus23_text(sp, pr) << '\n';
  os << "δ = " << format_element(sp.delta) << '\n';
  os << "t_p = " << to_string(pr.t) << '\n';
  os << "ω_p = " << (pr.omega ? std::to_string(*pr.omega) : "?") << '\n';
  os << "A_p = ";
  if (pr.apparition) {
    os << '{' << join(*pr.apparition) << "}\n";
  } else {
    os << "(scan budget exceeded)\n";
  }
  os << "x^2+23y^2: ";
  if (rep.found) {
    os << sp.p << " = " << rep.x << "^2 + 23*" << rep.y << "^2\n";
  } else {
    os << "none\n";
  }
  const TheoremChecks& c = pr.checks;
  os << "checks:";
  const std::array<std::pair<const char*, const std::optional<bool>*>, 10> flags = {{
      {"last_three", &c.last_three},
      {"omega_bound", &c.omega_bound},
      {"divides_group_order", &c.divides_group_order},
      {"period_match", &c.period_match},
      {"case2_b_eq_c", &c.case2_b_eq_c},
      {"case2_b_div", &c.case2_b_div},
      {"case2_omega_bound", &c.case2_omega_bound},
      {"case3_all_equal", &c.case3_all_equal},
      {"case3_div", &c.case3_div},
      {"equiv", &c.equiv},
  }};
  for (const auto& [name, flag] : flags) {
    if (flag->has_value()) os << ' ' << name << '=' << flag_text(*flag);
  }
  os << '\n';
  return os.str();
}

std::string format_scan(const std::vector<ScanRecord>& records, Format fmt) {
  std::ostringstream os;
  if (fmt == Format::Json) {
    for (const auto& rec : records) os << to_json(rec).dump() << '\n';
    return os.str();
  }
  if (fmt == Format::Csv) {
    os << "p,r,t,omega,a,b,c,q1,q2,q3,equiv\n";
    for (const auto& rec : records) {
      const PeriodReport& r = rec.report;
      os << r.p << ',' << r.r << ',' << to_string(r.t) << ',' << (r.omega ? std::to_string(*r.omega) : "") << ','
         << to_string(r.orders.a) << ',' << to_string(r.orders.b) << ',' << to_string(r.orders.c) << ','
         << csv_flag(rec.q1) << ',' << csv_flag(rec.q2) << ',' << csv_flag(rec.q3) << ',' << csv_flag(rec.equiv)
         << '\n';
    }
    return os.str();
  }

  os << std::setw(8) << "p" << std::setw(3) << "r" << std::setw(14) << "t" << std::setw(12) << "omega"
     << std::setw(14) << "a" << std::setw(14) << "b" << std::setw(14) << "c" << std::setw(5) << "q1" << std::setw(5)
     << "q2" << std::setw(5) << "q3" << std::setw(7) << "equiv" << std::setw(8) << "theorem" << '\n';
  size_t violations = 0, partial = 0;
  std::vector<std::string> counterexamples;
  for (const auto& rec : records) {
    const PeriodReport& r = rec.report;
    os << std::setw(8) << r.p << std::setw(3) << r.r << std::setw(14) << to_string(r.t) << std::setw(12)
       << (r.omega ? std::to_string(*r.omega) : "?") << std::setw(14) << to_string(r.orders.a) << std::setw(14)
       << to_string(r.orders.b) << std::setw(14) << to_string(r.orders.c) << std::setw(5) << flag_text(rec.q1)
       << std::setw(5) << flag_text(rec.q2) << std::setw(5) << flag_text(rec.q3) << std::setw(7)
       << flag_text(rec.equiv) << std::setw(8) << flag_text(rec.theorem) << '\n';
    violations += rec.violation();
    partial += r.partial;
    for (auto [name, q] : {std::pair{"Q1", rec.q1}, std::pair{"Q2", rec.q2}, std::pair{"Q3", rec.q3}}) {
      if (q && !*q) counterexamples.push_back(std::string(name) + " fails at p = " + std::to_string(r.p));
    }
  }
  os << "# primes: " << records.size() << "  violations: " << violations << "  partial: " << partial << '\n';
  for (const auto& line : counterexamples) os << "# finding: " << line << '\n';
  return os.str();
}

}  // namespace padovan
