#include "dident/formula_catalog.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dident {
namespace {

std::string x(unsigned i) { return "x" + std::to_string(i); }

std::string eq(const std::string& lhs, const std::string& rhs = "1") { return "(" + lhs + " = " + rhs + ")"; }

std::string pw(const std::string& base, long long k) {
  bool atomic = base.size() <= 3 && base[0] == 'x';
  return (atomic ? base : "(" + base + ")") + "^" + std::to_string(k);
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty())
      s += " | ";
    s += p;
  }
  return s;
}

FormulaEntry make(std::string id, std::string text, std::string note,
                  std::vector<std::string> valid_in = {}, std::vector<KnownFailure> failures = {},
                  std::string variant_of = {}) {
  FormulaEntry e;
  e.id = std::move(id);
  e.ude = parse_formula(text);
  e.text = std::move(text);
  e.note = std::move(note);
  e.claimed_valid_in = std::move(valid_in);
  e.known_failures = std::move(failures);
  e.variant_of = std::move(variant_of);
  return e;
}

// x1^{k1 e} x2^{k2 e} x3^{k3 e} = 1 over the nonzero 0/1 vectors (k1, k2, k3).
std::vector<std::string> subset_products(unsigned e) {
  std::vector<std::string> out;
  for (unsigned mask = 1; mask < 8; ++mask) {
    std::string w;
    for (unsigned i = 0; i < 3; ++i)
      if (mask & (1u << i))
        w += (w.empty() ? "" : " ") + (e == 1 ? x(i + 1) : pw(x(i + 1), e));
    out.push_back(eq(w));
  }
  return out;
}

std::string pk_s4_text() {
  std::vector<std::string> c;
  for (unsigned i = 1; i <= 9; ++i)
    c.push_back(eq(pw(x(i), 3)));
  for (unsigned i = 1; i <= 9; ++i)
    for (unsigned j = i + 1; j <= 9; ++j)
      c.push_back(eq("(" + x(i) + " " + x(j) + "^-1)^3"));
  return join(c);
}

std::string f2_6_text() {
  std::vector<std::string> c;
  for (unsigned i = 1; i <= 3; ++i)
    for (unsigned j = 1; j <= 3; ++j)
      if (i != j)
        c.push_back("in_cyc(" + x(i) + ", " + x(j) + ", 0, 3)");
  c.push_back(eq("x1 x2", "x3"));
  c.push_back(eq("x1 x2", "x3^-1"));
  return join(c);
}

std::string f3_7_text() {
  auto y = [](unsigned i) { return "(x" + std::to_string(i) + "^15)"; };
  std::vector<std::string> c;
  c.push_back("theta(" + y(1) + ", " + y(2) + ", " + y(3) + ")");
  for (unsigned i = 1; i <= 3; ++i)
    c.push_back(eq(y(i)));
  for (unsigned i = 1; i <= 3; ++i)
    for (unsigned j = 1; j <= 3; ++j)
      if (i != j)
        c.push_back(eq("(" + y(i) + y(j) + ")^15"));
  for (unsigned i = 1; i <= 3; ++i)
    for (unsigned j = 1; j <= 3; ++j)
      for (unsigned k = 1; k <= 3; ++k)
        if (j != i && k != i)
          c.push_back(eq("(" + y(i) + y(j) + y(k) + ")^15"));
  for (unsigned i = 1; i <= 3; ++i)
    for (unsigned j = 1; j <= 3; ++j)
      for (unsigned k = 1; k <= 3; ++k)
        if (j != i && k != i)
          c.push_back(eq("(" + y(i) + y(j) + y(k) + y(j) + ")^15"));
  return join(c);
}

std::string f3_2_text() {
  std::vector<std::string> c;
  for (unsigned i = 1; i <= 3; ++i)
    c.push_back(eq(pw(x(i), 15)));
  for (unsigned i = 1; i <= 3; ++i)
    for (unsigned j = i + 1; j <= 3; ++j)
      c.push_back(eq(pw(x(i) + " " + x(j), 15)));
  for (auto& s : subset_products(1))
    c.push_back(s);
  return join(c);
}

std::string f4_3_text() {
  std::vector<std::string> c;
  for (unsigned i = 1; i <= 9; ++i)
    c.push_back(eq(pw(x(i), 20)));
  for (unsigned i = 1; i <= 9; ++i)
    for (unsigned j = i + 1; j <= 9; ++j)
      c.push_back(eq(x(i), x(j)));
  for (unsigned i = 1; i <= 9; ++i)
    for (unsigned j = i + 1; j <= 9; ++j)
      c.push_back(eq(pw(x(i) + " " + x(j), 20)));
  for (unsigned i = 1; i <= 9; ++i)
    for (unsigned j = i + 1; j <= 9; ++j)
      c.push_back(eq(pw(x(i) + " " + x(j) + "^2", 20)));
  return join(c);
}

std::string f4_5_text() {
  std::vector<std::string> c{"theta(x1, x2, x3)"};
  for (unsigned i = 1; i <= 3; ++i)
    c.push_back(eq(pw(x(i), 15)));
  for (unsigned k = 1; k <= 3; ++k)
    for (unsigned i = 1; i <= 3; ++i)
      for (unsigned j = 1; j <= 3; ++j)
        if (i != j)
          c.push_back(eq(pw(x(i) + " " + (k == 1 ? x(j) : x(j) + "^" + std::to_string(k)), 15)));
  return join(c);
}

const char* kF3_6 = "(x1^30 = 1) | (x2^30 = 1) | ((x1 x2)^15 = 1) | ((x1 x2^2)^15 = 1) | ((x1 x2^3)^15 = 1)";
const char* kF3_11 = "(x1^12 = 1) | (x2^12 = 1) | ((x1 x2)^12 = 1) | ((x1 x2^2)^12 = 1) | ((x1 x2^3)^12 = 1) | "
                     "((x1 x2^4)^12 = 1)";

std::vector<FormulaEntry> build_catalog() {
  std::vector<FormulaEntry> c;
  c.push_back(make("2.1", "omega(8)", "pigeonhole bound for D8", {"D8", "Q8"}, {{"Z9", {}}}));
  c.push_back(make("2.2", "x1^4 = 1", "exponent 4", {"D8", "Q8"}, {{"Z8", {}}}));
  c.push_back(make("2.3", "(x1^2 = 1) | (x2^2 = 1) | (x3^2 = 1) | (x1 = x2) | (x1 = x3) | (x2 = x3)",
                   "at most two elements of order 4", {"D8"}, {{"Z4xZ2", {}}, {"Q8", {}}}));
  c.push_back(make("2.4", "theta(x1, x2, x3)", "theta: eliminates Z2^3 from the D8 class", {"D8"},
                   {{"Z2^3", {"a", "b", "c"}}}));
  c.push_back(make("2.5", "in_cyc(x1, x2, 0, 3) | in_cyc(x2, x1, 0, 3) | (x1^2 x2^2 = 1)",
                   "eliminates Z4xZ2 and D8 from the Q8 class", {"Q8"},
                   {{"D8", {"a", "b"}}, {"Z4xZ2", {"a", "b"}}}));
  c.push_back(make("2.6", f2_6_text(), "eliminates Z2^3 from the Q8 class", {"Q8"}, {{"Z2^3", {"a", "b", "c"}}}));
  c.push_back(make("2.7", "(x1^2 = 1) | (x1^3 = 1)", "element orders of A4", {"A4"}, {{"Z4", {}}, {"Z6", {}}}));
  c.push_back(make("2.8", "(x1^3 = 1) | (x2^3 = 1) | ((x1 x2)^2 = 1)", "eliminates S3 from the A4 class", {"A4"},
                   {{"S3", {"(1 2)", "(1 3)"}}}));
  c.push_back(make("2.9", join(subset_products(3)), "eliminates Z2^3 from the A4 class", {"A4"},
                   {{"Z2^3", {"a", "b", "c"}}}));
  c.push_back(make("2.10", "(x1^4 = 1) | (x2^4 = 1) | ((x1 x2)^4 = 1) | ((x1 x2^2)^4 = 1)",
                   "eliminates groups of order 9", {"S4", "A4"}, {{"Z3^2", {"a", "b"}}}));
  c.push_back(make("2.11", "(x1^3 = 1) | (x1^4 = 1)", "element orders of S4", {"S4"}, {{"Z6", {}}}));
  c.push_back(make("2.12", "(x1^6 = 1) | (x2^6 = 1) | (x1 = x2) | (x1 x2 = 1) | ((x1 x2)^3 = 1)",
                   "eliminates Z4xZ2 and Q8 from the S4 class", {"S4"},
                   {{"Z4xZ2", {"a", "ab"}}, {"Q8", {"a", "b"}}}));
  c.push_back(make("2.13",
                   "(x1^3 = 1) | (x2^3 = 1) | (x3^3 = 1) | ((x1^-1 x2)^3 = 1) | ((x1^-1 x3)^3 = 1) | "
                   "((x2^-1 x3)^3 = 1) | theta(x1, x2, x3)",
                   "eliminates Z2^3 from the S4 class", {"S4"}, {{"Z2^3", {"a", "b", "c"}}}));
  c.push_back(make("pk-s4", pk_s4_text(), "nine-variable formula of the earlier S4 weak-basis list", {"S4", "Q8"}));

  c.push_back(make("3.1", "(x1^2 = 1) | (x1^3 = 1) | (x1^5 = 1)", "element orders of A5", {"A5"}));
  c.push_back(make("3.2", f3_2_text(), "eliminates Z2^3 from the A5 class", {"A5"}, {{"Z2^3", {"a", "b", "c"}}}));
  c.push_back(make("3.3", "(x1^10 = 1) | (x2^10 = 1) | (x1 = x2) | ((x1 x2)^10 = 1) | ((x1^2 x2)^2 = 1)",
                   "eliminates Z3xZ3 from the A5 class", {"A5"}, {{"Z3^2", {"a", "b"}}}));
  c.push_back(make("3.4",
                   "(x1^6 = 1) | (x2^6 = 1) | ((x1 x2)^6 = 1) | ((x1 x2^2)^6 = 1) | ((x1 x2^3)^6 = 1) | "
                   "((x1 x2^4)^6 = 1)",
                   "eliminates groups of order 25 from the A5 class", {"A5"}, {{"Z5^2", {"a", "b"}}}));
  c.push_back(make("3.5", "(x1^4 = 1) | (x1^5 = 1) | (x1^6 = 1)", "element orders of S5", {"S5"}));
  c.push_back(make("3.6", kF3_6, "eliminates Z4xZ2 and Q8 from the S5 class", {"S5", "A6"},
                   {{"Z4xZ2", {"a", "ab"}}, {"Q8", {}}}));
  c.push_back(make("3.7", f3_7_text(), "eliminates Z2^3 from the S5 class; y_i = x_i^15 expanded", {"S5"},
                   {{"Z2^3", {"a", "b", "c"}}}));
  c.push_back(make("3.8", "(x1^20 = 1) | (x2^20 = 1) | (x1^2 = x2^2) | ((x1^2 x2^2)^5 = 1) | ((x1^4 x2^2)^2 = 1)",
                   "as printed: fourth clause with exponent 5", {"S5"}, {{"Z3^2", {"a", "b"}}}));
  c.push_back(make("3.8a",
                   "(x1^20 = 1) | (x2^20 = 1) | (x1^2 = x2^2) | ((x1^2 x2^2)^10 = 1) | ((x1^4 x2^2)^2 = 1)",
                   "the substitution x_i -> x_i^2 into 3.3: fourth clause with exponent 10", {"S5"},
                   {{"Z3^2", {"a", "b"}}}, "3.8"));
  c.push_back(make("3.9",
                   "(x1^15 = 1) | (x2^15 = 1) | (x1^4 = 1) | (x2^4 = 1) | ((x1 x2)^15 = 1) | ((x1 x2)^4 = 1)",
                   "eliminates Z2xZ6 from the S5 class", {"S5"}, {{"Z2xZ6", {"b", "ab"}}}));
  c.push_back(make("3.10",
                   "(x1^10 = 1) | (x2^10 = 1) | (x1^4 = x2^4) | (x1^6 = x2^6) | ((x1^2 x2^2)^3 = 1) | "
                   "((x1^2 x2^2)^4 = 1) | ((x1^2 x2^2)^5 = 1)",
                   "eliminates Z3:Z4 from the S5 class", {"S5"}, {{"Z3:Z4", {"a", "b"}}}));
  c.push_back(make("3.11", kF3_11, "eliminates groups of order 25 from the S5 class", {"S5", "S6", "A6"},
                   {{"Z5^2", {"a", "b"}}}));
  c.push_back(make("3.12",
                   "(x1^3 = 1) | (x2^3 = 1) | (x1^5 = 1) | (x2^5 = 1) | (x1^4 = x2^4) | ((x1 x2)^3 = 1) | "
                   "((x1 x2)^4 = 1) | ((x1 x2)^5 = 1)",
                   "formula of the earlier S5 list; not valid in S5", {},
                   {{"S5", {"(1 2 3)(4 5)", "(1 4)(2 5)"}}}));

  c.push_back(make("4.1", "omega(360)", "pigeonhole bound for A6", {"A6"}));
  c.push_back(make("4.2", "(x1^3 = 1) | (x1^4 = 1) | (x1^5 = 1)", "element orders of A6", {"A6"},
                   {{"Z6", {}}, {"S5", {}}}));
  c.push_back(make("4.3", f4_3_text(), "nine order-3 elements meet two Sylow 3-subgroups", {"A6"},
                   {{"Heis27", {}}}));
  c.push_back(make("4.4", kF3_6, "same formula as 3.6", {"A6", "S5"}, {{"Z4xZ2", {"a", "ab"}}, {"Q8", {}}}));
  c.push_back(make("4.5", f4_5_text(), "eliminates Z2^3 from the A6 class", {"A6"}, {{"Z2^3", {"a", "b", "c"}}}));
  c.push_back(make("4.6",
                   "(x1^12 = 1) | (x2^30 = 1) | ((x1 x1^x2)^12 = 1) | ((x1 (x1^3)^x2)^12 = 1) | "
                   "([x1^2, x1^x2]^12 = 1)",
                   "as printed: third clause read as the commutator (x1^2, x1^x2)"));
  c.push_back(make("4.6a",
                   "(x1^12 = 1) | (x2^30 = 1) | ((x1 x1^x2)^12 = 1) | ((x1 (x1^3)^x2)^12 = 1) | "
                   "((x1^2 x1^x2)^12 = 1)",
                   "third clause read as the product x1^2 x1^x2", {"A6"}, {{"F20", {"a", "b"}}}, "4.6"));
  c.push_back(make("4.7", kF3_11, "same formula as 3.11", {"A6", "S5", "S6"}, {{"Z5^2", {"a", "b"}}}));

  c.push_back(dihedral_5_1());
  return c;
}

unsigned parse_param(std::string_view body, std::string_view key) {
  // body looks like "m=6,p=3"
  std::istringstream is{std::string(body)};
  std::string part;
  while (std::getline(is, part, ',')) {
    auto e = part.find('=');
    if (e == std::string::npos || part.compare(0, e, key) != 0 || e != key.size())
      continue;
    auto v = part.substr(e + 1);
    if (v.empty() || v.size() > 6 || !std::all_of(v.begin(), v.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw std::invalid_argument("bad parameter value in formula id");
    return static_cast<unsigned>(std::stoul(v));
  }
  throw std::invalid_argument("formula id lacks parameter '" + std::string(key) + "'");
}

bool is_prime(unsigned n) {
  if (n < 2)
    return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::string params(unsigned m) { return "[m=" + std::to_string(m) + "]"; }
std::string params(unsigned m, unsigned p) {
  return "[m=" + std::to_string(m) + ",p=" + std::to_string(p) + "]";
}

// x^e written for DSL text, with e = 1 giving x itself.
std::string pow_text(const std::string& base, unsigned e) {
  if (e == 1)
    return base;
  return pw(base, e);
}

} // namespace

std::vector<unsigned> prime_divisors(unsigned m) {
  std::vector<unsigned> ps;
  for (unsigned d = 2; d <= m; ++d)
    if (m % d == 0 && is_prime(d))
      ps.push_back(d);
  return ps;
}

std::pair<unsigned, unsigned> split_prime_part(unsigned m, unsigned p) {
  unsigned pk = 1;
  while (m % p == 0) {
    m /= p;
    pk *= p;
  }
  return {pk, m};
}

FormulaEntry dihedral_5_1() {
  return make("5.1", "(x1^2 = 1) | (x2^2 = 1) | ([x1, x2] = 1)",
              "holds exactly in abelian groups and A:Z2 with inversion action");
}

FormulaEntry dihedral_5_2(unsigned m) {
  if (m < 2)
    throw std::invalid_argument("dihedral formulas need m >= 2");
  if (m % 2 == 0)
    return make("5.2" + params(m), "x1^" + std::to_string(m) + " = 1", "exponent of D_2m for even m");
  return make("5.2'" + params(m), "(x1^2 = 1) | (x1^" + std::to_string(m) + " = 1)", "element orders of D_2m, m odd");
}

FormulaEntry dihedral_5_3(unsigned m, unsigned p, bool with_identity) {
  if (m < 2 || !is_prime(p) || m % p)
    throw std::invalid_argument("5.3 needs a prime divisor p of m");
  auto [pk, mp] = split_prime_part(m, p);
  std::string a = pow_text("x1", mp), b = pow_text("x2", mp);
  std::string lo = with_identity ? "0" : "1";
  std::string hi = std::to_string(pk - 1);
  std::string text = "(x1^2 = 1) | (x2^2 = 1) | in_cyc(" + a + ", " + b + ", " + lo + ", " + hi + ") | in_cyc(" + b +
                     ", " + a + ", " + lo + ", " + hi + ")";
  if (with_identity)
    return make("5.3a" + params(m, p), text, "membership range includes the identity", {}, {}, "5.3" + params(m, p));
  return make("5.3" + params(m, p), text, "as printed: membership from the first power");
}

FormulaEntry dihedral_5_4(unsigned m, bool reversed) {
  if (m < 2 || m % 2)
    throw std::invalid_argument("5.4 needs an even m");
  auto [pk, m2] = split_prime_part(m, 2);
  std::string hi = std::to_string(pk - 1);
  auto in = [&](const std::string& a, const std::string& b) { return "in_cyc(" + a + ", " + b + ", 0, " + hi + ")"; };
  std::vector<std::string> c;
  for (unsigned i = 1; i <= 3; ++i)
    for (unsigned j = 1; j <= 3; ++j)
      if (i != j)
        c.push_back(in(pow_text(x(i), m2), pow_text(x(j), m2)));
  static constexpr unsigned perms[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
  for (const auto& s : perms)
    c.push_back(in(pow_text(x(s[0]), m2), pow_text(x(s[1]) + " " + x(s[2]), m2)));
  if (reversed)
    for (const auto& s : perms)
      c.push_back(in(pow_text(x(s[1]) + " " + x(s[2]), m2), pow_text(x(s[0]), m2)));
  for (const auto& s : perms)
    c.push_back(in(pow_text(x(s[0]) + " " + x(s[1]), m2), pow_text(x(s[1]) + " " + x(s[2]), m2)));
  if (reversed)
    return make("5.4a" + params(m), join(c),
                "repeated bracket read as the reverse membership (x_s2 x_s3)^m2 in <x_s1^m2>", {}, {},
                "5.4" + params(m));
  return make("5.4" + params(m), join(c), "as printed, repeated bracket dropped; fails once 8 divides m");
}

FormulaEntry dihedral_5_5(unsigned m, unsigned p) {
  if (m < 2 || m % 2 || p == 2 || !is_prime(p) || m % p)
    throw std::invalid_argument("5.5 needs an even m and an odd prime divisor p");
  unsigned mp = split_prime_part(m, p).second;
  auto [pk2, m2] = split_prime_part(m, 2);
  std::string a = pow_text("x1", mp);
  std::string hi = std::to_string(pk2 - 1);
  std::string b = pow_text("x2", m2), c3 = pow_text("x3", m2);
  std::string inv = "x1^-" + std::to_string(mp);
  std::string text = "((" + a + ")^x2 = " + inv + ") | ((" + a + ")^x3 = " + inv + ") | in_cyc(" + b + ", " + c3 +
                     ", 0, " + hi + ") | in_cyc(" + c3 + ", " + b + ", 0, " + hi + ")";
  return make("5.5" + params(m, p), text, "eliminates Z_p x Z2^2");
}

FormulaEntry dihedral_5_6(unsigned m) {
  if (m < 2 || m % 2 == 0)
    throw std::invalid_argument("5.6 needs an odd m");
  std::string e = std::to_string(m);
  return make("5.6" + params(m), "(x1^" + e + " = 1) | (x2^" + e + " = 1) | ((x1 x2)^" + e + " = 1)",
              "eliminates Z2^2 for odd m");
}

const std::vector<FormulaEntry>& formula_catalog() {
  static const std::vector<FormulaEntry> catalog = build_catalog();
  return catalog;
}

std::optional<FormulaEntry> find_formula(std::string_view id) {
  if (id.substr(0, 6) == "paper:")
    id.remove_prefix(6);
  for (const auto& e : formula_catalog())
    if (e.id == id)
      return e;
  if (id.substr(0, 5) == "omega") {
    auto rest = id.substr(5);
    if (!rest.empty() && rest.size() <= 6 &&
        std::all_of(rest.begin(), rest.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
      unsigned n = static_cast<unsigned>(std::stoul(std::string(rest)));
      if (n >= 1)
        return make("omega" + std::to_string(n), "omega(" + std::to_string(n) + ")", "pigeonhole bound");
    }
    return std::nullopt;
  }
  auto br = id.find('[');
  if (br == std::string_view::npos || id.back() != ']')
    return std::nullopt;
  auto head = id.substr(0, br);
  auto body = id.substr(br + 1, id.size() - br - 2);
  try {
    if (head == "5.2" || head == "5.2'")
      return dihedral_5_2(parse_param(body, "m"));
    if (head == "5.3")
      return dihedral_5_3(parse_param(body, "m"), parse_param(body, "p"), false);
    if (head == "5.3a")
      return dihedral_5_3(parse_param(body, "m"), parse_param(body, "p"), true);
    if (head == "5.4")
      return dihedral_5_4(parse_param(body, "m"), false);
    if (head == "5.4a")
      return dihedral_5_4(parse_param(body, "m"), true);
    if (head == "5.5")
      return dihedral_5_5(parse_param(body, "m"), parse_param(body, "p"));
    if (head == "5.6")
      return dihedral_5_6(parse_param(body, "m"));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  return std::nullopt;
}

FormulaEntry formula(std::string_view id) {
  if (auto e = find_formula(id))
    return *e;
  throw std::invalid_argument("unknown formula id '" + std::string(id) + "'");
}

} // namespace dident
