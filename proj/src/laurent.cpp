#include "gradedca/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace gradedca {

LaurentPoly LaurentPoly::constant(std::size_t nvars, const mpz_class& c) {
  LaurentPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const mpz_class& c) {
  LaurentPoly p(e.size());
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw InputError("LaurentPoly::variable: index out of range");
  Exponent e(nvars, 0);
  e[i] = 1;
  return monomial(e);
}

void LaurentPoly::add_term(const Exponent& e, const mpz_class& c) {
  if (e.size() != nvars_) throw InputError("LaurentPoly: exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.nvars_ != nvars_) throw InputError("LaurentPoly: variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.nvars_ != nvars_) throw InputError("LaurentPoly: variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars_ != b.nvars_) throw InputError("LaurentPoly: variable count mismatch");
  LaurentPoly out(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return ExponentDescending{}(x.first, y.first);
        return x.second < y.second;
      });
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result = constant(nvars_, 1);
  LaurentPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Exponent LaurentPoly::min_exponents() const {
  if (terms_.empty()) return Exponent(nvars_, 0);
  Exponent m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

LaurentPoly LaurentPoly::specialize_to_one(const std::vector<bool>& drop) const {
  if (drop.size() != nvars_) throw InputError("specialize_to_one: mask length mismatch");
  const auto kept = static_cast<std::size_t>(std::count(drop.begin(), drop.end(), false));
  LaurentPoly out(kept);
  Exponent e(kept);
  for (const auto& [ex, c] : terms_) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (!drop[i]) e[j++] = ex[i];
    out.add_term(e, c);
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c << ')';
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] != 0) os << "*x" << (i + 1) << '^' << e[i];
  }
  return os.str();
}

namespace {

class TermParser {
 public:
  TermParser(std::string_view s, std::size_t nvars) : s_(s), nvars_(nvars) {}

  LaurentPoly parse() {
    LaurentPoly out(nvars_);
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '0') {
      ++pos_;
      skip_ws();
      if (pos_ == s_.size()) return out;
      fail("trailing input after 0");
    }
    for (;;) {
      skip_ws();
      expect('(');
      skip_ws();
      std::size_t start = pos_;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class coeff;
      if (coeff.set_str(std::string(s_.substr(start, pos_ - start)), 10) != 0) fail("bad coefficient");
      skip_ws();
      expect(')');
      Exponent e(nvars_, 0);
      for (;;) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != '*') break;
        ++pos_;
        skip_ws();
        expect('x');
        long idx = read_int();
        if (idx < 1 || static_cast<std::size_t>(idx) > nvars_) fail("variable index out of range");
        skip_ws();
        long power = 1;
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          power = read_int();
        }
        e[static_cast<std::size_t>(idx - 1)] += static_cast<int>(power);
      }
      out.add_term(e, coeff);
      skip_ws();
      if (pos_ == s_.size()) return out;
      expect('+');
    }
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  long read_int() {
    long v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc()) fail("expected integer");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("cannot parse Laurent polynomial '" + std::string(s_) + "': " + why +
                     " at offset " + std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, std::size_t nvars) {
  return TermParser(text, nvars).parse();
}

namespace {

LaurentPoly shifted(const LaurentPoly& p, const Exponent& by, int sign) {
  LaurentPoly out(p.nvars());
  Exponent e(p.nvars());
  for (const auto& [ex, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = ex[i] + sign * by[i];
    out.add_term(e, c);
  }
  return out;
}

}  // namespace

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars()) throw InputError("divide_exact: variable count mismatch");
  if (b.is_zero()) throw InexactDivision("division by the zero polynomial");
  if (a.is_zero()) return a;
  // Strip monomial content; the quotient of the remaining polynomials must
  // itself be a polynomial, so lex long division with a nonnegativity check
  // terminates and detects inexactness.
  const Exponent ma = a.min_exponents();
  const Exponent mb = b.min_exponents();
  LaurentPoly rem = shifted(a, ma, -1);
  const LaurentPoly divisor = shifted(b, mb, -1);
  const auto& [lead_exp, lead_coeff] = *divisor.terms().begin();
  LaurentPoly quotient(a.nvars());
  Exponent q(a.nvars());
  Exponent e(a.nvars());
  mpz_class qc;
  while (!rem.is_zero()) {
    const auto& [rexp, rcoeff] = *rem.terms().begin();
    for (std::size_t i = 0; i < q.size(); ++i) {
      q[i] = rexp[i] - lead_exp[i];
      if (q[i] < 0) throw InexactDivision("divide_exact: " + b.to_string() + " does not divide " + a.to_string());
    }
    if (!mpz_divisible_p(rcoeff.get_mpz_t(), lead_coeff.get_mpz_t()))
      throw InexactDivision("divide_exact: coefficient not divisible in " + a.to_string());
    mpz_divexact(qc.get_mpz_t(), rcoeff.get_mpz_t(), lead_coeff.get_mpz_t());
    quotient.add_term(q, qc);
    const mpz_class neg = -qc;
    for (const auto& [dexp, dcoeff] : divisor.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = dexp[i] + q[i];
      rem.add_term(e, neg * dcoeff);
    }
  }
  Exponent shift(a.nvars());
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = ma[i] - mb[i];
  return shifted(quotient, shift, 1);
}

}  // namespace gradedca
