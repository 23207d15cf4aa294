#include "sympow/poly.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace sympow {

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    int s = e[i] + o.e[i];
    if (s > 255) throw std::overflow_error("monomial exponent overflow");
    r.e[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    assert(e[i] >= o.e[i]);
    r.e[i] = static_cast<std::uint8_t>(e[i] - o.e[i]);
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

Monomial Monomial::var(int i, int power) {
  Monomial m;
  m.e[i] = static_cast<std::uint8_t>(power);
  return m;
}

namespace {

int grevlex_compare(const Monomial& a, const Monomial& b, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

int lex_compare(const Monomial& a, const Monomial& b, int lo, int hi) {
  for (int i = lo; i < hi; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b, int nvars) const {
  switch (kind) {
    case Grevlex:
      return grevlex_compare(a, b, 0, nvars);
    case Lex:
      return lex_compare(a, b, 0, nvars);
    case Block: {
      int c = grevlex_compare(a, b, 0, eliminated);
      if (c != 0) return c;
      return grevlex_compare(a, b, eliminated, nvars);
    }
  }
  return 0;
}

std::shared_ptr<const Ring> Ring::make(int nvars, const Field& f,
                                       MonomialOrder ord) {
  if (nvars < 1 || nvars > kMaxVars)
    throw std::invalid_argument("variable count out of range");
  return std::make_shared<const Ring>(Ring{nvars, f, ord});
}

const char* Ring::var_name(int i) const {
  static const char* base[] = {"x", "y", "z"};
  static const char* aux[] = {"t", "u"};
  int naux = nvars > 3 ? nvars - 3 : 0;
  if (i < naux) return aux[i];
  return base[i - naux];
}

int Ring::var_index(const std::string& name) const {
  for (int i = 0; i < nvars; ++i)
    if (name == var_name(i)) return i;
  return -1;
}

Poly::Poly(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalize();
}

void Poly::normalize() {
  const Ring& r = *ring_;
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return r.order.compare(a.mono, b.mono, r.nvars) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  }
  terms_ = std::move(out);
}

Poly Poly::constant(RingPtr ring, const Scalar& c) {
  if (c.is_zero()) return Poly(std::move(ring));
  return Poly(std::move(ring), {Term{Monomial{}, c}});
}

Poly Poly::monomial(RingPtr ring, const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return Poly(std::move(ring));
  return Poly(std::move(ring), {Term{m, c}});
}

Poly Poly::variable(RingPtr ring, int i) {
  Scalar one = ring->field.one();
  return monomial(std::move(ring), Monomial::var(i), one);
}

int Poly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return false;
  return true;
}

Poly Poly::operator+(const Poly& o) const {
  if (!(*ring_ == *o.ring_)) throw std::invalid_argument("ring mismatch");
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  const Ring& r = *ring_;
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = r.order.compare(terms_[i].mono, o.terms_[j].mono, r.nvars);
    if (c > 0) {
      merged.push_back(terms_[i++]);
    } else if (c < 0) {
      merged.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) merged.push_back(Term{terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) merged.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) merged.push_back(o.terms_[j]);
  Poly out(ring_);
  out.terms_ = std::move(merged);
  return out;
}

Poly Poly::operator-() const {
  Poly out(ring_);
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::times_monomial(const Monomial& m, const Scalar& c) const {
  Poly out(ring_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    out.terms_.push_back(Term{t.mono * m, t.coeff * c});
  // multiplying by a monomial preserves the term order
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  if (!(*ring_ == *o.ring_)) throw std::invalid_argument("ring mismatch");
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_)
      prod.push_back(Term{a.mono * b.mono, a.coeff * b.coeff});
  return Poly(ring_, std::move(prod));
}

Poly Poly::scaled(const Scalar& c) const {
  return times_monomial(Monomial{}, c);
}

Poly Poly::pow(unsigned e) const {
  Poly result = Poly::constant(ring_, ring_->field.one());
  Poly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().coeff.inv());
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) ||
        terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

std::optional<Poly> Poly::divided_by(const Poly& g) const {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  Poly rem = *this;
  Poly quot(ring_);
  while (!rem.is_zero()) {
    if (!g.leading().mono.divides(rem.leading().mono)) return std::nullopt;
    Monomial m = rem.leading().mono / g.leading().mono;
    Scalar c = rem.leading().coeff / g.leading().coeff;
    quot = quot + Poly::monomial(ring_, m, c);
    rem = rem - g.times_monomial(m, c);
  }
  return quot;
}

Poly Poly::in_ring(RingPtr target) const {
  if (target->nvars < ring_->nvars)
    throw std::invalid_argument("target ring has fewer variables");
  Poly out(target);
  out.terms_ = terms_;
  out.normalize();
  return out;
}

Scalar Poly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return ring_->field.zero();
}

Scalar Poly::eval(const std::vector<Scalar>& point) const {
  const Field& f = ring_->field;
  Scalar acc = f.zero();
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (int i = 0; i < ring_->nvars; ++i)
      for (int k = 0; k < t.mono.e[i]; ++k) v *= point[i];
    acc += v;
  }
  return acc;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.coeff.str();
    bool neg = !c.empty() && c[0] == '-';
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (neg) c = c.substr(1);
    bool has_vars = t.mono.degree() > 0;
    bool unit = (c == "1");
    if (!unit || !has_vars) os << c;
    bool star = !unit && has_vars;
    for (int i = 0; i < ring_->nvars; ++i) {
      if (t.mono.e[i] == 0) continue;
      if (star) os << "*";
      os << ring_->var_name(i);
      if (t.mono.e[i] > 1) os << "^" << int(t.mono.e[i]);
      star = true;
    }
    first = false;
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(const std::string& s, RingPtr ring) : s_(s), ring_(std::move(ring)) {}

  Poly run() {
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at position " +
                                std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) ||
           std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  Poly expr() {
    bool neg = false;
    char c = peek();
    if (c == '+' || c == '-') {
      neg = c == '-';
      ++pos_;
    }
    Poly acc = term();
    if (neg) acc = -acc;
    while (true) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Poly t = term();
      acc = c == '+' ? acc + t : acc - t;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor(c)) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly factor() {
    Poly base = atom();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        fail("expected integer exponent after '^'");
      unsigned e = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        e = e * 10 + (s_[pos_++] - '0');
      base = base.pow(e);
    }
    return base;
  }

  Poly atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             std::isalpha(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      int idx = ring_->var_index(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Poly::variable(ring_, idx);
    }
    fail("expected number, variable or '('");
  }

  Poly number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    std::string num = s_.substr(start, pos_ - start);
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        std::size_t dstart = pos_;
        while (pos_ < s_.size() &&
               std::isdigit(static_cast<unsigned char>(s_[pos_])))
          ++pos_;
        num += "/" + s_.substr(dstart, pos_ - dstart);
      } else {
        pos_ = save;
      }
    }
    return Poly::constant(ring_, ring_->field.from_string(num));
  }

  const std::string& s_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, RingPtr ring) {
  return Parser(text, std::move(ring)).run();
}

Poly hasse_derivative(const Poly& f, const Monomial& a) {
  const Field& field = f.ring()->field;
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (!a.divides(t.mono)) continue;
    Scalar c = t.coeff;
    for (int i = 0; i < kMaxVars; ++i)
      if (a.e[i] > 0) c *= field.binomial(t.mono.e[i], a.e[i]);
    if (!c.is_zero()) out.push_back(Term{t.mono / a, std::move(c)});
  }
  return Poly(f.ring(), std::move(out));
}

std::vector<Monomial> monomials_of_degree(const Ring& ring, int t) {
  std::vector<Monomial> out;
  Monomial m;
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == ring.nvars - 1) {
      m.e[var] = static_cast<std::uint8_t>(remaining);
      out.push_back(m);
      m.e[var] = 0;
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      m.e[var] = static_cast<std::uint8_t>(k);
      rec(var + 1, remaining - k);
    }
    m.e[var] = 0;
  };
  if (t >= 0) rec(0, t);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return ring.order.compare(a, b, ring.nvars) > 0;
  });
  return out;
}

std::vector<Scalar> coordinates(const Poly& f,
                                const std::vector<Monomial>& basis) {
  const Field& field = f.ring()->field;
  std::vector<Scalar> out(basis.size(), field.zero());
  for (const auto& t : f.terms()) {
    auto it = std::find(basis.begin(), basis.end(), t.mono);
    if (it == basis.end())
      throw std::invalid_argument("monomial outside coordinate basis");
    out[it - basis.begin()] = t.coeff;
  }
  return out;
}

Poly from_coordinates(RingPtr ring, const std::vector<Monomial>& basis,
                      const std::vector<Scalar>& coords) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!coords[i].is_zero()) terms.push_back(Term{basis[i], coords[i]});
  return Poly(std::move(ring), std::move(terms));
}

}  // namespace sympow
