#include "curvekit/multipoly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "curvekit/errors.hpp"

namespace curvekit {

int total_degree(const Exponent& e) {
  int d = 0;
  for (auto v : e) d += v;
  return d;
}

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

VarList make_vars(std::vector<std::string> names) {
  if (names.size() > kMaxVars) throw CurveError(ErrorKind::DomainError, "too many variables");
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool same_vars(const VarList& a, const VarList& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

MultiPoly::MultiPoly(const Rat& c) {
  if (!c.is_zero()) terms_.emplace(Exponent{}, c);
}

MultiPoly::MultiPoly(VarList vars, const Rat& c) : vars_(std::move(vars)) {
  if (!c.is_zero()) terms_.emplace(Exponent{}, c);
}

MultiPoly MultiPoly::variable(const VarList& vars, std::size_t i) {
  Exponent e{};
  e[i] = 1;
  return monomial(vars, e, Rat(1));
}

MultiPoly MultiPoly::monomial(const VarList& vars, const Exponent& e, const Rat& c) {
  MultiPoly p(vars);
  if (!c.is_zero()) p.terms_.emplace(e, c);
  return p;
}

std::size_t MultiPoly::var_index(std::string_view name) const {
  if (vars_) {
    for (std::size_t i = 0; i < vars_->size(); ++i)
      if ((*vars_)[i] == name) return i;
  }
  throw CurveError(ErrorKind::UnknownVariable, "unknown variable '" + std::string(name) + "'");
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && curvekit::total_degree(terms_.begin()->first) == 0);
}

Rat MultiPoly::constant_term() const { return coeff(Exponent{}); }

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return curvekit::total_degree(terms_.rbegin()->first);
}

int MultiPoly::degree_in(std::size_t v) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[v]));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = total_degree();
  for (const auto& [e, c] : terms_)
    if (curvekit::total_degree(e) != d) return false;
  return true;
}

Rat MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::adopt(const MultiPoly& o) {
  if (!o.vars_) return;
  if (!vars_) {
    vars_ = o.vars_;
    return;
  }
  if (!same_vars(vars_, o.vars_)) throw std::logic_error("MultiPoly: mismatched variable lists");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  adopt(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  adopt(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r(a.vars_);
  r.adopt(b);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e;
      for (std::size_t i = 0; i < kMaxVars; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rat& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (!a.terms_.empty() && a.vars_ && b.vars_ && !same_vars(a.vars_, b.vars_)) return false;
  return a.terms_ == b.terms_;
}

MultiPoly MultiPoly::partial(std::size_t v) const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponent f = e;
    --f[v];
    r.add_term(f, c * Rat(static_cast<long>(e[v])));
  }
  return r;
}

MultiPoly MultiPoly::coefficient_of(std::size_t v, int k) const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[v] != k) continue;
    Exponent f = e;
    f[v] = 0;
    r.add_term(f, c);
  }
  return r;
}

Rat MultiPoly::eval(const std::vector<Rat>& point) const {
  std::vector<std::vector<Rat>> powers(point.size());
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Rat(1));
      while (pw.size() <= e[i]) pw.push_back(pw.back() * point[i]);
      t *= pw[e[i]];
    }
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  VarList target;
  for (const auto& im : images)
    if (im.vars()) target = im.vars();
  MultiPoly r(target);
  std::vector<std::vector<MultiPoly>> powers(images.size());
  for (const auto& [e, c] : terms_) {
    MultiPoly t(target, c);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.emplace_back(target, Rat(1));
      while (pw.size() <= e[i]) pw.push_back(pw.back() * images[i]);
      t = t * pw[e[i]];
    }
    r += t;
  }
  return r;
}

MultiPoly MultiPoly::with_vars(const VarList& vars) const {
  MultiPoly r(vars);
  r.terms_ = terms_;
  return r;
}

namespace {

std::string monomial_str(const Exponent& e, const VarList& vars) {
  std::string s;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars ? (*vars)[i] : ("v" + std::to_string(i));
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const Rat a = abs(c);
    if (first)
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    first = false;
    const std::string m = monomial_str(e, vars_);
    if (m.empty())
      out += a.str();
    else if (a.is_one())
      out += m;
    else
      out += a.str() + "*" + m;
  }
  return out;
}

MultiPoly pow(const MultiPoly& p, unsigned e) {
  MultiPoly r(p.vars(), Rat(1));
  MultiPoly b = p;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

std::optional<MultiPoly> try_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw CurveError(ErrorKind::DomainError, "division by zero polynomial");
  MultiPoly q(a.vars() ? a.vars() : b.vars());
  MultiPoly r = a;
  const Exponent& lb = b.leading_exponent();
  const Rat inv = b.leading_coeff().inverse();
  while (!r.is_zero()) {
    const Exponent& lr = r.leading_exponent();
    Exponent d;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (lr[i] < lb[i]) return std::nullopt;
      d[i] = static_cast<std::uint16_t>(lr[i] - lb[i]);
    }
    const MultiPoly t = MultiPoly::monomial(q.vars(), d, r.leading_coeff() * inv);
    q += t;
    r -= t * b;
  }
  return q;
}

MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw std::logic_error("exact_div: polynomial not divisible");
  return *q;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarList& vars) : s_(text), vars_(vars) {}

  MultiPoly run() {
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p.vars() ? p : p.with_vars(vars_);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw CurveError(ErrorKind::SyntaxError, "at position " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    while (peek('*')) {
      ++pos_;
      acc = acc * unary();
    }
    return acc;
  }

  MultiPoly unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      const std::size_t start = pos_;
      Int e = integer();
      if (e > 1000) {
        pos_ = start;
        fail("exponent too large");
      }
      return pow(base, static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Int integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Int(std::string(s_.substr(start, pos_ - start)), 10);
  }

  MultiPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = integer();
      Int den = 1;
      if (peek('/')) {
        ++pos_;
        skip();
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      return MultiPoly(vars_, Rat(num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_->size(); ++i)
        if ((*vars_)[i] == name) return MultiPoly::variable(vars_, i);
      throw CurveError(ErrorKind::UnknownVariable,
                       "at position " + std::to_string(start) + ": unknown variable '" + name + "'");
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  VarList vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse(std::string_view text, const VarList& vars) { return Parser(text, vars).run(); }

MultiPoly parse(std::string_view text, const std::vector<std::string>& vars) {
  return parse(text, make_vars(vars));
}

MultiPoly homogenize(const MultiPoly& p, const std::string& z) {
  std::vector<std::string> names = p.vars() ? *p.vars() : std::vector<std::string>{};
  names.push_back(z);
  const std::size_t zi = names.size() - 1;
  const VarList vars = make_vars(names);
  const int d = p.total_degree();
  MultiPoly r(vars);
  for (const auto& [e, c] : p.terms()) {
    Exponent f = e;
    f[zi] = static_cast<std::uint16_t>(d - curvekit::total_degree(e));
    r.add_term(f, c);
  }
  return r;
}

MultiPoly dehomogenize(const MultiPoly& p, std::size_t v) {
  MultiPoly r(p.vars());
  for (const auto& [e, c] : p.terms()) {
    Exponent f = e;
    f[v] = 0;
    r.add_term(f, c);
  }
  return r;
}

MultiPoly euler_combination(const MultiPoly& f) {
  MultiPoly r(f.vars());
  for (std::size_t i = 0; i < f.nvars(); ++i) r += MultiPoly::variable(f.vars(), i) * f.partial(i);
  r -= Rat(f.total_degree() < 0 ? 0 : f.total_degree()) * f;
  return r;
}

MultiPoly primitive_integer(const MultiPoly& p) {
  if (p.is_zero()) return p;
  Int l = 1;
  for (const auto& [e, c] : p.terms()) l = lcm(l, c.den());
  Int g = 0;
  for (const auto& [e, c] : p.terms()) g = gcd(g, c.num() * (l / c.den()));
  Rat scale(l, g);
  if (p.leading_coeff().sign() < 0) scale = -scale;
  return p * scale;
}

std::vector<Exponent> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Exponent> out;
  if (degree < 0 || nvars == 0) return out;
  Exponent e{};
  // Descending grlex: first variable takes as much as possible.
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == nvars) {
      e[i] = static_cast<std::uint16_t>(left);
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = static_cast<std::uint16_t>(k);
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

}  // namespace curvekit
