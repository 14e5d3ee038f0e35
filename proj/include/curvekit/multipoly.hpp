#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curvekit/rat.hpp"

namespace curvekit {

inline constexpr std::size_t kMaxVars = 10;
using Exponent = std::array<std::uint16_t, kMaxVars>;

int total_degree(const Exponent& e);

// Graded lexicographic order: total degree first, then the earlier declared
// variable dominates.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

using VarList = std::shared_ptr<const std::vector<std::string>>;
VarList make_vars(std::vector<std::string> names);
bool same_vars(const VarList& a, const VarList& b);

// Sparse polynomial with rational coefficients. A polynomial built from a
// bare constant carries no variable list and adopts the ring of whatever it
// is combined with.
class MultiPoly {
 public:
  using Terms = std::map<Exponent, Rat, GrlexLess>;

  MultiPoly() = default;
  MultiPoly(const Rat& c);  // NOLINT: constants embed implicitly
  MultiPoly(int c) : MultiPoly(Rat(c)) {}  // NOLINT
  explicit MultiPoly(VarList vars) : vars_(std::move(vars)) {}
  MultiPoly(VarList vars, const Rat& c);

  static MultiPoly variable(const VarList& vars, std::size_t i);
  static MultiPoly monomial(const VarList& vars, const Exponent& e, const Rat& c);

  const VarList& vars() const { return vars_; }
  std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
  std::size_t var_index(std::string_view name) const;
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_term() const;
  int total_degree() const;
  int degree_in(std::size_t v) const;
  bool is_homogeneous() const;
  Rat coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const Rat& c);

  const Exponent& leading_exponent() const { return terms_.rbegin()->first; }
  const Rat& leading_coeff() const { return terms_.rbegin()->second; }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rat& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rat& s) { return a *= s; }
  friend MultiPoly operator*(const Rat& s, MultiPoly a) { return a *= s; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly partial(std::size_t v) const;
  // Coefficient of v^k, as a polynomial free of v (same ring).
  MultiPoly coefficient_of(std::size_t v, int k) const;
  Rat eval(const std::vector<Rat>& point) const;
  // Replaces variable i by images[i]; images live in a common target ring.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  // Same terms, reinterpreted over a ring with the same number of variables.
  MultiPoly with_vars(const VarList& vars) const;

  std::string str() const;

 private:
  void adopt(const MultiPoly& o);

  VarList vars_;
  Terms terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
MultiPoly pow(const MultiPoly& p, unsigned e);

// Exact division; throws std::logic_error when b does not divide a.
MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);
std::optional<MultiPoly> try_divide(const MultiPoly& a, const MultiPoly& b);
inline MultiPoly ring_exact_div(const MultiPoly& a, const MultiPoly& b) { return exact_div(a, b); }

// Infix grammar over + - * ^, integer and p/q literals, and declared names.
MultiPoly parse(std::string_view text, const VarList& vars);
MultiPoly parse(std::string_view text, const std::vector<std::string>& vars);

// Appends variable z and multiplies each term by the power of z that makes it
// of full total degree.
MultiPoly homogenize(const MultiPoly& p, const std::string& z);
// Sets variable v to one.
MultiPoly dehomogenize(const MultiPoly& p, std::size_t v);
// x f_x + y f_y + ... - deg(f) f; identically zero for forms.
MultiPoly euler_combination(const MultiPoly& f);

// Multiplies by the positive rational making all coefficients coprime
// integers with positive leading coefficient.
MultiPoly primitive_integer(const MultiPoly& p);
// All exponent vectors of the given total degree in the given number
// of variables, in descending graded-lex order.
std::vector<Exponent> monomials_of_degree(std::size_t nvars, int degree);

}  // namespace curvekit
