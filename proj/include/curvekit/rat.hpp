#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace curvekit {

using Int = mpz_class;

// Exact rational number in canonical form (reduced, positive denominator).
//
// Wraps mpq_class so that arithmetic returns values rather than GMP
// expression templates; this keeps the type usable as an Eigen scalar
// and inside `auto` expressions.
class Rat {
 public:
  Rat() = default;
  Rat(int v) : v_(static_cast<long>(v)) {}
  Rat(long v) : v_(v) {}
  Rat(long long v) : v_(Int(std::to_string(v))) {}
  Rat(const Int& v) : v_(v) {}
  Rat(const Int& num, const Int& den);
  explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Accepts "p", "-p", "p/q".
  static Rat parse(std::string_view text);

  const mpq_class& get() const { return v_; }
  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat inverse() const;
  double to_double() const { return v_.get_d(); }
  std::string str() const { return v_.get_str(); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }
inline bool is_zero(const Rat& r) { return r.is_zero(); }

Rat pow(const Rat& base, unsigned exponent);

// Integer helpers.
Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
Int binomial(unsigned n, unsigned k);
Int factorial(unsigned n);
// Number of bits needed for |v|.
std::size_t bit_length(const Int& v);

}  // namespace curvekit
