#pragma once

#include <array>
#include <string>
#include <vector>

#include "curvekit/linalg.hpp"
#include "curvekit/multipoly.hpp"
#include "curvekit/upoly.hpp"

namespace curvekit {

VarList xyz_vars();
VarList xyzt_vars();
VarList st_vars();
VarList uvw_vars();

// Nonzero homogeneous polynomial in exactly three variables.
class TernaryForm {
 public:
  explicit TernaryForm(MultiPoly p);
  static TernaryForm parse(const std::string& text);

  const MultiPoly& poly() const { return p_; }
  int degree() const { return degree_; }
  std::string str() const { return p_.str(); }
  MultiPoly partial(std::size_t v) const { return p_.partial(v); }
  Rat eval(const std::array<Rat, 3>& pt) const { return p_.eval({pt[0], pt[1], pt[2]}); }
  friend bool operator==(const TernaryForm& a, const TernaryForm& b) { return a.p_ == b.p_; }

 private:
  MultiPoly p_;
  int degree_;
};

// Homogeneous polynomial in two variables; zero allowed.
class BinaryForm {
 public:
  BinaryForm(MultiPoly p, int degree);
  explicit BinaryForm(MultiPoly p);

  const MultiPoly& poly() const { return p_; }
  int degree() const { return degree_; }
  std::string str() const { return p_.str(); }
  // Coefficient of s^i t^(d-i).
  Rat coeff(int i) const;
  // Dehomogenized at t = 1: polynomial in s.
  QPoly dehomogenize() const;

 private:
  MultiPoly p_;
  int degree_;
};

class QuaternaryForm {
 public:
  explicit QuaternaryForm(MultiPoly p);
  static QuaternaryForm parse(const std::string& text);

  const MultiPoly& poly() const { return p_; }
  int degree() const { return degree_; }
  std::string str() const { return p_.str(); }

 private:
  MultiPoly p_;
  int degree_;
};

// Point of the projective plane: primitive integer triple whose first nonzero
// entry is positive.
class ProjPoint {
 public:
  ProjPoint(const Rat& x, const Rat& y, const Rat& z);
  explicit ProjPoint(const std::array<Rat, 3>& c) : ProjPoint(c[0], c[1], c[2]) {}

  const std::array<Int, 3>& coords() const { return c_; }
  std::array<Rat, 3> rat() const { return {Rat(c_[0]), Rat(c_[1]), Rat(c_[2])}; }
  std::string str() const;
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.c_ < b.c_; }

 private:
  std::array<Int, 3> c_;
};

// f(M X): variable i becomes sum_j M(i,j) X_j.
MultiPoly linear_substitute(const MultiPoly& f, const RatMatrix& m);
RatMatrix3 identity3();

// Dehomogenize a ternary form at z = 1 and view it in Q[x][y].
BiPoly to_bipoly(const MultiPoly& f);
// Inverse of to_bipoly for a form of the given degree.
MultiPoly from_bipoly(const BiPoly& b, int degree, const VarList& vars);

// Primitive integer representative with positive leading coefficient.
TernaryForm normalized(const TernaryForm& f);

}  // namespace curvekit
