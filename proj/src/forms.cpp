#include "curvekit/forms.hpp"

#include "curvekit/errors.hpp"

namespace curvekit {

VarList xyz_vars() {
  static const VarList v = make_vars({"x", "y", "z"});
  return v;
}
VarList xyzt_vars() {
  static const VarList v = make_vars({"x", "y", "z", "t"});
  return v;
}
VarList st_vars() {
  static const VarList v = make_vars({"s", "t"});
  return v;
}
VarList uvw_vars() {
  static const VarList v = make_vars({"u", "v", "w"});
  return v;
}

TernaryForm::TernaryForm(MultiPoly p) : p_(std::move(p)) {
  if (!p_.vars()) p_ = p_.with_vars(xyz_vars());
  if (p_.nvars() != 3) throw CurveError(ErrorKind::DomainError, "ternary form needs exactly 3 variables");
  if (p_.is_zero()) throw CurveError(ErrorKind::NotACurve, "zero polynomial is not a curve");
  if (!p_.is_homogeneous()) throw CurveError(ErrorKind::DomainError, "form is not homogeneous");
  degree_ = p_.total_degree();
}

TernaryForm TernaryForm::parse(const std::string& text) {
  return TernaryForm(curvekit::parse(text, xyz_vars()));
}

BinaryForm::BinaryForm(MultiPoly p, int degree) : p_(std::move(p)), degree_(degree) {
  if (!p_.vars()) p_ = p_.with_vars(st_vars());
  if (p_.nvars() != 2) throw CurveError(ErrorKind::DomainError, "binary form needs exactly 2 variables");
  if (!p_.is_homogeneous() || (!p_.is_zero() && p_.total_degree() != degree_))
    throw CurveError(ErrorKind::DomainError, "binary form is not homogeneous of the stated degree");
}

BinaryForm::BinaryForm(MultiPoly p) : BinaryForm(p, p.total_degree() < 0 ? 0 : p.total_degree()) {}

Rat BinaryForm::coeff(int i) const {
  Exponent e{};
  e[0] = static_cast<std::uint16_t>(i);
  e[1] = static_cast<std::uint16_t>(degree_ - i);
  return p_.coeff(e);
}

QPoly BinaryForm::dehomogenize() const {
  std::vector<Rat> c;
  for (int i = 0; i <= degree_; ++i) c.push_back(coeff(i));
  return QPoly(std::move(c));
}

QuaternaryForm::QuaternaryForm(MultiPoly p) : p_(std::move(p)) {
  if (!p_.vars()) p_ = p_.with_vars(xyzt_vars());
  if (p_.nvars() != 4) throw CurveError(ErrorKind::DomainError, "quaternary form needs exactly 4 variables");
  if (p_.is_zero()) throw CurveError(ErrorKind::DomainError, "zero surface");
  if (!p_.is_homogeneous()) throw CurveError(ErrorKind::DomainError, "surface equation is not homogeneous");
  degree_ = p_.total_degree();
}

QuaternaryForm QuaternaryForm::parse(const std::string& text) {
  return QuaternaryForm(curvekit::parse(text, xyzt_vars()));
}

ProjPoint::ProjPoint(const Rat& x, const Rat& y, const Rat& z) {
  const std::array<Rat, 3> in{x, y, z};
  Int l = 1;
  for (const auto& v : in) l = lcm(l, v.den());
  Int g = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    c_[i] = in[i].num() * (l / in[i].den());
    g = gcd(g, c_[i]);
  }
  if (g == 0) throw CurveError(ErrorKind::DomainError, "projective point with all coordinates zero");
  for (auto& v : c_) v /= g;
  for (const auto& v : c_) {
    if (v == 0) continue;
    if (v < 0)
      for (auto& w : c_) w = -w;
    break;
  }
}

std::string ProjPoint::str() const {
  return "(" + c_[0].get_str() + ":" + c_[1].get_str() + ":" + c_[2].get_str() + ")";
}

MultiPoly linear_substitute(const MultiPoly& f, const RatMatrix& m) {
  std::vector<MultiPoly> images;
  for (int i = 0; i < m.rows(); ++i) {
    MultiPoly l(f.vars());
    for (int j = 0; j < m.cols(); ++j) l += MultiPoly::variable(f.vars(), j) * m(i, j);
    images.push_back(l);
  }
  MultiPoly r = f.substitute(images);
  return r.vars() ? r : r.with_vars(f.vars());
}

RatMatrix3 identity3() {
  RatMatrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = Rat(i == j ? 1 : 0);
  return m;
}

BiPoly to_bipoly(const MultiPoly& f) {
  std::vector<std::vector<Rat>> grid(std::max(f.degree_in(1) + 1, 0));
  for (const auto& [e, c] : f.terms()) {
    auto& row = grid[e[1]];
    if (row.size() <= e[0]) row.resize(e[0] + 1, Rat(0));
    row[e[0]] += c;
  }
  std::vector<QPoly> coeffs;
  for (auto& row : grid) coeffs.emplace_back(std::move(row));
  return BiPoly(std::move(coeffs));
}

MultiPoly from_bipoly(const BiPoly& b, int degree, const VarList& vars) {
  MultiPoly r(vars);
  for (int j = 0; j <= b.degree(); ++j) {
    const QPoly& c = b.coeffs()[j];
    for (int i = 0; i <= c.degree(); ++i) {
      if (c.coeffs()[i].is_zero()) continue;
      Exponent e{};
      e[0] = static_cast<std::uint16_t>(i);
      e[1] = static_cast<std::uint16_t>(j);
      e[2] = static_cast<std::uint16_t>(degree - i - j);
      r.add_term(e, c.coeffs()[i]);
    }
  }
  return r;
}

TernaryForm normalized(const TernaryForm& f) { return TernaryForm(primitive_integer(f.poly())); }

}  // namespace curvekit
