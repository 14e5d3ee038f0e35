#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace curvekit {

enum class ErrorKind {
  SyntaxError,
  UnknownVariable,
  DomainError,
  DegreeZero,
  NotACurve,
  NotSquarefree,
  AllMembersSingular,
  PrecisionUnreachable,
  NonRationalUnsupportedDetail,
  SingularPoint,
  CommonComponent,
  ShearExhausted,
  ZeroPolar,
  UnsupportedSingularity,
  Underdetermined,
  Inconsistent,
  EliminationDegenerate,
  NotSmoothCubic,
  EdgeComponent,
  TriangleDegenerate,
  CollapsedImage,
  IterationCap,
  NonRationalCenter,
  DependentConditions,
  HypothesisFailed,
  NoSolution,
  DiagonalContained,
  ProportionalForms,
  Reducible,
  AllMembersContainCurve,
  NoCanonical,
  GroupOffCurve,
  InconsistentLinkage,
  CenterDegenerate,
  DegenerateParametrization,
  OutOfRegime,
  UnsupportedDegree,
  PreconditionViolated,
};

std::string_view to_string(ErrorKind kind);

// Domain error raised by library operations. The kind is part of the CLI
// report contract, so it stays stable across releases.
class CurveError : public std::runtime_error {
 public:
  CurveError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace curvekit
