#include "curvekit/errors.hpp"

namespace curvekit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::DegreeZero: return "DegreeZero";
    case ErrorKind::NotACurve: return "NotACurve";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::AllMembersSingular: return "AllMembersSingular";
    case ErrorKind::PrecisionUnreachable: return "PrecisionUnreachable";
    case ErrorKind::NonRationalUnsupportedDetail: return "NonRationalUnsupportedDetail";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::CommonComponent: return "CommonComponent";
    case ErrorKind::ShearExhausted: return "ShearExhausted";
    case ErrorKind::ZeroPolar: return "ZeroPolar";
    case ErrorKind::UnsupportedSingularity: return "UnsupportedSingularity";
    case ErrorKind::Underdetermined: return "Underdetermined";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::EliminationDegenerate: return "EliminationDegenerate";
    case ErrorKind::NotSmoothCubic: return "NotSmoothCubic";
    case ErrorKind::EdgeComponent: return "EdgeComponent";
    case ErrorKind::TriangleDegenerate: return "TriangleDegenerate";
    case ErrorKind::CollapsedImage: return "CollapsedImage";
    case ErrorKind::IterationCap: return "IterationCap";
    case ErrorKind::NonRationalCenter: return "NonRationalCenter";
    case ErrorKind::DependentConditions: return "DependentConditions";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::DiagonalContained: return "DiagonalContained";
    case ErrorKind::ProportionalForms: return "ProportionalForms";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::AllMembersContainCurve: return "AllMembersContainCurve";
    case ErrorKind::NoCanonical: return "NoCanonical";
    case ErrorKind::GroupOffCurve: return "GroupOffCurve";
    case ErrorKind::InconsistentLinkage: return "InconsistentLinkage";
    case ErrorKind::CenterDegenerate: return "CenterDegenerate";
    case ErrorKind::DegenerateParametrization: return "DegenerateParametrization";
    case ErrorKind::OutOfRegime: return "OutOfRegime";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
  }
  return "Unknown";
}

}  // namespace curvekit
