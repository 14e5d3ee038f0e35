#pragma once
#include <filesystem>
#include <string>
#include <vector>

#include "cli.hpp"
#include "curvekit/algebra.hpp"
#include "curvekit/elim.hpp"
#include "curvekit/forms.hpp"
#include "curvekit/linsys.hpp"
#include "curvekit/local.hpp"

namespace curvekit::cli {

// Thrown for problems with the command line or input files (exit code 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CurveFile {
  std::vector<std::string> comments;
  std::vector<std::string> vars;
  std::string curve;
};

CurveFile read_curve_file(const std::filesystem::path& path, std::size_t nvars);
// Homogenized polynomial in the canonical variables (x,y,z or x,y,z,t).
MultiPoly curve_polynomial(const CurveFile& file);
TernaryForm load_curve(const std::filesystem::path& path);
QuaternaryForm load_surface(const std::filesystem::path& path);

// "a:b:c" with integer or rational entries.
std::vector<Rat> parse_coords(const std::string& text, std::size_t n);
std::vector<LinearCondition> load_conditions(const std::filesystem::path& path);

int digits_for(unsigned bits);
Json to_json(const ProjPoint& p);
Json to_json(const NumericPoint& p, unsigned bits);
Json to_json(const PointBlock& b, unsigned bits);
Json to_json(const RootSet& r, unsigned bits);
Json to_json(const SingularPoint& s, unsigned bits);

// Flattened "key: value" lines.
void print_text(const Json& j, std::ostream& out);

}  // namespace curvekit::cli
