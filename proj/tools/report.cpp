#include "report.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "curvekit/errors.hpp"
#include "curvekit/numeric.hpp"

namespace curvekit::cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

Rat coord_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  throw UsageError("point coordinates must be integers or rational strings");
}

ProjPoint point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw UsageError("a point needs three coordinates");
  return ProjPoint(coord_from_json(j[0]), coord_from_json(j[1]), coord_from_json(j[2]));
}

void print_scalar(const Json& j, std::ostream& out) {
  if (j.is_string())
    out << j.get<std::string>();
  else if (j.is_null())
    out << "none";
  else
    out << j.dump();
}

bool all_scalars(const Json& j) {
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

void print_rec(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) print_rec(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !all_scalars(j)) {
    if (j.empty()) out << prefix << ": []\n";
    for (std::size_t i = 0; i < j.size(); ++i) print_rec(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else if (j.is_array()) {
    out << prefix << ": [";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out << ", ";
      print_scalar(j[i], out);
    }
    out << "]\n";
  } else {
    out << prefix << ": ";
    print_scalar(j, out);
    out << '\n';
  }
}

}  // namespace

CurveFile read_curve_file(const std::filesystem::path& path, std::size_t nvars) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path.string());
  CurveFile file;
  file.vars = nvars == 4 ? std::vector<std::string>{"x", "y", "z", "t"} : std::vector<std::string>{"x", "y", "z"};
  bool have_curve = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string s = trim(line);
    if (s.empty()) continue;
    if (s[0] == '#') {
      file.comments.push_back(trim(s.substr(1)));
    } else if (starts_with(s, "curve:")) {
      if (have_curve) throw CurveError(ErrorKind::SyntaxError, path.string() + ": more than one curve line");
      file.curve = trim(s.substr(6));
      have_curve = true;
    } else if (starts_with(s, "vars:")) {
      std::string list = s.substr(5);
      for (char& c : list)
        if (c == ',') c = ' ';
      std::istringstream words(list);
      file.vars.clear();
      for (std::string w; words >> w;) file.vars.push_back(w);
    } else {
      throw CurveError(ErrorKind::SyntaxError, path.string() + ":" + std::to_string(lineno) + ": unrecognized line");
    }
  }
  if (!have_curve) throw CurveError(ErrorKind::SyntaxError, path.string() + ": no curve line");
  if (file.vars.size() != nvars)
    throw CurveError(ErrorKind::DomainError,
                     path.string() + ": expected " + std::to_string(nvars) + " variables");
  return file;
}

MultiPoly curve_polynomial(const CurveFile& file) {
  MultiPoly p = parse(file.curve, file.vars);
  const std::size_t last = file.vars.size() - 1;
  if (!p.is_homogeneous()) {
    if (p.degree_in(last) > 0)
      throw CurveError(ErrorKind::DomainError, "equation is neither homogeneous nor affine in the first variables");
    const int d = p.total_degree();
    MultiPoly h(p.vars());
    for (const auto& [e, c] : p.terms()) {
      Exponent f = e;
      f[last] = static_cast<std::uint16_t>(d - total_degree(e));
      h.add_term(f, c);
    }
    p = h;
  }
  return p.with_vars(file.vars.size() == 4 ? xyzt_vars() : xyz_vars());
}

TernaryForm load_curve(const std::filesystem::path& path) {
  return TernaryForm(curve_polynomial(read_curve_file(path, 3)));
}

QuaternaryForm load_surface(const std::filesystem::path& path) {
  return QuaternaryForm(curve_polynomial(read_curve_file(path, 4)));
}

std::vector<Rat> parse_coords(const std::string& text, std::size_t n) {
  std::vector<Rat> out;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, ':')) {
    try {
      out.push_back(Rat::parse(trim(part)));
    } catch (const CurveError&) {
      throw UsageError("bad coordinate '" + part + "'");
    }
  }
  if (out.size() != n) throw UsageError("expected " + std::to_string(n) + " coordinates in '" + text + "'");
  return out;
}

std::vector<LinearCondition> load_conditions(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path.string() + ": " + e.what());
  }
  if (!j.is_array()) throw UsageError(path.string() + ": expected an array of points");
  std::vector<LinearCondition> out;
  for (const auto& item : j) {
    if (item.is_object()) {
      if (!item.contains("point")) throw UsageError("point entry without \"point\"");
      const int m = item.value("multiplicity", 1);
      if (m < 1) throw UsageError("multiplicity must be positive");
      out.emplace_back(point_from_json(item["point"]), m);
    } else {
      out.emplace_back(point_from_json(item), 1);
    }
  }
  return out;
}

int digits_for(unsigned bits) { return std::max(6, static_cast<int>(std::floor(bits * 0.30103))); }

Json to_json(const ProjPoint& p) {
  const auto& c = p.coords();
  return Json::array({c[0].get_str(), c[1].get_str(), c[2].get_str()});
}

Json to_json(const NumericPoint& p, unsigned bits) {
  Json coords = Json::array();
  for (const auto& z : p.coords) coords.push_back(format_complex(z, digits_for(bits)));
  return Json{{"coords", coords}, {"error", format_real(p.error, 3)}};
}

Json to_json(const PointBlock& b, unsigned bits) {
  Json j;
  j["degree"] = b.degree();
  if (b.is_rational()) {
    j["point"] = to_json(b.point());
    return j;
  }
  j["minpoly"] = to_string(b.minpoly, "t");
  j["coords"] = Json::array({to_string(b.coords[0], "t"), to_string(b.coords[1], "t"), to_string(b.coords[2], "t")});
  Json nums = Json::array();
  for (const auto& p : numeric_points(b, bits)) nums.push_back(to_json(p, bits));
  j["numeric"] = nums;
  return j;
}

Json to_json(const RootSet& r, unsigned bits) {
  Json j;
  Json rat = Json::array();
  for (const auto& [v, m] : r.rational) rat.push_back(Json{{"value", v.str()}, {"multiplicity", m}});
  j["rational"] = rat;
  Json num = Json::array();
  for (const auto& l : r.numeric)
    num.push_back(Json{{"value", format_complex(l.z, digits_for(bits))},
                       {"error", format_real(l.error, 3)},
                       {"multiplicity", l.multiplicity}});
  j["numeric"] = num;
  j["infinity_multiplicity"] = r.infinity_multiplicity;
  j["total"] = r.total() + r.infinity_multiplicity;
  return j;
}

Json to_json(const SingularPoint& s, unsigned bits) {
  Json j = to_json(s.block, bits);
  j["multiplicity"] = s.multiplicity;
  j["kind"] = to_string(s.kind);
  j["distinct_tangents"] = s.distinct_tangents;
  j["profile"] = s.profile;
  if (s.tangent_cone) j["tangent_cone"] = s.tangent_cone->str();
  return j;
}

void print_text(const Json& j, std::ostream& out) { print_rec(j, "", out); }

}  // namespace curvekit::cli
