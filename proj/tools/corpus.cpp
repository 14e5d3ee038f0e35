#include <fstream>
#include <functional>

#include "cli.hpp"
#include "curvekit/cremona.hpp"
#include "curvekit/errors.hpp"
#include "curvekit/plucker.hpp"
#include "curvekit/random.hpp"
#include "curvekit/series.hpp"
#include "curvekit/space.hpp"
#include "report.hpp"

namespace curvekit::cli {
namespace {

class Checker {
 public:
  explicit Checker(Json& checks) : checks_(checks) {}

  void set_item(std::string item) { item_ = std::move(item); }

  // A check whose body throws a domain error fails with the error kind as its result.
  void check(const std::string& name, const Json& expected, const std::function<Json()>& actual) {
    Json got;
    try {
      got = actual();
    } catch (const CurveError& e) {
      got = std::string(to_string(e.kind()));
    }
    checks_.push_back(
        Json{{"item", item_}, {"check", name}, {"expected", expected}, {"actual", got}, {"passed", got == expected}});
  }

 private:
  Json& checks_;
  std::string item_;
};

void verify_curve(Checker& c, const TernaryForm& f, const Json& expect, std::uint64_t seed, unsigned bits) {
  Rng rng(seed);
  const long n = f.degree();
  c.check("degree", expect.at("degree"), [&] { return Json(n); });

  long genus_value = -1;
  c.check("genus", expect.at("genus"), [&] {
    genus_value = genus(f, rng).p;
    return Json(genus_value);
  });

  const long nodes = expect.value("nodes", 0L), cusps = expect.value("cusps", 0L);
  const bool ordinary_only = expect.value("plucker", true);
  if (ordinary_only) {
    c.check("nodes and cusps", Json::array({nodes, cusps}), [&] {
      const auto nc = node_cusp_count(f, rng);
      return Json::array({nc.nodes, nc.cusps});
    });
    c.check("genus from nodes and cusps", Json(expect.at("genus")),
            [&] { return Json((n - 1) * (n - 2) / 2 - nodes - cusps); });
    c.check("plucker class and flexes", Json::array({expect.at("class"), expect.at("flexes")}), [&] {
      const auto ch = curve_characters(f, rng);
      if (!plucker_violations(ch).empty()) return Json(plucker_violations(ch).front());
      return Json::array({*ch.nu, *ch.rho});
    });
  }
  c.check("class from polars", expect.at("class"), [&] { return Json(curve_class(f, rng)); });
  c.check("flexes on the Hessian", expect.at("flexes"), [&] { return Json(flex_total(flexes(f, rng, bits))); });
  c.check("bezout with a polar", Json(n * (n - 1)), [&] {
    const TernaryForm polar = first_polar(f, ProjPoint(Rat(2), Rat(-3), Rat(5)));
    return Json(bezout_total(intersect(f, polar, rng, bits)));
  });

  const long p = expect.at("genus").get<long>();
  if (p >= 1) {
    c.check("canonical series", Json::array({2 * p - 2, p - 1, 0}), [&] {
      const auto cs = canonical_series(f, rng);
      return Json::array({cs.series.order, cs.series.dimension, cs.epsilon});
    });
  }
  if (ordinary_only && cusps == 0) {
    c.check("pencil double points", expect.at("class"), [&] { return Json(pencil_double_points(n, p)); });
  }
  if (cusps > 0 || !ordinary_only) {
    c.check("resolution keeps the genus", Json::array({true, p}), [&] {
      const auto r = resolve(f, rng);
      bool law = true;
      for (const auto& s : r.steps) law = law && s.law_holds;
      return Json::array({law, genus(r.final_curve, rng).p});
    });
  }
}

void verify_pair(Checker& c, const QuaternaryForm& f, const QuaternaryForm& g, const SpacePoint& center,
                 const Json& expect, std::uint64_t seed) {
  Rng rng(seed);
  const long mu = f.degree(), nu = g.degree();
  c.check("complete intersection genus", expect.at("genus"), [&] { return Json(ci_genus(mu, nu)); });
  const auto proj = project_ci(f, g, center);
  c.check("projection degree", expect.at("degree"), [&] { return Json(proj.curve.degree()); });
  c.check("projection nodes", expect.at("nodes"), [&] { return Json(node_cusp_count(proj.curve, rng).nodes); });
  c.check("projection genus", expect.at("genus"), [&] { return Json(genus(proj.curve, rng).p); });
}

}  // namespace

Json corpus_verify(const std::filesystem::path& dir, std::uint64_t seed, unsigned bits) {
  if (dir.empty()) throw std::invalid_argument("empty corpus path");
  const auto manifest_path = dir / "manifest.json";
  std::ifstream in(manifest_path);
  if (!in) throw std::invalid_argument("no manifest.json in " + dir.string());
  Json manifest;
  try {
    manifest = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(manifest_path.string() + ": " + e.what());
  }

  Json checks = Json::array();
  Checker c(checks);
  for (const auto& entry : manifest.value("curves", Json::array())) {
    const std::string file = entry.at("file");
    c.set_item(file);
    try {
      verify_curve(c, load_curve(dir / file), entry.at("expect"), seed, bits);
    } catch (const CurveError& e) {
      c.check("load", "ok", [&] { return Json(std::string(to_string(e.kind()))); });
    }
  }
  for (const auto& entry : manifest.value("surface_pairs", Json::array())) {
    const std::string ff = entry.at("f"), gf = entry.at("g");
    c.set_item(ff + " " + gf);
    try {
      const auto ctr = parse_coords(entry.at("center"), 4);
      verify_pair(c, load_surface(dir / ff), load_surface(dir / gf), {ctr[0], ctr[1], ctr[2], ctr[3]},
                  entry.at("expect"), seed);
    } catch (const CurveError& e) {
      c.check("load", "ok", [&] { return Json(std::string(to_string(e.kind()))); });
    }
  }

  int passed = 0;
  for (const auto& ch : checks) passed += ch["passed"].get<bool>() ? 1 : 0;
  const int failed = static_cast<int>(checks.size()) - passed;
  return Json{{"checks", checks}, {"passed", passed}, {"failed", failed}, {"all_passed", failed == 0 && passed > 0}};
}

}  // namespace curvekit::cli
