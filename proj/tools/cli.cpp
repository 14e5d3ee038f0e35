#include "cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <ostream>
#include <sstream>

#include "curvekit/cremona.hpp"
#include "curvekit/elim.hpp"
#include "curvekit/errors.hpp"
#include "curvekit/linsys.hpp"
#include "curvekit/local.hpp"
#include "curvekit/plucker.hpp"
#include "curvekit/random.hpp"
#include "curvekit/series.hpp"
#include "curvekit/space.hpp"
#include "report.hpp"

#ifndef CURVEKIT_CORPUS_DIR
#define CURVEKIT_CORPUS_DIR "corpus"
#endif

namespace curvekit::cli {
namespace {

struct Globals {
  bool json = false;
  std::uint64_t seed = kDefaultSeed;
  unsigned bits = 53;
};

Json opt(const std::optional<long>& v) { return v ? Json(*v) : Json(); }

Json plucker_json(const PluckerChars& c) {
  return Json{{"n", opt(c.n)},     {"nu", opt(c.nu)},   {"d", opt(c.d)}, {"kappa", opt(c.kappa)},
              {"delta", opt(c.delta)}, {"rho", opt(c.rho)}, {"p", opt(c.p)}};
}

Json cayley_json(const CayleyChars& c) {
  Json j = Json::object();
  const std::pair<const char*, const std::optional<long>*> fields[] = {
      {"n", &c.n},     {"r", &c.r},     {"nu", &c.nu}, {"d", &c.d},     {"delta", &c.delta},
      {"t", &c.t},     {"tau", &c.tau}, {"K", &c.K},   {"chi", &c.chi}, {"p", &c.p}};
  for (const auto& [name, v] : fields)
    if (*v) j[name] = **v;
  return j;
}

Json system_json(const LinearSystemReport& s) {
  Json basis = Json::array();
  for (const auto& b : s.basis) basis.push_back(b.str());
  return Json{{"degree", s.degree},
              {"conditions", s.conditions.size()},
              {"virtual_dim", s.virtual_dim},
              {"effective_dim", s.effective_dim},
              {"superabundance", s.superabundance},
              {"basis", basis}};
}

Json series_json(const SeriesDescriptor& s) {
  Json j{{"order", s.order}, {"dimension", s.dimension}};
  if (s.speciality_index) j["speciality_index"] = *s.speciality_index;
  if (s.complete) j["complete"] = *s.complete;
  return j;
}

Json step_json(const ResolutionStep& s) {
  Json tri = Json::array();
  for (const auto& v : s.frame.triangle) tri.push_back(to_json(v));
  return Json{{"triangle", tri},
              {"before", s.before.str()},
              {"before_degree", s.before.degree()},
              {"multiplicities", s.multiplicities},
              {"after", s.after.str()},
              {"after_degree", s.after.degree()},
              {"after_multiplicities", s.after_multiplicities},
              {"law_holds", s.law_holds}};
}

Json singularities_json(const TernaryForm& f, Rng& rng, unsigned bits) {
  Json pts = Json::array();
  for (const auto& s : classify_singularities(f, rng, bits)) pts.push_back(to_json(s, bits));
  return pts;
}

Json genus_json(const GenusReport& g) {
  Json contrib = Json::array();
  for (const auto& [r, count] : g.ordinary_contributions)
    contrib.push_back(Json{{"multiplicity", r}, {"points", count}});
  Json j{{"degree", g.m},
         {"genus", g.p},
         {"ordinary_points", contrib},
         {"simple_cusps", g.simple_cusps},
         {"resolution_steps", g.resolution_steps}};
  if (g.model) j["model"] = g.model->str();
  return j;
}

Json analyze(const TernaryForm& f, Rng& rng, unsigned bits) {
  Json j{{"curve", f.str()}, {"degree", f.degree()}};
  const auto sing = singularities_json(f, rng, bits);
  j["smooth"] = sing.empty();
  j["singular_points"] = sing;
  j["genus"] = genus(f, rng).p;
  try {
    const auto c = curve_characters(f, rng);
    j["class"] = opt(c.nu);
    j["flexes"] = opt(c.rho);
    j["bitangents"] = opt(c.delta);
  } catch (const CurveError& e) {
    if (e.kind() != ErrorKind::UnsupportedSingularity) throw;
    j["class"] = curve_class(f, rng);
    j["flexes"] = nullptr;
    j["characters_note"] = std::string(to_string(e.kind()));
  }
  return j;
}

Json intersect_json(const TernaryForm& f, const TernaryForm& g, Rng& rng, unsigned bits) {
  const auto recs = intersect(f, g, rng, bits);
  Json pts = Json::array();
  for (const auto& r : recs) {
    Json p = to_json(r.block, bits);
    p["local_multiplicity"] = r.local_multiplicity;
    pts.push_back(p);
  }
  return Json{{"points", pts}, {"total", bezout_total(recs)}, {"expected", f.degree() * g.degree()}};
}

Json flexes_json(const TernaryForm& f, Rng& rng, unsigned bits) {
  const auto fl = flexes(f, rng, bits);
  Json pts = Json::array();
  for (const auto& x : fl) {
    Json p = to_json(x.block, bits);
    p["weight"] = x.weight;
    p["contact"] = x.contact;
    p["at_singular_point"] = x.at_singular_point;
    pts.push_back(p);
  }
  return Json{{"flexes", pts}, {"total", flex_total(fl)}, {"expected", 3 * f.degree() * (f.degree() - 2)}};
}

Json cubic_flexes_json(const TernaryForm& f, Rng& rng, unsigned bits) {
  const auto c = cubic_flex_pencil(f, rng, std::max(bits, 128u));
  Json flex = Json::array();
  for (std::size_t i = 0; i < c.flex_points.size(); ++i) {
    if (c.exact_flexes[i]) {
      flex.push_back(Json{{"point", to_json(*c.exact_flexes[i])}});
    } else {
      Json coords = Json::array();
      for (const auto& z : c.flex_points[i]) coords.push_back(format_complex(z, digits_for(bits)));
      flex.push_back(Json{{"coords", coords}});
    }
  }
  Json lines = Json::array();
  for (const auto& l : c.lines) {
    Json line{{"flexes", l.flexes}, {"triangle", l.triangle}};
    if (l.exact) {
      line["line"] = l.exact->str();
    } else {
      Json coeffs = Json::array();
      for (const auto& z : l.coeffs) coeffs.push_back(format_complex(z, digits_for(bits)));
      line["coeffs"] = coeffs;
    }
    lines.push_back(line);
  }
  return Json{{"discriminant", to_string(c.discriminant, "lambda")},
              {"discriminant_degree", c.discriminant_degree},
              {"quartic", c.quartic.str()},
              {"quartic_roots", to_json(c.quartic_roots, bits)},
              {"flexes", flex},
              {"lines", lines},
              {"max_incidence_error", format_real(c.max_incidence_error, 3)},
              {"each_flex_on_four_lines", c.each_flex_on_four_lines}};
}

std::array<ProjPoint, 3> parse_triangle(const std::string& text) {
  std::vector<ProjPoint> pts;
  std::istringstream in(text);
  for (std::string part; std::getline(in, part, ';');) {
    const auto c = parse_coords(part, 3);
    pts.emplace_back(c[0], c[1], c[2]);
  }
  if (pts.size() != 3) throw UsageError("--triangle needs three points a:b:c;d:e:f;g:h:i");
  return {pts[0], pts[1], pts[2]};
}

Json resolve_json(const TernaryForm& f, Rng& rng, unsigned bits) {
  const auto r = resolve(f, rng);
  Json steps = Json::array();
  for (const auto& s : r.steps) steps.push_back(step_json(s));
  return Json{{"curve", f.str()},
              {"steps", steps},
              {"final_curve", r.final_curve.str()},
              {"final_degree", r.final_curve.degree()},
              {"final_singular_points", singularities_json(r.final_curve, rng, bits)}};
}

Json noether_json(const TernaryForm& f, const TernaryForm& phi, const TernaryForm& psi, Rng& rng) {
  const auto d = noether_decompose(f, phi, psi, rng);
  return Json{{"A", d.a ? Json(d.a->str()) : Json("0")},
              {"B", d.b ? Json(d.b->str()) : Json("0")},
              {"residual_freedom", d.residual_freedom},
              {"expansion_matches", noether_expand(d, phi, psi) == f.poly()}};
}

std::vector<ProjPoint> plain_points(const std::vector<LinearCondition>& conds) {
  std::vector<ProjPoint> out;
  for (const auto& c : conds) {
    if (c.multiplicity != 1) throw UsageError("ninth-point takes simple points");
    out.push_back(c.point.point());
  }
  return out;
}

Json projection_json(const TernaryForm& f, Rng& rng) {
  const auto r = projection_completeness_test(f, rng);
  Json j{{"verdict", to_string(r.verdict)}, {"degree", r.n}, {"genus", r.p}};
  if (r.adjoints) j["adjoints"] = system_json(*r.adjoints);
  return j;
}

Json space_project_json(const QuaternaryForm& f, const QuaternaryForm& g, const std::string& center, Rng& rng,
                        unsigned bits) {
  const auto c = parse_coords(center, 4);
  const auto r = project_ci(f, g, {c[0], c[1], c[2], c[3]});
  const auto sing = singularities_json(r.curve, rng, bits);
  return Json{{"curve", r.curve.str()},
              {"degree", r.curve.degree()},
              {"center_on_curve", r.center_on_curve},
              {"singular_points", sing},
              {"genus", genus(r.curve, rng).p}};
}

void emit(const Json& report, bool json, std::ostream& out) {
  if (json) {
    out << report.dump() << '\n';
    return;
  }
  if (report["meta"]["command"] == "corpus-verify" && report.contains("checks")) {
    for (const auto& c : report["checks"])
      out << (c["passed"].get<bool>() ? "PASS  " : "FAIL  ") << c["item"].get<std::string>() << "  "
          << c["check"].get<std::string>() << "  expected " << c["expected"].dump() << "  got "
          << c["actual"].dump() << '\n';
    out << report["passed"].get<int>() << " passed, " << report["failed"].get<int>() << " failed\n";
    return;
  }
  Json body = report;
  body.erase("meta");
  print_text(body, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of plane and space algebraic curves", "curvekit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "emit a JSON report");
  app.add_option("--seed", g.seed, "seed for every random choice")->capture_default_str();
  app.add_option("--precision", g.bits, "bits for numeric root location")
      ->check(CLI::Range(16u, 4096u))
      ->capture_default_str();

  std::function<Json(Rng&)> action;
  std::string command;
  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* s = parent->add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  auto bind = [&](CLI::App* s, std::string name, std::function<Json(Rng&)> fn) {
    s->callback([&, name, fn] {
      command = name;
      action = fn;
    });
  };

  // Argument storage; each subcommand reads only its own.
  std::string f1, f2, f3, path, var = "y", triangle, center;
  int degree = 0, n = 0, mu = 0, nu = 0;
  long d = 0, k = 0, m = 0, p = 0, i = 0, n1 = 0;
  std::optional<long> p1, link_i;

  auto* s = sub(&app, "analyze", "degree, singular points, genus, class and flexes of a curve");
  s->add_option("curve", f1)->required();
  bind(s, "analyze", [&](Rng& rng) { return analyze(load_curve(f1), rng, g.bits); });

  s = sub(&app, "intersect", "intersection points of two curves with local multiplicities");
  s->add_option("f", f1)->required();
  s->add_option("g", f2)->required();
  bind(s, "intersect", [&](Rng& rng) { return intersect_json(load_curve(f1), load_curve(f2), rng, g.bits); });

  s = sub(&app, "resultant", "Sylvester resultant of two curves with respect to a variable");
  s->add_option("f", f1)->required();
  s->add_option("g", f2)->required();
  s->add_option("--var", var)->check(CLI::IsMember({"x", "y", "z"}))->capture_default_str();
  bind(s, "resultant", [&](Rng&) {
    const auto a = load_curve(f1), b = load_curve(f2);
    const auto v = a.poly().var_index(var);
    return Json{{"var", var}, {"resultant", resultant(a.poly(), b.poly(), v).str()}};
  });

  s = sub(&app, "discriminant", "discriminant of a curve with respect to a variable");
  s->add_option("curve", f1)->required();
  s->add_option("--var", var)->check(CLI::IsMember({"x", "y", "z"}))->capture_default_str();
  bind(s, "discriminant", [&](Rng&) {
    const auto a = load_curve(f1);
    return Json{{"var", var}, {"discriminant", discriminant(a.poly(), a.poly().var_index(var)).str()}};
  });

  s = sub(&app, "class", "class of a curve from its polars");
  s->add_option("curve", f1)->required();
  bind(s, "class", [&](Rng& rng) { return Json{{"class", curve_class(load_curve(f1), rng)}}; });

  s = sub(&app, "hessian", "Hessian determinant");
  s->add_option("curve", f1)->required();
  bind(s, "hessian", [&](Rng&) {
    const auto h = hessian(load_curve(f1));
    return Json{{"hessian", h.poly.str()}, {"constant", h.constant}};
  });

  s = sub(&app, "flexes", "flexes as intersections with the Hessian");
  s->add_option("curve", f1)->required();
  bind(s, "flexes", [&](Rng& rng) { return flexes_json(load_curve(f1), rng, g.bits); });

  s = sub(&app, "dual", "equation of the dual curve");
  s->add_option("curve", f1)->required();
  bind(s, "dual", [&](Rng& rng) {
    const auto dc = dual_curve(load_curve(f1), rng);
    return Json{{"dual", dc.str()}, {"degree", dc.degree()}};
  });

  s = sub(&app, "plucker", "complete the Plücker characters");
  s->add_option("--n", n, "degree")->required();
  s->add_option("--d", d, "nodes")->required();
  s->add_option("--k", k, "cusps")->required();
  bind(s, "plucker", [&](Rng&) {
    PluckerChars c;
    c.n = n;
    c.d = d;
    c.kappa = k;
    return plucker_json(plucker_solve(c));
  });

  s = sub(&app, "cubic-flexes", "flex pencil, the nine flexes and their twelve lines");
  s->add_option("curve", f1)->required();
  bind(s, "cubic-flexes", [&](Rng& rng) { return cubic_flexes_json(load_curve(f1), rng, g.bits); });

  s = sub(&app, "cremona", "quadratic transformation with a given fundamental triangle");
  s->add_option("curve", f1)->required();
  s->add_option("--triangle", triangle, "a:b:c;d:e:f;g:h:i")->default_str("1:0:0;0:1:0;0:0:1");
  bind(s, "cremona", [&](Rng&) {
    const auto tri = parse_triangle(triangle.empty() ? "1:0:0;0:1:0;0:0:1" : triangle);
    return step_json(std_quadratic_transform(load_curve(f1), make_frame(tri)));
  });

  s = sub(&app, "resolve", "quadratic transformations until every singular point is ordinary");
  s->add_option("curve", f1)->required();
  bind(s, "resolve", [&](Rng& rng) { return resolve_json(load_curve(f1), rng, g.bits); });

  s = sub(&app, "linsys", "dimension of the curves of a degree through given points");
  s->add_option("--degree", degree)->required()->check(CLI::NonNegativeNumber);
  s->add_option("--through", path, "JSON array of points")->required();
  bind(s, "linsys", [&](Rng&) { return system_json(system_dimension(degree, load_conditions(path))); });

  s = sub(&app, "noether", "write f = A phi + B psi");
  s->add_option("f", f1)->required();
  s->add_option("phi", f2)->required();
  s->add_option("psi", f3)->required();
  bind(s, "noether", [&](Rng& rng) { return noether_json(load_curve(f1), load_curve(f2), load_curve(f3), rng); });

  s = sub(&app, "ninth-point", "ninth base point of the cubics through eight points");
  s->add_option("points", path)->required();
  bind(s, "ninth-point", [&](Rng& rng) {
    return Json{{"point", to_json(ninth_base_point(plain_points(load_conditions(path)), rng))}};
  });

  s = sub(&app, "genus", "genus from the singular points");
  s->add_option("curve", f1)->required();
  bind(s, "genus", [&](Rng& rng) { return genus_json(genus(load_curve(f1), rng)); });

  s = sub(&app, "adjoints", "adjoint curves of a degree and the series they cut");
  s->add_option("curve", f1)->required();
  s->add_option("--degree", degree)->required();
  bind(s, "adjoints", [&](Rng& rng) {
    const auto f = load_curve(f1);
    const auto sys = adjoint_system(f, degree, rng);
    Json j = system_json(sys);
    if (sys.effective_dim >= 0) j["series"] = series_json(cut_series(f, sys, rng));
    return j;
  });

  s = sub(&app, "canonical", "canonical series cut by the adjoints of degree n-3");
  s->add_option("curve", f1)->required();
  bind(s, "canonical", [&](Rng& rng) {
    const auto c = canonical_series(load_curve(f1), rng);
    return Json{{"genus", c.p}, {"series", series_json(c.series)}, {"epsilon", c.epsilon}, {"model", c.model.str()}};
  });

  s = sub(&app, "rr", "conditions imposed by a group of points on the adjoints of degree n-3");
  s->add_option("curve", f1)->required();
  s->add_option("--points", path)->required();
  bind(s, "rr", [&](Rng& rng) {
    std::vector<GroupPoint> group;
    for (const auto& c : load_conditions(path)) group.push_back({c.point.point(), c.multiplicity});
    return Json{{"conditions", riemann_roch_conditions(load_curve(f1), group, rng)}};
  });

  s = sub(&app, "series-formulas", "order and dimension of the series cut by adjoints of degree m-3+i");
  s->add_option("--m", m)->required();
  s->add_option("--p", p)->required();
  s->add_option("--i", i)->required();
  bind(s, "series-formulas", [&](Rng&) {
    const auto [ni, ri] = series_formulas(m, p, i);
    return Json{{"order", ni}, {"dimension", ri}, {"difference", ni - ri}};
  });

  s = sub(&app, "projection-test", "is the curve the projection of a curve in a higher space");
  s->add_option("curve", f1)->required();
  bind(s, "projection-test", [&](Rng& rng) { return projection_json(load_curve(f1), rng); });

  CLI::App* space = sub(&app, "space", "characters of space curves");
  space->require_subcommand(1);

  s = sub(space, "ci", "characters of a complete intersection");
  s->add_option("--mu", mu)->required();
  s->add_option("--nu", nu)->required();
  bind(s, "space ci", [&](Rng&) { return cayley_json(ci_characters(mu, nu)); });

  s = sub(space, "link", "residual curve in a complete intersection");
  s->add_option("--mu", mu)->required();
  s->add_option("--nu", nu)->required();
  s->add_option("--n1", n1)->required();
  s->add_option("--p1", p1);
  s->add_option("--i", link_i);
  bind(s, "space link", [&](Rng&) {
    const auto r = linked_characters(LinkageInput{mu, nu, n1, p1, link_i});
    return Json{{"i", r.i}, {"n2", r.n2}, {"p1", r.p1}, {"p2", r.p2}, {"p_total", r.p_total}};
  });

  s = sub(space, "project", "plane projection of the intersection of two surfaces");
  s->add_option("f", f1)->required();
  s->add_option("g", f2)->required();
  s->add_option("--center", center, "a:b:c:d")->required();
  bind(s, "space project", [&](Rng& rng) {
    return space_project_json(load_surface(f1), load_surface(f2), center, rng, g.bits);
  });

  s = sub(space, "postulation", "conditions for a surface of order m to contain the curve");
  s->add_option("--n", n)->required();
  s->add_option("--p", p)->required();
  s->add_option("--m", m)->required();
  bind(s, "space postulation", [&](Rng&) {
    const auto r = postulation(n, p, m);
    return Json{{"conditions", r.value}, {"below_threshold", r.below_threshold},
                {"meets_sharper_bound", r.meets_sharper_bound}};
  });

  s = sub(space, "bound", "maximal genus of a space curve of degree n");
  s->add_option("--n", n)->required();
  bind(s, "space bound", [&](Rng&) { return Json{{"bound", castelnuovo_bound(n)}}; });

  s = sub(space, "moduli", "number of moduli of space curves of degree n and genus p");
  s->add_option("--n", n)->required();
  s->add_option("--p", p)->required();
  bind(s, "space moduli", [&](Rng&) { return Json{{"moduli", moduli_count(n, p)}}; });

  std::string corpus_dir = CURVEKIT_CORPUS_DIR;
  s = sub(&app, "corpus-verify", "run every invariant check over the bundled corpus");
  s->add_option("--corpus", corpus_dir, "corpus directory")->capture_default_str();
  bool corpus_failed = false;
  bind(s, "corpus-verify", [&](Rng&) {
    Json r = corpus_verify(corpus_dir, g.seed, g.bits);
    corpus_failed = !r["all_passed"].get<bool>();
    return r;
  });

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Json report;
  report["meta"] = Json{{"command", command}, {"argv", args}, {"seed", g.seed}, {"precision", g.bits}};
  Rng rng(g.seed);
  int code = kExitOk;
  try {
    const Json result = action(rng);
    for (const auto& [key, value] : result.items()) report[key] = value;
    if (corpus_failed) code = kExitDomain;
  } catch (const UsageError& e) {
    err << "curvekit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "curvekit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CurveError& e) {
    report["error"] = Json{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    code = kExitDomain;
  }
  emit(report, g.json, out);
  return code;
}

}  // namespace curvekit::cli
