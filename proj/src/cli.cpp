#include "knotpoly/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "knotpoly/alex.hpp"
#include "knotpoly/apoly.hpp"
#include "knotpoly/detect.hpp"
#include "knotpoly/emknots.hpp"
#include "knotpoly/errors.hpp"
#include "knotpoly/format.hpp"
#include "knotpoly/newton.hpp"
#include "knotpoly/smallness.hpp"

namespace knotpoly {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json apoly_json(const APoly& a) {
  json f = json::array();
  for (const auto& g : a.factors) f.push_back(to_json(g));
  return {{"apoly", to_json(a.poly)}, {"factors", f}};
}

json em_record(const EMParams& k) {
  json j = {{"l", k.l}, {"m", k.m}, {"n", k.n}, {"p", k.p}, {"g", genus(k)}, {"r", toroidal_slope(k).str()}};
  if (k.n == 0 && k.p <= 0) {
    const SDPair sd = sd_coordinates(k);
    j["s"] = sd.s;
    j["d"] = sd.d;
  }
  return j;
}

std::string torus_name(const TorusParams& t) { return "T(" + std::to_string(t.p) + "," + std::to_string(t.q) + ")"; }

struct Ctx {
  std::ostream& out;
  std::ostream& err;
  bool json_mode = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact A-polynomial, Alexander polynomial and Eudave-Munoz knot computations", "knotpoly"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  Ctx ctx{out, err};
  std::function<void()> action;

  // apoly
  auto* apoly = app.add_subcommand("apoly", "A-polynomial constructors")->require_subcommand(1);
  long ap_p = 0, ap_q = 0;
  std::string companion_file, descriptor;
  bool direct = false;
  auto* ap_torus = apoly->add_subcommand("torus", "A-polynomial of T(P,Q)");
  ap_torus->add_option("P", ap_p)->required();
  ap_torus->add_option("Q", ap_q)->required();
  ap_torus->callback([&] {
    action = [&] {
      const APoly a = torus_apoly(TorusParams::make(ap_p, ap_q));
      if (ctx.json_mode) out << apoly_json(a).dump() << "\n";
      else out << to_text(a.poly) << "\n";
    };
  });
  auto* ap_cable = apoly->add_subcommand("cable", "A-polynomial of the (P,Q)-cable over a companion");
  ap_cable->add_option("P", ap_p)->required();
  ap_cable->add_option("Q", ap_q)->required();
  ap_cable->add_option("--companion", companion_file, "Companion A-polynomial (text or JSON)")->required();
  ap_cable->add_flag("--direct", direct, "Eliminate on the expanded companion instead of factor by factor");
  ap_cable->callback([&] {
    action = [&] {
      const IntPoly2 c = read_poly2(read_file(companion_file));
      const CableParams cp = CableParams::make(ap_p, ap_q);
      const APoly a = direct ? APoly::from_poly(cable_apoly(c, cp)) : cable_apoly(APoly::from_poly(c), cp);
      if (ctx.json_mode) out << apoly_json(a).dump() << "\n";
      else out << to_text(a.poly) << "\n";
    };
  });
  auto* ap_iter = apoly->add_subcommand("iterated", "A-polynomial of an iterated torus knot");
  ap_iter->add_option("DESCRIPTOR", descriptor, "(p1,q1),(p2,q2),... outermost first")->required();
  ap_iter->callback([&] {
    action = [&] {
      const APoly a = iterated_torus_apoly(IteratedTorusDesc::parse(descriptor));
      if (ctx.json_mode) out << apoly_json(a).dump() << "\n";
      else out << to_text(a.poly) << "\n";
    };
  });

  // alex
  auto* alex = app.add_subcommand("alex", "Alexander polynomials")->require_subcommand(1);
  long al_p = 0, al_q = 0, al_w = 1;
  std::string pattern_file;
  auto* al_torus = alex->add_subcommand("torus", "Alexander polynomial of T(P,Q)");
  al_torus->add_option("P", al_p)->required();
  al_torus->add_option("Q", al_q)->required();
  al_torus->callback([&] {
    action = [&] {
      const IntPoly1 d = torus_alexander(al_p, al_q);
      if (ctx.json_mode) out << json{{"alex", to_json(d.poly())}}.dump() << "\n";
      else out << to_text(d.poly()) << "\n";
    };
  });
  auto* al_sat = alex->add_subcommand("satellite", "Alexander polynomial of a satellite");
  al_sat->add_option("--companion", companion_file)->required();
  al_sat->add_option("--pattern", pattern_file)->required();
  al_sat->add_option("-w", al_w, "Winding number")->required();
  al_sat->callback([&] {
    action = [&] {
      const IntPoly1 c(read_upoly(read_file(companion_file)));
      const IntPoly1 p(read_upoly(read_file(pattern_file)));
      const IntPoly1 d = satellite_alexander(c, al_w, p);
      if (ctx.json_mode) out << json{{"alex", to_json(d.poly())}}.dump() << "\n";
      else out << to_text(d.poly()) << "\n";
    };
  });

  // newton
  auto* newton = app.add_subcommand("newton", "Newton polygons")->require_subcommand(1);
  std::string poly_file, slope_text;
  bool sketch = false;
  auto* nw_slopes = newton->add_subcommand("slopes", "Boundary slopes read off the Newton polygon");
  nw_slopes->add_option("FILE", poly_file)->required();
  nw_slopes->add_flag("--sketch", sketch, "Draw the support on a character grid");
  nw_slopes->callback([&] {
    action = [&] {
      const IntPoly2 p = read_poly2(read_file(poly_file));
      const NewtonPolygon pg = newton_polygon(p);
      const BoundarySlopes bs = boundary_slopes(pg);
      if (ctx.json_mode) {
        json v = json::array(), s = json::array();
        for (const auto& pt : pg.vertices) v.push_back({pt.i, pt.j});
        for (const auto& sl : bs.finite) s.push_back(sl.str());
        out << json{{"vertices", v}, {"slopes", s}, {"infinity", bs.infinity}}.dump() << "\n";
      } else {
        std::string line;
        for (const auto& sl : bs.finite) line += (line.empty() ? "" : " ") + sl.str();
        if (bs.infinity) line += (line.empty() ? "" : " ") + std::string("inf");
        out << line << "\n";
        if (sketch) out << ascii_sketch(p);
      }
    };
  });
  auto* nw_width = newton->add_subcommand("width", "Width of the Newton polygon against slope P/Q");
  nw_width->add_option("FILE", poly_file)->required();
  nw_width->add_option("SLOPE", slope_text, "P/Q, an integer, or inf")->required();
  nw_width->callback([&] {
    action = [&] {
      const long w = width(newton_polygon(read_poly2(read_file(poly_file))), SlopeValue::parse(slope_text));
      if (ctx.json_mode) out << json{{"width", w}}.dump() << "\n";
      else out << w << "\n";
    };
  });

  // em
  auto* em = app.add_subcommand("em", "Eudave-Munoz knots k(l,m,n,p)")->require_subcommand(1);
  std::vector<i64> lmnp;
  i64 bound_l = 40, bound_m = 40, bound_p = 6, l_star = 2;
  bool negative_first = false, no_filter = false;
  const auto em_formula = [&](const std::string& name, const std::string& help, std::function<void(const EMParams&)> body) {
    auto* sc = em->add_subcommand(name, help);
    sc->add_option("LMNP", lmnp, "l m n p")->expected(4)->required();
    sc->callback([&, body] {
      action = [&, body] { body(EMParams::validate(lmnp[0], lmnp[1], lmnp[2], lmnp[3])); };
    });
  };
  em_formula("slope", "Half-integral toroidal slope r", [&](const EMParams& k) {
    const HalfInt r = toroidal_slope(k);
    if (ctx.json_mode) out << json{{"r", r.str()}, {"twice_r", r.twice}}.dump() << "\n";
    else out << r.str() << "\n";
  });
  em_formula("genus", "Genus", [&](const EMParams& k) {
    if (ctx.json_mode) out << json{{"g", genus(k)}}.dump() << "\n";
    else out << genus(k) << "\n";
  });
  em_formula("sd", "(s,d) coordinates of k(l,m,0,p), p <= 0", [&](const EMParams& k) {
    const SDPair sd = sd_coordinates(k);
    if (ctx.json_mode) out << em_record(k).dump() << "\n";
    else out << "s=" << sd.s << " d=" << sd.d << " g=" << sd.g << " r=" << sd.r.str() << "\n";
  });
  em_formula("dupes", "Parameter tuples naming the same knot or its mirror", [&](const EMParams& k) {
    const auto dup = duplicates(k);
    if (ctx.json_mode) {
      json a = json::array();
      for (const auto& e : dup) a.push_back({{"l", e.k.l}, {"m", e.k.m}, {"n", e.k.n}, {"p", e.k.p}, {"mirror", e.mirror}});
      out << a.dump() << "\n";
    } else {
      for (const auto& e : dup) out << e.k.str() << (e.mirror ? " mirror" : "") << "\n";
    }
  });
  i64 inv_s = 0, inv_d = 0;
  auto* em_inv = em->add_subcommand("invert", "Recover (l,m) of k(l,m,0,0) from (s,d)");
  em_inv->add_option("S", inv_s)->required();
  em_inv->add_option("D", inv_d)->required();
  em_inv->callback([&] {
    action = [&] {
      const auto c = invert_sd(inv_s, inv_d);
      if (ctx.json_mode) {
        json a = json::array();
        for (const auto& x : c) a.push_back({x.l, x.m});
        out << a.dump() << "\n";
      } else {
        for (const auto& x : c) out << "(" << x.l << "," << x.m << ")\n";
      }
    };
  });
  auto* em_col = em->add_subcommand("collisions", "Equal (g,r) among k(l,m,0,0) with lm > 0 across signs of l");
  em_col->add_option("--bound-l", bound_l)->capture_default_str();
  em_col->add_option("--bound-m", bound_m)->capture_default_str();
  em_col->add_flag("--negative-first", negative_first, "List the l < 0 knot first");
  em_col->callback([&] {
    action = [&] {
      err << "searching |l| <= " << bound_l << ", |m| <= " << bound_m << "\n";
      const auto c = collision_search(bound_l, bound_m, negative_first);
      if (ctx.json_mode) {
        json a = json::array();
        for (const auto& x : c) a.push_back({x.l, x.m, x.l_star, x.m_star});
        out << a.dump() << "\n";
      } else {
        for (const auto& x : c) out << "(" << x.l << "," << x.m << "," << x.l_star << "," << x.m_star << ")\n";
      }
    };
  });
  auto* em_ver = em->add_subcommand("verify-lstar", "Check that no k(l,m,0,p) shares (g,r) with k(L*,-1,0,0)");
  em_ver->add_option("LSTAR", l_star)->required();
  em_ver->add_option("--bound-l", bound_l)->capture_default_str();
  em_ver->add_option("--bound-m", bound_m)->capture_default_str();
  em_ver->add_option("--bound-p", bound_p)->capture_default_str();
  em_ver->add_flag("--no-divisibility-filter", no_filter, "Try every l and p in [-bound-p, bound-p]");
  em_ver->callback([&] {
    action = [&] {
      err << "checking l* = " << l_star << "\n";
      const LStarReport rep = verify_l_star_uniqueness(l_star, bound_l, bound_m, bound_p, !no_filter);
      if (ctx.json_mode) {
        json w = json::array();
        for (const auto& k : rep.witnesses) w.push_back(em_record(k));
        out << json{{"unique", rep.unique}, {"checked", rep.candidates_checked}, {"witnesses", w}}.dump() << "\n";
      } else {
        out << "unique: " << (rep.unique ? "true" : "false") << "\n";
        for (const auto& k : rep.witnesses) out << "witness " << k.str() << "\n";
      }
    };
  });

  // small
  i64 a1 = 0, a2 = 1;
  auto* small = app.add_subcommand("small", "Continued fraction and essential-surface equation for A1/A2");
  small->add_option("A1", a1)->required();
  small->add_option("A2", a2)->required();
  small->callback([&] {
    action = [&] {
      const ContFrac cf = cont_frac_expand(a1, a2);
      const auto sol = ess_surface_solutions(cf);
      if (ctx.json_mode) {
        json s = json::array();
        for (const auto& x : sol) s.push_back({{"I", x.I}, {"J", x.J}});
        out << json{{"expansion", cf.coefficients}, {"solutions", s}, {"small", sol.empty()}}.dump() << "\n";
      } else {
        out << "expansion: " << cf.str() << "\n";
        out << "solutions:";
        if (sol.empty()) out << " none";
        out << "\n";
        for (const auto& x : sol) {
          out << "  I={";
          for (std::size_t k = 0; k < x.I.size(); ++k) out << (k ? "," : "") << x.I[k];
          out << "} J={";
          for (std::size_t k = 0; k < x.J.size(); ++k) out << (k ? "," : "") << x.J[k];
          out << "}\n";
        }
        out << "small: " << (sol.empty() ? "true" : "false") << "\n";
      }
    };
  });

  // detect
  auto* detect = app.add_subcommand("detect", "Torus knot detection")->require_subcommand(1);
  std::string apoly_file, alex_file;
  long bound = 210;
  auto* dt_torus = detect->add_subcommand("torus", "Identify a torus knot from its A- and Alexander polynomials");
  dt_torus->add_option("--apoly", apoly_file)->required();
  dt_torus->add_option("--alex", alex_file)->required();
  dt_torus->callback([&] {
    action = [&] {
      const auto inv = InvariantPair::make(read_poly2(read_file(apoly_file)), IntPoly1(read_upoly(read_file(alex_file))));
      const auto t = identify_torus(inv);
      if (ctx.json_mode) {
        json j = {{"found", t.has_value()}};
        if (t) {
          j["p"] = t->p;
          j["q"] = t->q;
        }
        out << j.dump() << "\n";
      } else {
        out << (t ? torus_name(*t) : std::string("none")) << "\n";
      }
    };
  });
  auto* dt_coin = detect->add_subcommand("coincidences", "Torus knots sharing an A-polynomial");
  dt_coin->add_option("--bound", bound, "Largest |p|q")->capture_default_str();
  dt_coin->callback([&] {
    action = [&] {
      const auto c = apoly_coincidences(bound);
      if (ctx.json_mode) {
        json a = json::array();
        for (const auto& [x, y] : c) a.push_back({{x.p, x.q}, {y.p, y.q}});
        out << a.dump() << "\n";
      } else {
        for (const auto& [x, y] : c) out << torus_name(x) << " " << torus_name(y) << "\n";
      }
    };
  });

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  ctx.json_mode = format == "json";
  try {
    if (action) action();
    return kOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInvariant;
  }
}

}  // namespace knotpoly
