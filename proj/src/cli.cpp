#include "ade/cli.hpp"

#include "ade/io.hpp"
#include "ade/suite.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace ade {

namespace {

struct SurfaceArgs {
  std::string kind = "p2";
  int n = 0;
};

void add_surface(CLI::App* app, SurfaceArgs& s, bool required = true) {
  auto* kind = app->add_option("--kind", s.kind, "Surface model")
                   ->check(CLI::IsMember({"p2", "hirzebruch"}));
  auto* n = app->add_option("--n", s.n, "Number of blowups")->check(CLI::Range(0, kMaxBlowups));
  if (required) {
    kind->required();
    n->required();
  }
}

SurfaceModel surface_of(const SurfaceArgs& s) {
  return build_surface(s.kind == "p2" ? SurfaceKind::P2Blowup : SurfaceKind::HirzebruchBlowup, s.n);
}

/// A class given as "0,1,-1,..." or as a linear expression in the basis
/// labels and the symbols l0, K, E (and f on P2 models).
LatticeClass parse_class(const SurfaceModel& m, const std::string& text) {
  if (text.find_first_not_of("0123456789-, ") == std::string::npos) {
    std::vector<Integer> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      Integer x;
      if (x.set_str(item.find_first_not_of(' ') == std::string::npos ? "" : item.substr(item.find_first_not_of(' ')), 10) != 0) {
        throw DomainError(ErrorCode::Parse, "bad coefficient '" + item + "'");
      }
      v.push_back(x);
    }
    if (v.size() != m.rank()) {
      throw DomainError(ErrorCode::BasisMismatch, "expected " + std::to_string(m.rank()) + " coefficients");
    }
    return m.make_class(std::move(v));
  }
  std::vector<std::string> names = m.basis_labels();
  std::vector<LatticeClass> images;
  for (std::size_t i = 0; i < m.rank(); ++i) images.push_back(m.basis_vector(i));
  const auto alias = [&](const std::string& name, const LatticeClass& c) {
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      names.push_back(name);
      images.push_back(c);
    }
  };
  alias("l0", m.line(0));
  alias("K", m.canonical());
  alias("E", m.boundary());
  if (m.kind() == SurfaceKind::P2Blowup && m.n() >= 1) alias("f", m.basis_vector(0) - m.line(0));
  // "3h" reads as "3*h".
  std::string expr;
  for (std::size_t i = 0; i < text.size(); ++i) {
    expr += text[i];
    const bool number_end = std::isdigit(static_cast<unsigned char>(text[i])) && i + 1 < text.size() &&
                            std::isalpha(static_cast<unsigned char>(text[i + 1]));
    if (!number_end) continue;
    std::size_t j = i;
    while (j > 0 && std::isdigit(static_cast<unsigned char>(text[j - 1]))) --j;
    if (j == 0 || !std::isalnum(static_cast<unsigned char>(text[j - 1]))) expr += '*';
  }
  const Poly p = parse_poly(expr, names);
  LatticeClass out = m.zero();
  for (const auto& [mono, c] : p.terms()) {
    int total = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      total += mono[i];
      if (mono[i]) var = i;
    }
    if (total != 1 || c.get_den() != 1) {
      throw DomainError(ErrorCode::Parse, "class '" + text + "' must be an integral linear combination");
    }
    out += c.get_num() * images[var];
  }
  return out;
}

QPoly parse_qpoly(const std::string& text) {
  const Poly p = parse_poly(text, {"t"});
  std::vector<Rational> c;
  for (const auto& [mono, v] : p.terms()) {
    const auto e = static_cast<std::size_t>(mono[0]);
    if (c.size() <= e) c.resize(e + 1, Rational(0));
    c[e] = v;
  }
  return QPoly(std::move(c));
}

OrthogonalitySet parse_orth(const std::string& text) {
  OrthogonalitySet o{false, false, false};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "K") {
      o.K = true;
    } else if (item == "f") {
      o.f = true;
    } else if (item == "b") {
      o.b = true;
    } else if (!item.empty()) {
      throw DomainError(ErrorCode::Parse, "orthogonality entries are K, f, b; got '" + item + "'");
    }
  }
  return o;
}

std::vector<std::pair<int, int>> parse_pairs(const std::vector<std::string>& items) {
  std::vector<std::pair<int, int>> out;
  for (const auto& s : items) {
    const auto colon = s.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument(s);
      out.emplace_back(std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1)));
    } catch (const std::exception&) {
      throw DomainError(ErrorCode::Parse, "expected i:j, got '" + s + "'");
    }
  }
  return out;
}

Marking parse_marking(const std::string& text) {
  Marking m{{0, EGroupPoint{0}}};
  std::stringstream ss(text);
  std::string item;
  std::vector<std::string> items;
  while (std::getline(ss, item, ',')) items.push_back(item);
  for (const auto& [label, p] : parse_pairs(items)) m[label] = EGroupPoint{p};
  return m;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice, bundle and local-model computations for ADE surface fibrations", "adesurf"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Write the report to a file instead of stdout");

  std::function<Json()> action;
  bool suite_failed = false;

  SurfaceArgs surf;
  std::string cls_text, cls2_text, orth_text = "K", rep = "fundamental", twist_text, path, path2;
  std::string marking_text, twist_mode = "full", suite_name = "paper-checks", at_text;
  std::string b2 = "1", b4 = "0", b6 = "0";
  std::vector<std::string> collide;
  std::size_t max_nodes = EnumerationLimits{}.max_nodes, cap = 100'000;
  std::optional<long> fiber_degree;
  std::int64_t order = kDefaultGroupOrder;
  int k = 1, d_K = 2, maxdeg = 8, upto = 4;
  std::uint64_t seed = SuiteOptions{}.seed;
  bool strict = false;

  auto* surface = app.add_subcommand("surface", "Picard lattice data of a surface model");
  add_surface(surface, surf);
  std::string surface_action = "info";
  surface->add_option("action", surface_action)->check(CLI::IsMember({"info"}));
  surface->callback([&] { action = [&] { return to_json(surface_of(surf)); }; });

  auto* lines = app.add_subcommand("lines", "Enumerate (-1)-classes with K-degree -1");
  add_surface(lines, surf);
  lines->add_option("--fiber-degree", fiber_degree, "Also require pairing with f");
  lines->add_option("--max-nodes", max_nodes)->check(CLI::PositiveNumber);
  lines->callback([&] {
    action = [&] {
      const SurfaceModel m = surface_of(surf);
      LineConstraints c;
      if (fiber_degree) c.fiber_degree = Integer(*fiber_degree);
      const auto ls = enumerate_lines(m, c, {max_nodes, EnumerationLimits{}.max_results});
      Json arr = Json::array();
      for (const auto& l : ls) arr.push_back(to_json(l));
      return Json{{"model", m.id()}, {"count", ls.size()}, {"lines", arr}};
    };
  });

  auto* roots = app.add_subcommand("roots", "Root system orthogonal to K (and f, b)");
  add_surface(roots, surf);
  roots->add_option("--orth", orth_text, "Comma list from K,f,b");
  roots->add_option("--max-nodes", max_nodes)->check(CLI::PositiveNumber);
  roots->callback([&] {
    action = [&] {
      const SurfaceModel m = surface_of(surf);
      return to_json(enumerate_roots(m, parse_orth(orth_text), {max_nodes, EnumerationLimits{}.max_results}));
    };
  });

  auto* orbit = app.add_subcommand("orbit", "Weyl orbit of a class");
  add_surface(orbit, surf);
  orbit->add_option("--class", cls_text)->required();
  orbit->add_option("--orth", orth_text);
  orbit->add_option("--cap", cap)->check(CLI::PositiveNumber);
  orbit->callback([&] {
    action = [&] {
      const SurfaceModel m = surface_of(surf);
      const LatticeClass c = parse_class(m, cls_text);
      const auto o = weyl_orbit(m, enumerate_roots(m, parse_orth(orth_text)), c, cap);
      Json arr = Json::array();
      for (const auto& x : o) arr.push_back(to_json(x));
      return Json{{"class", to_json(c)}, {"size", o.size()}, {"orbit", arr}};
    };
  });

  auto* weights = app.add_subcommand("weights", "Pairings of a class with the simple roots");
  add_surface(weights, surf);
  weights->add_option("--class", cls_text)->required();
  weights->add_option("--orth", orth_text);
  weights->callback([&] {
    action = [&] {
      const SurfaceModel m = surface_of(surf);
      const LatticeClass c = parse_class(m, cls_text);
      const RootDatum d = enumerate_roots(m, parse_orth(orth_text));
      Json w = Json::array(), simple = Json::array();
      for (const auto& x : weight_of(m, d, c)) w.push_back(to_json(x));
      for (const auto& r : d.simple_roots) simple.push_back(to_json(r));
      return Json{{"class", to_json(c)}, {"type", d.type_label()}, {"weights", w}, {"simple_roots", simple}};
    };
  });

  auto* chi = app.add_subcommand("chi", "Holomorphic Euler characteristic of a divisor class");
  add_surface(chi, surf);
  chi->add_option("--class", cls_text)->required();
  chi->callback([&] {
    action = [&] {
      const SurfaceModel m = surface_of(surf);
      const LatticeClass c = parse_class(m, cls_text);
      return Json{{"class", to_json(c)},
                  {"chi", to_json(euler_char(m, c))},
                  {"chi_serre_dual", to_json(euler_char(m, m.canonical() - c))},
                  {"self_intersection", to_json(m.pair(c, c))},
                  {"canonical_degree", to_json(m.pair(c, m.canonical()))}};
    };
  });

  auto* ext = app.add_subcommand("ext", "Ext groups between two line bundles");
  add_surface(ext, surf);
  ext->add_option("--l1", cls_text)->required();
  ext->add_option("--l2", cls2_text)->required();
  ext->add_option("--collide", collide, "Collided points i:j (curve l_j - l_i)");
  ext->callback([&] {
    action = [&] {
      const SurfaceModel m = surface_of(surf);
      const CollisionConfig cfg = make_collisions(m, parse_pairs(collide));
      const LatticeClass a = parse_class(m, cls_text), b = parse_class(m, cls2_text);
      Json j = to_json(ext_profile(m, cfg, a, b));
      j["L1"] = to_json(a);
      j["L2"] = to_json(b);
      j["chi"] = to_json(euler_char(m, b - a));
      return j;
    };
  });

  auto* bundle = app.add_subcommand("bundle", "Tautological bundle of the A or D configuration");
  add_surface(bundle, surf);
  bundle->add_option("--rep", rep)->check(CLI::IsMember({"fundamental", "vector", "adjoint"}));
  bundle->add_option("--twist", twist_text, "Class added to every summand, e.g. -l0");
  bundle->callback([&] {
    action = [&] {
      const SurfaceModel m = surface_of(surf);
      const Representation r = rep == "fundamental" ? Representation::FundamentalA
                               : rep == "vector"    ? Representation::VectorD
                                                    : Representation::Adjoint;
      FormalBundle b = build_tautological(m, r);
      if (!twist_text.empty()) b = twist(b, parse_class(m, twist_text));
      Json j = to_json(b);
      j["representation"] = representation_name(r);
      Json degs = Json::array();
      for (const auto& s : b.summands()) degs.push_back(to_json(boundary_degree(m, s.cls)));
      j["boundary_degrees"] = degs;
      return j;
    };
  });

  auto* restrict = app.add_subcommand("restrict", "Restrict a degree-zero bundle to the boundary curve");
  restrict->add_option("--bundle", path, "Bundle JSON")->required();
  restrict->add_option("--marking", marking_text, "Points as label:p list, e.g. 1:5,2:7");
  restrict->add_option("--spectral", path2, "Take the marking from a spectral datum");
  restrict->add_option("--N", order, "Group order")->check(CLI::PositiveNumber);
  restrict->callback([&] {
    action = [&] {
      const FormalBundle b = bundle_from_json(read_json_file(path));
      const SurfaceModel m = model_from_id(b.model_id());
      Marking mk;
      std::int64_t n = order;
      if (!path2.empty()) {
        const LoadedSpectral s = load_spectral(path2);
        mk = marking_for(s.datum);
        n = s.datum.order;
      } else {
        mk = parse_marking(marking_text);
      }
      return to_json(restrict_to_boundary(m, b, mk, n));
    };
  });

  auto* spectral = app.add_subcommand("spectral", "Spectral covers and Sen-limit families");
  spectral->require_subcommand(1);
  auto* analyze = spectral->add_subcommand("analyze", "Discriminant, branch points and profiles");
  analyze->add_option("--cover", path, "Cover JSON")->required();
  analyze->add_option("--at", at_text, "Also report the fiber profile at this rational t");
  analyze->callback([&] {
    action = [&] {
      const CoverPoly c = load_cover(path);
      Json j = to_json(analyze_cover(c));
      j["cover"] = to_json(c);
      if (!at_text.empty()) {
        const Rational t0 = rational_from_json(Json(at_text), "at");
        j["profile_at"] = {{"t", to_json(t0)}, {"partition", fiber_profile(c, t0)}};
      }
      return j;
    };
  });
  auto* sen = spectral->add_subcommand("sen", "Delta = b2 b6 - b4^2 with fiber-degree bookkeeping");
  sen->add_option("--b2", b2);
  sen->add_option("--b4", b4);
  sen->add_option("--b6", b6);
  sen->add_option("--k", k, "Fiber degree of the twisting bundle")->check(CLI::NonNegativeNumber);
  sen->add_option("--dK", d_K, "Fiber degree of the anticanonical bundle")->check(CLI::NonNegativeNumber);
  sen->callback([&] {
    action = [&] { return to_json(sen_delta(parse_qpoly(b2), parse_qpoly(b4), parse_qpoly(b6), {d_K, k})); };
  });
  auto* picard = spectral->add_subcommand("picard", "Root and complement blocks of a fiber");
  add_surface(picard, surf);
  picard->callback([&] { action = [&] { return to_json(fiber_picard(surface_of(surf))); }; });

  auto* transform_cmd = app.add_subcommand("transform", "Class-level ADE transform");
  transform_cmd->require_subcommand(1);
  auto* trun = transform_cmd->add_subcommand("run", "Transform one spectral datum");
  trun->add_option("--surface", path, "Surface JSON")->required();
  trun->add_option("--spectral", path2, "Spectral datum JSON")->required();
  trun->add_option("--twist", twist_mode)->check(CLI::IsMember({"raw", "raw_D", "minus_l0", "full", "full_P"}));
  trun->add_flag("--strict", strict, "Reject data violating the SU constraint");
  trun->callback([&] {
    action = [&] {
      const SurfaceModel m = surface_from_json(read_json_file(path));
      const LoadedSpectral s = load_spectral(path2, strict);
      const TwistMode mode = twist_mode_from_name(twist_mode);
      Json j = to_json(transform(m, s.datum, mode));
      j["twist"] = twist_mode_name(mode);
      j["fm"] = to_json(fm_classlevel(s.datum));
      j["restriction_compatible"] = check_restriction_compatibility(m, s.datum);
      j["warnings"] = s.warnings;
      return j;
    };
  });

  auto* local = app.add_subcommand("localmodel", "Graded local-model computations");
  local->require_subcommand(1);
  auto* verify = local->add_subcommand("verify", "Run a local-model suite");
  std::string suite_kind = "conifold";
  verify->add_option("--suite", suite_kind)->check(CLI::IsMember({"conifold"}));
  verify->add_option("--maxdeg", maxdeg)->check(CLI::Range(1, 16));
  verify->callback([&] {
    action = [&] {
      const ChainReport r = conifold_suite(maxdeg);
      suite_failed = !r.passed();
      Json j = to_json(r);
      j["suite"] = suite_kind;
      return j;
    };
  });
  auto* dims = local->add_subcommand("dims", "Graded dimensions of a ring");
  dims->add_option("--ring", path, "Ring JSON")->required();
  dims->add_option("--upto", upto)->check(CLI::NonNegativeNumber);
  dims->callback([&] {
    action = [&] {
      const TruncRing r = ring_from_json(read_json_file(path));
      Json d = Json::array();
      for (int i = 0; i <= upto; ++i) d.push_back(graded_dim(r, i));
      return Json{{"vars", r.names()}, {"dims", d}};
    };
  });

  auto* suite = app.add_subcommand("suite", "Run the bundled acceptance checks");
  suite->add_option("--name", suite_name)->check(CLI::IsMember({"paper-checks"}));
  suite->add_option("--seed", seed);
  suite->callback([&] {
    action = [&] {
      SuiteOptions o;
      o.seed = seed;
      const auto reports = run_paper_checks(o);
      Json j = suite_json(reports);
      suite_failed = !j["passed"].get<bool>();
      return j;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "adesurf: " << e.what() << "\n";
    return kExitUsage;
  }

  Json report;
  int code = kExitOk;
  try {
    report = action();
    if (suite_failed) code = kExitDomainError;
  } catch (const DomainError& e) {
    report = error_json(e);
    code = kExitDomainError;
  }
  if (std::getenv("ADESURF_VERBOSE") && report.contains("warnings")) {
    for (const auto& w : report["warnings"]) err << "warning: " << w.get<std::string>() << "\n";
  }
  if (out_path.empty()) {
    out << dump(report);
  } else {
    std::ofstream f(out_path);
    if (!f) {
      err << "adesurf: cannot write '" << out_path << "'\n";
      return kExitDomainError;
    }
    f << dump(report);
  }
  return code;
}

}  // namespace ade
