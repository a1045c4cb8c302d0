#include "ade/io.hpp"

#include "ade/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ade {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw DomainError(ErrorCode::Schema, "field '" + path + "': " + what);
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& field(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) schema(path.empty() ? "<root>" : path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) schema(join(path, key), "missing");
  return *it;
}

const Json* optional_field(const Json& obj, const std::string& key) {
  const auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

const Json& array_field(const Json& obj, const std::string& key, const std::string& path) {
  const Json& a = field(obj, key, path);
  if (!a.is_array()) schema(join(path, key), "expected an array");
  return a;
}

long int_from_json(const Json& j, const std::string& path, long lo, long hi) {
  const Integer v = integer_from_json(j, path);
  if (v < lo || v > hi) schema(path, "value " + v.get_str() + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
  return v.get_si();
}

std::string string_from_json(const Json& j, const std::string& path) {
  if (!j.is_string()) schema(path, "expected a string");
  return j.get<std::string>();
}

Json classes_to_json(const std::vector<LatticeClass>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back(to_json(c));
  return a;
}

Json certificate_json(const std::vector<std::pair<LatticeClass, Integer>>& cert) {
  Json a = Json::array();
  for (const auto& [c, m] : cert) a.push_back({{"class", to_json(c)}, {"multiplicity", to_json(m)}});
  return a;
}

Json optional_integer(const std::optional<Integer>& v) { return v ? to_json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const Integer& v) {
  static const Integer limit = Integer(1) << 53;
  if (abs(v) < limit) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Json to_json(const Rational& v) { return Json(v.get_str()); }

Json to_json(const LatticeClass& c) {
  Json coeffs = Json::array();
  for (const auto& x : c.coeffs()) coeffs.push_back(to_json(x));
  return {{"basis", c.basis_id()}, {"coeffs", coeffs}};
}

Json to_json(const SurfaceModel& model) {
  Json gram = Json::array();
  for (const auto& row : model.gram()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    gram.push_back(r);
  }
  const auto [pos, neg] = signature(model);
  return {{"id", model.id()},
          {"kind", surface_kind_name(model.kind())},
          {"n", model.n()},
          {"rank", model.rank()},
          {"basis", model.basis_labels()},
          {"gram", gram},
          {"canonical", to_json(model.canonical())},
          {"boundary", to_json(model.boundary())},
          {"K_squared", to_json(model.pair(model.canonical(), model.canonical()))},
          {"signature", {pos, neg}},
          {"fiber", model.fiber_class() ? to_json(*model.fiber_class()) : Json(nullptr)},
          {"base", model.base_class() ? to_json(*model.base_class()) : Json(nullptr)}};
}

Json to_json(const RootDatum& datum) {
  Json comps = Json::array();
  for (const auto& c : datum.components) {
    comps.push_back({{"label", c.label()}, {"series", std::string(1, c.series)}, {"rank", c.rank}, {"nodes", c.nodes}});
  }
  return {{"basis", datum.basis_id},
          {"type", datum.type_label()},
          {"count", datum.roots.size()},
          {"roots", classes_to_json(datum.roots)},
          {"simple_roots", classes_to_json(datum.simple_roots)},
          {"cartan", datum.cartan},
          {"components", comps}};
}

Json to_json(const FormalBundle& bundle) {
  Json summands = Json::array();
  for (const auto& s : bundle.summands()) summands.push_back({{"class", to_json(s.cls)}, {"ext_group", s.ext_group}});
  Json out = {{"model", bundle.model_id()}, {"rank", bundle.rank()}, {"summands", summands}};
  if (!bundle.model_id().empty()) out["c1"] = to_json(bundle.c1(model_from_id(bundle.model_id())));
  return out;
}

Json to_json(const EBundleClass& cls) {
  Json points = Json::array();
  for (const auto& p : cls.points) {
    points.push_back({{"p", p.point.value}, {"mult", p.multiplicity}, {"regular", p.regular}});
  }
  Json out = {{"N", cls.order}, {"rank", cls.rank()}, {"points", points}};
  if (cls.degree != 0) out["degree"] = cls.degree;
  return out;
}

Json to_json(const QPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

Json to_json(const CoverPoly& cover) {
  Json coeffs = Json::array();
  for (const auto& c : cover.coeffs) coeffs.push_back(to_json(c));
  return {{"n", cover.n}, {"coeffs", coeffs}};
}

Json to_json(const BranchReport& report) {
  Json points = Json::array();
  for (const auto& b : report.branch_points) points.push_back({{"t", to_json(b.t)}, {"partition", b.partition}});
  Json factors = Json::array();
  for (const auto& f : report.nonrational_factors) factors.push_back({{"coeffs", to_json(f)}, {"text", f.to_string()}});
  return {{"discriminant", to_json(report.discriminant)},
          {"discriminant_text", report.discriminant.to_string()},
          {"branch_points", points},
          {"nonrational_factors", factors},
          {"roots_complete", report.roots_complete}};
}

Json to_json(const SenFamily& f) {
  return {{"b2", to_json(f.b2)},
          {"b4", to_json(f.b4)},
          {"b6", to_json(f.b6)},
          {"delta", to_json(f.delta)},
          {"delta_text", f.delta.to_string()},
          {"d_K", f.degrees.d_K},
          {"k", f.degrees.k},
          {"delta_fiber_degree", f.delta_fiber_degree},
          {"cover_degree", f.cover_degree},
          {"degenerate", f.degenerate},
          {"warnings", f.warnings}};
}

Json to_json(const FiberPicard& p) {
  const auto block = [](const PicardBlock& b) {
    return Json{{"generators", classes_to_json(b.generators)}, {"support", b.support}, {"rank", b.generators.size()}};
  };
  return {{"model", p.model_id},
          {"n", p.n},
          {"root_block", block(p.root_block)},
          {"complement", block(p.complement)},
          {"root_type", p.root_type},
          {"index", to_json(p.index)}};
}

Json to_json(const SpectralFiberDatum& d) {
  Json points = Json::array();
  for (const auto& s : d.sheets) points.push_back({{"p", s.point.value}, {"degree", s.degree}});
  return {{"N", d.order}, {"points", points}, {"su", d.su_constraint}, {"base_twist_degree", d.base_twist_degree}};
}

Json to_json(const TransformResult& r) {
  Json blocks = Json::array();
  for (const auto& b : r.collision_blocks) {
    blocks.push_back({{"point", b.point.value},
                      {"multiplicity", b.multiplicity},
                      {"labels", b.labels},
                      {"filtration", classes_to_json(b.filtration)},
                      {"ext_group", b.ext_group}});
  }
  Json marking = Json::object();
  for (const auto& [label, p] : r.marking) marking["l" + std::to_string(label)] = p.value;
  return {{"bundle", to_json(r.bundle)},
          {"collision_blocks", blocks},
          {"c1_fiber", to_json(r.c1_fiber)},
          {"boundary", to_json(r.boundary)},
          {"marking", marking},
          {"base_twist_degree", r.base_twist_degree},
          {"sigma_sheets", r.sigma_sheets}};
}

Json to_json(const ExtProfile& p) {
  return {{"status", effectivity_name(p.status)},
          {"ext0", optional_integer(p.ext0)},
          {"ext1", optional_integer(p.ext1)},
          {"ext2", optional_integer(p.ext2)},
          {"index", optional_integer(p.index)},
          {"certificate", certificate_json(p.certificate)}};
}

Json to_json(const EffectivityResult& r) {
  return {{"status", effectivity_name(r.status)}, {"certificate", certificate_json(r.certificate)}, {"note", r.note}};
}

Json to_json(const ChainReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json dims = Json::object();
    for (const auto& [k, v] : c.dims) dims[k] = v;
    Json e = {{"id", c.id}, {"description", c.description}, {"passed", c.passed}, {"dims", dims}};
    e["failure_degree"] = c.failure_degree ? Json(*c.failure_degree) : Json(nullptr);
    checks.push_back(e);
  }
  return {{"maxdeg", r.maxdeg},
          {"passed", r.passed()},
          {"checks", checks},
          {"direct_sum_split", {r.direct_sum_split.first, r.direct_sum_split.second}},
          {"free_split", {r.free_split.first, r.free_split.second}},
          {"warnings", r.warnings}};
}

Json to_json(const LocalIsomorphism& iso) {
  Json split = nullptr;
  if (iso.exceptional_split) split = {iso.exceptional_split->first, iso.exceptional_split->second};
  return {{"multiplicity", iso.multiplicity},
          {"rank", iso.rank},
          {"locally_free", iso.locally_free},
          {"exceptional_split", split},
          {"cross_checked", iso.cross_checked},
          {"description", iso.description}};
}

Json error_json(const DomainError& e) {
  return {{"error", {{"kind", error_code_name(e.code())}, {"message", e.what()}}}};
}

Integer integer_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    Integer v;
    const std::string s = j.get<std::string>();
    if (s.empty() || v.set_str(s, 10) != 0) schema(path, "'" + s + "' is not an integer");
    return v;
  }
  schema(path, "expected an integer");
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(integer_from_json(j, path));
  if (!j.is_string()) schema(path, "expected a rational \"p/q\"");
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  Integer num, den = 1;
  if (num.set_str(s.substr(0, slash), 10) != 0 ||
      (slash != std::string::npos && den.set_str(s.substr(slash + 1), 10) != 0)) {
    schema(path, "'" + s + "' is not a rational");
  }
  if (den == 0) schema(path, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

LatticeClass class_from_json(const Json& j, const std::string& path) {
  const std::string basis = string_from_json(field(j, "basis", path), join(path, "basis"));
  const SurfaceModel model = model_from_id(basis);
  const Json& coeffs = array_field(j, "coeffs", path);
  if (coeffs.size() != model.rank()) {
    schema(join(path, "coeffs"), "expected " + std::to_string(model.rank()) + " entries");
  }
  std::vector<Integer> v;
  for (std::size_t i = 0; i < coeffs.size(); ++i) v.push_back(integer_from_json(coeffs[i], at(join(path, "coeffs"), i)));
  return model.make_class(std::move(v));
}

FormalBundle bundle_from_json(const Json& j, const std::string& path) {
  const std::string model = string_from_json(field(j, "model", path), join(path, "model"));
  const Json& arr = array_field(j, "summands", path);
  std::vector<Summand> summands;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = at(join(path, "summands"), i);
    Summand s{class_from_json(field(arr[i], "class", p), join(p, "class")), 0};
    if (const Json* g = optional_field(arr[i], "ext_group")) s.ext_group = static_cast<int>(int_from_json(*g, join(p, "ext_group"), 0, 1 << 20));
    if (s.cls.basis_id() != model) schema(join(p, "class"), "basis differs from the bundle model");
    summands.push_back(std::move(s));
  }
  return {model, std::move(summands)};
}

EBundleClass ebundle_from_json(const Json& j, const std::string& path) {
  EBundleClass out;
  out.order = int_from_json(field(j, "N", path), join(path, "N"), 1, 1L << 40);
  if (const Json* d = optional_field(j, "degree")) out.degree = int_from_json(*d, join(path, "degree"), -(1L << 40), 1L << 40);
  const Json& arr = array_field(j, "points", path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = at(join(path, "points"), i);
    EPointEntry e;
    e.point.value = int_from_json(field(arr[i], "p", p), join(p, "p"), 0, out.order - 1);
    e.multiplicity = static_cast<int>(int_from_json(field(arr[i], "mult", p), join(p, "mult"), 1, 1 << 20));
    const Json& reg = field(arr[i], "regular", p);
    if (!reg.is_boolean()) schema(join(p, "regular"), "expected a boolean");
    e.regular = reg.get<bool>();
    out.points.push_back(e);
  }
  out.normalize();
  return out;
}

QPoly qpoly_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array of rationals");
  std::vector<Rational> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(rational_from_json(j[i], at(path, i)));
  return QPoly(std::move(c));
}

CoverPoly cover_from_json(const Json& j) {
  const long n = int_from_json(field(j, "n", ""), "n", 1, 4096);
  const Json& arr = array_field(j, "coeffs", "");
  if (arr.size() != static_cast<std::size_t>(n)) schema("coeffs", "expected " + std::to_string(n) + " polynomials");
  std::vector<QPoly> coeffs;
  for (std::size_t i = 0; i < arr.size(); ++i) coeffs.push_back(qpoly_from_json(arr[i], at("coeffs", i)));
  return make_cover(static_cast<int>(n), std::move(coeffs));
}

SurfaceModel surface_from_json(const Json& j) {
  if (const Json* id = optional_field(j, "id")) return model_from_id(string_from_json(*id, "id"));
  const std::string kind = string_from_json(field(j, "kind", ""), "kind");
  const int n = static_cast<int>(int_from_json(field(j, "n", ""), "n", 0, kMaxBlowups));
  if (kind == "p2" || kind == "p2_blowup") return build_surface(SurfaceKind::P2Blowup, n);
  if (kind == "hirzebruch" || kind == "hirzebruch_blowup") return build_surface(SurfaceKind::HirzebruchBlowup, n);
  schema("kind", "expected 'p2' or 'hirzebruch', got '" + kind + "'");
}

TruncRing ring_from_json(const Json& j) {
  const Json& vars = array_field(j, "vars", "");
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].is_string()) {
      names.push_back(vars[i].get<std::string>());
      degrees.push_back(1);
    } else {
      const std::string p = at("vars", i);
      names.push_back(string_from_json(field(vars[i], "name", p), join(p, "name")));
      degrees.push_back(static_cast<int>(int_from_json(field(vars[i], "degree", p), join(p, "degree"), 1, 64)));
    }
  }
  std::vector<Relation> relations;
  if (const Json* rels = optional_field(j, "relations")) {
    if (!rels->is_array()) schema("relations", "expected an array");
    for (std::size_t i = 0; i < rels->size(); ++i) {
      const std::string p = at("relations", i);
      const Json& r = (*rels)[i];
      const std::string var = string_from_json(field(r, "var", p), join(p, "var"));
      const auto it = std::find(names.begin(), names.end(), var);
      if (it == names.end()) schema(join(p, "var"), "unknown variable '" + var + "'");
      Relation rel;
      rel.var = static_cast<std::size_t>(it - names.begin());
      rel.power = static_cast<int>(int_from_json(field(r, "power", p), join(p, "power"), 1, 64));
      rel.rhs = parse_poly(string_from_json(field(r, "rhs", p), join(p, "rhs")), names);
      relations.push_back(std::move(rel));
    }
  }
  int max_degree = 8;
  if (const Json* m = optional_field(j, "max_degree")) max_degree = static_cast<int>(int_from_json(*m, "max_degree", 0, 64));
  return {std::move(names), std::move(degrees), std::move(relations), max_degree};
}

LoadedSpectral spectral_from_json(const Json& j, bool strict) {
  LoadedSpectral out;
  SpectralFiberDatum& d = out.datum;
  if (!j.is_object()) schema("<root>", "expected an object");
  if (const Json* n = optional_field(j, "N")) {
    const Integer order = integer_from_json(*n, "N");
    if (order <= 0) throw DomainError(ErrorCode::InvalidDatum, "field 'N': group order must be positive");
    if (order > Integer(1) << 40) schema("N", "group order too large");
    d.order = order.get_si();
  }
  const Json& points = array_field(j, "points", "");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string p = at("points", i);
    Sheet s;
    Integer value;
    if (points[i].is_object()) {
      value = integer_from_json(field(points[i], "p", p), join(p, "p"));
      if (const Json* deg = optional_field(points[i], "degree")) s.degree = static_cast<int>(int_from_json(*deg, join(p, "degree"), 1, 4096));
    } else {
      value = integer_from_json(points[i], p);
    }
    s.point.value = reduce_mod(value, d.order);
    d.sheets.push_back(s);
  }
  bool su = true;
  if (const Json* s = optional_field(j, "su")) {
    if (!s->is_boolean()) schema("su", "expected a boolean");
    su = s->get<bool>();
  }
  if (const Json* t = optional_field(j, "base_twist_degree")) d.base_twist_degree = int_from_json(*t, "base_twist_degree", -(1L << 40), 1L << 40);
  if (su) {
    std::vector<EGroupPoint> pts;
    for (const auto& s : d.sheets)
      for (int k = 0; k < s.degree; ++k) pts.push_back(s.point);
    if (check_su_constraint(pts, d.order)) {
      d.su_constraint = true;
    } else if (strict) {
      throw DomainError(ErrorCode::InvalidDatum, "points do not sum to the origin mod " + std::to_string(d.order));
    } else {
      out.warnings.push_back("points do not sum to the origin mod " + std::to_string(d.order) +
                             "; SU constraint dropped");
    }
  }
  validate(d);
  return out;
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw DomainError(ErrorCode::Parse, source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                                            ": invalid JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

LoadedSpectral load_spectral(const std::string& path, bool strict) {
  return spectral_from_json(read_json_file(path), strict);
}

CoverPoly load_cover(const std::string& path) { return cover_from_json(read_json_file(path)); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ade
