#pragma once

#include "ade/bundles.hpp"
#include "ade/divisor.hpp"
#include "ade/error.hpp"
#include "ade/lattice.hpp"
#include "ade/lines_roots.hpp"
#include "ade/local_model.hpp"
#include "ade/spectral.hpp"
#include "ade/transform.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ade {

using Json = nlohmann::json;

/// JSON number when |v| < 2^53, decimal string otherwise.
Json to_json(const Integer& v);
/// "p/q" (or "p") string.
Json to_json(const Rational& v);
Json to_json(const LatticeClass& c);
Json to_json(const SurfaceModel& model);
Json to_json(const RootDatum& datum);
Json to_json(const FormalBundle& bundle);
Json to_json(const EBundleClass& cls);
Json to_json(const QPoly& p);
Json to_json(const CoverPoly& cover);
Json to_json(const BranchReport& report);
Json to_json(const SenFamily& family);
Json to_json(const FiberPicard& picard);
Json to_json(const SpectralFiberDatum& datum);
Json to_json(const TransformResult& result);
Json to_json(const ExtProfile& profile);
Json to_json(const EffectivityResult& result);
Json to_json(const ChainReport& report);
Json to_json(const LocalIsomorphism& iso);

Json error_json(const DomainError& e);

/// Each reader names the offending field path in its Schema errors.
Integer integer_from_json(const Json& j, const std::string& path);
Rational rational_from_json(const Json& j, const std::string& path);
LatticeClass class_from_json(const Json& j, const std::string& path = "class");
FormalBundle bundle_from_json(const Json& j, const std::string& path = "bundle");
EBundleClass ebundle_from_json(const Json& j, const std::string& path = "ebundle");
QPoly qpoly_from_json(const Json& j, const std::string& path);
CoverPoly cover_from_json(const Json& j);
/// {"kind": "p2" | "hirzebruch", "n": int} or {"id": "p2_blowup:6"}.
SurfaceModel surface_from_json(const Json& j);
/// {"vars": [{"name", "degree"}] or names, "relations": [{"var", "power", "rhs"}], "max_degree"}.
TruncRing ring_from_json(const Json& j);

struct LoadedSpectral {
  SpectralFiberDatum datum;
  std::vector<std::string> warnings;
};

/// {"N": int, "points": [p | {"p", "degree"}], "su": bool, "base_twist_degree": int}.
/// A violated SU constraint is a warning (and clears su_constraint) unless strict.
LoadedSpectral spectral_from_json(const Json& j, bool strict = false);

/// Parses text, reporting syntax errors with line and column.
Json parse_json_text(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);

LoadedSpectral load_spectral(const std::string& path, bool strict = false);
CoverPoly load_cover(const std::string& path);

/// Canonical serialisation: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace ade
