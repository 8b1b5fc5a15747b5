#pragma once

// JSON encoding of bodies, lattices, matrices and reports ("gon/1").
//
// Scalars are "p/q" strings (bare JSON integers are accepted on input).
// Irrational values are {"sqrt": "p/q"} and enclosures {"lo": .., "hi": ..}.

#include "gon/body.hpp"
#include "gon/lattice.hpp"
#include "gon/minima.hpp"
#include "gon/siegel.hpp"
#include "gon/verify.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace gon {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "gon/1";

/// Malformed or schema-violating input; `path` is a JSON pointer.
class InputError : public std::runtime_error {
 public:
  InputError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

Rat rat_from_json(const Json& j, const std::string& path = "");
QVec qvec_from_json(const Json& j, const std::string& path = "");

Json to_json(const Rat& r);
Json to_json(const Int& z);
Json to_json(const QuadVal& q);
Json to_json(const Interval& iv);
Json to_json(const Value& v);
Json to_json(std::span<const Rat> v);
Json to_json(std::span<const Int> v);

/// {"type": hpoly | vpoly | box | cube | cross | ellipsoid | simplex |
/// dual_simplex | hexagon, ...}.
Body body_from_json(const Json& j);
/// Canonical form: box, cross and ellipsoid keep their type, every other
/// polytope is written as its V-description.
Json body_to_json(const Body& k);

/// {"basis": [[...], ...]} listing basis vectors, {"integer": n}, or a
/// matrix object whose columns are the basis vectors.
Lattice lattice_from_json(const Json& j);
Json lattice_to_json(const Lattice& l);

/// {"rows": m, "cols": n, "data": [[...], ...]} with row-major data.
QMat matrix_from_json(const Json& j, const std::string& path = "");
Json matrix_to_json(const QMat& a);

Json minima_to_json(const MinimaResult& m);
Json report_to_json(const CheckReport& r);
Json scan_to_json(const ScanReport& s, bool with_records);
Json siegel_to_json(const SiegelSolution& s);
/// Full corpus, or only failing reports (with their instances) when
/// `failures_only`.
Json corpus_to_json(const CorpusReport& c, bool failures_only);

/// Structural problems of an output document (empty when valid).
std::vector<std::string> validate_output(const Json& doc);

}  // namespace gon
