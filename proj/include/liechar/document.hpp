#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liechar/charpoly.hpp"
#include "liechar/lie.hpp"

namespace liechar {

struct NamedRepresentation {
  std::string name;
  Representation rep;
  friend bool operator==(const NamedRepresentation&, const NamedRepresentation&) = default;
};

/// Linear map from a reference algebra into this one. Column j is the image of the
/// reference's j-th basis vector.
struct IsomorphismSpec {
  std::string reference;  // path, relative to the document's directory
  RatMatrix map;
  friend bool operator==(const IsomorphismSpec&, const IsomorphismSpec&) = default;
};

/// Text format (1-based indices, `#` comments):
///
///     name: M1^10
///     dim: 4
///     basis: e1, e2, e3, e4
///     brackets:
///       [1, 3, [1:-1]]          # [e1, e3] = -e1, i < j required
///     rep defining:
///       space_dim: 2
///       [1, 0; 0, -1]           # one row-major matrix per basis element
///     iso:
///       reference: n2_5.alg
///       [1, [1:1, 3:-1]]        # image of reference basis vector 1
struct AlgebraDocument {
  std::string name;
  LieAlgebra algebra;
  std::vector<NamedRepresentation> reps;
  std::optional<IsomorphismSpec> iso;

  const Representation* find_rep(std::string_view rep_name) const;
  friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;
};

/// Throws Error with code parse_syntax, index_order or jacobi_violation; messages start
/// with `line N: <field path>:`.
AlgebraDocument parse_algebra(std::string_view text);
AlgebraDocument load_algebra_file(const std::filesystem::path& path);

/// Canonical text; parse_algebra(render_algebra(d)) == d.
std::string render_algebra(const AlgebraDocument& doc);

struct IsoVerification {
  HomomorphismCheck check;
  std::string reference_name;
  bool verified() const { return check.bijective && check.bracket_preserving; }
};

/// Loads the reference document relative to `base_dir` and checks the map.
/// Throws Error(not_found) if the document has no iso block.
IsoVerification verify_iso(const AlgebraDocument& doc, const std::filesystem::path& base_dir);

}  // namespace liechar
