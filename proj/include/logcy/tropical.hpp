#pragma once

#include <optional>
#include <vector>

#include "logcy/exact.hpp"

namespace logcy::tropical {

struct BoundedEdge {
  int a = 0, b = 0;  // vertex indices
  Int weight = 1;
};

struct UnboundedEdge {
  int vertex = 0;
  Vec2z direction;  // primitive
  Int weight = 1;
};

/// Genus-0 plane tropical curve: an embedded weighted tree with rational
/// vertices.  Bounded edge directions are recovered from endpoint positions;
/// unbounded edges store their primitive direction explicitly.
struct TropicalCurve {
  std::vector<Vec2q> vertices;
  std::vector<BoundedEdge> bounded_edges;
  std::vector<UnboundedEdge> unbounded_edges;

  int valency(int vertex) const;
};

/// Prescription for one unbounded edge: a primitive direction and weight,
/// either free or pinned to the affine line through anchor.
struct EndCondition {
  Vec2z direction;
  Int weight = 1;
  std::optional<Vec2q> anchor;  // nullopt = Free

  bool fixed() const { return anchor.has_value(); }
};

/// Structural validation: connected tree, positive weights, primitive
/// stored directions, distinct edge endpoints.  MalformedCurveError on
/// violation.
void validate_structure(const TropicalCurve& curve);

/// True iff at every vertex the outward weighted primitive directions sum to
/// zero.  Requires a structurally well-formed curve.
bool check_balancing(const TropicalCurve& curve);

/// Mikhalkin multiplicity w1 w2 |det(u1, u2)| of a trivalent vertex, taken
/// over any two of the incident edges (well defined by balancing).
/// HigherValencyError when the valency is not 3.
Int vertex_multiplicity(const TropicalCurve& curve, int vertex);

/// Product of vertex multiplicities over all vertices.
Int curve_multiplicity(const TropicalCurve& curve);

/// Sorts vertices lexicographically and edges canonically; two equal curves
/// canonicalize to identical data.
void canonicalize(TropicalCurve& curve);

bool operator==(const TropicalCurve& a, const TropicalCurve& b);

/// Strict ordering on canonical forms (lexicographic on the sorted vertex
/// list, then edge data); the output order of enumerate.
bool canonical_less(const TropicalCurve& a, const TropicalCurve& b);

struct WeightedCurve {
  TropicalCurve curve;
  Int multiplicity;
};

/// All rigid genus-0 trivalent tropical curves realizing the end conditions
/// and passing through every point, each with its multiplicity, canonically
/// sorted.  Exact arithmetic throughout; non-generic input raises
/// DegenerateConfiguration rather than perturbing silently.
std::vector<WeightedCurve> enumerate(const std::vector<EndCondition>& ends,
                                     const std::vector<Vec2q>& points);

/// Sum of multiplicities from enumerate.
Int count(const std::vector<EndCondition>& ends, const std::vector<Vec2q>& points);

/// Count of rational plane curves of degree d through 3d-1 general points by
/// the classical recursion; the independent oracle for enumerate.
Int kontsevich_oracle(long d);

/// The 3d ends of a plane curve of degree d in the standard fan, all free.
std::vector<EndCondition> degree_ends(int d);

/// Deterministic generic-position nudge: adds seeded rational offsets of
/// magnitude below 1/n to every point.
std::vector<Vec2q> perturb(const std::vector<Vec2q>& points, std::uint64_t seed, long n);

}  // namespace logcy::tropical
