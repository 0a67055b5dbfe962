#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "logcy/exact.hpp"

namespace logcy::lattice {

enum class BoundaryKind { SmoothElliptic, NodalCycle };

/// Curve class in the homology basis of an owning SurfaceModel.
struct CurveClass {
  IntVec coefficients;

  CurveClass() = default;
  explicit CurveClass(IntVec c) : coefficients(std::move(c)) {}
  static CurveClass from(std::vector<long> coeffs);

  Eigen::Index dim() const { return coefficients.size(); }
  bool operator==(const CurveClass& o) const { return coefficients == o.coefficients; }
};

/// A surface with a chosen basis of H_2, its intersection form, canonical
/// class and named boundary components.  boundary_kind is declared, never
/// inferred: the contact-point count differs between a smooth elliptic
/// boundary and a cycle of rational curves, and the classes alone cannot
/// tell the two apart.
struct SurfaceModel {
  std::vector<std::string> basis_labels;
  IntMat intersection_matrix;
  CurveClass canonical_class;
  std::vector<std::pair<std::string, CurveClass>> boundary;
  BoundaryKind boundary_kind = BoundaryKind::SmoothElliptic;

  Eigen::Index dim() const { return static_cast<Eigen::Index>(basis_labels.size()); }
  CurveClass boundary_total() const;
  const CurveClass& boundary_component(const std::string& name) const;

  /// Structural checks: symmetry, consistent dimensions.  Throws on failure.
  void validate() const;
};

/// a^T M b under the model's intersection matrix.
Int intersect(const SurfaceModel& model, const CurveClass& a, const CurveClass& b);

/// w = beta . D for D the sum of all boundary components.
Int tangency_weight(const SurfaceModel& model, const CurveClass& beta);

/// p_a = (beta.(beta + K))/2 + 1; InvalidClassError when not integral.
Int arithmetic_genus(const SurfaceModel& model, const CurveClass& beta);

/// Number of possible maximal-tangency contact points for contact order w:
/// w^2 on a smooth elliptic boundary, w on a nodal cycle in generic position.
Int contact_point_count(const SurfaceModel& model, const Int& w);

struct TangencyProfile {
  std::string component;        // boundary component carrying the blown-up points
  std::vector<Int> partition;   // contact orders at the new points, each >= 1
};

/// Blows up one point per partition entry on the named boundary components
/// and returns the enlarged model together with the transformed class
/// beta~ = pullback(beta) - sum p_ij E_ij.  Listed components must have
/// their full boundary pairing distributed (sum of partition = beta . D_i);
/// unlisted components pull back unchanged.  Interior blow-ups are not
/// representable: every new point sits on exactly one declared component.
std::pair<SurfaceModel, CurveClass> blowup_transform(
    const SurfaceModel& base, const CurveClass& beta,
    const std::vector<TangencyProfile>& profile);

/// Bundled models: "P2-elliptic", "P2-toric", "GPS-weak-dP".
/// Loaded from the data directory (see data_dir() in io.hpp).
SurfaceModel preset(const std::string& name);

SurfaceModel parse_model(std::istream& in);
void write_model(std::ostream& out, const SurfaceModel& model);

}  // namespace logcy::lattice
