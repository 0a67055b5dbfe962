#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logcy/exact.hpp"

namespace logcy::contrib {

enum class ComponentKind { ImmersedA1, UnibranchA1, TwoComponent, MultipleCover };

/// One zero-dimensional moduli component together with how it counts:
/// num_maps points, each of length multiplicity_each, total their product.
struct ComponentContribution {
  ComponentKind kind = ComponentKind::ImmersedA1;
  Int num_maps = 1;
  Rat multiplicity_each = 1;
  Rat total = 1;

  // kind payload
  Int d1, d2;                               // TwoComponent boundary pairings
  std::vector<std::string> singularities;   // UnibranchA1 tags
  long cover_degree = 0;                    // MultipleCover

  // Geometric hypotheses that cannot be checked from the numeric input;
  // echoed so downstream reports carry them.
  std::vector<std::string> assumptions;

  bool operator==(const ComponentContribution& o) const {
    return kind == o.kind && num_maps == o.num_maps &&
           multiplicity_each == o.multiplicity_each && total == o.total;
  }
};

/// Multiplicity factor per singularity tag of a unibranch curve point.
using SingularityFactorTable = std::map<std::string, Int>;

/// node -> 1, immersed-branch -> 1, ordinary-cusp -> 2.
SingularityFactorTable default_singularity_table();

/// Two distinct immersed maximally tangent rational curves with boundary
/// pairings d1, d2 glued at a common smooth contact point in general
/// position: writing d = gcd(d1, d2), d_i = d e_i, there are d stable log
/// maps, each isolated of multiplicity min(e1, e2), total min(d1, d2).
ComponentContribution two_component(const Int& d1, const Int& d2);

/// Stable-map multiplicity of an integral rational curve with the given
/// singularities: the product of the table factors.  Unknown tags are a hard
/// error, never a guess.
Int a1_multiplicity(const std::vector<std::string>& tags,
                    const SingularityFactorTable& table);

/// k-fold multiple-cover contributions over a rigid maximally tangent curve,
/// supplied as a lookup table (loop-quiver DT values).
using CoverTable = std::map<long, Rat>;

/// Only the 5-fold two-loop value 5 ships; everything else is user-supplied.
CoverTable default_cover_table();

Rat multiple_cover(long k, const CoverTable& table);

struct LedgerTerm {
  std::string label;
  Rat coefficient = 1;
  std::optional<Rat> value;  // nullopt = unknown
};

/// Outcome of balancing total = sum coefficient_i * term_i.
struct LedgerResult {
  enum class Kind { Checked, Solved, Constraint } kind = Kind::Checked;

  // Solved: the single unknown.
  std::string solved_label;
  Rat solved_value;

  // Constraint between two unknowns: lhs = constant + slope * rhs,
  // where lhs is the later unknown in term order.
  std::string lhs;
  Rat constant;
  Rat slope;
  std::string rhs;
};

/// Zero unknowns: checks the identity (LedgerMismatchError on failure).
/// One unknown: solves it.  Two unknowns: returns the linear constraint.
/// More: UnderdeterminedError.
LedgerResult decomposition_ledger(const Rat& total, const std::vector<LedgerTerm>& terms);

}  // namespace logcy::contrib
