#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logcy/exact.hpp"

namespace logcy::pencil {

struct SpecialFiber {
  std::string label;
  Int euler = 0;
  std::optional<Rat> direct;  // contribution of this fiber itself; nullopt = unknown
};

/// Euler-characteristic ledger for an anticanonical pencil resolved to an
/// elliptic fibration.  Fibers not listed are counted through the Euler
/// number of the total space: nodal rationals weigh 1, cuspidal 2, smooth 0.
struct PencilScenario {
  Int e_total = 0;
  std::vector<SpecialFiber> special_fibers;
};

/// N^P = sum of direct contributions + e_total - sum of special fiber Euler
/// numbers.  All direct contributions must be known (LedgerArityError).
Rat point_contribution(const PencilScenario& s);

/// Fills in the single unknown direct contribution so that
/// point_contribution equals target.  Exactly one unknown (LedgerArityError).
Rat solve_fiber_contribution(const PencilScenario& s, const Rat& target);

}  // namespace logcy::pencil
