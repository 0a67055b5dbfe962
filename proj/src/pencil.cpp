#include "logcy/pencil.hpp"

namespace logcy::pencil {

Rat point_contribution(const PencilScenario& s) {
  Rat acc(s.e_total);
  for (const auto& f : s.special_fibers) {
    if (!f.direct)
      throw LedgerArityError("fiber '" + f.label + "' has an unknown contribution; use solve_fiber_contribution");
    acc += *f.direct - Rat(f.euler);
  }
  return acc;
}

Rat solve_fiber_contribution(const PencilScenario& s, const Rat& target) {
  const SpecialFiber* unknown = nullptr;
  Rat acc(s.e_total);
  for (const auto& f : s.special_fibers) {
    acc -= Rat(f.euler);
    if (f.direct) {
      acc += *f.direct;
    } else {
      if (unknown) throw LedgerArityError("more than one unknown fiber contribution");
      unknown = &f;
    }
  }
  if (!unknown) throw LedgerArityError("no unknown fiber contribution to solve for");
  return target - acc;
}

}  // namespace logcy::pencil
