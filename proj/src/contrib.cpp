#include "logcy/contrib.hpp"

namespace logcy::contrib {

SingularityFactorTable default_singularity_table() {
  return {{"node", 1}, {"immersed-branch", 1}, {"ordinary-cusp", 2}};
}

ComponentContribution two_component(const Int& d1, const Int& d2) {
  if (d1 <= 0 || d2 <= 0)
    throw DomainError("two_component: boundary pairings must be positive");
  Int d = gcd(d1, d2);
  Int e1 = exact_div(d1, d);
  Int e2 = exact_div(d2, d);
  ComponentContribution c;
  c.kind = ComponentKind::TwoComponent;
  c.d1 = d1;
  c.d2 = d2;
  c.num_maps = d;
  c.multiplicity_each = Rat(e1 < e2 ? e1 : e2);
  c.total = Rat(d1 < d2 ? d1 : d2);
  c.assumptions = {
      "(K_X + D) . beta_i = 0 for both components",
      "both normalizations immersive, images distinct",
      "generic contact: (Z1.Z2)_P = min(d1, d2)",
  };
  return c;
}

Int a1_multiplicity(const std::vector<std::string>& tags,
                    const SingularityFactorTable& table) {
  Int product = 1;
  for (const auto& tag : tags) {
    auto it = table.find(tag);
    if (it == table.end())
      throw UnknownSingularityError("no multiplicity factor for singularity '" + tag + "'");
    product *= it->second;
  }
  return product;
}

CoverTable default_cover_table() { return {{5, Rat(5)}}; }

Rat multiple_cover(long k, const CoverTable& table) {
  if (k < 1) throw DomainError("multiple_cover: degree must be positive");
  auto it = table.find(k);
  if (it == table.end())
    throw MissingInvariantError("no multiple-cover value for degree " + std::to_string(k));
  return it->second;
}

LedgerResult decomposition_ledger(const Rat& total, const std::vector<LedgerTerm>& terms) {
  Rat known_sum = 0;
  std::vector<size_t> unknowns;
  for (size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].value)
      known_sum += terms[i].coefficient * *terms[i].value;
    else
      unknowns.push_back(i);
  }
  Rat residual = total - known_sum;

  LedgerResult res;
  if (unknowns.empty()) {
    if (residual != 0)
      throw LedgerMismatchError("ledger does not balance; residual " + format_rat(residual));
    res.kind = LedgerResult::Kind::Checked;
    return res;
  }
  if (unknowns.size() == 1) {
    const LedgerTerm& t = terms[unknowns[0]];
    if (t.coefficient == 0) throw DomainError("unknown term has zero coefficient");
    res.kind = LedgerResult::Kind::Solved;
    res.solved_label = t.label;
    res.solved_value = residual / t.coefficient;
    return res;
  }
  if (unknowns.size() == 2) {
    const LedgerTerm& first = terms[unknowns[0]];
    const LedgerTerm& second = terms[unknowns[1]];
    if (second.coefficient == 0) throw DomainError("unknown term has zero coefficient");
    res.kind = LedgerResult::Kind::Constraint;
    res.lhs = second.label;
    res.constant = residual / second.coefficient;
    res.slope = -first.coefficient / second.coefficient;
    res.rhs = first.label;
    return res;
  }
  throw UnderdeterminedError("ledger has " + std::to_string(unknowns.size()) +
                             " unknowns; at most 2 supported");
}

}  // namespace logcy::contrib
