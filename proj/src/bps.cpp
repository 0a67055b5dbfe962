#include "logcy/bps.hpp"

#include <algorithm>

namespace logcy::bps {

namespace {

std::vector<long> divisors(long k) {
  std::vector<long> out;
  for (long j = 1; j * j <= k; ++j) {
    if (k % j == 0) {
      out.push_back(j);
      if (j != k / j) out.push_back(k / j);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

const Rat& require_entry(const InvariantSeries& s, long k, const char* who) {
  auto it = s.values.find(k);
  if (it == s.values.end())
    throw IncompleteSeriesError(std::string(who) + ": series entry for multiplier " +
                                std::to_string(k) + " is missing");
  return it->second;
}

// Sign of the divisor-k term acting on the class with outer multiplier K:
// (-1)^{(k-1) * (K/k) * w0}.
int log_sign(long outer, long k, const Int& w0) {
  Int exponent = Int(k - 1) * Int(outer / k) * w0;
  return pow_neg1(exponent);
}

}  // namespace

InvariantSeries cy3_bps_to_gw(const InvariantSeries& n) {
  InvariantSeries out{n.base_class_id, n.w0, {}};
  for (const auto& [k, unused] : n.values) {
    Rat acc = 0;
    for (long j : divisors(k))
      acc += require_entry(n, k / j, "cy3_bps_to_gw") / Rat(Int(j) * j * j);
    out.values[k] = acc;
  }
  return out;
}

InvariantSeries gw_to_cy3_bps(const InvariantSeries& N) {
  InvariantSeries out{N.base_class_id, N.w0, {}};
  for (const auto& [k, value] : N.values) {
    Rat acc = value;
    for (long j : divisors(k)) {
      if (j == 1) continue;
      acc -= require_entry(out, k / j, "gw_to_cy3_bps") / Rat(Int(j) * j * j);
    }
    out.values[k] = acc;
  }
  return out;
}

InvariantSeries log_bps_to_gw(const InvariantSeries& m) {
  InvariantSeries out{m.base_class_id, m.w0, {}};
  for (const auto& [outer, unused] : m.values) {
    Rat acc = 0;
    for (long k : divisors(outer)) {
      auto it = m.values.find(outer / k);
      if (it == m.values.end()) continue;  // absent log BPS entries count as 0
      acc += Rat(log_sign(outer, k, m.w0)) * it->second / Rat(Int(k) * k);
    }
    out.values[outer] = acc;
  }
  return out;
}

InvariantSeries gw_to_log_bps(const InvariantSeries& N) {
  InvariantSeries out{N.base_class_id, N.w0, {}};
  for (const auto& [outer, value] : N.values) {
    Rat acc = value;
    for (long k : divisors(outer)) {
      if (k == 1) continue;
      auto it = out.values.find(outer / k);
      if (it == out.values.end()) continue;
      acc -= Rat(log_sign(outer, k, N.w0)) * it->second / Rat(Int(k) * k);
    }
    out.values[outer] = acc;
  }
  return out;
}

Rat log_local(const Rat& m, const Int& w) {
  if (w <= 0) throw DomainError("log_local: contact order must be positive");
  return Rat(pow_neg1(w - 1)) * Rat(w) * m;
}

Rat local_to_log(const Rat& n, const Int& w) {
  if (w <= 0) throw DomainError("local_to_log: contact order must be positive");
  return Rat(pow_neg1(w - 1)) * n / Rat(w);
}

InvariantSeries local_p2_bps_table() {
  InvariantSeries s{"H", 3, {}};
  s.values[1] = 3;
  s.values[2] = -6;
  s.values[3] = 27;
  s.values[4] = -192;
  s.values[5] = 1695;
  s.values[6] = -17064;
  return s;
}

InvariantSeries derived_log_bps_table() {
  InvariantSeries n = local_p2_bps_table();
  InvariantSeries m{n.base_class_id, n.w0, {}};
  for (const auto& [d, value] : n.values) m.values[d] = local_to_log(value, Int(d) * n.w0);
  return m;
}

std::vector<std::pair<long, bool>> check_divisibility(const InvariantSeries& series) {
  std::vector<std::pair<long, bool>> out;
  for (const auto& [d, value] : series.values) {
    bool ok = false;
    if (value.get_den() == 1) ok = divides(Int(d) * series.w0, value.get_num());
    out.emplace_back(d, ok);
  }
  return out;
}

}  // namespace logcy::bps
