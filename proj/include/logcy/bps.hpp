#pragma once

#include <map>
#include <string>
#include <vector>

#include "logcy/exact.hpp"

namespace logcy::bps {

/// Values of an invariant indexed by multiples k of a fixed primitive curve
/// class.  w0 is the boundary pairing of the base class, so the class with
/// multiplier k meets the boundary with total contact order k*w0.
struct InvariantSeries {
  std::string base_class_id;
  Int w0 = 0;
  std::map<long, Rat> values;
};

/// Gromov-Witten series from local BPS numbers:
///   N_k = sum over j | k of n_{k/j} / j^3.
/// Every needed divisor entry must be present (IncompleteSeriesError).
InvariantSeries cy3_bps_to_gw(const InvariantSeries& n);

/// Exact inverse of cy3_bps_to_gw.
InvariantSeries gw_to_cy3_bps(const InvariantSeries& N);

/// Log Gromov-Witten series from log BPS numbers:
///   N_K = sum over k | K of (-1)^{(k-1) K w0 / k} m_{K/k} / k^2,
/// with absent divisor entries contributing zero.
InvariantSeries log_bps_to_gw(const InvariantSeries& m);

/// Exact inverse of log_bps_to_gw.
InvariantSeries gw_to_log_bps(const InvariantSeries& N);

/// Local BPS number from the log BPS number at contact order w:
///   n = (-1)^{w-1} w m.
Rat log_local(const Rat& m, const Int& w);

/// Inverse of log_local.
Rat local_to_log(const Rat& n, const Int& w);

/// Genus-0 local BPS numbers of the canonical bundle over the plane,
/// degrees 1..6.
InvariantSeries local_p2_bps_table();

/// Image of local_p2_bps_table under local_to_log with w = 3d.
InvariantSeries derived_log_bps_table();

/// For each multiplier d, whether the value is an integer divisible by d*w0.
std::vector<std::pair<long, bool>> check_divisibility(const InvariantSeries& series);

}  // namespace logcy::bps
