#pragma once

#include <map>
#include <span>

#include "crossdep/ontology.hpp"

namespace crossdep {

/// One observed presence interval on a past day. Minutes are minute-of-day,
/// half-open [start_min, end_min), end_min ≤ 1440.
struct HistoryInterval {
  int day = 0;  // 0-based day index
  std::string room;
  int start_min = 0;
  int end_min = 0;

  bool operator==(const HistoryInterval&) const = default;
};

/// Per-room, per-slot historical occupancy frequency. Rooms or slots with no
/// recorded presence simply have no entry (frequency zero).
struct OccupancyModel {
  int slot_minutes = 30;  // divides 1440
  double threshold = 0.2;
  std::map<std::pair<std::string, int>, double> freq;

  int slots_per_day() const { return 1440 / slot_minutes; }
};

/// freq(room, slot) = occupied minutes in that slot across all history days ÷
/// (slot_minutes × day count), where the day count is max(day)+1 and
/// overlapping intervals are merged before counting. Throws Error{BadSlot}
/// when slot_minutes does not divide 1440, Error{BadArgument} on a threshold
/// outside [0,1] or a malformed interval.
OccupancyModel train(std::span<const HistoryInterval> history, int slot_minutes,
                     double threshold);

/// True iff any slot overlapping the wrapped window
/// [t_min mod 1440, t_min mod 1440 + horizon_min) has frequency ≥ threshold.
/// Unknown rooms have frequency zero everywhere and are not an error.
/// Throws Error{BadArgument} when t_min < 0 or horizon_min < 1.
bool predicted_occupied(const OccupancyModel& model, std::string_view room,
                        int t_min, int horizon_min);

}  // namespace crossdep
