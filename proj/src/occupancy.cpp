#include "crossdep/occupancy.hpp"

#include <algorithm>

namespace crossdep {

OccupancyModel train(std::span<const HistoryInterval> history, int slot_minutes,
                     double threshold) {
  if (slot_minutes < 1 || 1440 % slot_minutes != 0)
    throw Error(ErrCode::BadSlot, "slot_minutes must divide 1440, got " +
                                      std::to_string(slot_minutes));
  if (!(threshold >= 0.0 && threshold <= 1.0))
    throw Error(ErrCode::BadArgument, "threshold must be within [0, 1]");

  OccupancyModel model;
  model.slot_minutes = slot_minutes;
  model.threshold = threshold;
  if (history.empty()) return model;

  int n_days = 0;
  std::map<std::pair<std::string, int>, std::vector<std::pair<int, int>>>
      per_room_day;
  for (const HistoryInterval& h : history) {
    if (h.day < 0 || h.start_min < 0 || h.start_min >= h.end_min ||
        h.end_min > 1440)
      throw Error(ErrCode::BadArgument,
                  "malformed history interval for room \"" + h.room + "\"");
    n_days = std::max(n_days, h.day + 1);
    per_room_day[{h.room, h.day}].emplace_back(h.start_min, h.end_min);
  }

  // Merge each day's intervals so overlapping records do not double-count.
  std::map<std::pair<std::string, int>, int> occupied_minutes;
  for (auto& [key, intervals] : per_room_day) {
    std::sort(intervals.begin(), intervals.end());
    int cur_start = intervals.front().first;
    int cur_end = intervals.front().second;
    auto flush = [&](int start, int end) {
      for (int slot = start / slot_minutes; slot * slot_minutes < end; ++slot) {
        int lo = std::max(start, slot * slot_minutes);
        int hi = std::min(end, (slot + 1) * slot_minutes);
        occupied_minutes[{key.first, slot}] += hi - lo;
      }
    };
    for (std::size_t i = 1; i < intervals.size(); ++i) {
      auto [s, e] = intervals[i];
      if (s <= cur_end) {
        cur_end = std::max(cur_end, e);
      } else {
        flush(cur_start, cur_end);
        cur_start = s;
        cur_end = e;
      }
    }
    flush(cur_start, cur_end);
  }

  for (const auto& [key, minutes] : occupied_minutes)
    model.freq[key] = static_cast<double>(minutes) /
                      (static_cast<double>(slot_minutes) * n_days);
  return model;
}

bool predicted_occupied(const OccupancyModel& model, std::string_view room,
                        int t_min, int horizon_min) {
  if (t_min < 0)
    throw Error(ErrCode::BadArgument, "t_min must be non-negative");
  if (horizon_min < 1)
    throw Error(ErrCode::BadArgument, "horizon_min must be at least 1");

  int start = t_min % 1440;
  int span = std::min(horizon_min, 1440);  // a full day covers every slot
  int slots = model.slots_per_day();
  std::string key(room);

  int first_slot = start / model.slot_minutes;
  int last_slot = (start + span - 1) / model.slot_minutes;
  for (int s = first_slot; s <= last_slot; ++s) {
    auto it = model.freq.find({key, s % slots});
    double freq = it == model.freq.end() ? 0.0 : it->second;
    if (freq >= model.threshold) return true;
  }
  return false;
}

}  // namespace crossdep
