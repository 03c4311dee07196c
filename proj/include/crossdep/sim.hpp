#pragma once

#include "crossdep/occupancy.hpp"
#include "crossdep/rules.hpp"

namespace crossdep {

/// Intended usage window: the device runs in `mode` over [start_min, end_min).
struct ScheduleEntry {
  int start_min = 0;
  int end_min = 0;
  DeviceMode mode = DeviceMode::Off;

  bool operator==(const ScheduleEntry&) const = default;
};

struct Device {
  std::string id;
  std::string room;
  double power_off_w = 0.0;
  double power_standby_w = 0.0;
  double power_on_w = 0.0;
  DeviceMode initial_mode = DeviceMode::Off;
  std::vector<ScheduleEntry> schedule;

  double power(DeviceMode mode) const {
    switch (mode) {
      case DeviceMode::Off: return power_off_w;
      case DeviceMode::Standby: return power_standby_w;
      case DeviceMode::On: return power_on_w;
    }
    return 0.0;
  }

  bool operator==(const Device&) const = default;
};

/// Presence in `room` over [start_min, end_min) of the simulated day(s).
struct OccupancyInterval {
  std::string room;
  int start_min = 0;
  int end_min = 0;

  bool operator==(const OccupancyInterval&) const = default;
};

struct Scenario {
  std::string name;
  int duration_min = 0;
  std::vector<std::string> rooms;
  std::vector<Device> devices;
  std::vector<OccupancyInterval> occupancy_trace;
  std::vector<HistoryInterval> history;

  bool operator==(const Scenario&) const = default;
};

/// Syntactic / structural problems in a scenario file (malformed JSON, wrong
/// types, missing or unknown keys). Semantic violations of the scenario
/// invariants throw Error{ScenarioInvalid} instead.
class ScenarioFormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Scenario scenario_from_json(std::string_view text,
                            std::string_view filename = "<input>");
std::string scenario_to_json(const Scenario& scenario);

/// Checks every scenario invariant (rooms resolve, interval bounds, power
/// monotonicity, schedule overlap, unique ids). Throws Error{ScenarioInvalid}
/// naming the offending element.
void validate_scenario(const Scenario& scenario);

enum class EventSource { Schedule, Rule };

struct SimEvent {
  int time_min = 0;
  EventSource source = EventSource::Schedule;
  std::string rule_id;  // empty for schedule events
  std::string device_id;
  DeviceMode new_mode = DeviceMode::Off;

  bool operator==(const SimEvent&) const = default;
};

struct WorldState {
  int time_min = 0;
  std::map<std::string, DeviceMode> device_modes;
  std::map<std::string, bool> occupancy;
  std::vector<SimEvent> event_log;
};

/// Two rules (or one rule twice) asked for different modes on one device in
/// the same minute; the first emitted action won.
struct RuleConflict {
  int time_min = 0;
  std::string device_id;
  std::string winner_rule;
  std::string loser_rule;
  DeviceMode winner_mode = DeviceMode::Off;
  DeviceMode loser_mode = DeviceMode::Off;

  bool operator==(const RuleConflict&) const = default;
};

struct DeviceEnergy {
  double baseline_wh = 0.0;
  double controlled_wh = 0.0;

  bool operator==(const DeviceEnergy&) const = default;
};

struct SimParams {
  int slot_minutes = 30;
  double theta = 0.2;
  int horizon_min = 60;
};

struct SimReport {
  std::map<std::string, DeviceEnergy> per_device;
  DeviceEnergy total;
  double savings_wh = 0.0;      // Σ per-device (baseline − controlled)
  std::vector<SimEvent> events;  // controlled pass, time-ordered
  std::vector<RuleConflict> conflicts;  // diagnostics; not serialized
};

/// Runs the scenario twice at one-minute resolution: a baseline pass driven
/// by schedules alone, and a controlled pass where each minute applies
/// schedule changes, then occupancy updates, then rule actions (simultaneous
/// semantics, first action per device wins). Energy accrues from the mode a
/// device ends the minute in.
SimReport run(const Scenario& scenario, std::span<const Rule> rules,
              const SimParams& params = {});

/// Canonical report JSON: fixed key order, energies with three decimals,
/// byte-stable across runs.
std::string report_to_json(const SimReport& report);

/// Human-readable summary with the event log.
std::string report_to_text(const SimReport& report);

}  // namespace crossdep
