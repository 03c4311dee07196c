#pragma once

#include <functional>
#include <span>

#include "crossdep/onto_text.hpp"

namespace crossdep {

/// Device operating state. Ordered so that power draw can be required to be
/// monotone: off ≤ standby ≤ on.
enum class DeviceMode { Off, Standby, On };

std::string_view mode_name(DeviceMode m);
std::optional<DeviceMode> mode_from_name(std::string_view name);

enum class RuleTrigger { Tick, OccupancyChange };

enum class PredicateKind { ModeIs, Occupied, PredictedOccupied };

struct Condition {
  bool negated = false;
  PredicateKind predicate = PredicateKind::Occupied;
  DeviceMode mode = DeviceMode::Off;  // ModeIs only
  std::optional<int> horizon_min;     // PredictedOccupied; evaluator default
                                      // applies when absent

  bool operator==(const Condition&) const = default;
};

struct Action {
  DeviceMode set_mode = DeviceMode::Off;

  bool operator==(const Action&) const = default;
};

struct Rule {
  std::string id;
  RuleTrigger trigger = RuleTrigger::Tick;
  std::vector<Condition> conditions;  // conjunction, at least one
  std::vector<Action> actions;        // at least one

  bool operator==(const Rule&) const = default;
};

/// Parses the `.rules` format:
///
///   rule <slug>:
///     on <tick|occupancy_change>
///     when <cond> ( and <cond> )*
///     then set device.mode = <off|on|standby>
///
/// with `<cond>` one of `device.mode == <mode>`, `[not] occupied(device.room)`
/// and `[not] predicted_occupied(device.room[, <int>min])`. `#` comments and
/// blank lines are ignored; `then` may repeat for multiple actions.
std::vector<Rule> parse_rules(std::string_view text,
                              std::string_view filename = "<input>");

/// Canonical form; parse_rules(print_rules(rules)) reproduces `rules`.
std::string print_rules(std::span<const Rule> rules);

/// A device as the rule evaluator sees it: identity, the room whose occupancy
/// gates the predicates, and the mode before this step's actions.
struct DeviceBinding {
  std::string id;
  std::string room;
  DeviceMode mode = DeviceMode::Off;
};

struct FiredAction {
  std::string rule_id;
  std::string device_id;
  DeviceMode new_mode = DeviceMode::Off;

  bool operator==(const FiredAction&) const = default;
};

/// Matches every rule against every device with simultaneous semantics: all
/// predicates read the pre-step world supplied through `occupied` /
/// `predicted` and the bindings' modes. Rules triggered on OccupancyChange
/// only participate when `occupancy_changed` is set. Actions that would not
/// change a device's current mode are suppressed. Output order is (rule
/// order, device id lexicographic, action order).
std::vector<FiredAction> evaluate(
    std::span<const Rule> rules, std::span<const DeviceBinding> devices,
    const std::function<bool(std::string_view room)>& occupied,
    const std::function<bool(std::string_view room, int horizon_min)>& predicted,
    bool occupancy_changed, int default_horizon_min = 60);

}  // namespace crossdep
