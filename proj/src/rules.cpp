#include "crossdep/rules.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "parse_util.hpp"

namespace crossdep {

std::string_view mode_name(DeviceMode m) {
  switch (m) {
    case DeviceMode::Off: return "off";
    case DeviceMode::Standby: return "standby";
    case DeviceMode::On: return "on";
  }
  return "?";
}

std::optional<DeviceMode> mode_from_name(std::string_view name) {
  if (name == "off") return DeviceMode::Off;
  if (name == "standby") return DeviceMode::Standby;
  if (name == "on") return DeviceMode::On;
  return std::nullopt;
}

namespace {

using detail::LineCursor;

DeviceMode read_mode(LineCursor& cur) {
  cur.skip_spaces();
  int col = cur.column();
  std::string_view token = cur.read_token();
  std::optional<DeviceMode> mode = mode_from_name(token);
  if (!mode)
    cur.fail_at(col, ParseCode::UnknownMode,
                "unknown mode '" + std::string(token) + "'");
  return *mode;
}

// `<digits>min)` — the tail of a predicted_occupied horizon argument.
std::optional<int> parse_horizon_token(std::string_view token) {
  if (token.size() < 5 || !token.ends_with("min)")) return std::nullopt;
  std::string_view digits = token.substr(0, token.size() - 4);
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || value < 1)
    return std::nullopt;
  return value;
}

Condition read_condition(LineCursor& cur) {
  Condition cond;
  cur.skip_spaces();
  int col = cur.column();
  std::string_view token = cur.read_token();
  if (token == "not") {
    cond.negated = true;
    cur.skip_spaces();
    col = cur.column();
    token = cur.read_token();
  }

  if (token == "device.mode") {
    cur.skip_spaces();
    int op_col = cur.column();
    std::string_view op = cur.read_token();
    if (op != "==")
      cur.fail_at(op_col, ParseCode::UnknownKeyword,
                  "expected '==', got '" + std::string(op) + "'");
    cond.predicate = PredicateKind::ModeIs;
    cond.mode = read_mode(cur);
    return cond;
  }
  if (token == "occupied(device.room)") {
    cond.predicate = PredicateKind::Occupied;
    return cond;
  }
  constexpr std::string_view prefix = "predicted_occupied(device.room";
  if (token.starts_with(prefix)) {
    cond.predicate = PredicateKind::PredictedOccupied;
    std::string_view rest = token.substr(prefix.size());
    if (rest == ")") return cond;
    if (rest == ",") {
      cur.skip_spaces();
      int arg_col = cur.column();
      std::optional<int> horizon = parse_horizon_token(cur.read_token());
      if (!horizon)
        cur.fail_at(arg_col, ParseCode::UnknownPredicate,
                    "horizon must be '<minutes>min' with minutes >= 1");
      cond.horizon_min = *horizon;
      return cond;
    }
    if (rest.starts_with(",")) {
      std::optional<int> horizon = parse_horizon_token(rest.substr(1));
      if (!horizon)
        cur.fail_at(col, ParseCode::UnknownPredicate,
                    "horizon must be '<minutes>min' with minutes >= 1");
      cond.horizon_min = *horizon;
      return cond;
    }
  }
  cur.fail_at(col, ParseCode::UnknownPredicate,
              "unknown predicate '" + std::string(token) + "'");
}

}  // namespace

std::vector<Rule> parse_rules(std::string_view text, std::string_view filename) {
  std::vector<Rule> rules;
  std::set<std::string> ids;

  bool in_rule = false;
  bool seen_on = false, seen_when = false;
  Rule rule;
  int rule_line = 1;

  auto close_rule = [&]() {
    if (!in_rule) return;
    const char* missing = !seen_on      ? "on"
                          : !seen_when  ? "when"
                          : rule.actions.empty() ? "then"
                                                 : nullptr;
    if (missing)
      detail::fail(filename, rule_line, 1, ParseCode::UnknownKeyword,
                   "rule '" + rule.id + "' is missing its '" +
                       std::string(missing) + "' clause");
    rules.push_back(std::move(rule));
    rule = Rule{};
    in_rule = seen_on = seen_when = false;
  };

  for (const detail::Line& raw : detail::split_lines(text)) {
    std::string_view content = detail::strip_comment(raw.text);
    if (detail::is_blank(content)) continue;
    LineCursor cur(filename, detail::Line{content, raw.number});

    int indent = cur.read_indent();
    int kw_col = cur.column();
    std::string_view kw = cur.read_token();

    if (kw == "rule") {
      if (indent != 0)
        cur.fail_at(1, ParseCode::BadIndent, "'rule' must not be indented");
      close_rule();
      cur.skip_spaces();
      int id_col = cur.column();
      std::string_view token = cur.read_token();
      if (!token.ends_with(":"))
        cur.fail_at(id_col, ParseCode::UnknownKeyword,
                    "expected '<slug>:' after 'rule'");
      std::string id(token.substr(0, token.size() - 1));
      if (!is_slug(id))
        cur.fail_at(id_col, ParseCode::BadQualifiedId,
                    "rule id must match [a-z0-9]+(_[a-z0-9]+)*");
      cur.expect_end("rule header");
      if (!ids.insert(id).second)
        cur.fail_at(id_col, ParseCode::DuplicateRuleId,
                    "duplicate rule id '" + id + "'");
      in_rule = true;
      rule.id = std::move(id);
      rule_line = raw.number;
      continue;
    }

    if (!in_rule)
      cur.fail_at(kw_col, ParseCode::UnknownKeyword,
                  "expected 'rule', got '" + std::string(kw) + "'");
    if (indent != 2)
      cur.fail_at(indent + 1, ParseCode::BadIndent,
                  "rule clauses must be indented by two spaces");

    if (kw == "on") {
      if (seen_on)
        cur.fail_at(kw_col, ParseCode::UnknownKeyword, "duplicate 'on' clause");
      cur.skip_spaces();
      int trig_col = cur.column();
      std::string_view token = cur.read_token();
      if (token == "tick") {
        rule.trigger = RuleTrigger::Tick;
      } else if (token == "occupancy_change") {
        rule.trigger = RuleTrigger::OccupancyChange;
      } else {
        cur.fail_at(trig_col, ParseCode::UnknownKeyword,
                    "unknown trigger '" + std::string(token) + "'");
      }
      cur.expect_end("'on' clause");
      seen_on = true;
    } else if (kw == "when") {
      if (seen_when)
        cur.fail_at(kw_col, ParseCode::UnknownKeyword,
                    "duplicate 'when' clause");
      rule.conditions.push_back(read_condition(cur));
      while (true) {
        cur.skip_spaces();
        if (cur.at_end()) break;
        int and_col = cur.column();
        std::string_view token = cur.read_token();
        if (token != "and")
          cur.fail_at(and_col, ParseCode::UnknownKeyword,
                      "expected 'and', got '" + std::string(token) + "'");
        rule.conditions.push_back(read_condition(cur));
      }
      seen_when = true;
    } else if (kw == "then") {
      cur.skip_spaces();
      int set_col = cur.column();
      if (cur.read_token() != "set")
        cur.fail_at(set_col, ParseCode::UnknownKeyword,
                    "expected 'set' after 'then'");
      cur.skip_spaces();
      int target_col = cur.column();
      if (cur.read_token() != "device.mode")
        cur.fail_at(target_col, ParseCode::UnknownKeyword,
                    "only 'device.mode' can be set");
      cur.skip_spaces();
      int eq_col = cur.column();
      if (cur.read_token() != "=")
        cur.fail_at(eq_col, ParseCode::UnknownKeyword, "expected '='");
      Action action{read_mode(cur)};
      cur.expect_end("'then' clause");
      rule.actions.push_back(action);
    } else {
      cur.fail_at(kw_col, ParseCode::UnknownKeyword,
                  "unknown clause '" + std::string(kw) + "'");
    }
  }
  close_rule();
  return rules;
}

namespace {

void print_condition(std::string& out, const Condition& cond) {
  switch (cond.predicate) {
    case PredicateKind::ModeIs:
      if (cond.negated) out += "not ";
      out += "device.mode == ";
      out += mode_name(cond.mode);
      return;
    case PredicateKind::Occupied:
      if (cond.negated) out += "not ";
      out += "occupied(device.room)";
      return;
    case PredicateKind::PredictedOccupied:
      if (cond.negated) out += "not ";
      out += "predicted_occupied(device.room";
      if (cond.horizon_min) {
        out += ", ";
        out += std::to_string(*cond.horizon_min);
        out += "min";
      }
      out += ")";
      return;
  }
}

}  // namespace

std::string print_rules(std::span<const Rule> rules) {
  std::string out;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Rule& rule = rules[i];
    if (i) out += "\n";
    out += "rule " + rule.id + ":\n";
    out += "  on ";
    out += rule.trigger == RuleTrigger::Tick ? "tick" : "occupancy_change";
    out += "\n  when ";
    for (std::size_t c = 0; c < rule.conditions.size(); ++c) {
      if (c) out += " and ";
      print_condition(out, rule.conditions[c]);
    }
    out += "\n";
    for (const Action& action : rule.actions) {
      out += "  then set device.mode = ";
      out += mode_name(action.set_mode);
      out += "\n";
    }
  }
  return out;
}

std::vector<FiredAction> evaluate(
    std::span<const Rule> rules, std::span<const DeviceBinding> devices,
    const std::function<bool(std::string_view)>& occupied,
    const std::function<bool(std::string_view, int)>& predicted,
    bool occupancy_changed, int default_horizon_min) {
  std::vector<const DeviceBinding*> ordered;
  ordered.reserve(devices.size());
  for (const DeviceBinding& d : devices) ordered.push_back(&d);
  std::sort(ordered.begin(), ordered.end(),
            [](const DeviceBinding* a, const DeviceBinding* b) {
              return a->id < b->id;
            });

  std::vector<FiredAction> out;
  for (const Rule& rule : rules) {
    if (rule.trigger == RuleTrigger::OccupancyChange && !occupancy_changed)
      continue;
    for (const DeviceBinding* device : ordered) {
      bool holds = std::all_of(
          rule.conditions.begin(), rule.conditions.end(),
          [&](const Condition& cond) {
            bool value = false;
            switch (cond.predicate) {
              case PredicateKind::ModeIs:
                value = device->mode == cond.mode;
                break;
              case PredicateKind::Occupied:
                value = occupied(device->room);
                break;
              case PredicateKind::PredictedOccupied:
                value = predicted(device->room,
                                  cond.horizon_min.value_or(default_horizon_min));
                break;
            }
            return cond.negated ? !value : value;
          });
      if (!holds) continue;
      for (const Action& action : rule.actions) {
        if (action.set_mode == device->mode) continue;  // no-op suppression
        out.push_back({rule.id, device->id, action.set_mode});
      }
    }
  }
  return out;
}

}  // namespace crossdep
