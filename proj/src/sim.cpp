#include "crossdep/sim.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include <json.hpp>

namespace crossdep {

namespace {

using nlohmann::json;

[[noreturn]] void format_fail(std::string_view filename, std::string msg) {
  throw ScenarioFormatError(std::string(filename) + ": " + std::move(msg));
}

void check_keys(const json& obj, std::initializer_list<const char*> keys,
                std::string_view filename, const std::string& ctx) {
  if (!obj.is_object()) format_fail(filename, ctx + " must be an object");
  for (const auto& item : obj.items()) {
    if (std::find_if(keys.begin(), keys.end(), [&](const char* k) {
          return item.key() == k;
        }) == keys.end())
      format_fail(filename, "unknown key \"" + item.key() + "\" in " + ctx);
  }
  for (const char* k : keys)
    if (!obj.contains(k))
      format_fail(filename, "missing key \"" + std::string(k) + "\" in " + ctx);
}

int get_int(const json& v, std::string_view filename, const std::string& what) {
  if (!v.is_number_integer())
    format_fail(filename, what + " must be an integer");
  return v.get<int>();
}

double get_number(const json& v, std::string_view filename,
                  const std::string& what) {
  if (!v.is_number()) format_fail(filename, what + " must be a number");
  return v.get<double>();
}

std::string get_string(const json& v, std::string_view filename,
                       const std::string& what) {
  if (!v.is_string()) format_fail(filename, what + " must be a string");
  return v.get<std::string>();
}

DeviceMode get_mode(const json& v, std::string_view filename,
                    const std::string& what) {
  std::string name = get_string(v, filename, what);
  std::optional<DeviceMode> mode = mode_from_name(name);
  if (!mode) format_fail(filename, what + ": unknown mode \"" + name + "\"");
  return *mode;
}

const json& get_array(const json& v, std::string_view filename,
                      const std::string& what) {
  if (!v.is_array()) format_fail(filename, what + " must be an array");
  return v;
}

}  // namespace

Scenario scenario_from_json(std::string_view text, std::string_view filename) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& err) {
    format_fail(filename, err.what());
  }
  check_keys(root,
             {"name", "duration_min", "rooms", "devices", "occupancy_trace",
              "history"},
             filename, "scenario");

  Scenario s;
  s.name = get_string(root["name"], filename, "name");
  s.duration_min = get_int(root["duration_min"], filename, "duration_min");

  for (const json& r : get_array(root["rooms"], filename, "rooms"))
    s.rooms.push_back(get_string(r, filename, "rooms entry"));

  std::size_t di = 0;
  for (const json& dj : get_array(root["devices"], filename, "devices")) {
    std::string ctx = "devices[" + std::to_string(di++) + "]";
    check_keys(dj, {"id", "room", "power_w", "initial_mode", "schedule"},
               filename, ctx);
    Device d;
    d.id = get_string(dj["id"], filename, ctx + ".id");
    d.room = get_string(dj["room"], filename, ctx + ".room");
    check_keys(dj["power_w"], {"off", "standby", "on"}, filename,
               ctx + ".power_w");
    d.power_off_w = get_number(dj["power_w"]["off"], filename,
                               ctx + ".power_w.off");
    d.power_standby_w = get_number(dj["power_w"]["standby"], filename,
                                   ctx + ".power_w.standby");
    d.power_on_w = get_number(dj["power_w"]["on"], filename,
                              ctx + ".power_w.on");
    d.initial_mode = get_mode(dj["initial_mode"], filename,
                              ctx + ".initial_mode");
    std::size_t si = 0;
    for (const json& ej :
         get_array(dj["schedule"], filename, ctx + ".schedule")) {
      std::string ectx = ctx + ".schedule[" + std::to_string(si++) + "]";
      check_keys(ej, {"start_min", "end_min", "mode"}, filename, ectx);
      ScheduleEntry e;
      e.start_min = get_int(ej["start_min"], filename, ectx + ".start_min");
      e.end_min = get_int(ej["end_min"], filename, ectx + ".end_min");
      e.mode = get_mode(ej["mode"], filename, ectx + ".mode");
      d.schedule.push_back(e);
    }
    s.devices.push_back(std::move(d));
  }

  std::size_t oi = 0;
  for (const json& oj :
       get_array(root["occupancy_trace"], filename, "occupancy_trace")) {
    std::string ctx = "occupancy_trace[" + std::to_string(oi++) + "]";
    check_keys(oj, {"room", "start_min", "end_min"}, filename, ctx);
    OccupancyInterval o;
    o.room = get_string(oj["room"], filename, ctx + ".room");
    o.start_min = get_int(oj["start_min"], filename, ctx + ".start_min");
    o.end_min = get_int(oj["end_min"], filename, ctx + ".end_min");
    s.occupancy_trace.push_back(std::move(o));
  }

  std::size_t hi = 0;
  for (const json& hj : get_array(root["history"], filename, "history")) {
    std::string ctx = "history[" + std::to_string(hi++) + "]";
    check_keys(hj, {"day", "room", "start_min", "end_min"}, filename, ctx);
    HistoryInterval h;
    h.day = get_int(hj["day"], filename, ctx + ".day");
    h.room = get_string(hj["room"], filename, ctx + ".room");
    h.start_min = get_int(hj["start_min"], filename, ctx + ".start_min");
    h.end_min = get_int(hj["end_min"], filename, ctx + ".end_min");
    s.history.push_back(std::move(h));
  }
  return s;
}

std::string scenario_to_json(const Scenario& s) {
  nlohmann::ordered_json root;
  root["name"] = s.name;
  root["duration_min"] = s.duration_min;
  root["rooms"] = s.rooms;
  root["devices"] = nlohmann::ordered_json::array();
  for (const Device& d : s.devices) {
    nlohmann::ordered_json dj;
    dj["id"] = d.id;
    dj["room"] = d.room;
    dj["power_w"] = {{"off", d.power_off_w},
                     {"standby", d.power_standby_w},
                     {"on", d.power_on_w}};
    dj["initial_mode"] = std::string(mode_name(d.initial_mode));
    dj["schedule"] = nlohmann::ordered_json::array();
    for (const ScheduleEntry& e : d.schedule)
      dj["schedule"].push_back({{"start_min", e.start_min},
                                {"end_min", e.end_min},
                                {"mode", std::string(mode_name(e.mode))}});
    root["devices"].push_back(std::move(dj));
  }
  root["occupancy_trace"] = nlohmann::ordered_json::array();
  for (const OccupancyInterval& o : s.occupancy_trace)
    root["occupancy_trace"].push_back({{"room", o.room},
                                       {"start_min", o.start_min},
                                       {"end_min", o.end_min}});
  root["history"] = nlohmann::ordered_json::array();
  for (const HistoryInterval& h : s.history)
    root["history"].push_back({{"day", h.day},
                               {"room", h.room},
                               {"start_min", h.start_min},
                               {"end_min", h.end_min}});
  return root.dump(2) + "\n";
}

void validate_scenario(const Scenario& s) {
  auto invalid = [](const std::string& msg) {
    throw Error(ErrCode::ScenarioInvalid, msg);
  };

  if (s.duration_min < 0) invalid("duration_min must be non-negative");

  std::set<std::string> rooms;
  for (const std::string& r : s.rooms) {
    if (!is_slug(r)) invalid("room \"" + r + "\" is not a valid slug");
    if (!rooms.insert(r).second) invalid("duplicate room \"" + r + "\"");
  }

  std::set<std::string> ids;
  for (const Device& d : s.devices) {
    std::string ctx = "device \"" + d.id + "\"";
    if (!is_slug(d.id)) invalid("device id \"" + d.id + "\" is not a valid slug");
    if (!ids.insert(d.id).second) invalid("duplicate " + ctx);
    if (!rooms.contains(d.room))
      invalid(ctx + " references unknown room \"" + d.room + "\"");
    if (d.power_off_w < 0.0 || d.power_off_w > d.power_standby_w ||
        d.power_standby_w > d.power_on_w)
      invalid(ctx + " power must satisfy 0 <= off <= standby <= on");

    std::vector<ScheduleEntry> sched = d.schedule;
    std::sort(sched.begin(), sched.end(),
              [](const ScheduleEntry& a, const ScheduleEntry& b) {
                return a.start_min < b.start_min;
              });
    int prev_end = 0;
    for (const ScheduleEntry& e : sched) {
      if (e.start_min < 0 || e.start_min >= e.end_min ||
          e.end_min > s.duration_min)
        invalid(ctx + " schedule interval [" + std::to_string(e.start_min) +
                ", " + std::to_string(e.end_min) + ") is out of bounds");
      if (e.start_min < prev_end)
        invalid(ctx + " schedule intervals overlap at minute " +
                std::to_string(e.start_min));
      prev_end = e.end_min;
    }
  }

  for (const OccupancyInterval& o : s.occupancy_trace) {
    if (!rooms.contains(o.room))
      invalid("occupancy_trace references unknown room \"" + o.room + "\"");
    if (o.start_min < 0 || o.start_min >= o.end_min ||
        o.end_min > s.duration_min)
      invalid("occupancy_trace interval [" + std::to_string(o.start_min) +
              ", " + std::to_string(o.end_min) + ") for room \"" + o.room +
              "\" is out of bounds");
  }

  for (const HistoryInterval& h : s.history) {
    if (!rooms.contains(h.room))
      invalid("history references unknown room \"" + h.room + "\"");
    if (h.day < 0 || h.start_min < 0 || h.start_min >= h.end_min ||
        h.end_min > 1440)
      invalid("history interval (day " + std::to_string(h.day) + ", [" +
              std::to_string(h.start_min) + ", " + std::to_string(h.end_min) +
              ")) for room \"" + h.room + "\" is out of bounds");
  }
}

namespace {

DeviceMode scheduled_mode(const Device& d, int t) {
  for (const ScheduleEntry& e : d.schedule)
    if (e.start_min <= t && t < e.end_min) return e.mode;
  return d.initial_mode;
}

bool schedule_starts_at(const Device& d, int t) {
  return std::any_of(d.schedule.begin(), d.schedule.end(),
                     [t](const ScheduleEntry& e) { return e.start_min == t; });
}

}  // namespace

SimReport run(const Scenario& s, std::span<const Rule> rules,
              const SimParams& params) {
  validate_scenario(s);
  OccupancyModel model = train(s.history, params.slot_minutes, params.theta);
  if (params.horizon_min < 1)
    throw Error(ErrCode::BadArgument, "horizon_min must be at least 1");

  std::map<std::string, double> base_wmin, ctrl_wmin;
  for (const Device& d : s.devices) {
    double acc = 0.0;
    for (int t = 0; t < s.duration_min; ++t)
      acc += d.power(scheduled_mode(d, t));
    base_wmin[d.id] = acc;
    ctrl_wmin[d.id] = 0.0;
  }

  WorldState world;
  for (const Device& d : s.devices) world.device_modes[d.id] = d.initial_mode;
  for (const std::string& r : s.rooms) world.occupancy[r] = false;
  std::vector<RuleConflict> conflicts;

  auto occupied_at = [&](std::string_view room, int t) {
    return std::any_of(s.occupancy_trace.begin(), s.occupancy_trace.end(),
                       [&](const OccupancyInterval& o) {
                         return o.room == room && o.start_min <= t &&
                                t < o.end_min;
                       });
  };

  for (int t = 0; t < s.duration_min; ++t) {
    world.time_min = t;

    // Schedules assert their mode at interval boundaries; they win over any
    // earlier rule action but only produce an event when the world actually
    // changes.
    for (const Device& d : s.devices) {
      DeviceMode want = scheduled_mode(d, t);
      bool boundary = schedule_starts_at(d, t) ||
                      (t > 0 && want != scheduled_mode(d, t - 1));
      if (!boundary) continue;
      DeviceMode& cur = world.device_modes[d.id];
      if (cur == want) continue;
      cur = want;
      world.event_log.push_back({t, EventSource::Schedule, "", d.id, want});
    }

    bool occupancy_changed = false;
    for (const std::string& r : s.rooms) {
      bool now = occupied_at(r, t);
      bool& cur = world.occupancy[r];
      if (cur != now) {
        cur = now;
        occupancy_changed = true;
      }
    }

    if (!rules.empty()) {
      std::vector<DeviceBinding> bindings;
      bindings.reserve(s.devices.size());
      for (const Device& d : s.devices)
        bindings.push_back({d.id, d.room, world.device_modes[d.id]});
      auto occupied_fn = [&](std::string_view room) {
        auto it = world.occupancy.find(std::string(room));
        return it != world.occupancy.end() && it->second;
      };
      auto predicted_fn = [&](std::string_view room, int horizon) {
        return predicted_occupied(model, room, t, horizon);
      };
      std::vector<FiredAction> fired =
          evaluate(rules, bindings, occupied_fn, predicted_fn,
                   occupancy_changed, params.horizon_min);

      std::map<std::string, const FiredAction*> applied;
      for (const FiredAction& fa : fired) {
        auto [it, fresh] = applied.try_emplace(fa.device_id, &fa);
        if (fresh) {
          world.device_modes[fa.device_id] = fa.new_mode;
          world.event_log.push_back(
              {t, EventSource::Rule, fa.rule_id, fa.device_id, fa.new_mode});
        } else if (it->second->new_mode != fa.new_mode) {
          conflicts.push_back({t, fa.device_id, it->second->rule_id,
                               fa.rule_id, it->second->new_mode, fa.new_mode});
        }
      }
    }

    for (const Device& d : s.devices)
      ctrl_wmin[d.id] += d.power(world.device_modes.at(d.id));
  }

  SimReport report;
  report.events = std::move(world.event_log);
  report.conflicts = std::move(conflicts);
  for (const Device& d : s.devices)
    report.per_device[d.id] =
        DeviceEnergy{base_wmin.at(d.id) / 60.0, ctrl_wmin.at(d.id) / 60.0};
  for (const auto& [id, e] : report.per_device) {
    report.total.baseline_wh += e.baseline_wh;
    report.total.controlled_wh += e.controlled_wh;
    report.savings_wh += e.baseline_wh - e.controlled_wh;
  }
  return report;
}

namespace {

std::string fmt_wh(double value) {
  if (value == 0.0) value = 0.0;  // never print "-0.000"
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", value);
  return buf;
}

std::string json_escape(std::string_view raw) {
  std::string out;
  for (char c : raw) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  return out;
}

std::string event_source(const SimEvent& e) {
  return e.source == EventSource::Schedule ? "schedule" : "rule:" + e.rule_id;
}

}  // namespace

std::string report_to_json(const SimReport& report) {
  std::string out = "{\n  \"per_device\": {";
  bool first = true;
  for (const auto& [id, e] : report.per_device) {
    out += first ? "\n" : ",\n";
    first = false;
    out += "    \"" + json_escape(id) + "\": {\n";
    out += "      \"baseline_wh\": " + fmt_wh(e.baseline_wh) + ",\n";
    out += "      \"controlled_wh\": " + fmt_wh(e.controlled_wh) + "\n    }";
  }
  out += report.per_device.empty() ? "},\n" : "\n  },\n";
  out += "  \"total\": {\n";
  out += "    \"baseline_wh\": " + fmt_wh(report.total.baseline_wh) + ",\n";
  out += "    \"controlled_wh\": " + fmt_wh(report.total.controlled_wh) +
         "\n  },\n";
  out += "  \"savings_wh\": " + fmt_wh(report.savings_wh) + ",\n";
  out += "  \"events\": [";
  for (std::size_t i = 0; i < report.events.size(); ++i) {
    const SimEvent& e = report.events[i];
    out += i ? ",\n" : "\n";
    out += "    {\n";
    out += "      \"t\": " + std::to_string(e.time_min) + ",\n";
    out += "      \"source\": \"" + json_escape(event_source(e)) + "\",\n";
    out += "      \"device\": \"" + json_escape(e.device_id) + "\",\n";
    out += "      \"mode\": \"" + std::string(mode_name(e.new_mode)) +
           "\"\n    }";
  }
  out += report.events.empty() ? "]\n" : "\n  ]\n";
  out += "}\n";
  return out;
}

std::string report_to_text(const SimReport& report) {
  std::string out;
  for (const auto& [id, e] : report.per_device) {
    out += "device " + id + ": baseline " + fmt_wh(e.baseline_wh) +
           " Wh, controlled " + fmt_wh(e.controlled_wh) + " Wh, saved " +
           fmt_wh(e.baseline_wh - e.controlled_wh) + " Wh\n";
  }
  out += "total: baseline " + fmt_wh(report.total.baseline_wh) +
         " Wh, controlled " + fmt_wh(report.total.controlled_wh) + " Wh\n";
  out += "savings: " + fmt_wh(report.savings_wh) + " Wh\n";
  out += "events: " + std::to_string(report.events.size()) + "\n";
  for (const SimEvent& e : report.events) {
    out += "  t=" + std::to_string(e.time_min) + " " + event_source(e) + " " +
           e.device_id + " -> " + std::string(mode_name(e.new_mode)) + "\n";
  }
  return out;
}

}  // namespace crossdep
