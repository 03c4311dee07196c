// Regenerates the shipped fixtures (seeds/, rules/, scenarios/) from the
// built-in definitions so they always match the canonical serializers.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "crossdep/onto_text.hpp"
#include "crossdep/seeds.hpp"
#include "crossdep/sim.hpp"

namespace fs = std::filesystem;

namespace {

bool write_file(const fs::path& path, std::string_view content) {
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "seedgen: cannot write " << path.string() << "\n";
    return false;
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  std::cout << "wrote " << path.string() << "\n";
  return out.good();
}

crossdep::Rule standby_shutdown_rule() {
  using namespace crossdep;
  Rule rule;
  rule.id = "standby_shutdown";
  rule.trigger = RuleTrigger::Tick;
  rule.conditions.push_back(
      {false, PredicateKind::ModeIs, DeviceMode::Standby, std::nullopt});
  rule.conditions.push_back(
      {true, PredicateKind::Occupied, DeviceMode::Off, std::nullopt});
  rule.conditions.push_back(
      {true, PredicateKind::PredictedOccupied, DeviceMode::Off, 60});
  rule.actions.push_back({DeviceMode::Off});
  return rule;
}

crossdep::Scenario standby_overnight_scenario() {
  using namespace crossdep;
  Scenario sc;
  sc.name = "standby_overnight";
  sc.duration_min = 480;
  sc.rooms = {"living_room"};
  Device tv;
  tv.id = "tv";
  tv.room = "living_room";
  tv.power_off_w = 0.0;
  tv.power_standby_w = 5.0;
  tv.power_on_w = 80.0;
  tv.initial_mode = DeviceMode::Standby;
  sc.devices.push_back(std::move(tv));
  return sc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regenerate the shipped data fixtures"};
  std::string root = ".";
  app.add_option("--root", root, "Repository root to write into")
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  using namespace crossdep;
  const fs::path base(root);

  Ontology home = seeds::smart_home();
  Ontology ict = seeds::ict();
  std::vector<CrossLink> links = seeds::case_study_links();
  std::vector<Requirement> reqs = seeds::requirements();

  std::string provenance;
  for (const ConceptId& id : seeds::ict_provenance())
    provenance += id.str() + "\n";

  std::vector<Rule> rules = {standby_shutdown_rule()};

  bool ok = true;
  ok &= write_file(base / "seeds/smart_home.onto", serialize_ontology(home));
  ok &= write_file(base / "seeds/ict.onto", serialize_ontology(ict));
  ok &= write_file(base / "seeds/case_study.links", serialize_links(links));
  ok &= write_file(base / "seeds/requirements.tsv",
                   serialize_requirements(reqs));
  ok &= write_file(base / "seeds/ict_provenance.txt", provenance);
  ok &= write_file(base / "rules/standby_shutdown.rules", print_rules(rules));
  ok &= write_file(base / "scenarios/standby_overnight.json",
                   scenario_to_json(standby_overnight_scenario()));
  return ok ? 0 : 1;
}
