#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "crossdep/depgraph.hpp"
#include "crossdep/onto_text.hpp"
#include "crossdep/requirements.hpp"
#include "crossdep/seeds.hpp"
#include "crossdep/sim.hpp"

namespace fs = std::filesystem;

namespace {

using namespace crossdep;

/// Problems with the invocation itself (unreadable files, unsupported
/// extensions); mapped to exit code 2 like flag errors.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

fs::path seed_dir() {
  if (const char* env = std::getenv("CROSSDEP_SEEDS"); env && *env)
    return fs::path(env);
  std::error_code ec;
  fs::path exe = fs::read_symlink("/proc/self/exe", ec);
  if (!ec) {
    const fs::path candidates[] = {exe.parent_path() / "seeds",
                                   exe.parent_path().parent_path() / "seeds"};
    for (const fs::path& dir : candidates) {
      std::error_code dir_ec;
      if (fs::is_directory(dir, dir_ec)) return dir;
    }
  }
  return fs::path(CROSSDEP_DATA_DIR);
}

std::string require_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

ConceptId require_qid(const std::string& text) {
  std::optional<ConceptId> id = ConceptId::try_parse(text);
  if (!id) throw Error(ErrCode::UnknownConcept, "unknown concept " + text);
  return *id;
}

int cmd_validate(const std::vector<std::string>& files) {
  struct Input {
    fs::path path;
    std::string text;
  };
  std::vector<Input> onto_inputs, link_inputs, rule_inputs;
  for (const std::string& f : files) {
    fs::path path(f);
    std::string ext = path.extension().string();
    std::vector<Input>* bucket = nullptr;
    if (ext == ".onto") bucket = &onto_inputs;
    else if (ext == ".links") bucket = &link_inputs;
    else if (ext == ".rules") bucket = &rule_inputs;
    else throw UsageError("unsupported file type: " + f);
    bucket->push_back({path, require_file(path)});
  }

  int violations = 0;
  auto report = [&violations](const ParseFailure& err) {
    std::cout << err.error().str() << "\n";
    ++violations;
  };

  std::vector<Ontology> context;
  for (const Input& in : onto_inputs) {
    try {
      context.push_back(parse_ontology(in.text, in.path.string()));
    } catch (const ParseFailure& err) {
      report(err);
    }
  }
  if (!link_inputs.empty()) {
    // Links resolve against the ontologies validated in this invocation,
    // falling back to the built-in seeds for any slug not covered.
    auto add_builtin = [&context](Ontology onto) {
      for (const Ontology& existing : context)
        if (existing.slug() == onto.slug()) return;
      context.push_back(std::move(onto));
    };
    add_builtin(seeds::smart_home());
    add_builtin(seeds::ict());
    std::vector<const Ontology*> ptrs;
    ptrs.reserve(context.size());
    for (const Ontology& onto : context) ptrs.push_back(&onto);
    for (const Input& in : link_inputs) {
      try {
        parse_links(in.text, ptrs, in.path.string());
      } catch (const ParseFailure& err) {
        report(err);
      }
    }
  }
  for (const Input& in : rule_inputs) {
    try {
      parse_rules(in.text, in.path.string());
    } catch (const ParseFailure& err) {
      report(err);
    }
  }
  return violations == 0 ? 0 : 1;
}

int cmd_tree(const std::string& file, const std::string& root, int depth) {
  Ontology onto = parse_ontology(require_file(file), file);

  std::vector<const Concept*> starts;
  if (!root.empty()) {
    std::optional<ConceptId> id = ConceptId::try_parse(root);
    const Concept* c = id ? onto.find(*id) : nullptr;
    if (!c) throw Error(ErrCode::UnknownConcept, "unknown concept " + root);
    starts.push_back(c);
  } else {
    for (const ConceptId& rid : onto.roots()) starts.push_back(&onto.at(rid));
  }

  std::string out;
  auto emit = [&](auto&& self, const Concept& c, int level) -> void {
    if (depth > 0 && level >= depth) return;
    out.append(static_cast<std::size_t>(2 * level), ' ');
    out += kind_name(c.kind);
    out += ' ';
    out += c.label;
    out += " (";
    out += c.id.str();
    out += ")\n";
    for (const ConceptId& child : c.children) self(self, onto.at(child), level + 1);
  };
  for (const Concept* c : starts) emit(emit, *c, 0);
  std::cout << out;
  return 0;
}

int cmd_paths(const std::string& from, const std::string& to, int max_len,
              std::vector<std::string> files) {
  if (files.empty()) {
    fs::path dir = seed_dir();
    files = {(dir / "smart_home.onto").string(), (dir / "ict.onto").string(),
             (dir / "case_study.links").string()};
  }
  std::vector<Ontology> ontologies;
  std::vector<std::pair<std::string, std::string>> link_inputs;
  for (const std::string& f : files) {
    fs::path path(f);
    std::string ext = path.extension().string();
    if (ext == ".onto")
      ontologies.push_back(parse_ontology(require_file(path), f));
    else if (ext == ".links")
      link_inputs.emplace_back(f, require_file(path));
    else
      throw UsageError("unsupported file type: " + f);
  }
  std::vector<const Ontology*> ptrs;
  ptrs.reserve(ontologies.size());
  for (const Ontology& onto : ontologies) ptrs.push_back(&onto);
  std::vector<CrossLink> links;
  for (const auto& [path, text] : link_inputs) {
    std::vector<CrossLink> parsed = parse_links(text, ptrs, path);
    links.insert(links.end(), parsed.begin(), parsed.end());
  }

  DepGraph graph(std::move(ontologies), std::move(links));
  std::vector<DepPath> paths =
      graph.find_paths(require_qid(from), require_qid(to), max_len);
  if (paths.empty()) {
    std::cout << "no paths\n";
    return 0;
  }
  std::string out;
  for (const DepPath& p : paths) {
    out += p.nodes.front().str();
    if (p.edges.empty()) out += " (self)";
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      const DepEdge& e = p.edges[i];
      if (e.kind == EdgeKind::Hierarchy)
        out += " -> ";
      else if (e.direction == EdgeDirection::Forward)
        out += " -[" + e.relation + "]-> ";
      else
        out += " <-[" + e.relation + "]- ";
      out += p.nodes[i + 1].str();
    }
    out += "\n";
  }
  std::cout << out;
  return 0;
}

int cmd_requirements(const std::string& stakeholder, const std::string& concept_id,
                     bool descendants) {
  fs::path dir = seed_dir();
  Ontology home = parse_ontology(require_file(dir / "smart_home.onto"),
                                 (dir / "smart_home.onto").string());
  Ontology ict = parse_ontology(require_file(dir / "ict.onto"),
                                (dir / "ict.onto").string());
  const Ontology* ptrs[] = {&home, &ict};
  std::vector<Requirement> reqs =
      parse_requirements(require_file(dir / "requirements.tsv"), ptrs,
                         (dir / "requirements.tsv").string());

  std::vector<const Requirement*> rows;
  if (!stakeholder.empty()) {
    std::optional<Stakeholder> s = stakeholder_from_slug(stakeholder);
    if (!s)
      throw Error(ErrCode::BadArgument,
                  "unknown stakeholder \"" + stakeholder + "\"");
    for (const Requirement& r : reqs)
      if (r.stakeholder == *s) rows.push_back(&r);
  } else {
    ConceptId id = require_qid(concept_id);
    const Ontology* onto = nullptr;
    if (id.ontology == home.slug()) onto = &home;
    else if (id.ontology == ict.slug()) onto = &ict;
    if (!onto)
      throw Error(ErrCode::UnknownConcept, "unknown concept " + concept_id);
    rows = requirements_for_concept(reqs, *onto, id, descendants);
  }

  std::string out;
  for (const Requirement* r : rows) {
    out += stakeholder_slug(r->stakeholder);
    out += '\t';
    out += std::to_string(r->index);
    out += '\t';
    out += r->text;
    out += '\t';
    for (std::size_t i = 0; i < r->concepts.size(); ++i) {
      if (i) out += ',';
      out += r->concepts[i].str();
    }
    out += '\n';
  }
  std::cout << out;
  return 0;
}

int cmd_predict(const std::string& scenario_file, const std::string& room,
                int at, int horizon, int slot, double theta) {
  Scenario sc = scenario_from_json(require_file(scenario_file), scenario_file);
  validate_scenario(sc);
  OccupancyModel model = train(sc.history, slot, theta);
  std::cout << (predicted_occupied(model, room, at, horizon) ? "true" : "false")
            << "\n";
  return 0;
}

int cmd_simulate(const std::string& scenario_file, const std::string& rules_file,
                 int slot, double theta, int horizon, const std::string& format) {
  Scenario sc = scenario_from_json(require_file(scenario_file), scenario_file);
  std::vector<Rule> rules;
  if (!rules_file.empty())
    rules = parse_rules(require_file(rules_file), rules_file);
  SimParams params;
  params.slot_minutes = slot;
  params.theta = theta;
  params.horizon_min = horizon;
  SimReport report = run(sc, rules, params);
  std::cout << (format == "json" ? report_to_json(report)
                                 : report_to_text(report));
  return 0;
}

const CLI::Validator SlotDivides1440(
    [](std::string& value) -> std::string {
      int v = 0;
      try {
        v = std::stoi(value);
      } catch (const std::exception&) {
        return "not an integer: " + value;
      }
      if (v < 1 || 1440 % v != 0)
        return "must be a positive divisor of 1440: " + value;
      return {};
    },
    "DIVISOR_OF_1440");

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cross-domain ontology toolkit with a smart-home energy "
               "simulator"};
  app.require_subcommand(1);

  auto* validate = app.add_subcommand(
      "validate", "Check .onto/.links/.rules files, one line per violation");
  std::vector<std::string> validate_files;
  validate->add_option("files", validate_files, "Files to check")->required();

  auto* tree =
      app.add_subcommand("tree", "Print an ontology as an indented tree");
  std::string tree_file, tree_root;
  int tree_depth = 0;
  tree->add_option("file", tree_file, "Ontology file")->required();
  tree->add_option("--root", tree_root, "Qualified id of the subtree to print");
  tree->add_option("--depth", tree_depth, "Levels to print (0 = all)")
      ->check(CLI::PositiveNumber);

  auto* paths = app.add_subcommand(
      "paths", "Enumerate dependency paths between two concepts");
  std::string paths_from, paths_to;
  int paths_max_len = 4;
  std::vector<std::string> paths_files;
  paths->add_option("--from", paths_from, "Source qualified id")->required();
  paths->add_option("--to", paths_to, "Target qualified id")->required();
  paths->add_option("--max-len", paths_max_len, "Maximum path length in edges")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  paths->add_option("files", paths_files,
                    "Ontology/link files (default: shipped seeds)");

  auto* requirements = app.add_subcommand(
      "requirements", "Query the stakeholder requirements registry");
  std::string req_stakeholder, req_concept;
  bool req_descendants = false;
  auto* stakeholder_opt = requirements->add_option(
      "--stakeholder", req_stakeholder,
      "Stakeholder slug (occupiers, energy_providers, housing_agencies, "
      "government)");
  auto* concept_opt = requirements->add_option(
      "--concept", req_concept, "Qualified concept id to look up");
  requirements->add_flag("--descendants", req_descendants,
                         "Include requirements mapped to the concept's subtree");
  stakeholder_opt->excludes(concept_opt);
  concept_opt->excludes(stakeholder_opt);

  auto* predict = app.add_subcommand(
      "predict", "Evaluate the occupancy predictor for one room and minute");
  std::string predict_scenario, predict_room;
  int predict_at = 0, predict_horizon = 60, predict_slot = 30;
  double predict_theta = 0.2;
  predict->add_option("--scenario", predict_scenario, "Scenario JSON file")
      ->required();
  predict->add_option("--room", predict_room, "Room slug")->required();
  predict->add_option("--at", predict_at, "Minute to predict from")
      ->required()
      ->check(CLI::NonNegativeNumber);
  predict->add_option("--horizon", predict_horizon, "Lookahead window, minutes")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  predict->add_option("--slot", predict_slot, "Slot width, minutes")
      ->capture_default_str()
      ->check(SlotDivides1440);
  predict->add_option("--theta", predict_theta, "Occupancy threshold")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));

  auto* simulate = app.add_subcommand(
      "simulate", "Run a scenario and report baseline vs controlled energy");
  std::string sim_scenario, sim_rules, sim_out = "text";
  int sim_slot = 30, sim_horizon = 60;
  double sim_theta = 0.2;
  simulate->add_option("--scenario", sim_scenario, "Scenario JSON file")
      ->required();
  simulate->add_option("--rules", sim_rules, "Rules file (default: none)");
  simulate->add_option("--slot", sim_slot, "Slot width, minutes")
      ->capture_default_str()
      ->check(SlotDivides1440);
  simulate->add_option("--theta", sim_theta, "Occupancy threshold")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--horizon", sim_horizon, "Lookahead window, minutes")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  simulate->add_option("--out", sim_out, "Output format: text or json")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(validate_files);
    if (tree->parsed()) return cmd_tree(tree_file, tree_root, tree_depth);
    if (paths->parsed())
      return cmd_paths(paths_from, paths_to, paths_max_len, paths_files);
    if (requirements->parsed()) {
      if (req_stakeholder.empty() && req_concept.empty()) {
        std::cerr << "error: requirements needs --stakeholder or --concept\n";
        return 2;
      }
      return cmd_requirements(req_stakeholder, req_concept, req_descendants);
    }
    if (predict->parsed())
      return cmd_predict(predict_scenario, predict_room, predict_at,
                         predict_horizon, predict_slot, predict_theta);
    if (simulate->parsed())
      return cmd_simulate(sim_scenario, sim_rules, sim_slot, sim_theta,
                          sim_horizon, sim_out);
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const ParseFailure& err) {
    std::cerr << err.error().str() << "\n";
    return 2;
  } catch (const ScenarioFormatError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
