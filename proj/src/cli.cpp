#include "opsem/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "opsem/output.hpp"
#include "opsem/scenario.hpp"

namespace opsem {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using Files = std::vector<std::pair<std::string, std::string>>;

struct Invocation {
  fs::path scenario_path;
  fs::path out_dir;
  std::optional<std::uint64_t> seed;
  Scenario scenario;

  std::uint64_t effective_seed() const { return seed.value_or(scenario.strategy.seed); }
  std::string run_id() const { return scenario_path.stem().string(); }
};

ordered_json tables_json(const Interpretation& interp) {
  auto rows = ordered_json::array();
  for (const auto& t : interp.tables()) rows.push_back(t.indices());
  return rows;
}

ordered_json space_header(const InterpretationSpace& space) {
  ordered_json j;
  j["capacity"]["size"] = space.capacity().size();
  if (!space.capacity().labels().empty()) {
    j["capacity"]["labels"] = space.capacity().labels();
  }
  j["signals"] = space.language().labels();
  j["family"] = to_string(space.family().kind);
  j["member_count"] = space.size();
  return j;
}

Files cmd_enumerate(const Invocation& inv, std::ostream& out) {
  const auto [space, truth] = resolve(inv.scenario);
  auto j = space_header(space);
  j["truth"] = truth;
  auto members = ordered_json::array();
  for (InterpretationId id = 0; id < space.size(); ++id) {
    ordered_json m;
    m["id"] = id;
    m["tables"] = tables_json(space.member(id));
    members.push_back(std::move(m));
  }
  j["members"] = std::move(members);
  out << "enumerate: " << space.size() << " members\n";
  return {{"space.json", j.dump(2) + "\n"}};
}

Files cmd_simulate(const Invocation& inv, std::ostream& out) {
  const auto [space, truth] = resolve(inv.scenario);
  auto strategy = inv.scenario.strategy;
  strategy.seed = inv.effective_seed();
  const auto history = run_session(space, truth, strategy, inv.scenario.max_steps);

  std::ostringstream events;
  emit_event_log(history, events, strategy.seed);
  std::string summary(kSummaryHeader);
  summary += "\n" +
             summary_row(inv.run_id(), space.size(), to_string(strategy.kind),
                         strategy.seed, history) +
             "\n";
  out << "simulate: " << history.steps.size() << " steps, converged="
      << (history.converged ? "true" : "false") << "\n";
  return {{"events.jsonl", events.str()}, {"summary.csv", summary}};
}

Files cmd_histories(const Invocation& inv, std::ostream& out) {
  const auto [space, truth] = resolve(inv.scenario);
  const auto max_length = std::min(inv.scenario.max_steps,
                                   space.capacity().size() * space.language().size());
  const auto set = enumerate_histories(space, truth, max_length);

  auto j = space_header(space);
  j["truth"] = truth;
  j["max_length"] = max_length;
  j["path_count"] = set.paths.size();
  j["complete_count"] = set.complete_count();
  auto paths = ordered_json::array();
  for (const auto& p : set.paths) {
    ordered_json pj;
    pj["length"] = p.length();
    pj["complete"] = p.complete;
    pj["multiplicity"] = p.multiplicity;
    auto counts = ordered_json::array();
    for (const auto& m : p.meta_states) counts.push_back(m.size());
    pj["candidate_counts"] = std::move(counts);
    auto queries = ordered_json::array();
    for (const auto& q : p.queries) {
      queries.push_back({{"state", q.state.index}, {"signal", q.signal.index}});
    }
    pj["queries"] = std::move(queries);
    pj["meta_states"] = p.meta_states;
    paths.push_back(std::move(pj));
  }
  j["paths"] = std::move(paths);
  out << "histories: " << set.paths.size() << " distinct paths, "
      << set.complete_count() << " complete\n";
  return {{"paths.json", j.dump(2) + "\n"}};
}

Files cmd_population(const Invocation& inv, std::ostream& out) {
  if (!inv.scenario.population) {
    throw Error(ErrorCode::ValidationError,
                "population: scenario has no population section");
  }
  const auto& spec = *inv.scenario.population;
  const auto [space, truth] = resolve(inv.scenario);
  const auto seed = inv.effective_seed();
  const auto result =
      run_population(space, truth, spec.learners, spec.generator, spec.max_rounds, seed);

  std::string summary(kSummaryHeader);
  summary += "\n";
  std::string rounds = "learner,converged,convergence_round,steps,final_entropy\n";
  for (std::size_t i = 0; i < result.learner_count; ++i) {
    const auto& h = result.histories[i];
    summary += summary_row(inv.run_id() + "/learner-" + std::to_string(i), space.size(),
                           to_string(spec.generator), seed, h) +
               "\n";
    const auto& round = result.convergence_rounds[i];
    rounds += std::to_string(i) + "," + (h.converged ? "true" : "false") + "," +
              (round ? std::to_string(*round) : std::string()) + "," +
              std::to_string(h.steps.size()) + "," +
              format_bits(std::log2(static_cast<double>(h.final_candidates.size()))) +
              "\n";
  }
  out << "population: " << result.rounds_run << " rounds, all_converged="
      << (result.all_converged ? "true" : "false") << "\n";
  return {{"summary.csv", summary}, {"population.csv", rounds}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Operator-semantics language learning simulator", "opsem"};
  app.require_subcommand(1);

  Invocation inv;
  std::uint64_t seed = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--scenario", inv.scenario_path, "Scenario JSON file")->required();
    sub->add_option("--out", inv.out_dir, "Output directory")->required();
    sub->add_option("--seed", seed, "Override the scenario seed");
  };
  auto* enumerate = app.add_subcommand("enumerate", "Write the interpretation space");
  auto* simulate = app.add_subcommand("simulate", "Run one learning session");
  auto* histories = app.add_subcommand("histories", "Enumerate distinct learning paths");
  auto* population = app.add_subcommand("population", "Run a population of learners");
  for (auto* sub : {enumerate, simulate, histories, population}) add_common(sub);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "opsem: " << e.what() << "\n";
    return kExitValidation;
  }

  auto* selected = app.get_subcommands().front();
  if (selected->count("--seed") > 0) inv.seed = seed;

  try {
    if (!fs::is_regular_file(inv.scenario_path)) {
      err << "opsem: scenario file not found: " << inv.scenario_path.string() << "\n";
      return kExitValidation;
    }
    inv.scenario = load_scenario(inv.scenario_path);

    Files files;
    if (selected == enumerate) {
      files = cmd_enumerate(inv, out);
    } else if (selected == simulate) {
      files = cmd_simulate(inv, out);
    } else if (selected == histories) {
      files = cmd_histories(inv, out);
    } else {
      files = cmd_population(inv, out);
    }
    write_files_atomically(inv.out_dir, files);
  } catch (const Error& e) {
    err << "opsem: " << to_string(e.code()) << ": " << e.what() << "\n";
    const bool bad_input =
        e.code() == ErrorCode::ValidationError || e.code() == ErrorCode::ParseError;
    return bad_input ? kExitValidation : kExitRuntime;
  } catch (const std::exception& e) {
    err << "opsem: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace opsem
