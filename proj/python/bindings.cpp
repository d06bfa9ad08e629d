#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "opsem/cli.hpp"
#include "opsem/learning.hpp"
#include "opsem/output.hpp"
#include "opsem/scenario.hpp"

namespace py = pybind11;
using namespace opsem;

namespace {

std::vector<OperatorTable> to_tables(const std::vector<std::vector<std::uint32_t>>& rows) {
  std::vector<OperatorTable> out;
  for (const auto& r : rows) out.push_back(OperatorTable::from_indices(r));
  return out;
}

OperatorFamily make_family(const std::string& kind,
                           const std::vector<std::vector<std::uint32_t>>& tables) {
  auto k = parse_family_kind(kind);
  if (!k) throw Error(ErrorCode::InvalidFamily, "unknown operator family '" + kind + "'");
  return OperatorFamily{*k, to_tables(tables)};
}

QueryStrategy make_strategy(const std::string& kind, std::uint64_t seed) {
  auto k = parse_strategy_kind(kind);
  if (!k) throw Error(ErrorCode::InvalidArgument, "unknown strategy '" + kind + "'");
  return QueryStrategy{*k, seed};
}

std::vector<std::uint32_t> state_indices(const StateSet& set) {
  std::vector<std::uint32_t> out;
  for (auto s : set) out.push_back(s.index);
  return out;
}

py::dict history_dict(const History& h) {
  py::list steps;
  for (const auto& s : h.steps) {
    py::dict d;
    d["idx"] = s.step_index;
    d["state"] = s.query.state.index;
    d["signal"] = s.query.signal.index;
    d["post"] = s.observation.post.index;
    d["candidates"] = s.candidates_after;
    d["entropy"] = s.entropy_after;
    steps.append(d);
  }
  py::dict out;
  out["initial_candidates"] = h.initial_candidates;
  out["steps"] = steps;
  out["converged"] = h.converged;
  out["final_candidates"] = h.final_candidates;
  out["trace"] = h.candidate_trace();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Operator semantics of signals and version-space language learning";

  py::register_exception<Error>(m, "OpsemError");

  m.def(
      "compose",
      [](const std::vector<std::uint32_t>& first, const std::vector<std::uint32_t>& second) {
        return compose(OperatorTable::from_indices(first), OperatorTable::from_indices(second))
            .indices();
      },
      py::arg("first"), py::arg("second"), "Apply `first`, then `second`.");

  m.def(
      "apply_sequence",
      [](const std::vector<std::vector<std::uint32_t>>& tables,
         const std::vector<std::uint32_t>& seq, std::uint32_t state) {
        Interpretation interp(0, to_tables(tables));
        std::vector<Signal> signals;
        for (auto a : seq) signals.push_back(Signal{a});
        return apply_sequence(interp, signals, StateId{state}).index;
      },
      py::arg("tables"), py::arg("seq"), py::arg("state"));

  py::class_<InterpretationSpace>(m, "InterpretationSpace")
      .def(py::init([](std::size_t capacity, std::vector<std::string> signals,
                       const std::string& family,
                       const std::vector<std::vector<std::uint32_t>>& tables,
                       std::uint64_t limit) {
             return enumerate_space(RepCapacity(capacity), Language(std::move(signals)),
                                    make_family(family, tables), limit);
           }),
           py::arg("capacity"), py::arg("signals"), py::arg("family") = "all-functions",
           py::arg("tables") = std::vector<std::vector<std::uint32_t>>{},
           py::arg("limit") = kDefaultSpaceLimit)
      .def("__len__", &InterpretationSpace::size)
      .def_property_readonly("capacity",
                             [](const InterpretationSpace& s) { return s.capacity().size(); })
      .def_property_readonly("signals",
                             [](const InterpretationSpace& s) { return s.language().labels(); })
      .def("member",
           [](const InterpretationSpace& s, InterpretationId id) {
             const auto interp = s.member(id);
             std::vector<std::vector<std::uint32_t>> rows;
             for (const auto& t : interp.tables()) rows.push_back(t.indices());
             return rows;
           })
      .def("find",
           [](const InterpretationSpace& s,
              const std::vector<std::vector<std::uint32_t>>& tables) {
             return s.find(to_tables(tables));
           })
      .def("indistinguishable_classes",
           [](const InterpretationSpace& s,
              const std::vector<std::pair<std::uint32_t, std::uint32_t>>& queries) {
             std::vector<Query> qs;
             for (auto [st, a] : queries) qs.push_back(Query{StateId{st}, Signal{a}});
             return indistinguishable_classes(s, qs);
           },
           py::arg("queries"));

  py::class_<MetaState>(m, "MetaState")
      .def(py::init([](const InterpretationSpace& s, std::vector<InterpretationId> ids) {
             return MetaState(s, std::move(ids));
           }))
      .def_static("initial", &initial_meta_state, py::arg("space"))
      .def_property_readonly("candidates", &MetaState::candidates)
      .def("__len__", &MetaState::size)
      .def("__eq__", [](const MetaState& a, const MetaState& b) { return a == b; })
      .def_property_readonly("entropy", [](const MetaState& m) { return entropy(m); })
      .def_property_readonly("is_perfect_information",
                             [](const MetaState& m) { return is_perfect_information(m); })
      .def("refine",
           [](const MetaState& m, const InterpretationSpace& s, std::uint32_t pre,
              std::uint32_t signal, std::uint32_t post) {
             return refine(s, m, Observation{StateId{pre}, Signal{signal}, StateId{post}});
           },
           py::arg("space"), py::arg("pre"), py::arg("signal"), py::arg("post"))
      .def("partial_operator",
           [](const MetaState& m, const InterpretationSpace& s, std::uint32_t signal,
              std::uint32_t state) {
             return state_indices(partial_operator(s, m, Signal{signal}, StateId{state}));
           },
           py::arg("space"), py::arg("signal"), py::arg("state"));

  m.def(
      "run_session",
      [](const InterpretationSpace& s, InterpretationId truth, const std::string& strategy,
         std::uint64_t seed, std::size_t max_steps) {
        return history_dict(run_session(s, truth, make_strategy(strategy, seed), max_steps));
      },
      py::arg("space"), py::arg("truth"), py::arg("strategy") = "sweep",
      py::arg("seed") = 0, py::arg("max_steps") = 64);

  m.def(
      "event_log",
      [](const InterpretationSpace& s, InterpretationId truth, const std::string& strategy,
         std::uint64_t seed, std::size_t max_steps) {
        std::ostringstream out;
        emit_event_log(run_session(s, truth, make_strategy(strategy, seed), max_steps), out,
                       seed);
        return out.str();
      },
      py::arg("space"), py::arg("truth"), py::arg("strategy") = "sweep",
      py::arg("seed") = 0, py::arg("max_steps") = 64);

  m.def(
      "enumerate_histories",
      [](const InterpretationSpace& s, InterpretationId truth, std::size_t max_length) {
        py::list paths;
        for (const auto& p : enumerate_histories(s, truth, max_length).paths) {
          py::dict d;
          d["meta_states"] = p.meta_states;
          d["complete"] = p.complete;
          d["multiplicity"] = p.multiplicity;
          std::vector<std::pair<std::uint32_t, std::uint32_t>> qs;
          for (const auto& q : p.queries) qs.emplace_back(q.state.index, q.signal.index);
          d["queries"] = qs;
          paths.append(d);
        }
        return paths;
      },
      py::arg("space"), py::arg("truth"), py::arg("max_length"));

  m.def(
      "run_population",
      [](const InterpretationSpace& s, InterpretationId truth, std::size_t learners,
         const std::string& generator, std::size_t max_rounds, std::uint64_t seed) {
        auto g = parse_interaction_generator(generator);
        if (!g) throw Error(ErrorCode::InvalidArgument, "unknown generator '" + generator + "'");
        auto r = run_population(s, truth, learners, *g, max_rounds, seed);
        py::list histories;
        for (const auto& h : r.histories) histories.append(history_dict(h));
        py::dict d;
        d["learner_count"] = r.learner_count;
        d["histories"] = histories;
        d["convergence_rounds"] = r.convergence_rounds;
        d["rounds_run"] = r.rounds_run;
        d["all_converged"] = r.all_converged;
        return d;
      },
      py::arg("space"), py::arg("truth"), py::arg("learners"),
      py::arg("generator") = "round-robin", py::arg("max_rounds") = 64, py::arg("seed") = 0);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the opsem command line; returns (exit_code, stdout, stderr).");

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
