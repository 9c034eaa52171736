// Python bindings for the core library. Counts come back as arbitrary
// precision Python ints, probabilities as floats with the exact rational
// string available alongside wherever the model is exact.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <bratteli/chains.hpp>
#include <bratteli/fusscat.hpp>
#include <bratteli/graphs.hpp>
#include <bratteli/montecarlo.hpp>
#include <bratteli/paths.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace bratteli;

namespace {

py::int_ to_int(const CountInt& n) {
  PyObject* obj = PyLong_FromString(n.get_str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

// Accepts "3/4", "0.25", 0.25, or 3 from the Python side.
Prob to_prob(const py::object& x) {
  if (py::isinstance<py::str>(x)) return parse_real(x.cast<std::string>());
  if (py::isinstance<py::bool_>(x))
    throw std::invalid_argument("probability cannot be a bool");
  if (py::isinstance<py::int_>(x)) return Prob(x.cast<long>(), 1);
  if (py::isinstance<py::float_>(x)) return Prob(x.cast<double>());
  throw std::invalid_argument("expected a number or a rational string");
}

StepSet to_steps(const std::string& name) {
  if (name == "ballot") return StepSet::Ballot;
  if (name == "motzkin") return StepSet::Motzkin;
  throw std::invalid_argument("steps must be 'ballot' or 'motzkin'");
}

LatticePoint to_point(const std::pair<long, long>& p) { return {p.first, p.second}; }

py::object prob_float(const std::optional<Prob>& p) {
  if (!p) return py::none();
  return py::float_(p->value());
}

py::object prob_str(const std::optional<Prob>& p) {
  if (!p) return py::none();
  return py::str(p->str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact combinatorics and stochastic simulation on branching graphs";
  m.attr("__version__") = "1.0.0";

  // ---- paths ---------------------------------------------------------------
  m.def(
      "count_ballot",
      [](std::pair<long, long> a, std::pair<long, long> b) {
        return to_int(count_ballot(to_point(a), to_point(b)));
      },
      py::arg("from_point"), py::arg("to_point"),
      "Number of ballot (up/down) paths between two lattice points.");
  m.def(
      "count_motzkin",
      [](std::pair<long, long> a, std::pair<long, long> b) {
        return to_int(count_motzkin(to_point(a), to_point(b)));
      },
      py::arg("from_point"), py::arg("to_point"),
      "Number of Motzkin (up/level/down) paths between two lattice points.");
  m.def(
      "motzkin_number", [](long n) { return to_int(motzkin_number(n)); },
      py::arg("n"));
  m.def(
      "catalan", [](long n) { return to_int(catalan(n)); }, py::arg("n"));
  m.def(
      "enumerate_paths",
      [](std::pair<long, long> a, std::pair<long, long> b,
         const std::string& steps, long cap) {
        return enumerate_paths(to_point(a), to_point(b), to_steps(steps), cap);
      },
      py::arg("from_point"), py::arg("to_point"), py::arg("steps"),
      py::arg("cap") = 16,
      "Explicit step strings (D/L/U) of every path between the points.");

  // ---- graphs ---------------------------------------------------------------
  py::class_<LeveledMultiGraph>(m, "LeveledMultiGraph")
      .def("max_level", &LeveledMultiGraph::max_level)
      .def("ensure_level", &LeveledMultiGraph::ensure_level, py::arg("n"))
      .def(
          "level",
          [](LeveledMultiGraph& g, int n) {
            g.ensure_level(n);
            return g.levels.at(static_cast<std::size_t>(n));
          },
          py::arg("n"), "Vertex keys at level n.")
      .def("mult", &LeveledMultiGraph::mult, py::arg("n"), py::arg("v"),
           py::arg("w"), "Edge multiplicity between (n, v) and (n+1, w).")
      .def(
          "dims",
          [](LeveledMultiGraph& g, int n) {
            g.ensure_level(n);
            py::list out;
            for (const auto& d : dims_of_level(g, n)) out.append(to_int(d));
            return out;
          },
          py::arg("n"), "Path counts from the root to every level-n vertex.")
      .def(
          "dim_between",
          [](LeveledMultiGraph& g, int nv, const std::string& v, int nw,
             const std::string& w) {
            g.ensure_level(nw);
            return to_int(dim_between(g, nv, v, nw, w));
          },
          py::arg("nv"), py::arg("v"), py::arg("nw"), py::arg("w"))
      .def(
          "dot", [](const LeveledMultiGraph& g, int n) { return graph_dot(g, n); },
          py::arg("n_max"))
      .def(
          "json",
          [](const LeveledMultiGraph& g, int n) { return graph_json(g, n); },
          py::arg("n_max"));

  m.def("semi_pascal", &semi_pascal, py::arg("n_max"));
  m.def("motzkin_graph", &motzkin_graph, py::arg("n_max"));
  m.def("half_line", &half_line, py::arg("n_max"));
  m.def("fc_tree", &fc_tree, py::arg("s"), py::arg("n_max"),
        py::arg("derooted") = false);
  m.def("bsharp_graph", &bsharp_graph, py::arg("n_max"));
  m.def("pascalize", &pascalize, py::arg("graph"), py::arg("n_max"));
  m.def("even_contraction", &even_contraction, py::arg("graph"),
        py::arg("n_max"));
  m.def(
      "isomorphic_up_to",
      [](const LeveledMultiGraph& g1, const LeveledMultiGraph& g2, int n,
         bool use_phi) {
        auto iso = use_phi
                       ? graphs_isomorphic_up_to(
                             g1, g2, n,
                             [](int, const std::string& w) { return phi_map(w); })
                       : graphs_isomorphic_up_to(g1, g2, n);
        return py::make_tuple(iso.isomorphic, iso.failed_level);
      },
      py::arg("g1"), py::arg("g2"), py::arg("n_max"), py::arg("phi") = false,
      "(isomorphic, failed_level); with phi=True checks the B-sharp witness.");
  m.def("phi_map", &phi_map, py::arg("word"));
  m.def("word_admissible", &word_admissible, py::arg("word"), py::arg("s"),
        py::arg("rooted"));
  m.def("label_sum", &label_sum, py::arg("word"));
  m.def("pair_key", &pair_key, py::arg("m"), py::arg("s"));

  py::class_<EndSpec>(m, "EndSpec")
      .def_readonly("prefix", &EndSpec::prefix)
      .def_readonly("period", &EndSpec::period)
      .def("vertex_at", &EndSpec::vertex_at, py::arg("k"),
           "Word made of the first k letters of the end.")
      .def("__repr__", [](const EndSpec& e) {
        return "EndSpec('" + e.prefix + ":" + e.period + "')";
      });
  m.def("parse_end", &parse_end, py::arg("text"), py::arg("s") = 2,
        py::arg("rooted") = true,
        "Parse 'prefix:period' (or a plain prefix) into an end of the tree.");

  // ---- fusscat ---------------------------------------------------------------
  m.def(
      "fuss_catalan", [](int s, long n) { return to_int(fuss_catalan(s, n)); },
      py::arg("s"), py::arg("n"));
  m.def(
      "power_coeff",
      [](int s, long l, long n) { return to_int(power_coeff(s, l, n)); },
      py::arg("s"), py::arg("l"), py::arg("n"),
      "Coefficient of z^n in G(z)^l for the s-ary generating function.");
  m.def("critical_point", &critical_point, py::arg("s"));
  m.def(
      "g_eval",
      [](int s, double z) {
        auto ev = g_eval(s, z);
        py::dict d;
        d["value"] = ev.value;
        d["residual"] = ev.residual;
        d["derivative"] =
            ev.derivative ? py::object(py::float_(*ev.derivative)) : py::none();
        return d;
      },
      py::arg("s"), py::arg("z"));
  m.def("lln_limit", &lln_limit, py::arg("eta"));
  m.def(
      "bracket_dim",
      [](int s, long n, const std::string& w) {
        return to_int(bracket_dim(s, n, w));
      },
      py::arg("s"), py::arg("n"), py::arg("word"));
  m.def(
      "bracket_dim_derooted",
      [](int s, long n, const std::string& w) {
        return to_int(bracket_dim_derooted(s, n, w));
      },
      py::arg("s"), py::arg("n"), py::arg("word"));

  // ---- chains ---------------------------------------------------------------
  py::class_<ChainModel>(m, "ChainModel")
      .def_readonly("name", &ChainModel::name)
      .def_readonly("exact", &ChainModel::exact)
      .def_readonly("horizon", &ChainModel::horizon)
      .def("ensure", &ChainModel::ensure, py::arg("n"))
      .def_property_readonly(
          "graph", [](ChainModel& c) -> LeveledMultiGraph& { return c.graph; },
          py::return_value_policy::reference_internal)
      .def(
          "transition",
          [](ChainModel& c, int n, const std::string& v, const std::string& w) {
            return prob_float(c.transition(n, v, w));
          },
          py::arg("n"), py::arg("v"), py::arg("w"))
      .def(
          "transition_exact",
          [](ChainModel& c, int n, const std::string& v, const std::string& w) {
            return prob_str(c.transition(n, v, w));
          },
          py::arg("n"), py::arg("v"), py::arg("w"),
          "Transition probability as a decimal or rational string.")
      .def(
          "marginal",
          [](ChainModel& c, int n, const std::string& v) {
            c.ensure(n);
            int i = c.graph.idx(n, v);
            if (i < 0) throw std::invalid_argument("no such vertex");
            return c.marginals[static_cast<std::size_t>(n)]
                              [static_cast<std::size_t>(i)]
                .value();
          },
          py::arg("n"), py::arg("v"))
      .def(
          "csv", [](ChainModel& c, int n) { return chain_csv(c, n); },
          py::arg("n_max"))
      .def(
          "json", [](ChainModel& c, int n) { return chain_json(c, n); },
          py::arg("n_max"));

  m.def(
      "ballot_chain", [](const py::object& l) { return ballot_chain(to_prob(l)); },
      py::arg("lam"));
  m.def(
      "motzkin_chain",
      [](const py::object& l1, const py::object& l2) {
        return motzkin_chain(to_prob(l1), to_prob(l2));
      },
      py::arg("lambda1"), py::arg("lambda2"));
  m.def(
      "fib_walk",
      [](const py::object& end, const py::object& eta, int s, bool derooted) {
        EndSpec e = py::isinstance<py::str>(end)
                        ? parse_end(end.cast<std::string>(), s, !derooted)
                        : end.cast<EndSpec>();
        return fib_walk(e, to_prob(eta), s, derooted);
      },
      py::arg("end"), py::arg("eta"), py::arg("s") = 2,
      py::arg("derooted") = false);
  m.def(
      "aux_walk", [](const py::object& eta) { return aux_walk(to_prob(eta)); },
      py::arg("eta"));
  m.def(
      "control_chain",
      [](const py::object& up) { return control_chain(to_prob(up)); },
      py::arg("up"));

  py::class_<CentralityReport>(m, "CentralityReport")
      .def_readonly("passed", &CentralityReport::pass)
      .def_readonly("levels_checked", &CentralityReport::levels_checked)
      .def_readonly("max_spread", &CentralityReport::max_spread)
      .def_readonly("worst_level", &CentralityReport::worst_level)
      .def_readonly("worst_vertex", &CentralityReport::worst_vertex)
      .def_readonly("reason", &CentralityReport::reason)
      .def("__repr__", [](const CentralityReport& r) {
        return std::string("CentralityReport(passed=") +
               (r.pass ? "True" : "False") + ", max_spread=" +
               std::to_string(r.max_spread) + ")";
      });
  m.def("verify_centrality", &verify_centrality, py::arg("chain"),
        py::arg("n_max"), py::arg("tol"),
        "Certify that dim(v) * weight(v) is constant across each level.");
  m.def(
      "trace_weights",
      [](ChainModel& c, int n) {
        std::vector<std::string> out;
        for (const auto& p : trace_weights(c, n)) out.push_back(p.str());
        return out;
      },
      py::arg("chain"), py::arg("n"));
  m.def(
      "ergodic_estimate",
      [](const LeveledMultiGraph& g,
         const std::vector<std::pair<int, std::string>>& tail, int nv,
         const std::string& v, const std::string& w) {
        py::list out;
        for (const auto& e : ergodic_estimate(g, tail, nv, v, w))
          out.append(e ? py::object(py::float_(*e)) : py::none());
        return out;
      },
      py::arg("graph"), py::arg("tail"), py::arg("nv"), py::arg("v"),
      py::arg("w"),
      "Dimension-ratio estimates of the transition (nv,v)->(nv+1,w) along a tail.");
  m.def(
      "motzkin_marginal_rows",
      [](const py::object& l1, const py::object& l2, int n_max) {
        py::list rows;
        for (const auto& row :
             motzkin_marginal_rows(to_prob(l1), to_prob(l2), n_max)) {
          py::list r;
          for (const auto& p : row) r.append(p.value());
          rows.append(r);
        }
        return rows;
      },
      py::arg("lambda1"), py::arg("lambda2"), py::arg("n_max"));

  // ---- montecarlo -------------------------------------------------------------
  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("seed", &Trajectory::seed)
      .def_readonly("vertices", &Trajectory::vertices);
  py::class_<ExitTimeRecord>(m, "ExitTimeRecord")
      .def_readonly("k", &ExitTimeRecord::k)
      .def_readonly("n_k", &ExitTimeRecord::n_k)
      .def_readonly("r_k", &ExitTimeRecord::r_k)
      .def_readonly("ratio", &ExitTimeRecord::ratio)
      .def_readonly("censored", &ExitTimeRecord::censored);
  py::class_<EstimateResult>(m, "EstimateResult")
      .def_readonly("estimate", &EstimateResult::estimate)
      .def_readonly("stderr", &EstimateResult::stderr_)
      .def_readonly("exact_target", &EstimateResult::exact_target)
      .def_readonly("count", &EstimateResult::count);
  py::class_<LlnSummary>(m, "LlnSummary")
      .def_readonly("eta", &LlnSummary::eta)
      .def_readonly("k", &LlnSummary::k)
      .def_readonly("count", &LlnSummary::count)
      .def_readonly("mean", &LlnSummary::mean)
      .def_readonly("stddev", &LlnSummary::stddev)
      .def_readonly("stderr", &LlnSummary::stderr_)
      .def_readonly("median", &LlnSummary::median)
      .def_readonly("target", &LlnSummary::target)
      .def_readonly("censored", &LlnSummary::censored);
  py::class_<Su2Result>(m, "Su2Result")
      .def_readonly("value", &Su2Result::value)
      .def_readonly("err", &Su2Result::err);

  m.def("mix_seed", &mix_seed, py::arg("seed"), py::arg("index"));
  m.def("sample_trajectories", &sample_trajectories, py::arg("chain"),
        py::arg("steps"), py::arg("count"), py::arg("seed"));
  m.def("empirical_return_probability", &empirical_return_probability,
        py::arg("chain"), py::arg("n"), py::arg("count"), py::arg("seed"));
  m.def("exit_times_increments", &exit_times_increments, py::arg("end"),
        py::arg("eta"), py::arg("k_max"), py::arg("count"), py::arg("seed"));
  m.def("exit_times_direct", &exit_times_direct, py::arg("chain"),
        py::arg("k_max"), py::arg("horizon"), py::arg("count"), py::arg("seed"),
        py::arg("margin") = 30);
  m.def("lln_experiment", &lln_experiment, py::arg("end"), py::arg("eta"),
        py::arg("k_max"), py::arg("count"), py::arg("seed"));
  m.def("convergence_to_end", &convergence_to_end, py::arg("chain"),
        py::arg("end"), py::arg("steps"), py::arg("count"), py::arg("seed"),
        py::arg("threshold"));
  m.def("root_returns", &root_returns, py::arg("chain"), py::arg("steps"),
        py::arg("count"), py::arg("seed"));
  m.def("recurrence_probe", &recurrence_probe, py::arg("chain"),
        py::arg("steps"), py::arg("count"), py::arg("seed"));
  m.def("su2_moment", &su2_moment, py::arg("lambda1"), py::arg("lambda2"),
        py::arg("n"), py::arg("order") = 32);
  m.def("trajectories_csv", &trajectories_csv, py::arg("trajectories"));
  m.def("exit_records_csv", &exit_records_csv, py::arg("records"));

  // Exceptions: invalid parameters surface as ValueError.
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::invalid_argument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const std::domain_error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });
}
