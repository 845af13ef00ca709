// Python bindings for the dpacanon library.

#include <dpacanon/dpacanon.hh>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

namespace py = pybind11;
using namespace dpacanon;

namespace
{

template <typename A>
std::string
repr_automaton(const char* kind, const A& a)
{
  return "<" + std::string(kind) + " states=" + std::to_string(a.state_count)
         + " letters=" + std::to_string(a.alphabet.size())
         + " transitions=" + std::to_string(a.transitions.size()) + ">";
}

// Lassos may be passed as LassoWord objects or as "u:v" text.
LassoWord
to_lasso(const py::object& w, const Alphabet& alphabet)
{
  if (py::isinstance<py::str>(w))
    return parse_lasso(w.cast<std::string>(), alphabet);
  return w.cast<LassoWord>();
}

} // namespace

PYBIND11_MODULE(_dpacanon, m)
{
  m.doc() = "Canonical forms and natural colors for deterministic parity "
            "automata";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", error);
  py::register_exception<PreconditionError>(m, "PreconditionError", error);
  py::register_exception<ParseError>(m, "ParseError", error);

  py::class_<Alphabet>(m, "Alphabet")
    .def(py::init<std::vector<std::string>>(), py::arg("letters"))
    .def_static("latin", &Alphabet::latin, py::arg("n"))
    .def_property_readonly("letters", &Alphabet::letters)
    .def("find", &Alphabet::find, py::arg("name"))
    .def("__len__", &Alphabet::size)
    .def("__getitem__", &Alphabet::name)
    .def(py::self == py::self)
    .def("__repr__", [](const Alphabet& a) {
      std::string s = "Alphabet([";
      for (std::size_t i = 0; i < a.size(); ++i)
        s += (i ? ", '" : "'") + a.name(static_cast<Letter>(i)) + "'";
      return s + "])";
    });

  py::class_<Transition>(m, "Transition")
    .def(py::init<State, Letter, State, Color>(), py::arg("src"),
         py::arg("sym"), py::arg("dst"), py::arg("color"))
    .def_readwrite("src", &Transition::src)
    .def_readwrite("sym", &Transition::sym)
    .def_readwrite("dst", &Transition::dst)
    .def_readwrite("color", &Transition::color)
    .def(py::self == py::self)
    .def("__repr__", [](const Transition& t) {
      return "Transition(" + std::to_string(t.src) + ", "
             + std::to_string(t.sym) + ", " + std::to_string(t.dst) + ", "
             + std::to_string(t.color) + ")";
    });

  py::class_<ParityAutomaton>(m, "ParityAutomaton")
    .def(py::init([](Alphabet alphabet, std::size_t states, State initial,
                     std::vector<Transition> transitions) {
           return ParityAutomaton{std::move(alphabet), states, initial,
                                  std::move(transitions)};
         }),
         py::arg("alphabet"), py::arg("states"), py::arg("initial"),
         py::arg("transitions"))
    .def_readwrite("alphabet", &ParityAutomaton::alphabet)
    .def_readwrite("states", &ParityAutomaton::state_count)
    .def_readwrite("initial", &ParityAutomaton::initial)
    .def_readwrite("transitions", &ParityAutomaton::transitions)
    .def(py::self == py::self)
    .def("__repr__", [](const ParityAutomaton& a) {
      return repr_automaton("ParityAutomaton", a);
    });

  py::class_<CoBuchiAutomaton>(m, "CoBuchiAutomaton")
    .def(py::init([](Alphabet alphabet, std::size_t states, State initial,
                     std::vector<Transition> transitions, bool gfg) {
           return CoBuchiAutomaton{std::move(alphabet), states, initial,
                                   std::move(transitions), gfg};
         }),
         py::arg("alphabet"), py::arg("states"), py::arg("initial"),
         py::arg("transitions"), py::arg("gfg") = false)
    .def_readwrite("alphabet", &CoBuchiAutomaton::alphabet)
    .def_readwrite("states", &CoBuchiAutomaton::state_count)
    .def_readwrite("initial", &CoBuchiAutomaton::initial)
    .def_readwrite("transitions", &CoBuchiAutomaton::transitions)
    .def_readwrite("gfg", &CoBuchiAutomaton::gfg_claimed)
    .def(py::self == py::self)
    .def("__repr__", [](const CoBuchiAutomaton& a) {
      return repr_automaton("CoBuchiAutomaton", a);
    });

  py::class_<LassoWord>(m, "LassoWord")
    .def(py::init([](std::vector<Letter> u, std::vector<Letter> v) {
           return LassoWord{std::move(u), std::move(v)};
         }),
         py::arg("prefix"), py::arg("period"))
    .def_readwrite("prefix", &LassoWord::prefix)
    .def_readwrite("period", &LassoWord::period)
    .def(py::self == py::self)
    .def("__repr__", [](const LassoWord& w) {
      auto join = [](const std::vector<Letter>& xs) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i)
          s += (i ? ", " : "") + std::to_string(xs[i]);
        return "[" + s + "]";
      };
      return "LassoWord(" + join(w.prefix) + ", " + join(w.period) + ")";
    });

  py::class_<Partition>(m, "Partition")
    .def_readonly("class_of", &Partition::class_of)
    .def_readonly("classes", &Partition::classes)
    .def("same", &Partition::same)
    .def(py::self == py::self);

  py::class_<ChainRepresentation>(m, "Chain")
    .def_readonly("levels", &ChainRepresentation::levels)
    .def_readonly("source_color_max", &ChainRepresentation::source_color_max);

  py::class_<LevelStats>(m, "LevelStats")
    .def_readonly("level", &LevelStats::level)
    .def_readonly("states", &LevelStats::states)
    .def_readonly("accepting", &LevelStats::accepting)
    .def_readonly("rejecting", &LevelStats::rejecting)
    .def_readonly("jumps", &LevelStats::jumps);

  py::class_<RunAnalysis>(m, "RunAnalysis")
    .def_readonly("stem_states", &RunAnalysis::stem_states)
    .def_readonly("cycle_states", &RunAnalysis::cycle_states)
    .def_readonly("dominating_color", &RunAnalysis::dominating_color)
    .def_readonly("accepted", &RunAnalysis::accepted);

  py::class_<EquivalenceResult>(m, "EquivalenceResult")
    .def_readonly("equivalent", &EquivalenceResult::equivalent)
    .def_readonly("witness", &EquivalenceResult::witness)
    .def("__bool__",
         [](const EquivalenceResult& r) { return r.equivalent; });

  py::enum_<StreamlinePolicy>(m, "StreamlinePolicy")
    .value("all_sccs", StreamlinePolicy::all_sccs)
    .value("one_scc", StreamlinePolicy::one_scc);

  // Formats.
  m.def("parse", [](const std::string& text) -> py::object {
    auto any = parse_any(text);
    if (auto* a = std::get_if<ParityAutomaton>(&any))
      return py::cast(*a);
    return py::cast(std::get<CoBuchiAutomaton>(any));
  }, py::arg("text"), "Parse native or HOA text.");
  m.def("load", [](const std::string& path) -> py::object {
    std::ifstream in(path, std::ios::binary);
    if (!in)
      throw Error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    auto any = parse_any(os.str());
    if (auto* a = std::get_if<ParityAutomaton>(&any))
      return py::cast(*a);
    return py::cast(std::get<CoBuchiAutomaton>(any));
  }, py::arg("path"));
  m.def("to_native", py::overload_cast<const ParityAutomaton&>(&emit_native));
  m.def("to_native", py::overload_cast<const CoBuchiAutomaton&>(&emit_native));
  m.def("to_hoa", py::overload_cast<const ParityAutomaton&>(&emit_hoa));
  m.def("to_hoa", py::overload_cast<const CoBuchiAutomaton&>(&emit_hoa));
  m.def("to_dot", py::overload_cast<const ParityAutomaton&>(&emit_dot));
  m.def("to_dot", py::overload_cast<const CoBuchiAutomaton&>(&emit_dot));
  m.def("parse_lasso", &parse_lasso, py::arg("text"), py::arg("alphabet"));
  m.def("format_lasso", &format_lasso, py::arg("word"), py::arg("alphabet"));
  m.def("normalize_lasso", &normalize_lasso, py::arg("word"));

  // Automaton core.
  m.def("validate", [](const ParityAutomaton& a) {
    std::vector<std::string> out;
    for (const auto& v : validate_dpa(a).violations)
      out.push_back(v.message);
    return out;
  }, py::arg("automaton"), "Violation messages; empty when valid.");
  m.def("complete", &complete_dpa, py::arg("automaton"));
  m.def("random_dpa",
        py::overload_cast<std::size_t, std::size_t, std::size_t,
                          std::uint64_t>(&random_dpa),
        py::arg("states"), py::arg("colors"), py::arg("letters"),
        py::arg("seed"));
  m.def("valuation_alphabet", &valuation_alphabet, py::arg("aps"));

  // Analysis.
  m.def("run", [](const ParityAutomaton& a, const py::object& w) {
    return dpa_lasso_run(a, to_lasso(w, a.alphabet));
  }, py::arg("automaton"), py::arg("word"));
  m.def("member", [](const ParityAutomaton& a, const py::object& w) {
    return dpa_lasso_run(a, to_lasso(w, a.alphabet)).accepted;
  }, py::arg("automaton"), py::arg("word"));
  m.def("member", [](const CoBuchiAutomaton& a, const py::object& w) {
    return gca_lasso_member(a, to_lasso(w, a.alphabet));
  }, py::arg("automaton"), py::arg("word"));
  m.def("state_equivalence", &state_equivalence, py::arg("automaton"));
  m.def("language_equiv", &dpa_language_equiv, py::arg("a"), py::arg("b"));

  // Canonicalization.
  m.def("is_structured",
        [](const ParityAutomaton& a) { return is_structured(a).ok(); },
        py::arg("automaton"));
  m.def("structure", &structure_dpa, py::arg("automaton"));
  m.def("streamline", &streamline, py::arg("automaton"),
        py::arg("policy") = StreamlinePolicy::all_sccs);
  m.def("is_streamlined", &is_streamlined, py::arg("automaton"));
  m.def("canonicalize",
        [](const ParityAutomaton& a) { return dpacanon::canonicalize(a); },
        py::arg("automaton"));
  m.def("extract_chain", [](const ParityAutomaton& a) {
    return extract_chain(a, state_equivalence(a));
  }, py::arg("streamlined"));
  m.def("chain_stats", &chain_stats, py::arg("chain"));

  // Natural colors.
  m.def("natural_color", [](const ParityAutomaton& a, const py::object& w) {
    auto s = canonicalize(a);
    return corun_color(s, state_equivalence(s), to_lasso(w, a.alphabet));
  }, py::arg("automaton"), py::arg("word"),
     "Natural color of the word for the language of the automaton.");
  m.def("resolve_run", [](const CoBuchiAutomaton& a, const py::object& w) {
    return resolve_run(a, to_lasso(w, a.alphabet)).accepted;
  }, py::arg("level"), py::arg("word"));
}
