// graph.hh -- SCCs, reachability, lasso runs and language equivalence

#ifndef DPACANON_GRAPH_HH
#define DPACANON_GRAPH_HH

#include <dpacanon/automaton.hh>

#include <optional>
#include <vector>

namespace dpacanon
{

using StateSet = std::vector<State>; ///< sorted, duplicate free

/// Plain directed multigraph on {0..n-1}; edge i goes from src[i] to dst[i].
struct Digraph
{
  std::size_t nodes = 0;
  std::vector<State> src;
  std::vector<State> dst;

  std::size_t edges() const noexcept { return src.size(); }
  void add(State s, State d) { src.push_back(s); dst.push_back(d); }

  static Digraph of(const ParityAutomaton& a);
  static Digraph of(const CoBuchiAutomaton& a);
};

struct SccDecomposition
{
  std::vector<std::size_t> scc_of;
  std::vector<StateSet> sccs;
  /// Topological numbering of the condensation: rank[B] > rank[A]
  /// whenever B is reachable from A != B.  SCC ids are chosen so that
  /// rank[id] == id.
  std::vector<std::size_t> rank;
};

/// SCCs of the subgraph induced by `alive_nodes` and `alive_edges`
/// (empty masks mean "everything").  Nodes outside the mask get
/// scc_of == npos.
SccDecomposition scc_decompose(const Digraph& g,
                               const std::vector<bool>& alive_nodes = {},
                               const std::vector<bool>& alive_edges = {});
SccDecomposition scc_decompose(const ParityAutomaton& a);
SccDecomposition scc_decompose(const CoBuchiAutomaton& a);

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

StateSet reachable_states(const ParityAutomaton& a, State from);
StateSet reachable_states(const CoBuchiAutomaton& a, State from);

struct TransientElements
{
  std::vector<Transition> transitions;
  StateSet states;
};

/// A transition is transient iff its source is not reachable from its
/// target; a state is transient iff it lies on no cycle.
TransientElements transient_elements(const ParityAutomaton& a);
TransientElements transient_elements(const CoBuchiAutomaton& a);

struct RunAnalysis
{
  std::vector<State> stem_states;  ///< states before the cycle is entered
  std::vector<State> cycle_states; ///< states of the eventual cycle
  Color dominating_color = 0;
  bool accepted = false;
};

RunAnalysis dpa_lasso_run(const ParityAutomaton& a, const LassoWord& w);
/// Same, for the run of the table's automaton started in `from`.
RunAnalysis dpa_lasso_run(const DpaTable& t, State from, const LassoWord& w);

/// Does some run of the co-Buchi automaton accept w?  Decided on the
/// product of the automaton with the lasso positions.
bool gca_lasso_member(const CoBuchiAutomaton& a, const LassoWord& w);

/// Language equivalence classes of the states of a complete DPA.
Partition state_equivalence(const ParityAutomaton& a);

struct EquivalenceResult
{
  bool equivalent = true;
  std::optional<LassoWord> witness;
};

/// Decides L(a) == L(b); on inequality the witness is accepted by exactly
/// one of the two automata.  Throws ValidationError on alphabet mismatch.
EquivalenceResult dpa_language_equiv(const ParityAutomaton& a,
                                     const ParityAutomaton& b);

} // namespace dpacanon

#endif
