// canonicalize.hh -- structuring, streamlining and the co-Buchi chain
//
// The pipeline is
//
//   structure_dpa -> streamline -> extract_chain
//
// structure_dpa makes every state reachable and moves every language
// class into a single maximal SCC.  streamline lowers transition colors
// as far as possible without changing the language of any run.  The
// chain splits the result into co-Buchi automata A_0 .. A_{cmax+1}, where
// A_i accepts exactly the words whose natural color is at least i.

#ifndef DPACANON_CANONICALIZE_HH
#define DPACANON_CANONICALIZE_HH

#include <dpacanon/automaton.hh>
#include <dpacanon/graph.hh>

#include <string>
#include <vector>

namespace dpacanon
{

struct StructureViolation
{
  enum class Kind { unreachable, split_class };
  Kind kind;
  std::size_t class_id = 0;            ///< for split_class
  std::vector<std::size_t> scc_ids;    ///< SCCs the class is spread over
  StateSet states;                     ///< unreachable states or the class
  std::string message;
};

struct StructureReport
{
  std::vector<StructureViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
  std::string to_string() const;
};

StructureReport is_structured(const ParityAutomaton& a);

struct StructureResult
{
  ParityAutomaton automaton;
  /// original_id[q] is the input state that became state q.  Surviving
  /// states keep their relative order.
  std::vector<State> original_id;
};

/// Equivalent structured DPA with surviving states renumbered densely in
/// their original order (an already structured input comes back unchanged).
StructureResult structure_dpa_with_map(const ParityAutomaton& a);
ParityAutomaton structure_dpa(const ParityAutomaton& a);

/// How step (3) of the recoloring treats several qualifying SCCs.
enum class StreamlinePolicy
{
  all_sccs, ///< recolor every qualifying SCC, then re-decompose
  one_scc,  ///< recolor the first qualifying SCC only, then re-decompose
};

/// Recolors a structured DPA; states, letters and edge endpoints stay
/// put.  Throws PreconditionError when `a` is not structured.
ParityAutomaton streamline(const ParityAutomaton& a,
                           StreamlinePolicy policy = StreamlinePolicy::all_sccs);

bool is_streamlined(const ParityAutomaton& a);

/// structure_dpa followed by streamline.
ParityAutomaton canonicalize(const ParityAutomaton& a);

/// Builds A_0 .. A_{cmax+1}.  Throws PreconditionError unless `a` is
/// streamlined and `equiv` is its state partition.
ChainRepresentation extract_chain(const ParityAutomaton& a,
                                  const Partition& equiv);

struct LevelStats
{
  std::size_t level = 0;
  std::size_t states = 0;
  std::size_t accepting = 0;
  std::size_t rejecting = 0;
  std::size_t jumps = 0;
};

std::vector<LevelStats> chain_stats(const ChainRepresentation& c);

} // namespace dpacanon

#endif
