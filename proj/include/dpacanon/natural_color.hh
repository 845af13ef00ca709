// natural_color.hh -- natural colors of lasso words and the GFG resolver

#ifndef DPACANON_NATURAL_COLOR_HH
#define DPACANON_NATURAL_COLOR_HH

#include <dpacanon/automaton.hh>

#include <optional>
#include <vector>

namespace dpacanon
{

/// A run that follows the deterministic run up to position p and then
/// continues, from a language-equivalent state, deterministically.
struct CoRun
{
  std::size_t jump_position = 1;
  State jump_target = 0;
  Color dominating_color = 0;
};

/// Highest dominating color over all co-runs of w; this is the natural
/// color of w for L(a).  Throws PreconditionError unless `a` is
/// streamlined and `equiv` is its state partition.
Color corun_color(const ParityAutomaton& a, const Partition& equiv,
                  const LassoWord& w);

/// A co-run realizing corun_color (smallest jump position, then lowest
/// target state).
CoRun best_corun(const ParityAutomaton& a, const Partition& equiv,
                 const LassoWord& w);

/// Highest level of the chain that accepts w.
Color natural_color_via_chain(const ChainRepresentation& c, const LassoWord& w);

/// Configuration of the "longest accepting suffix" strategy for a chain
/// automaton after reading `position` letters.
struct ResolverState
{
  std::size_t position = 0;
  /// tracked[q]: least l such that some run prefix ending in q uses only
  /// accepting transitions from position l on; empty if q is unreachable.
  std::vector<std::optional<std::size_t>> tracked;
  State current = 0;
  /// Color of the transition taken last; empty at position 0.
  std::optional<Color> last_color;

  static ResolverState initial(const CoBuchiAutomaton& a);
};

/// One move of the resolver: take the accepting transition if there is
/// one, else move to the successor with the least tracked value (lowest
/// state index on ties).  Throws PreconditionError on inconsistent input.
ResolverState gfg_resolver_step(const CoBuchiAutomaton& a,
                                const ResolverState& s, Letter x);

struct ResolvedRun
{
  bool accepted = false;
  /// Positions of rejecting transitions on the repeating part of the run.
  std::vector<std::size_t> rejecting_positions;
};

ResolvedRun resolve_run(const CoBuchiAutomaton& a, const LassoWord& w);

} // namespace dpacanon

#endif
