// random.hh -- seeded generators for automata and lasso words
//
// Only the raw output of std::mt19937_64 is used (never the standard
// distributions), so a seed yields the same automaton on every platform.

#ifndef DPACANON_RANDOM_HH
#define DPACANON_RANDOM_HH

#include <dpacanon/automaton.hh>

#include <cstdint>
#include <random>

namespace dpacanon
{

class Rng
{
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform value in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform value in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi)
  {
    return lo + below(hi - lo + 1);
  }

private:
  std::mt19937_64 engine_;
};

/// Uniform successor and color in [0, colors) for every (state, letter),
/// pruned to the states reachable from state 0.  The result is complete
/// and deterministic.  Throws ValidationError on zero arguments.
ParityAutomaton random_dpa(std::size_t states, std::size_t colors,
                           const Alphabet& alphabet, std::uint64_t seed);
ParityAutomaton random_dpa(std::size_t states, std::size_t colors,
                           std::size_t letters, std::uint64_t seed);

/// Normalized lasso with |prefix| <= max_prefix and 1 <= |period| <=
/// max_period (before normalization).
LassoWord random_lasso(Rng& rng, std::size_t letters, std::size_t max_prefix,
                       std::size_t max_period);

/// Alphabet of the 2^aps valuations of p0 .. p{aps-1}, named as in HOA.
Alphabet valuation_alphabet(std::size_t aps);

} // namespace dpacanon

#endif
