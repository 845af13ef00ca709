// random.cc -- seeded generators for automata and lasso words

#include <dpacanon/random.hh>

#include <dpacanon/graph.hh>

namespace dpacanon
{

std::uint64_t
Rng::below(std::uint64_t bound)
{
  if (bound == 0)
    throw ValidationError("empty random range");
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do
    x = engine_();
  while (x >= limit);
  return x % bound;
}

ParityAutomaton
random_dpa(std::size_t states, std::size_t colors, const Alphabet& alphabet,
           std::uint64_t seed)
{
  if (states == 0 || colors == 0 || alphabet.size() == 0)
    throw ValidationError("random_dpa needs positive states, colors and "
                          "letters");
  Rng rng(seed);
  ParityAutomaton raw;
  raw.alphabet = alphabet;
  raw.state_count = states;
  raw.initial = 0;
  for (State q = 0; q < states; ++q)
    for (Letter x = 0; x < alphabet.size(); ++x)
      {
        auto dst = static_cast<State>(rng.below(states));
        auto col = static_cast<Color>(rng.below(colors));
        raw.transitions.push_back({q, x, dst, col});
      }

  // Prune to the reachable part, keeping the state order.
  auto reach = reachable_states(raw, 0);
  std::vector<State> new_id(states, 0);
  for (std::size_t i = 0; i < reach.size(); ++i)
    new_id[reach[i]] = static_cast<State>(i);
  std::vector<bool> keep(states, false);
  for (State q : reach)
    keep[q] = true;
  ParityAutomaton a;
  a.alphabet = alphabet;
  a.state_count = reach.size();
  a.initial = 0;
  for (const auto& t : raw.transitions)
    if (keep[t.src])
      a.transitions.push_back({new_id[t.src], t.sym, new_id[t.dst], t.color});
  return complete_dpa(a);
}

ParityAutomaton
random_dpa(std::size_t states, std::size_t colors, std::size_t letters,
           std::uint64_t seed)
{
  if (letters == 0)
    throw ValidationError("random_dpa needs at least one letter");
  return random_dpa(states, colors, Alphabet::latin(letters), seed);
}

LassoWord
random_lasso(Rng& rng, std::size_t letters, std::size_t max_prefix,
             std::size_t max_period)
{
  if (letters == 0 || max_period == 0)
    throw ValidationError("random_lasso needs letters and a period length");
  LassoWord w;
  w.prefix.resize(rng.below(max_prefix + 1));
  w.period.resize(rng.between(1, max_period));
  for (auto& x : w.prefix)
    x = static_cast<Letter>(rng.below(letters));
  for (auto& x : w.period)
    x = static_cast<Letter>(rng.below(letters));
  return normalize_lasso(w);
}

Alphabet
valuation_alphabet(std::size_t aps)
{
  std::vector<std::string> names;
  for (std::size_t v = 0; v < (std::size_t{1} << aps); ++v)
    {
      if (aps == 0)
        {
          names.push_back("t");
          break;
        }
      std::string s;
      for (std::size_t j = 0; j < aps; ++j)
        {
          if (j)
            s += '&';
          if (!((v >> j) & 1u))
            s += '!';
          s += "p" + std::to_string(j);
        }
      names.push_back(std::move(s));
    }
  return Alphabet(std::move(names));
}

} // namespace dpacanon
