// natural_color.cc -- co-runs and the GFG resolver

#include <dpacanon/natural_color.hh>

#include <dpacanon/canonicalize.hh>
#include <dpacanon/graph.hh>

#include <algorithm>
#include <map>
#include <set>

namespace dpacanon
{

namespace
{

void
require_streamlined(const ParityAutomaton& a, const Partition& equiv)
{
  if (!is_streamlined(a))
    throw PreconditionError("co-runs need a streamlined automaton");
  if (!(equiv == state_equivalence(a)))
    throw PreconditionError("partition is not the language equivalence of "
                            "the automaton");
}

// The lasso w_p w_{p+1} ... as its own lasso word.
LassoWord
suffix_at(const LassoWord& w, std::size_t p)
{
  const std::size_t u = w.prefix.size();
  if (p < u)
    return {std::vector<Letter>(w.prefix.begin() + p, w.prefix.end()),
            w.period};
  LassoWord s;
  std::size_t r = (p - u) % w.period.size();
  s.period.assign(w.period.begin() + r, w.period.end());
  s.period.insert(s.period.end(), w.period.begin(), w.period.begin() + r);
  return s;
}

// Positions p and p' see the same suffix iff their classes agree.
std::size_t
position_class(const LassoWord& w, std::size_t p)
{
  const std::size_t u = w.prefix.size();
  return p < u ? p : u + (p - u) % w.period.size();
}

CoRun
best_corun_impl(const ParityAutomaton& a, const Partition& equiv,
                const LassoWord& w)
{
  DpaTable t(a);
  require_valid(w, t.letters());
  // After this many steps every (state, suffix) pair has been seen.
  const std::size_t bound = w.prefix.size() + t.states() * w.period.size();

  std::set<std::pair<State, std::size_t>> done;
  CoRun best;
  bool have = false;
  State q = t.initial();
  for (std::size_t p = 1; p <= bound; ++p)
    {
      q = t.dst(q, w.at(p - 1));
      const std::size_t pc = position_class(w, p);
      for (State target : equiv.classes[equiv.class_of[q]])
        {
          if (!done.insert({target, pc}).second)
            continue;
          Color c = dpa_lasso_run(t, target, suffix_at(w, p)).dominating_color;
          if (!have || c > best.dominating_color)
            {
              best = {p, target, c};
              have = true;
            }
        }
    }
  return best;
}

// Transitions of a co-Buchi automaton grouped by (state, letter).
struct Rows
{
  std::size_t k;
  std::vector<std::vector<std::pair<State, Color>>> rows;

  explicit Rows(const CoBuchiAutomaton& a)
    : k(a.alphabet.size()), rows(a.state_count * a.alphabet.size())
  {
    for (const auto& t : sorted_transitions(a.transitions))
      rows[t.src * k + t.sym].emplace_back(t.dst, t.color);
  }

  const std::vector<std::pair<State, Color>>& at(State q, Letter x) const
  {
    return rows[q * k + x];
  }
};

ResolverState
step(const Rows& rows, const ResolverState& s, Letter x)
{
  const std::size_t n = s.tracked.size();
  if (s.current >= n || !s.tracked[s.current])
    throw PreconditionError("resolver state does not track its current state");
  if (x >= rows.k)
    throw ValidationError("letter out of range");

  ResolverState next;
  next.position = s.position + 1;
  next.tracked.assign(n, std::nullopt);
  for (State q = 0; q < n; ++q)
    {
      if (!s.tracked[q])
        continue;
      for (auto [dst, col] : rows.at(q, x))
        {
          std::size_t l = col == accepting_color ? *s.tracked[q]
                                                 : s.position + 1;
          auto& slot = next.tracked[dst];
          if (!slot || l < *slot)
            slot = l;
        }
    }

  const auto& out = rows.at(s.current, x);
  if (out.empty())
    throw PreconditionError("state " + std::to_string(s.current)
                            + " has no transition on letter "
                            + std::to_string(x));
  auto acc = std::find_if(out.begin(), out.end(), [](const auto& e) {
    return e.second == accepting_color;
  });
  if (acc != out.end())
    {
      next.current = acc->first;
      next.last_color = accepting_color;
      return next;
    }
  // Rows are sorted by target, so the first minimum has the lowest index.
  const auto* pick = &out.front();
  for (const auto& e : out)
    if (*next.tracked[e.first] < *next.tracked[pick->first])
      pick = &e;
  next.current = pick->first;
  next.last_color = pick->second;
  return next;
}

} // namespace

Color
corun_color(const ParityAutomaton& a, const Partition& equiv,
            const LassoWord& w)
{
  require_streamlined(a, equiv);
  return best_corun_impl(a, equiv, w).dominating_color;
}

CoRun
best_corun(const ParityAutomaton& a, const Partition& equiv,
           const LassoWord& w)
{
  require_streamlined(a, equiv);
  return best_corun_impl(a, equiv, w);
}

Color
natural_color_via_chain(const ChainRepresentation& c, const LassoWord& w)
{
  for (std::size_t i = c.levels.size(); i-- > 0;)
    if (gca_lasso_member(c.levels[i], w))
      return static_cast<Color>(i);
  throw PreconditionError("no chain level accepts the word; level 0 must be "
                          "universal");
}

ResolverState
ResolverState::initial(const CoBuchiAutomaton& a)
{
  ResolverState s;
  s.tracked.assign(a.state_count, std::nullopt);
  s.tracked.at(a.initial) = 0;
  s.current = a.initial;
  return s;
}

ResolverState
gfg_resolver_step(const CoBuchiAutomaton& a, const ResolverState& s, Letter x)
{
  if (s.tracked.size() != a.state_count)
    throw PreconditionError("resolver state does not match the automaton");
  return step(Rows(a), s, x);
}

ResolvedRun
resolve_run(const CoBuchiAutomaton& a, const LassoWord& w)
{
  require_valid(a);
  require_valid(w, a.alphabet.size());
  Rows rows(a);

  // Future moves only depend on the order of the tracked values, so
  // configurations are compared with those values replaced by ranks.
  auto key = [&](const ResolverState& s) {
    std::vector<std::size_t> values;
    for (const auto& l : s.tracked)
      if (l)
        values.push_back(*l);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<std::size_t> k{position_class(w, s.position), s.current};
    for (const auto& l : s.tracked)
      k.push_back(l ? static_cast<std::size_t>(
                          std::lower_bound(values.begin(), values.end(), *l)
                          - values.begin())
                    : npos);
    return k;
  };

  std::map<std::vector<std::size_t>, std::size_t> seen;
  std::vector<Color> taken; // taken[k]: color of the transition reading w_k
  ResolverState s = ResolverState::initial(a);
  for (;;)
    {
      auto [it, fresh] = seen.emplace(key(s), s.position);
      if (!fresh)
        {
          ResolvedRun r;
          for (std::size_t p = it->second; p < s.position; ++p)
            if (taken[p] != accepting_color)
              r.rejecting_positions.push_back(p);
          r.accepted = r.rejecting_positions.empty();
          return r;
        }
      s = step(rows, s, w.at(s.position));
      taken.push_back(*s.last_color);
    }
}

} // namespace dpacanon
