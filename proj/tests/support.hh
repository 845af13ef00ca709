// support.hh -- fixtures and independent oracles shared by the test suites
//
// The oracles here deliberately avoid the library's algorithms: they walk
// words letter by letter instead of decomposing product graphs.

#ifndef DPACANON_TESTS_SUPPORT_HH
#define DPACANON_TESTS_SUPPORT_HH

#include <dpacanon/dpacanon.hh>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace dpacanon::test
{

inline std::string
data_path(const std::string& name)
{
  return std::string(DPACANON_DATA_DIR) + "/" + name;
}

inline std::string
slurp(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// States qc, q1, q2, q3 = 0..3; letters a, b, c = 0..2.
inline ParityAutomaton
fig1()
{
  ParityAutomaton a;
  a.alphabet = Alphabet({"a", "b", "c"});
  a.state_count = 4;
  a.initial = 0;
  a.transitions = {
    {0, 0, 1, 3}, {0, 1, 2, 4}, {0, 2, 3, 5},
    {1, 0, 0, 1}, {1, 1, 2, 2}, {1, 2, 2, 2},
    {2, 0, 3, 3}, {2, 1, 0, 5}, {2, 2, 3, 3},
    {3, 0, 0, 5}, {3, 1, 0, 5}, {3, 2, 0, 5},
  };
  return a;
}

inline std::vector<Letter>
letters(const std::string& s)
{
  std::vector<Letter> out;
  for (char c : s)
    out.push_back(static_cast<Letter>(c - 'a'));
  return out;
}

inline LassoWord
lasso(const std::string& u, const std::string& v)
{
  return LassoWord{letters(u), letters(v)};
}

inline ParityAutomaton
shift_colors(ParityAutomaton a, Color by)
{
  for (auto& t : a.transitions)
    t.color += by;
  return a;
}

// Adds a copy of state q and routes some of the transitions into q to it.
inline ParityAutomaton
duplicate_state(ParityAutomaton a, State q)
{
  const State copy = static_cast<State>(a.state_count);
  std::vector<Transition> rows;
  for (auto& t : a.transitions)
    {
      if (t.src == q)
        rows.push_back({copy, t.sym, t.dst, t.color});
      if (t.dst == q && (t.src + t.sym) % 2 == 1)
        t.dst = copy;
    }
  a.transitions.insert(a.transitions.end(), rows.begin(), rows.end());
  a.state_count += 1;
  return a;
}

// Letter-by-letter simulation of the run from `from`; the dominating
// color is the least color in a window that is guaranteed to cover the
// eventual cycle.
inline Color
simulate_color(const DpaTable& t, State from, const LassoWord& w,
               std::size_t start = 0)
{
  const std::size_t cycle_bound = t.states() * w.period.size();
  const std::size_t settle = w.prefix.size() + cycle_bound;
  State q = from;
  Color least = static_cast<Color>(-1);
  for (std::size_t i = 0; i < settle + cycle_bound; ++i)
    {
      Letter x = w.at(start + i);
      if (i >= settle)
        least = std::min(least, t.color(q, x));
      q = t.dst(q, x);
    }
  return least;
}

inline bool
simulate_member(const ParityAutomaton& a, const LassoWord& w)
{
  DpaTable t(a);
  return simulate_color(t, t.initial(), w) % 2 == 0;
}

// p ~ q iff no closed walk reachable from (p, q) in the pair graph has
// minima of different parity.  Closed walks are explored by tracking the
// running minima of both components, without any SCC analysis.
inline bool
oracle_equivalent(const DpaTable& ta, State p, const DpaTable& tb, State q)
{
  using Node = std::pair<State, State>;
  std::set<Node> reach{{p, q}};
  std::vector<Node> todo{{p, q}};
  while (!todo.empty())
    {
      auto [x, y] = todo.back();
      todo.pop_back();
      for (Letter l = 0; l < ta.letters(); ++l)
        {
          Node n{ta.dst(x, l), tb.dst(y, l)};
          if (reach.insert(n).second)
            todo.push_back(n);
        }
    }
  for (const auto& z : reach)
    {
      using Aug = std::tuple<State, State, Color, Color>;
      std::set<Aug> seen;
      std::vector<Aug> stack;
      auto push = [&](State x, State y, Color m1, Color m2) {
        if (seen.insert({x, y, m1, m2}).second)
          stack.push_back({x, y, m1, m2});
      };
      for (Letter l = 0; l < ta.letters(); ++l)
        push(ta.dst(z.first, l), tb.dst(z.second, l), ta.color(z.first, l),
             tb.color(z.second, l));
      while (!stack.empty())
        {
          auto [x, y, m1, m2] = stack.back();
          stack.pop_back();
          if (Node{x, y} == z && m1 % 2 != m2 % 2)
            return false;
          for (Letter l = 0; l < ta.letters(); ++l)
            push(ta.dst(x, l), tb.dst(y, l), std::min(m1, ta.color(x, l)),
                 std::min(m2, tb.color(y, l)));
        }
    }
  return true;
}

inline Partition
oracle_partition(const ParityAutomaton& a)
{
  DpaTable t(a);
  std::vector<std::size_t> ids(a.state_count);
  for (State q = 0; q < a.state_count; ++q)
    {
      ids[q] = q;
      for (State p = 0; p < q; ++p)
        if (oracle_equivalent(t, p, t, q))
          {
            ids[q] = ids[p];
            break;
          }
    }
  return Partition::from_class_ids(ids);
}

// Highest dominating color over all co-runs, by unrolled simulation.
inline Color
oracle_corun_color(const ParityAutomaton& a, const Partition& equiv,
                   const LassoWord& w)
{
  DpaTable t(a);
  const std::size_t bound = w.prefix.size() + t.states() * w.period.size();
  State q = t.initial();
  Color best = 0;
  for (std::size_t p = 1; p <= bound; ++p)
    {
      q = t.dst(q, w.at(p - 1));
      for (State target : equiv.classes[equiv.class_of[q]])
        best = std::max(best, simulate_color(t, target, w, p));
    }
  return best;
}

// GCA membership: some reachable (state, position) node lies on a cycle
// of accepting transitions.  Checked node by node with plain searches.
inline bool
oracle_gca_member(const CoBuchiAutomaton& a, const LassoWord& w)
{
  const std::size_t span = w.span(), u = w.prefix.size();
  auto succ = [&](State q, std::size_t i, bool accepting_only) {
    std::vector<std::pair<State, std::size_t>> out;
    std::size_t next = i + 1 < span ? i + 1 : u;
    for (const auto& t : a.transitions)
      if (t.src == q && t.sym == w.at(i)
          && (!accepting_only || t.color == accepting_color))
        out.push_back({t.dst, next});
    return out;
  };
  using Node = std::pair<State, std::size_t>;
  auto search = [&](Node from, bool accepting_only) {
    std::set<Node> seen;
    std::vector<Node> todo;
    for (auto n : succ(from.first, from.second, accepting_only))
      if (seen.insert(n).second)
        todo.push_back(n);
    while (!todo.empty())
      {
        auto [q, i] = todo.back();
        todo.pop_back();
        for (auto n : succ(q, i, accepting_only))
          if (seen.insert(n).second)
            todo.push_back(n);
      }
    return seen;
  };
  auto reach = search({a.initial, 0}, false);
  reach.insert({a.initial, 0});
  for (const auto& z : reach)
    if (search(z, true).count(z))
      return true;
  return false;
}

/// One member of the seeded random suite.
struct SuiteCase
{
  std::uint64_t seed;
  ParityAutomaton automaton;
  std::vector<LassoWord> lassos;
};

inline std::vector<SuiteCase>
random_suite(std::size_t count, std::size_t lassos_per_case,
             std::uint64_t base_seed = 20240101,
             std::size_t max_states = 6, std::size_t max_colors = 5,
             std::size_t max_letters = 4)
{
  std::vector<SuiteCase> out;
  for (std::size_t i = 0; i < count; ++i)
    {
      const std::uint64_t seed = base_seed + i;
      Rng shape(seed * 2654435761u + 17);
      std::size_t n = shape.between(1, max_states);
      std::size_t c = shape.between(1, max_colors);
      std::size_t k = shape.between(1, max_letters);
      SuiteCase sc{seed, random_dpa(n, c, k, seed), {}};
      Rng words(seed ^ 0x9e3779b97f4a7c15ull);
      for (std::size_t j = 0; j < lassos_per_case; ++j)
        sc.lassos.push_back(random_lasso(words, k, 6, 6));
      out.push_back(std::move(sc));
    }
  return out;
}

} // namespace dpacanon::test

#endif
