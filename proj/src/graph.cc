// graph.cc -- SCCs, reachability, lasso runs and language equivalence

#include <dpacanon/graph.hh>

#include <algorithm>
#include <deque>
#include <map>

namespace dpacanon
{

Digraph
Digraph::of(const ParityAutomaton& a)
{
  Digraph g;
  g.nodes = a.state_count;
  for (const auto& t : a.transitions)
    g.add(t.src, t.dst);
  return g;
}

Digraph
Digraph::of(const CoBuchiAutomaton& a)
{
  Digraph g;
  g.nodes = a.state_count;
  for (const auto& t : a.transitions)
    g.add(t.src, t.dst);
  return g;
}

namespace
{

// Compressed adjacency: out-edge ids of node v are
// edge_ids[first[v] .. first[v+1]).
struct Adjacency
{
  std::vector<std::size_t> first;
  std::vector<std::size_t> edge_ids;

  Adjacency(const Digraph& g, const std::vector<bool>& alive_edges)
  {
    first.assign(g.nodes + 1, 0);
    for (std::size_t e = 0; e < g.edges(); ++e)
      if (alive_edges.empty() || alive_edges[e])
        ++first[g.src[e] + 1];
    for (std::size_t v = 0; v < g.nodes; ++v)
      first[v + 1] += first[v];
    edge_ids.resize(first[g.nodes]);
    std::vector<std::size_t> fill(first.begin(), first.end() - 1);
    for (std::size_t e = 0; e < g.edges(); ++e)
      if (alive_edges.empty() || alive_edges[e])
        edge_ids[fill[g.src[e]]++] = e;
  }
};

std::vector<bool>
forward_reachable(const Digraph& g, const std::vector<State>& from,
                  const std::vector<bool>& alive_edges = {})
{
  Adjacency adj(g, alive_edges);
  std::vector<bool> seen(g.nodes, false);
  std::vector<State> todo;
  for (State s : from)
    if (!seen[s])
      {
        seen[s] = true;
        todo.push_back(s);
      }
  while (!todo.empty())
    {
      State v = todo.back();
      todo.pop_back();
      for (std::size_t i = adj.first[v]; i < adj.first[v + 1]; ++i)
        {
          State w = g.dst[adj.edge_ids[i]];
          if (!seen[w])
            {
              seen[w] = true;
              todo.push_back(w);
            }
        }
    }
  return seen;
}

Digraph
reversed(const Digraph& g)
{
  Digraph r;
  r.nodes = g.nodes;
  r.src = g.dst;
  r.dst = g.src;
  return r;
}

StateSet
to_set(const std::vector<bool>& mask)
{
  StateSet out;
  for (State v = 0; v < mask.size(); ++v)
    if (mask[v])
      out.push_back(v);
  return out;
}

} // namespace

SccDecomposition
scc_decompose(const Digraph& g, const std::vector<bool>& alive_nodes,
              const std::vector<bool>& alive_edges)
{
  const std::size_t n = g.nodes;
  auto node_alive = [&](State v) {
    return alive_nodes.empty() || alive_nodes[v];
  };
  std::vector<bool> edge_mask(g.edges(), true);
  for (std::size_t e = 0; e < g.edges(); ++e)
    edge_mask[e] = (alive_edges.empty() || alive_edges[e])
                   && node_alive(g.src[e]) && node_alive(g.dst[e]);
  Adjacency adj(g, edge_mask);

  // Iterative Tarjan.
  std::vector<std::size_t> index(n, npos), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<State> stack;
  std::vector<StateSet> emitted;
  std::size_t counter = 0;
  struct Frame { State v; std::size_t next; };
  std::vector<Frame> call;

  for (State root = 0; root < n; ++root)
    {
      if (!node_alive(root) || index[root] != npos)
        continue;
      call.push_back({root, adj.first[root]});
      index[root] = low[root] = counter++;
      stack.push_back(root);
      on_stack[root] = true;
      while (!call.empty())
        {
          Frame& f = call.back();
          State v = f.v;
          if (f.next < adj.first[v + 1])
            {
              State w = g.dst[adj.edge_ids[f.next++]];
              if (index[w] == npos)
                {
                  index[w] = low[w] = counter++;
                  stack.push_back(w);
                  on_stack[w] = true;
                  call.push_back({w, adj.first[w]});
                }
              else if (on_stack[w])
                low[v] = std::min(low[v], index[w]);
              continue;
            }
          if (low[v] == index[v])
            {
              StateSet comp;
              State w;
              do
                {
                  w = stack.back();
                  stack.pop_back();
                  on_stack[w] = false;
                  comp.push_back(w);
                }
              while (w != v);
              std::sort(comp.begin(), comp.end());
              emitted.push_back(std::move(comp));
            }
          call.pop_back();
          if (!call.empty())
            {
              State parent = call.back().v;
              low[parent] = std::min(low[parent], low[v]);
            }
        }
    }

  // Tarjan emits sinks first; reverse to get a topological numbering.
  SccDecomposition d;
  d.scc_of.assign(n, npos);
  d.sccs.assign(emitted.rbegin(), emitted.rend());
  d.rank.resize(d.sccs.size());
  for (std::size_t id = 0; id < d.sccs.size(); ++id)
    {
      d.rank[id] = id;
      for (State v : d.sccs[id])
        d.scc_of[v] = id;
    }
  return d;
}

SccDecomposition
scc_decompose(const ParityAutomaton& a)
{
  require_valid(a);
  return scc_decompose(Digraph::of(a));
}

SccDecomposition
scc_decompose(const CoBuchiAutomaton& a)
{
  require_valid(a);
  return scc_decompose(Digraph::of(a));
}

namespace
{

StateSet
reachable_impl(const Digraph& g, State from)
{
  if (from >= g.nodes)
    throw ValidationError("state " + std::to_string(from) + " out of range");
  return to_set(forward_reachable(g, {from}));
}

TransientElements
transient_impl(const Digraph& g, const std::vector<Transition>& ts)
{
  auto d = scc_decompose(g);
  TransientElements out;
  std::vector<bool> on_cycle(g.nodes, false);
  for (const auto& t : ts)
    {
      if (d.scc_of[t.src] != d.scc_of[t.dst])
        out.transitions.push_back(t);
      else
        on_cycle[t.src] = true;
    }
  for (State q = 0; q < g.nodes; ++q)
    if (!on_cycle[q])
      out.states.push_back(q);
  out.transitions = sorted_transitions(std::move(out.transitions));
  return out;
}

} // namespace

StateSet
reachable_states(const ParityAutomaton& a, State from)
{
  require_valid(a);
  return reachable_impl(Digraph::of(a), from);
}

StateSet
reachable_states(const CoBuchiAutomaton& a, State from)
{
  require_valid(a);
  return reachable_impl(Digraph::of(a), from);
}

TransientElements
transient_elements(const ParityAutomaton& a)
{
  require_valid(a);
  return transient_impl(Digraph::of(a), a.transitions);
}

TransientElements
transient_elements(const CoBuchiAutomaton& a)
{
  require_valid(a);
  return transient_impl(Digraph::of(a), a.transitions);
}

RunAnalysis
dpa_lasso_run(const DpaTable& t, State from, const LassoWord& w)
{
  require_valid(w, t.letters());
  RunAnalysis r;
  State q = from;
  for (Letter x : w.prefix)
    {
      r.stem_states.push_back(q);
      q = t.dst(q, x);
    }
  // State at the start of each period block; a repeat closes the cycle.
  std::map<State, std::size_t> block_of;
  std::vector<State> block_start;
  while (!block_of.count(q))
    {
      block_of.emplace(q, block_start.size());
      block_start.push_back(q);
      for (Letter x : w.period)
        q = t.dst(q, x);
    }
  const std::size_t cycle_begin = block_of[q];
  for (std::size_t b = 0; b < cycle_begin; ++b)
    {
      State s = block_start[b];
      for (Letter x : w.period)
        {
          r.stem_states.push_back(s);
          s = t.dst(s, x);
        }
    }
  Color dom = static_cast<Color>(-1);
  std::vector<bool> listed(t.states(), false);
  for (std::size_t b = cycle_begin; b < block_start.size(); ++b)
    {
      State s = block_start[b];
      for (Letter x : w.period)
        {
          if (!listed[s])
            {
              listed[s] = true;
              r.cycle_states.push_back(s);
            }
          dom = std::min(dom, t.color(s, x));
          s = t.dst(s, x);
        }
    }
  r.dominating_color = dom;
  r.accepted = dom % 2 == 0;
  return r;
}

RunAnalysis
dpa_lasso_run(const ParityAutomaton& a, const LassoWord& w)
{
  DpaTable t(a);
  return dpa_lasso_run(t, t.initial(), w);
}

bool
gca_lasso_member(const CoBuchiAutomaton& a, const LassoWord& w)
{
  require_valid(a);
  require_valid(w, a.alphabet.size());
  const std::size_t k = a.alphabet.size();
  const std::size_t span = w.span();
  const std::size_t u = w.prefix.size();

  // Transitions grouped by (state, letter).
  std::vector<std::vector<const Transition*>> row(a.state_count * k);
  for (const auto& t : a.transitions)
    row[t.src * k + t.sym].push_back(&t);

  Digraph prod;
  prod.nodes = a.state_count * span;
  std::vector<bool> accepting;
  for (State q = 0; q < a.state_count; ++q)
    for (std::size_t i = 0; i < span; ++i)
      {
        std::size_t next = i + 1 < span ? i + 1 : u;
        for (const Transition* t : row[q * k + w.at(i)])
          {
            prod.add(static_cast<State>(q * span + i),
                     static_cast<State>(t->dst * span + next));
            accepting.push_back(t->color == accepting_color);
          }
      }
  auto reach = forward_reachable(prod, {static_cast<State>(a.initial * span)});
  auto d = scc_decompose(prod, reach, accepting);
  for (std::size_t e = 0; e < prod.edges(); ++e)
    if (accepting[e] && reach[prod.src[e]]
        && d.scc_of[prod.src[e]] == d.scc_of[prod.dst[e]])
      return true;
  return false;
}

namespace
{

// Synchronous product of two complete DPAs over the same alphabet,
// node (p, q) has id p * |B| + q.  Edge id ((p, q), x) = node * k + x.
struct PairProduct
{
  const DpaTable& a;
  const DpaTable& b;
  Digraph g;
  std::vector<Color> c1, c2;
  std::vector<Letter> letter;

  PairProduct(const DpaTable& a_, const DpaTable& b_) : a(a_), b(b_)
  {
    const std::size_t nb = b.states(), k = a.letters();
    g.nodes = a.states() * nb;
    for (State p = 0; p < a.states(); ++p)
      for (State q = 0; q < nb; ++q)
        for (Letter x = 0; x < k; ++x)
          {
            g.add(static_cast<State>(p * nb + q),
                  static_cast<State>(a.dst(p, x) * nb + b.dst(q, x)));
            c1.push_back(a.color(p, x));
            c2.push_back(b.color(q, x));
          }
    letter.reserve(g.edges());
    for (std::size_t e = 0; e < g.edges(); ++e)
      letter.push_back(static_cast<Letter>(e % k));
  }

  State node(State p, State q) const
  {
    return static_cast<State>(p * b.states() + q);
  }

  // A parity-disagreement SCC: every edge has c1 >= ca and c2 >= cb, and
  // it contains edges realizing both minima.
  struct Flagged
  {
    Color ca, cb;
    StateSet nodes;
    std::vector<bool> alive;
    std::size_t edge_a, edge_b;
  };

  // Flagged SCCs ordered by color pair (lexicographic) then SCC id.
  std::vector<Flagged> flagged(const std::vector<Color>& colors_a,
                               const std::vector<Color>& colors_b) const
  {
    std::vector<Flagged> out;
    for (Color ca : colors_a)
      for (Color cb : colors_b)
        {
          if (ca % 2 == cb % 2)
            continue;
          std::vector<bool> alive(g.edges());
          for (std::size_t e = 0; e < g.edges(); ++e)
            alive[e] = c1[e] >= ca && c2[e] >= cb;
          auto d = scc_decompose(g, {}, alive);
          std::vector<std::size_t> ea(d.sccs.size(), npos);
          std::vector<std::size_t> eb(d.sccs.size(), npos);
          for (std::size_t e = 0; e < g.edges(); ++e)
            {
              if (!alive[e])
                continue;
              std::size_t s = d.scc_of[g.src[e]];
              if (s != d.scc_of[g.dst[e]])
                continue;
              if (c1[e] == ca && ea[s] == npos)
                ea[s] = e;
              if (c2[e] == cb && eb[s] == npos)
                eb[s] = e;
            }
          for (std::size_t s = 0; s < d.sccs.size(); ++s)
            if (ea[s] != npos && eb[s] != npos)
              {
                std::vector<bool> inside(g.edges(), false);
                for (std::size_t e = 0; e < g.edges(); ++e)
                  inside[e] = alive[e] && d.scc_of[g.src[e]] == s
                              && d.scc_of[g.dst[e]] == s;
                out.push_back({ca, cb, d.sccs[s], std::move(inside),
                               ea[s], eb[s]});
              }
        }
    return out;
  }

  // Letters of a shortest path from `from` to any node in `targets`,
  // restricted to alive edges.  Returns the reached node.
  State shortest_path(State from, const std::vector<bool>& targets,
                      const std::vector<bool>& alive,
                      std::vector<Letter>& letters) const
  {
    Adjacency adj(g, alive);
    std::vector<std::size_t> via(g.nodes, npos);
    std::vector<bool> seen(g.nodes, false);
    std::deque<State> todo{from};
    seen[from] = true;
    State hit = from;
    bool found = targets[from];
    while (!found && !todo.empty())
      {
        State v = todo.front();
        todo.pop_front();
        for (std::size_t i = adj.first[v]; i < adj.first[v + 1] && !found; ++i)
          {
            std::size_t e = adj.edge_ids[i];
            State w = g.dst[e];
            if (seen[w])
              continue;
            seen[w] = true;
            via[w] = e;
            if (targets[w])
              {
                hit = w;
                found = true;
              }
            todo.push_back(w);
          }
      }
    if (!found)
      throw Error("internal error: product path not found");
    std::vector<Letter> rev;
    for (State v = hit; v != from; v = g.src[via[v]])
      rev.push_back(letter[via[v]]);
    letters.insert(letters.end(), rev.rbegin(), rev.rend());
    return hit;
  }

  LassoWord witness(State init, const Flagged& f) const
  {
    std::vector<bool> in_scc(g.nodes, false);
    for (State v : f.nodes)
      in_scc[v] = true;
    LassoWord w;
    std::vector<bool> all(g.edges(), true);
    State z = shortest_path(init, in_scc, all, w.prefix);

    auto single = [&](State v) {
      std::vector<bool> m(g.nodes, false);
      m[v] = true;
      return m;
    };
    State v = shortest_path(z, single(g.src[f.edge_a]), f.alive, w.period);
    w.period.push_back(letter[f.edge_a]);
    v = g.dst[f.edge_a];
    v = shortest_path(v, single(g.src[f.edge_b]), f.alive, w.period);
    w.period.push_back(letter[f.edge_b]);
    v = g.dst[f.edge_b];
    shortest_path(v, single(z), f.alive, w.period);
    return w;
  }
};

} // namespace

Partition
state_equivalence(const ParityAutomaton& a)
{
  DpaTable t(a);
  PairProduct prod(t, t);
  auto cs = colors_of(a);
  std::vector<State> bad_seeds;
  for (const auto& f : prod.flagged(cs, cs))
    bad_seeds.insert(bad_seeds.end(), f.nodes.begin(), f.nodes.end());
  auto bad = forward_reachable(reversed(prod.g), bad_seeds);

  const std::size_t n = a.state_count;
  std::vector<std::size_t> ids(n);
  for (State q = 0; q < n; ++q)
    {
      ids[q] = q;
      for (State p = 0; p < q; ++p)
        if (!bad[prod.node(p, q)])
          {
            ids[q] = ids[p];
            break;
          }
    }
  return Partition::from_class_ids(ids);
}

EquivalenceResult
dpa_language_equiv(const ParityAutomaton& a, const ParityAutomaton& b)
{
  if (!(a.alphabet == b.alphabet))
    throw ValidationError("automata have different alphabets");
  DpaTable ta(a), tb(b);
  PairProduct prod(ta, tb);
  const State init = prod.node(ta.initial(), tb.initial());
  auto reach = forward_reachable(prod.g, {init});
  for (const auto& f : prod.flagged(colors_of(a), colors_of(b)))
    {
      bool hit = std::any_of(f.nodes.begin(), f.nodes.end(),
                             [&](State v) { return reach[v]; });
      if (hit)
        return {false, normalize_lasso(prod.witness(init, f))};
    }
  return {true, std::nullopt};
}

} // namespace dpacanon
