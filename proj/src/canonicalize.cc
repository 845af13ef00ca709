// canonicalize.cc -- structuring, streamlining and the co-Buchi chain

#include <dpacanon/canonicalize.hh>

#include <algorithm>
#include <sstream>

namespace dpacanon
{

namespace
{

std::string
join(const std::vector<std::size_t>& xs)
{
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i)
    os << (i ? "," : "") << xs[i];
  return os.str();
}

// Drops the states outside `keep`, renumbering the rest in order.
StructureResult
restrict_to(const ParityAutomaton& a, const std::vector<bool>& keep,
            const std::vector<State>& ids)
{
  StructureResult r;
  std::vector<State> new_id(a.state_count, 0);
  State next = 0;
  for (State q = 0; q < a.state_count; ++q)
    if (keep[q])
      {
        new_id[q] = next++;
        r.original_id.push_back(ids[q]);
      }
  r.automaton.alphabet = a.alphabet;
  r.automaton.state_count = next;
  r.automaton.initial = new_id[a.initial];
  for (const auto& t : a.transitions)
    if (keep[t.src])
      r.automaton.transitions.push_back(
          {new_id[t.src], t.sym, new_id[t.dst], t.color});
  return r;
}

std::vector<bool>
reachable_mask(const ParityAutomaton& a)
{
  std::vector<bool> keep(a.state_count, false);
  for (State q : reachable_states(a, a.initial))
    keep[q] = true;
  return keep;
}

} // namespace

std::string
StructureReport::to_string() const
{
  if (ok())
    return "structured";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i)
    os << (i ? "\n" : "") << violations[i].message;
  return os.str();
}

StructureReport
is_structured(const ParityAutomaton& a)
{
  using K = StructureViolation::Kind;
  StructureReport rep;
  auto keep = reachable_mask(a);
  StateSet unreachable;
  for (State q = 0; q < a.state_count; ++q)
    if (!keep[q])
      unreachable.push_back(q);
  if (!unreachable.empty())
    {
      std::vector<std::size_t> us(unreachable.begin(), unreachable.end());
      rep.violations.push_back({K::unreachable, 0, {}, unreachable,
                                "unreachable states: " + join(us)});
    }

  auto part = state_equivalence(a);
  auto scc = scc_decompose(Digraph::of(a));
  for (std::size_t c = 0; c < part.classes.size(); ++c)
    {
      std::vector<std::size_t> ids;
      for (State q : part.classes[c])
        ids.push_back(scc.scc_of[q]);
      std::sort(ids.begin(), ids.end());
      ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
      if (ids.size() > 1)
        {
          const auto& cls = part.classes[c];
          std::vector<std::size_t> members(cls.begin(), cls.end());
          rep.violations.push_back({K::split_class, c, ids, cls,
              "language class " + std::to_string(c) + " {" + join(members)
              + "} spans SCCs {" + join(ids) + "}"});
        }
    }
  return rep;
}

StructureResult
structure_dpa_with_map(const ParityAutomaton& a)
{
  require_valid(a);
  std::vector<State> ids(a.state_count);
  for (State q = 0; q < a.state_count; ++q)
    ids[q] = q;
  StructureResult cur{a, ids};

  // Every round that does not end the loop removes at least one state.
  for (std::size_t round = 0; round <= a.state_count + 1; ++round)
    {
      cur = restrict_to(cur.automaton, reachable_mask(cur.automaton),
                        cur.original_id);
      if (is_structured(cur.automaton).ok())
        return cur;

      ParityAutomaton& m = cur.automaton;
      auto part = state_equivalence(m);
      auto scc = scc_decompose(Digraph::of(m));
      auto rank_of = [&](State q) { return scc.rank[scc.scc_of[q]]; };

      // Representative: lowest member of the highest-ranked SCC.
      std::vector<std::size_t> top_rank(part.classes.size(), 0);
      std::vector<State> rep(part.classes.size(), 0);
      for (std::size_t c = 0; c < part.classes.size(); ++c)
        {
          for (State q : part.classes[c])
            top_rank[c] = std::max(top_rank[c], rank_of(q));
          for (State q : part.classes[c])
            if (rank_of(q) == top_rank[c])
              {
                rep[c] = q;
                break;
              }
        }
      auto redirect = [&](State q) {
        std::size_t c = part.class_of[q];
        return rank_of(q) < top_rank[c] ? rep[c] : q;
      };
      for (auto& t : m.transitions)
        t.dst = redirect(t.dst);
      m.initial = redirect(m.initial);
    }
  throw Error("internal error: structuring did not reach a fixpoint");
}

ParityAutomaton
structure_dpa(const ParityAutomaton& a)
{
  return structure_dpa_with_map(a).automaton;
}

ParityAutomaton
streamline(const ParityAutomaton& a, StreamlinePolicy policy)
{
  require_valid(a);
  auto rep = is_structured(a);
  if (!rep.ok())
    throw PreconditionError("streamlining needs a structured automaton: "
                            + rep.to_string());

  const Digraph g = Digraph::of(a);
  const std::size_t n = g.nodes, m = g.edges();
  std::vector<bool> node_alive(n, true), edge_alive(m, true);
  std::vector<Color> color(m);
  for (std::size_t e = 0; e < m; ++e)
    color[e] = a.transitions[e].color;
  std::size_t nodes_left = n;

  Color i = 0;
  while (nodes_left > 0)
    {
      auto d = scc_decompose(g, node_alive, edge_alive);

      // Transient transitions take color i; states on no cycle leave G.
      std::vector<bool> on_cycle(n, false);
      for (std::size_t e = 0; e < m; ++e)
        {
          if (!edge_alive[e])
            continue;
          if (d.scc_of[g.src[e]] != d.scc_of[g.dst[e]])
            {
              color[e] = i;
              edge_alive[e] = false;
            }
          else
            on_cycle[g.src[e]] = true;
        }
      for (State v = 0; v < n; ++v)
        if (node_alive[v] && !on_cycle[v])
          {
            node_alive[v] = false;
            --nodes_left;
          }

      // Least remaining color of each SCC.
      std::vector<Color> least(d.sccs.size(), static_cast<Color>(-1));
      for (std::size_t e = 0; e < m; ++e)
        if (edge_alive[e])
          {
            auto s = d.scc_of[g.src[e]];
            least[s] = std::min(least[s], color[e]);
          }
      bool found = false;
      for (std::size_t s = 0; s < d.sccs.size(); ++s)
        {
          if (least[s] == static_cast<Color>(-1) || least[s] % 2 != i % 2)
            continue;
          const Color low = least[s];
          for (std::size_t e = 0; e < m; ++e)
            if (edge_alive[e] && d.scc_of[g.src[e]] == s && color[e] == low)
              {
                color[e] = i;
                edge_alive[e] = false;
              }
          found = true;
          if (policy == StreamlinePolicy::one_scc)
            break;
        }
      if (!found)
        ++i;
    }

  ParityAutomaton out = a;
  for (std::size_t e = 0; e < m; ++e)
    out.transitions[e].color = color[e];
  return out;
}

bool
is_streamlined(const ParityAutomaton& a)
{
  return streamline(a) == a;
}

ParityAutomaton
canonicalize(const ParityAutomaton& a)
{
  return streamline(structure_dpa(a));
}

ChainRepresentation
extract_chain(const ParityAutomaton& a, const Partition& equiv)
{
  if (!is_streamlined(a))
    throw PreconditionError("chain extraction needs a streamlined automaton");
  if (!(equiv == state_equivalence(a)))
    throw PreconditionError("partition is not the language equivalence of "
                            "the automaton");

  ChainRepresentation chain;
  chain.source_color_max = max_color(a);
  const auto ts = sorted_transitions(a.transitions);
  for (Color level = 0; level <= chain.source_color_max + 1; ++level)
    {
      CoBuchiAutomaton c;
      c.alphabet = a.alphabet;
      c.state_count = a.state_count;
      c.initial = a.initial;
      c.gfg_claimed = true;
      for (const auto& t : ts)
        {
          c.transitions.push_back({t.src, t.sym, t.dst,
              t.color >= level ? accepting_color : rejecting_color});
          for (State other : equiv.classes[equiv.class_of[t.dst]])
            if (other != t.dst)
              c.transitions.push_back({t.src, t.sym, other, rejecting_color});
        }
      c.transitions = sorted_transitions(std::move(c.transitions));
      chain.levels.push_back(std::move(c));
    }
  return chain;
}

std::vector<LevelStats>
chain_stats(const ChainRepresentation& c)
{
  std::vector<LevelStats> out;
  for (std::size_t i = 0; i < c.levels.size(); ++i)
    {
      const auto& lvl = c.levels[i];
      LevelStats s;
      s.level = i;
      s.states = lvl.state_count;
      for (const auto& t : lvl.transitions)
        (t.color == accepting_color ? s.accepting : s.rejecting)++;
      // Exactly one transition per (state, letter) comes from the DPA.
      s.jumps = lvl.transitions.size() - lvl.state_count * lvl.alphabet.size();
      out.push_back(s);
    }
  return out;
}

} // namespace dpacanon
