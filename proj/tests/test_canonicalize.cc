#include "support.hh"

#include <catch2/catch_amalgamated.hpp>

using namespace dpacanon;
using namespace dpacanon::test;

namespace
{

// States 1 and 3 both accept "infinitely many a"; 1 sits in an earlier SCC.
ParityAutomaton
split_class()
{
  return {Alphabet({"a", "b"}), 4, 0,
          {{0, 0, 1, 1}, {0, 1, 2, 1},
           {1, 0, 1, 0}, {1, 1, 3, 1},
           {2, 0, 2, 1}, {2, 1, 2, 1},
           {3, 0, 3, 0}, {3, 1, 3, 1}}};
}

std::vector<Color>
colors_in_order(const ParityAutomaton& a)
{
  std::vector<Color> cs;
  for (const auto& t : sorted_transitions(a.transitions))
    cs.push_back(t.color);
  return cs;
}

bool
same_structure(const ParityAutomaton& a, const ParityAutomaton& b)
{
  if (a.state_count != b.state_count || a.initial != b.initial
      || a.transitions.size() != b.transitions.size())
    return false;
  for (std::size_t i = 0; i < a.transitions.size(); ++i)
    {
      const auto &s = a.transitions[i], &t = b.transitions[i];
      if (s.src != t.src || s.sym != t.sym || s.dst != t.dst)
        return false;
    }
  return true;
}

} // namespace

TEST_CASE("is_structured")
{
  ParityAutomaton one{Alphabet({"x"}), 1, 0, {{0, 0, 0, 0}}};
  CHECK(is_structured(one).ok());
  CHECK(is_structured(fig1()).ok());

  ParityAutomaton orphan{Alphabet({"x"}), 2, 0, {{0, 0, 0, 0}, {1, 0, 1, 1}}};
  auto rep = is_structured(orphan);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].kind == StructureViolation::Kind::unreachable);
  CHECK(rep.violations[0].states == StateSet{1});

  rep = is_structured(split_class());
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].kind == StructureViolation::Kind::split_class);
  CHECK(rep.violations[0].states == StateSet{1, 3});
  CHECK(rep.violations[0].scc_ids.size() == 2);
}

TEST_CASE("structure_dpa examples")
{
  SECTION("structured input is a fixpoint")
  {
    auto r = structure_dpa_with_map(fig1());
    CHECK(r.automaton == fig1());
    CHECK(r.original_id == std::vector<State>{0, 1, 2, 3});
  }
  SECTION("unreachable state is dropped")
  {
    auto a = fig1();
    a.state_count = 5;
    for (Letter x = 0; x < 3; ++x)
      a.transitions.push_back({4, x, 0, 2});
    auto r = structure_dpa_with_map(a);
    CHECK(r.automaton == fig1());
    CHECK(r.original_id == std::vector<State>{0, 1, 2, 3});
  }
  SECTION("early member of a class is redirected to the later one")
  {
    auto r = structure_dpa_with_map(split_class());
    ParityAutomaton expected{Alphabet({"a", "b"}), 3, 0,
                             {{0, 0, 2, 1}, {0, 1, 1, 1},
                              {1, 0, 1, 1}, {1, 1, 1, 1},
                              {2, 0, 2, 0}, {2, 1, 2, 1}}};
    CHECK(sorted_transitions(r.automaton.transitions)
          == sorted_transitions(expected.transitions));
    CHECK(r.automaton.state_count == 3);
    CHECK(r.original_id == std::vector<State>{0, 2, 3});
    CHECK(dpa_language_equiv(r.automaton, split_class()).equivalent);
    Rng rng(3);
    for (int i = 0; i < 50; ++i)
      {
        auto w = random_lasso(rng, 2, 6, 6);
        CHECK(dpa_lasso_run(r.automaton, w).accepted
              == simulate_member(split_class(), w));
      }
  }
  SECTION("initial state is re-seated")
  {
    // 0 and 1 accept everything; 0 is transient, 1 loops.
    ParityAutomaton a{Alphabet({"x"}), 2, 0, {{0, 0, 1, 0}, {1, 0, 1, 0}}};
    auto r = structure_dpa_with_map(a);
    CHECK(r.automaton.state_count == 1);
    CHECK(r.original_id == std::vector<State>{1});
  }
}

TEST_CASE("structure_dpa properties on random automata")
{
  for (const auto& sc : random_suite(150, 10, 777))
    {
      for (auto a : {sc.automaton, duplicate_state(sc.automaton, 0)})
        {
          auto s = structure_dpa(a);
          REQUIRE(is_structured(s).ok());
          REQUIRE(s.state_count <= a.state_count);
          REQUIRE(dpa_language_equiv(a, s).equivalent);
          REQUIRE(structure_dpa(s) == s);
          for (const auto& w : sc.lassos)
            REQUIRE(simulate_member(a, w) == simulate_member(s, w));
        }
    }
}

TEST_CASE("streamline examples")
{
  SECTION("all-zero single SCC is unchanged")
  {
    ParityAutomaton a{Alphabet({"a", "b"}), 2, 0,
                      {{0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {1, 1, 1, 0}}};
    CHECK(streamline(a) == a);
    CHECK(is_streamlined(a));
  }
  SECTION("transient edge takes the current counter")
  {
    // 0 rejects y^w, 1 accepts everything.
    ParityAutomaton a{Alphabet({"x", "y"}), 2, 0,
                      {{0, 0, 1, 3}, {0, 1, 0, 1}, {1, 0, 1, 0}, {1, 1, 1, 0}}};
    auto s = streamline(a);
    CHECK(s.transitions
          == std::vector<Transition>{{0, 0, 1, 0}, {0, 1, 0, 1},
                                     {1, 0, 1, 0}, {1, 1, 1, 0}});
    CHECK_FALSE(is_streamlined(a));
    CHECK(is_streamlined(s));
  }
  SECTION("unstructured input is refused")
  {
    CHECK_THROWS_AS(streamline(split_class()), PreconditionError);
    CHECK_THROWS_AS(is_streamlined(split_class()), PreconditionError);
  }
}

TEST_CASE("streamlined flower automaton matches the golden file")
{
  auto s = streamline(structure_dpa(fig1()));
  CHECK(emit_native(s) == slurp(data_path("fig1_streamlined.aut")));
  CHECK(colors_of(s) == std::vector<Color>{1, 2, 3, 4, 5});
  // Only qc -a-> q1 (3 -> 2) and q2 -b-> qc (5 -> 4) change.
  CHECK(colors_in_order(s)
        == std::vector<Color>{2, 4, 5, 1, 2, 2, 3, 4, 3, 5, 5, 5});
  CHECK(streamline(s) == s);
}

TEST_CASE("streamline properties on random automata")
{
  for (const auto& sc : random_suite(150, 10, 4242))
    {
      auto a = structure_dpa(sc.automaton);
      auto s = streamline(a);
      REQUIRE(same_structure(a, s));
      for (std::size_t i = 0; i < a.transitions.size(); ++i)
        REQUIRE(s.transitions[i].color <= a.transitions[i].color);
      REQUIRE(colors_of(s).size() <= colors_of(a).size());
      REQUIRE(streamline(s) == s);
      REQUIRE(streamline(a, StreamlinePolicy::one_scc) == s);
      REQUIRE(dpa_language_equiv(a, s).equivalent);
      // Per-state languages survive, so the partition is reusable.
      REQUIRE(state_equivalence(s) == state_equivalence(a));
      for (const auto& w : sc.lassos)
        REQUIRE(simulate_member(a, w) == simulate_member(s, w));
    }
}

TEST_CASE("extract_chain on the flower automaton")
{
  auto s = canonicalize(fig1());
  auto p = state_equivalence(s);
  auto chain = extract_chain(s, p);
  REQUIRE(chain.source_color_max == 5);
  REQUIRE(chain.levels.size() == 7);
  for (const auto& lvl : chain.levels)
    {
      CHECK(lvl.gfg_claimed);
      CHECK(validate_gca(lvl).ok());
      CHECK(lvl.state_count == 4);
      CHECK(lvl.initial == 0);
    }
  for (const auto& t : chain.levels[0].transitions)
    CHECK(t.color == accepting_color);
  for (const auto& t : chain.levels[6].transitions)
    CHECK(t.color == rejecting_color);
  CHECK(emit_native(chain.levels[5]) == slurp(data_path("fig1_chain_A5.aut")));

  std::vector<std::size_t> accepting;
  for (const auto& st : chain_stats(chain))
    {
      accepting.push_back(st.accepting);
      CHECK(st.jumps == 0);
      CHECK(st.states == 4);
      CHECK(st.accepting + st.rejecting == 12);
    }
  CHECK(accepting == std::vector<std::size_t>{12, 12, 11, 8, 6, 4, 0});
}

TEST_CASE("extract_chain adds jumps between equivalent states")
{
  // State 2 duplicates state 1 inside the same SCC.
  ParityAutomaton a{Alphabet({"a", "b"}), 3, 0,
                    {{0, 0, 1, 1}, {0, 1, 2, 2},
                     {1, 0, 0, 0}, {1, 1, 2, 3},
                     {2, 0, 0, 0}, {2, 1, 1, 3}}};
  auto s = canonicalize(a);
  auto p = state_equivalence(s);
  auto chain = extract_chain(s, p);
  auto stats = chain_stats(chain);
  for (const auto& st : stats)
    CHECK(st.jumps == stats.front().jumps);
  CHECK(stats.front().jumps > 0);
  for (const auto& lvl : chain.levels)
    CHECK(validate_gca(lvl).ok());
}

TEST_CASE("extract_chain preconditions")
{
  CHECK_THROWS_AS(extract_chain(fig1(), state_equivalence(fig1())),
                  PreconditionError);
  auto s = canonicalize(fig1());
  auto wrong = Partition::from_class_ids({0, 0, 1, 2});
  CHECK_THROWS_AS(extract_chain(s, wrong), PreconditionError);
}

TEST_CASE("chain accepting counts never increase")
{
  for (const auto& sc : random_suite(100, 0, 99))
    {
      auto s = canonicalize(sc.automaton);
      auto stats = chain_stats(extract_chain(s, state_equivalence(s)));
      for (std::size_t i = 1; i < stats.size(); ++i)
        {
          REQUIRE(stats[i].accepting <= stats[i - 1].accepting);
          REQUIRE(stats[i].jumps == stats[0].jumps);
        }
      REQUIRE(stats.back().accepting == 0);
    }
}
