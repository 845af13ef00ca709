// automaton.cc -- validation, completion and lasso normalization

#include <dpacanon/automaton.hh>

#include <algorithm>
#include <set>
#include <sstream>

namespace dpacanon
{

Alphabet::Alphabet(std::vector<std::string> letters)
  : letters_(std::move(letters))
{
  if (letters_.empty())
    throw ValidationError("alphabet must not be empty");
  std::set<std::string> seen;
  for (const auto& l : letters_)
    {
      if (l.empty())
        throw ValidationError("letter names must not be empty");
      if (!seen.insert(l).second)
        throw ValidationError("duplicate letter name '" + l + "'");
    }
}

std::optional<Letter>
Alphabet::find(const std::string& name) const
{
  auto it = std::find(letters_.begin(), letters_.end(), name);
  if (it == letters_.end())
    return std::nullopt;
  return static_cast<Letter>(it - letters_.begin());
}

Alphabet
Alphabet::latin(std::size_t n)
{
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i))
                           : "l" + std::to_string(i));
  return Alphabet(std::move(names));
}

Letter
LassoWord::at(std::size_t i) const
{
  if (i < prefix.size())
    return prefix[i];
  return period[(i - prefix.size()) % period.size()];
}

Partition
Partition::from_class_ids(const std::vector<std::size_t>& ids)
{
  // Renumber so class ids follow the lowest member.
  Partition p;
  p.class_of.assign(ids.size(), 0);
  std::vector<std::size_t> remap;
  std::vector<std::size_t> seen_ids;
  for (State q = 0; q < ids.size(); ++q)
    {
      auto it = std::find(seen_ids.begin(), seen_ids.end(), ids[q]);
      std::size_t c;
      if (it == seen_ids.end())
        {
          c = seen_ids.size();
          seen_ids.push_back(ids[q]);
          p.classes.emplace_back();
        }
      else
        c = static_cast<std::size_t>(it - seen_ids.begin());
      p.class_of[q] = c;
      p.classes[c].push_back(q);
    }
  return p;
}

std::string
ValidationReport::to_string() const
{
  if (ok())
    return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i)
    {
      if (i)
        os << '\n';
      os << violations[i].message;
    }
  return os.str();
}

namespace
{

std::string
pos_name(const Alphabet& alpha, State q, Letter x)
{
  std::string letter = x < alpha.size() ? alpha.name(x) : std::to_string(x);
  return "(" + std::to_string(q) + ", " + letter + ")";
}

// Shared structural checks; returns false when indices are out of range
// so that callers skip the per-row analysis.
bool
check_ranges(const Alphabet& alpha, std::size_t n, State initial,
             const std::vector<Transition>& ts, ValidationReport& rep)
{
  using K = Violation::Kind;
  bool ranges_ok = true;
  if (n == 0)
    {
      rep.violations.push_back({K::empty, 0, 0, "automaton has no states"});
      return false;
    }
  if (alpha.size() == 0)
    {
      rep.violations.push_back({K::empty, 0, 0, "alphabet is empty"});
      return false;
    }
  if (initial >= n)
    {
      rep.violations.push_back({K::bad_initial, initial, 0,
          "initial state " + std::to_string(initial) + " out of range"});
      ranges_ok = false;
    }
  for (const auto& t : ts)
    {
      if (t.src >= n || t.dst >= n)
        {
          rep.violations.push_back({K::bad_state, t.src, t.sym,
              "transition " + std::to_string(t.src) + " -> "
              + std::to_string(t.dst) + " uses a state out of range"});
          ranges_ok = false;
        }
      if (t.sym >= alpha.size())
        {
          rep.violations.push_back({K::bad_letter, t.src, t.sym,
              "transition from " + std::to_string(t.src)
              + " uses letter index " + std::to_string(t.sym)
              + " out of range"});
          ranges_ok = false;
        }
    }
  return ranges_ok;
}

} // namespace

ValidationReport
validate_dpa(const ParityAutomaton& a)
{
  using K = Violation::Kind;
  ValidationReport rep;
  if (!check_ranges(a.alphabet, a.state_count, a.initial, a.transitions, rep))
    return rep;
  const std::size_t k = a.alphabet.size();
  std::vector<unsigned> count(a.state_count * k, 0);
  for (const auto& t : a.transitions)
    ++count[t.src * k + t.sym];
  for (State q = 0; q < a.state_count; ++q)
    for (Letter x = 0; x < k; ++x)
      {
        unsigned c = count[q * k + x];
        if (c == 0)
          rep.violations.push_back({K::missing, q, x,
              pos_name(a.alphabet, q, x) + " has no transition"});
        else if (c > 1)
          rep.violations.push_back({K::duplicate, q, x,
              pos_name(a.alphabet, q, x) + " has " + std::to_string(c)
              + " transitions"});
      }
  return rep;
}

ValidationReport
validate_gca(const CoBuchiAutomaton& a)
{
  using K = Violation::Kind;
  ValidationReport rep;
  if (!check_ranges(a.alphabet, a.state_count, a.initial, a.transitions, rep))
    return rep;
  const std::size_t k = a.alphabet.size();
  std::vector<unsigned> accepting(a.state_count * k, 0);
  std::set<Transition> seen;
  for (const auto& t : a.transitions)
    {
      if (t.color != rejecting_color && t.color != accepting_color)
        rep.violations.push_back({K::bad_color, t.src, t.sym,
            pos_name(a.alphabet, t.src, t.sym) + " uses color "
            + std::to_string(t.color) + " outside {1,2}"});
      if (!seen.insert(t).second)
        rep.violations.push_back({K::duplicate, t.src, t.sym,
            "duplicate transition at " + pos_name(a.alphabet, t.src, t.sym)});
      if (t.color == accepting_color)
        ++accepting[t.src * k + t.sym];
    }
  for (State q = 0; q < a.state_count; ++q)
    for (Letter x = 0; x < k; ++x)
      if (accepting[q * k + x] > 1)
        rep.violations.push_back({K::duplicate, q, x,
            pos_name(a.alphabet, q, x) + " has more than one accepting "
            "transition"});
  return rep;
}

void
require_valid(const ParityAutomaton& a)
{
  auto rep = validate_dpa(a);
  if (!rep.ok())
    throw ValidationError("invalid parity automaton: " + rep.to_string());
}

void
require_valid(const CoBuchiAutomaton& a)
{
  auto rep = validate_gca(a);
  if (!rep.ok())
    throw ValidationError("invalid co-Buchi automaton: " + rep.to_string());
}

void
require_valid(const LassoWord& w, std::size_t alphabet_size)
{
  if (w.period.empty())
    throw ValidationError("lasso period must not be empty");
  auto bad = [&](Letter x) { return x >= alphabet_size; };
  if (std::any_of(w.prefix.begin(), w.prefix.end(), bad)
      || std::any_of(w.period.begin(), w.period.end(), bad))
    throw ValidationError("lasso uses a letter outside the alphabet");
}

ParityAutomaton
complete_dpa(const ParityAutomaton& a)
{
  auto rep = validate_dpa(a);
  bool missing = false;
  for (const auto& v : rep.violations)
    {
      if (v.kind == Violation::Kind::missing)
        missing = true;
      else
        throw ValidationError("cannot complete: " + v.message);
    }
  if (!missing)
    return a;

  ParityAutomaton out = a;
  const std::size_t k = a.alphabet.size();
  const State sink = static_cast<State>(a.state_count);
  out.state_count = a.state_count + 1;
  std::vector<bool> has(a.state_count * k, false);
  for (const auto& t : a.transitions)
    has[t.src * k + t.sym] = true;
  for (State q = 0; q < a.state_count; ++q)
    for (Letter x = 0; x < k; ++x)
      if (!has[q * k + x])
        out.transitions.push_back({q, x, sink, rejecting_color});
  for (Letter x = 0; x < k; ++x)
    out.transitions.push_back({sink, x, sink, rejecting_color});
  return out;
}

LassoWord
normalize_lasso(const LassoWord& w)
{
  if (w.period.empty())
    throw ValidationError("lasso period must not be empty");
  std::vector<Letter> u = w.prefix;
  std::vector<Letter> v = w.period;

  // Primitive root of the period.
  const std::size_t n = v.size();
  for (std::size_t d = 1; d <= n; ++d)
    {
      if (n % d)
        continue;
      bool root = true;
      for (std::size_t i = d; i < n && root; ++i)
        root = v[i] == v[i - d];
      if (root)
        {
          v.resize(d);
          break;
        }
    }

  // Absorb the prefix tail into the period by rotation.
  while (!u.empty() && u.back() == v.back())
    {
      u.pop_back();
      std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());
    }
  return LassoWord{std::move(u), std::move(v)};
}

DpaTable::DpaTable(const ParityAutomaton& a)
  : states_(a.state_count), letters_(a.alphabet.size()), initial_(a.initial)
{
  require_valid(a);
  dst_.assign(states_ * letters_, 0);
  col_.assign(states_ * letters_, 0);
  for (const auto& t : a.transitions)
    {
      dst_[t.src * letters_ + t.sym] = t.dst;
      col_[t.src * letters_ + t.sym] = t.color;
    }
}

std::vector<Color>
colors_of(const ParityAutomaton& a)
{
  std::vector<Color> cs;
  cs.reserve(a.transitions.size());
  for (const auto& t : a.transitions)
    cs.push_back(t.color);
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  return cs;
}

Color
max_color(const ParityAutomaton& a)
{
  Color m = 0;
  for (const auto& t : a.transitions)
    m = std::max(m, t.color);
  return m;
}

std::vector<Transition>
sorted_transitions(std::vector<Transition> ts)
{
  std::sort(ts.begin(), ts.end());
  return ts;
}

} // namespace dpacanon
