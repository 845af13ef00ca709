// automaton.hh -- data model for deterministic parity and co-Buchi automata
//
// All automata use transition-based acceptance.  Parity acceptance is
// min-even: a run is accepting iff the least color seen infinitely often
// is even.  Co-Buchi automata only use the colors 1 (rejecting) and
// 2 (accepting).

#ifndef DPACANON_AUTOMATON_HH
#define DPACANON_AUTOMATON_HH

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpacanon
{

using State = std::uint32_t;
using Letter = std::uint32_t;
using Color = std::uint32_t;

inline constexpr Color rejecting_color = 1;
inline constexpr Color accepting_color = 2;

/// Base class of all errors raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A structurally invalid automaton or word was passed in.
class ValidationError : public Error
{
public:
  using Error::Error;
};

/// An operation was called on an input that does not satisfy its
/// precondition (e.g. streamlining an unstructured automaton).
class PreconditionError : public Error
{
public:
  using Error::Error;
};

class Alphabet
{
public:
  Alphabet() = default;
  /// Throws ValidationError on an empty list, empty or duplicate names.
  explicit Alphabet(std::vector<std::string> letters);

  std::size_t size() const noexcept { return letters_.size(); }
  const std::string& name(Letter x) const { return letters_.at(x); }
  const std::vector<std::string>& letters() const noexcept { return letters_; }
  std::optional<Letter> find(const std::string& name) const;

  /// Letters "a", "b", ... (then "l26", "l27", ... past 'z').
  static Alphabet latin(std::size_t n);

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
  std::vector<std::string> letters_;
};

struct Transition
{
  State src = 0;
  Letter sym = 0;
  State dst = 0;
  Color color = 0;

  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Complete deterministic parity automaton.  The struct itself does not
/// enforce determinism so that partial inputs can be represented, checked
/// with validate_dpa() and repaired with complete_dpa().
struct ParityAutomaton
{
  Alphabet alphabet;
  std::size_t state_count = 0;
  State initial = 0;
  std::vector<Transition> transitions;

  friend bool operator==(const ParityAutomaton&,
                         const ParityAutomaton&) = default;
};

/// Nondeterministic transition-based co-Buchi automaton.
struct CoBuchiAutomaton
{
  Alphabet alphabet;
  std::size_t state_count = 0;
  State initial = 0;
  std::vector<Transition> transitions;
  bool gfg_claimed = false;

  friend bool operator==(const CoBuchiAutomaton&,
                         const CoBuchiAutomaton&) = default;
};

/// Ultimately periodic word prefix . period^omega.
struct LassoWord
{
  std::vector<Letter> prefix;
  std::vector<Letter> period;

  std::size_t span() const noexcept { return prefix.size() + period.size(); }
  /// Letter at position i of the infinite word.
  Letter at(std::size_t i) const;

  friend auto operator<=>(const LassoWord&, const LassoWord&) = default;
};

/// Partition of the states {0..n-1} into classes.  Class ids are assigned
/// in order of the lowest member, so equal relations give equal partitions.
struct Partition
{
  std::vector<std::size_t> class_of;
  std::vector<std::vector<State>> classes;

  bool same(State p, State q) const { return class_of.at(p) == class_of.at(q); }
  static Partition from_class_ids(const std::vector<std::size_t>& ids);

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Levels A_0 .. A_{cmax+1} of co-Buchi automata over one state space.
struct ChainRepresentation
{
  std::vector<CoBuchiAutomaton> levels;
  Color source_color_max = 0;
};

// Validation

struct Violation
{
  enum class Kind { missing, duplicate, bad_state, bad_letter, bad_color,
                    bad_initial, empty };
  Kind kind;
  State state = 0;
  Letter letter = 0;
  std::string message;
};

struct ValidationReport
{
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
  std::string to_string() const;
};

ValidationReport validate_dpa(const ParityAutomaton& a);

/// Checks the co-Buchi invariants: colors in {1,2}, no duplicate
/// transitions and at most one accepting transition per (state, letter).
ValidationReport validate_gca(const CoBuchiAutomaton& a);

/// Throws ValidationError carrying the report text unless valid.
void require_valid(const ParityAutomaton& a);
void require_valid(const CoBuchiAutomaton& a);
void require_valid(const LassoWord& w, std::size_t alphabet_size);

/// Routes every missing (state, letter) to a fresh rejecting sink.
/// Complete inputs are returned unchanged.  Throws ValidationError when
/// some (state, letter) has two transitions.
ParityAutomaton complete_dpa(const ParityAutomaton& a);

/// Shortest prefix and primitive period describing the same word.
LassoWord normalize_lasso(const LassoWord& w);

/// Dense successor table of a valid DPA; the workhorse behind the
/// graph and canonicalization algorithms.
class DpaTable
{
public:
  /// Throws ValidationError if `a` is not complete and deterministic.
  explicit DpaTable(const ParityAutomaton& a);

  std::size_t states() const noexcept { return states_; }
  std::size_t letters() const noexcept { return letters_; }
  State initial() const noexcept { return initial_; }
  State dst(State q, Letter x) const { return dst_[q * letters_ + x]; }
  Color color(State q, Letter x) const { return col_[q * letters_ + x]; }

private:
  std::size_t states_;
  std::size_t letters_;
  State initial_;
  std::vector<State> dst_;
  std::vector<Color> col_;
};

/// Sorted list of the distinct colors used by `a`.
std::vector<Color> colors_of(const ParityAutomaton& a);
Color max_color(const ParityAutomaton& a);

/// Transitions sorted by (src, sym, dst, color).
std::vector<Transition> sorted_transitions(std::vector<Transition> ts);

} // namespace dpacanon

#endif
