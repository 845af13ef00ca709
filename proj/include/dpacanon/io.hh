// io.hh -- native JSON format, HOA v1 subset and DOT export
//
// Native format (UTF-8 JSON, keys read in any order):
//
//   {"kind": "dpa" | "ncw", "alphabet": [names...], "states": n,
//    "initial": q, "gfg": bool (ncw only, optional),
//    "transitions": [{"src": q, "sym": x, "dst": q', "col": c}, ...]}
//
// Emission is canonical: fixed key order, transitions sorted by
// (src, sym, dst, col), LF line endings.

#ifndef DPACANON_IO_HH
#define DPACANON_IO_HH

#include <dpacanon/automaton.hh>

#include <string>
#include <string_view>
#include <variant>

namespace dpacanon
{

class ParseError : public Error
{
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

using AnyAutomaton = std::variant<ParityAutomaton, CoBuchiAutomaton>;

struct ParseOptions
{
  /// Accept DPAs with missing (state, letter) rows (for complete_dpa).
  bool allow_incomplete = false;
  /// Skip semantic validation entirely (for validate_dpa reports).
  bool validate = true;
};

/// Throws ParseError on syntax errors and ValidationError on semantic ones.
AnyAutomaton parse_native(std::string_view text, ParseOptions opts = {});
ParityAutomaton parse_native_dpa(std::string_view text, ParseOptions opts = {});

std::string emit_native(const ParityAutomaton& a);
std::string emit_native(const CoBuchiAutomaton& a);

/// HOA v1 with `acc-name: parity min even k` and transition-based
/// acceptance.  Letters are the 2^|AP| valuations, named by their
/// conjunction ("p&!q"); letter index bit j is the value of AP j.
ParityAutomaton parse_hoa(std::string_view text, ParseOptions opts = {});
/// HOA v1 with `Acceptance: 1 Fin(0)`; set 0 marks rejecting transitions.
CoBuchiAutomaton parse_hoa_cobuchi(std::string_view text);

/// Throws ValidationError unless the alphabet size is a power of two.
std::string emit_hoa(const ParityAutomaton& a);
std::string emit_hoa(const CoBuchiAutomaton& a);

std::string emit_dot(const ParityAutomaton& a);
std::string emit_dot(const CoBuchiAutomaton& a);

/// Lasso syntax `u:v`.  Letters are separated by commas; when every
/// letter name is a single character they may also be juxtaposed
/// ("ca:bb").  The period must not be empty.
LassoWord parse_lasso(std::string_view text, const Alphabet& alphabet);
std::string format_lasso(const LassoWord& w, const Alphabet& alphabet);

/// Reads either format, telling them apart by the first character.
AnyAutomaton parse_any(std::string_view text, ParseOptions opts = {});

} // namespace dpacanon

#endif
