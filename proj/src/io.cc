// io.cc -- native JSON format, HOA v1 subset and DOT export

#include <dpacanon/io.hh>

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace dpacanon
{

ParseError::ParseError(const std::string& what, std::size_t line,
                       std::size_t column)
  : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
    line_(line), column_(column)
{
}

namespace
{

using nlohmann::json;

std::pair<std::size_t, std::size_t>
line_col(std::string_view text, std::size_t byte)
{
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    {
      if (text[i] == '\n')
        {
          ++line;
          col = 1;
        }
      else
        ++col;
    }
  return {line, col};
}

[[noreturn]] void
schema_error(const std::string& what)
{
  throw ParseError(what, 1, 1);
}

std::uint64_t
get_uint(const json& j, const char* key)
{
  auto it = j.find(key);
  if (it == j.end())
    schema_error(std::string("missing field \"") + key + "\"");
  if (!it->is_number_unsigned())
    schema_error(std::string("field \"") + key
                 + "\" must be a nonnegative integer");
  return it->get<std::uint64_t>();
}

std::uint32_t
get_index(const json& j, const char* key)
{
  auto v = get_uint(j, key);
  if (v > 0xffffffffu)
    schema_error(std::string("field \"") + key + "\" is too large");
  return static_cast<std::uint32_t>(v);
}

} // namespace

AnyAutomaton
parse_native(std::string_view text, ParseOptions opts)
{
  json doc;
  try
    {
      doc = json::parse(text.begin(), text.end());
    }
  catch (const json::parse_error& e)
    {
      auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
      std::string msg = e.what();
      // Drop nlohmann's "[json.exception.parse_error.101] " tag.
      if (auto p = msg.find("] "); p != std::string::npos)
        msg = msg.substr(p + 2);
      throw ParseError(msg, line, col);
    }
  if (!doc.is_object())
    schema_error("document must be a JSON object");
  for (const auto& [key, _] : doc.items())
    if (key != "kind" && key != "alphabet" && key != "states"
        && key != "initial" && key != "gfg" && key != "transitions")
      schema_error("unknown field \"" + key + "\"");

  auto kind_it = doc.find("kind");
  if (kind_it == doc.end() || !kind_it->is_string())
    schema_error("field \"kind\" must be \"dpa\" or \"ncw\"");
  const std::string kind = kind_it->get<std::string>();
  if (kind != "dpa" && kind != "ncw")
    schema_error("field \"kind\" must be \"dpa\" or \"ncw\"");

  auto alpha_it = doc.find("alphabet");
  if (alpha_it == doc.end() || !alpha_it->is_array())
    schema_error("field \"alphabet\" must be an array of strings");
  std::vector<std::string> letters;
  for (const auto& l : *alpha_it)
    {
      if (!l.is_string())
        schema_error("field \"alphabet\" must be an array of strings");
      letters.push_back(l.get<std::string>());
    }
  Alphabet alphabet(std::move(letters));

  const auto states = get_uint(doc, "states");
  const auto initial = get_index(doc, "initial");

  auto tr_it = doc.find("transitions");
  if (tr_it == doc.end() || !tr_it->is_array())
    schema_error("field \"transitions\" must be an array");
  std::vector<Transition> ts;
  for (const auto& t : *tr_it)
    {
      if (!t.is_object() || t.size() != 4)
        schema_error("transitions need exactly src, sym, dst and col");
      ts.push_back({get_index(t, "src"), get_index(t, "sym"),
                    get_index(t, "dst"), get_index(t, "col")});
    }

  bool gfg = false;
  if (auto g = doc.find("gfg"); g != doc.end())
    {
      if (kind == "dpa")
        schema_error("field \"gfg\" is only allowed for kind \"ncw\"");
      if (!g->is_boolean())
        schema_error("field \"gfg\" must be a boolean");
      gfg = g->get<bool>();
    }

  if (kind == "dpa")
    {
      ParityAutomaton a{alphabet, states, initial, std::move(ts)};
      if (!opts.validate)
        return a;
      if (opts.allow_incomplete)
        {
          auto rep = validate_dpa(a);
          for (const auto& v : rep.violations)
            if (v.kind != Violation::Kind::missing)
              throw ValidationError("invalid parity automaton: " + v.message);
        }
      else
        require_valid(a);
      return a;
    }
  CoBuchiAutomaton c{alphabet, states, initial, std::move(ts), gfg};
  if (opts.validate)
    require_valid(c);
  return c;
}

ParityAutomaton
parse_native_dpa(std::string_view text, ParseOptions opts)
{
  auto any = parse_native(text, opts);
  if (auto* a = std::get_if<ParityAutomaton>(&any))
    return std::move(*a);
  throw ValidationError("expected a parity automaton (kind \"dpa\")");
}

namespace
{

std::string
emit_native_impl(const char* kind, const Alphabet& alpha, std::size_t n,
                 State initial, const std::optional<bool>& gfg,
                 const std::vector<Transition>& ts)
{
  std::ostringstream os;
  os << "{\n  \"kind\": \"" << kind << "\",\n  \"alphabet\": [";
  for (std::size_t i = 0; i < alpha.size(); ++i)
    os << (i ? ", " : "") << json(alpha.name(static_cast<Letter>(i))).dump();
  os << "],\n  \"states\": " << n << ",\n  \"initial\": " << initial << ",\n";
  if (gfg)
    os << "  \"gfg\": " << (*gfg ? "true" : "false") << ",\n";
  os << "  \"transitions\": [";
  auto sorted = sorted_transitions(ts);
  for (std::size_t i = 0; i < sorted.size(); ++i)
    {
      const auto& t = sorted[i];
      os << (i ? ",\n" : "\n") << "    {\"src\": " << t.src << ", \"sym\": "
         << t.sym << ", \"dst\": " << t.dst << ", \"col\": " << t.color << "}";
    }
  os << (sorted.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

} // namespace

std::string
emit_native(const ParityAutomaton& a)
{
  require_valid(a);
  return emit_native_impl("dpa", a.alphabet, a.state_count, a.initial,
                          std::nullopt, a.transitions);
}

std::string
emit_native(const CoBuchiAutomaton& a)
{
  require_valid(a);
  return emit_native_impl("ncw", a.alphabet, a.state_count, a.initial,
                          a.gfg_claimed, a.transitions);
}

// HOA

namespace
{

constexpr std::size_t max_aps = 16;

struct Token
{
  enum class Kind { header, ident, integer, string, punct, body, end, eof };
  Kind kind;
  std::string text;
  std::size_t line, col;
};

class Lexer
{
public:
  explicit Lexer(std::string_view text) : s_(text) {}

  std::vector<Token> run()
  {
    std::vector<Token> out;
    for (;;)
      {
        skip_space();
        Token t{Token::Kind::eof, "", line_, col_};
        if (i_ >= s_.size())
          {
            out.push_back(t);
            return out;
          }
        char c = s_[i_];
        if (s_.substr(i_, 8) == "--BODY--")
          {
            t.kind = Token::Kind::body;
            advance(8);
          }
        else if (s_.substr(i_, 7) == "--END--")
          {
            t.kind = Token::Kind::end;
            advance(7);
          }
        else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
          {
            std::size_t b = i_;
            while (i_ < s_.size()
                   && (std::isalnum(static_cast<unsigned char>(s_[i_]))
                       || s_[i_] == '_' || s_[i_] == '-'))
              advance(1);
            t.text = std::string(s_.substr(b, i_ - b));
            t.kind = Token::Kind::ident;
            if (i_ < s_.size() && s_[i_] == ':')
              {
                advance(1);
                t.kind = Token::Kind::header;
              }
          }
        else if (std::isdigit(static_cast<unsigned char>(c)))
          {
            std::size_t b = i_;
            while (i_ < s_.size()
                   && std::isdigit(static_cast<unsigned char>(s_[i_])))
              advance(1);
            t.text = std::string(s_.substr(b, i_ - b));
            t.kind = Token::Kind::integer;
          }
        else if (c == '"')
          {
            advance(1);
            while (i_ < s_.size() && s_[i_] != '"')
              {
                if (s_[i_] == '\\' && i_ + 1 < s_.size())
                  advance(1);
                t.text += s_[i_];
                advance(1);
              }
            if (i_ >= s_.size())
              throw ParseError("unterminated string", t.line, t.col);
            advance(1);
            t.kind = Token::Kind::string;
          }
        else if (std::string_view("[]{}()!&|@").find(c)
                 != std::string_view::npos)
          {
            t.text = std::string(1, c);
            t.kind = Token::Kind::punct;
            advance(1);
          }
        else
          throw ParseError(std::string("unexpected character '") + c + "'",
                           line_, col_);
        out.push_back(std::move(t));
      }
  }

private:
  void advance(std::size_t n)
  {
    for (std::size_t k = 0; k < n && i_ < s_.size(); ++k, ++i_)
      {
        if (s_[i_] == '\n')
          {
            ++line_;
            col_ = 1;
          }
        else
          ++col_;
      }
  }

  void skip_space()
  {
    for (;;)
      {
        while (i_ < s_.size()
               && std::isspace(static_cast<unsigned char>(s_[i_])))
          advance(1);
        if (s_.substr(i_, 2) != "/*")
          return;
        std::size_t l = line_, c = col_;
        auto close = s_.find("*/", i_ + 2);
        if (close == std::string_view::npos)
          throw ParseError("unterminated comment", l, c);
        advance(close + 2 - i_);
      }
  }

  std::string_view s_;
  std::size_t i_ = 0, line_ = 1, col_ = 1;
};

struct HoaEdge
{
  State src;
  std::vector<bool> valuations;
  State dst;
  std::vector<std::size_t> acc;
  std::size_t line, col;
};

struct HoaDoc
{
  std::optional<std::size_t> states;
  std::optional<State> start;
  std::vector<std::string> aps;
  std::vector<std::string> acc_name;
  std::vector<std::string> acceptance;
  bool gfg = false;
  std::vector<HoaEdge> edges;
};

class HoaParser
{
public:
  explicit HoaParser(std::string_view text) : toks_(Lexer(text).run()) {}

  HoaDoc parse()
  {
    const Token& first = peek();
    if (first.kind != Token::Kind::header || first.text != "HOA")
      fail("expected \"HOA: v1\"", first);
    next();
    const Token& ver = next();
    if (ver.kind != Token::Kind::ident || ver.text != "v1")
      fail("only HOA v1 is supported", ver);
    bool have_ap = false;
    while (peek().kind == Token::Kind::header)
      {
        const Token h = next();
        if (h.text == "States")
          doc_.states = integer();
        else if (h.text == "Start")
          {
            doc_.start = static_cast<State>(integer());
            if (is_punct("&"))
              fail("alternating start states are not supported", peek());
          }
        else if (h.text == "AP")
          {
            have_ap = true;
            std::size_t m = integer();
            if (m > max_aps)
              fail("at most 16 atomic propositions are supported", h);
            for (std::size_t j = 0; j < m; ++j)
              {
                const Token& s = next();
                if (s.kind != Token::Kind::string)
                  fail("expected an atomic proposition name", s);
                doc_.aps.push_back(s.text);
              }
          }
        else if (h.text == "acc-name")
          doc_.acc_name = rest_of_header();
        else if (h.text == "Acceptance")
          doc_.acceptance = rest_of_header();
        else if (h.text == "x-gfg")
          {
            auto v = rest_of_header();
            doc_.gfg = v.size() == 1 && v[0] == "t";
          }
        else if (h.text == "Alias")
          fail("aliases are not supported", h);
        else
          rest_of_header();
      }
    if (!have_ap)
      doc_.aps.clear();
    if (!doc_.states)
      fail("missing \"States:\" header", peek());
    if (!doc_.start)
      fail("missing \"Start:\" header", peek());
    if (*doc_.start >= *doc_.states)
      fail("start state out of range", peek());
    const Token& b = next();
    if (b.kind != Token::Kind::body)
      fail("expected --BODY--", b);
    body();
    return std::move(doc_);
  }

private:
  [[noreturn]] void fail(const std::string& what, const Token& t) const
  {
    throw ParseError(what, t.line, t.col);
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next()
  {
    const Token& t = toks_[pos_];
    if (t.kind != Token::Kind::eof)
      ++pos_;
    return t;
  }
  bool is_punct(const char* p) const
  {
    return peek().kind == Token::Kind::punct && peek().text == p;
  }
  void expect_punct(const char* p)
  {
    if (!is_punct(p))
      fail(std::string("expected '") + p + "'", peek());
    next();
  }

  std::size_t integer()
  {
    const Token& t = next();
    if (t.kind != Token::Kind::integer || t.text.size() > 9)
      fail("expected an integer", t);
    return std::stoul(t.text);
  }

  std::vector<std::string> rest_of_header()
  {
    std::vector<std::string> out;
    while (peek().kind != Token::Kind::header
           && peek().kind != Token::Kind::body
           && peek().kind != Token::Kind::eof)
      out.push_back(next().text);
    return out;
  }

  std::vector<bool> label_or()
  {
    auto v = label_and();
    while (is_punct("|"))
      {
        next();
        auto r = label_and();
        for (std::size_t i = 0; i < v.size(); ++i)
          v[i] = v[i] || r[i];
      }
    return v;
  }

  std::vector<bool> label_and()
  {
    auto v = label_not();
    while (is_punct("&"))
      {
        next();
        auto r = label_not();
        for (std::size_t i = 0; i < v.size(); ++i)
          v[i] = v[i] && r[i];
      }
    return v;
  }

  std::vector<bool> label_not()
  {
    if (is_punct("!"))
      {
        next();
        auto v = label_not();
        v.flip();
        return v;
      }
    const std::size_t vals = std::size_t{1} << doc_.aps.size();
    const Token& t = next();
    if (t.kind == Token::Kind::punct && t.text == "(")
      {
        auto v = label_or();
        expect_punct(")");
        return v;
      }
    if (t.kind == Token::Kind::ident && (t.text == "t" || t.text == "f"))
      return std::vector<bool>(vals, t.text == "t");
    if (t.kind == Token::Kind::integer)
      {
        std::size_t j = std::stoul(t.text);
        if (j >= doc_.aps.size())
          fail("atomic proposition index out of range", t);
        std::vector<bool> v(vals);
        for (std::size_t i = 0; i < vals; ++i)
          v[i] = (i >> j) & 1u;
        return v;
      }
    if (t.kind == Token::Kind::punct && t.text == "@")
      fail("aliases are not supported", t);
    fail("malformed label expression", t);
  }

  std::vector<std::size_t> acc_sets()
  {
    std::vector<std::size_t> out;
    if (!is_punct("{"))
      return out;
    next();
    while (!is_punct("}"))
      out.push_back(integer());
    next();
    return out;
  }

  void body()
  {
    std::optional<State> cur;
    for (;;)
      {
        const Token& t = peek();
        if (t.kind == Token::Kind::end)
          {
            next();
            if (peek().kind != Token::Kind::eof)
              fail("only one automaton per document is supported", peek());
            return;
          }
        if (t.kind == Token::Kind::eof)
          fail("expected --END--", t);
        if (t.kind == Token::Kind::header && t.text == "State")
          {
            next();
            if (is_punct("["))
              fail("state labels are not supported", peek());
            std::size_t q = integer();
            if (q >= *doc_.states)
              fail("state out of range", t);
            cur = static_cast<State>(q);
            if (peek().kind == Token::Kind::string)
              next();
            if (is_punct("{"))
              fail("state-based acceptance is not supported", peek());
            continue;
          }
        if (!cur)
          fail("expected \"State:\"", t);
        if (!is_punct("["))
          fail("only explicitly labeled transitions are supported", t);
        const Token at = next();
        auto vals = label_or();
        expect_punct("]");
        std::size_t d = integer();
        if (d >= *doc_.states)
          fail("destination state out of range", at);
        if (is_punct("&"))
          fail("universal branching is not supported", peek());
        auto acc = acc_sets();
        doc_.edges.push_back({*cur, std::move(vals), static_cast<State>(d),
                              std::move(acc), at.line, at.col});
      }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  HoaDoc doc_;
};

std::string
valuation_name(const std::vector<std::string>& aps, std::size_t v)
{
  if (aps.empty())
    return "t";
  std::string s;
  for (std::size_t j = 0; j < aps.size(); ++j)
    {
      if (j)
        s += '&';
      if (!((v >> j) & 1u))
        s += '!';
      s += aps[j];
    }
  return s;
}

Alphabet
valuation_alphabet(const std::vector<std::string>& aps)
{
  std::vector<std::string> names;
  for (std::size_t v = 0; v < (std::size_t{1} << aps.size()); ++v)
    names.push_back(valuation_name(aps, v));
  try
    {
      return Alphabet(std::move(names));
    }
  catch (const ValidationError&)
    {
      throw ValidationError("atomic proposition names must be distinct and "
                            "non-empty");
    }
}

std::optional<std::size_t>
parity_min_even_sets(const HoaDoc& d)
{
  const auto& n = d.acc_name;
  if (n.size() == 4 && n[0] == "parity" && n[1] == "min" && n[2] == "even")
    return std::stoul(n[3]);
  return std::nullopt;
}

bool
is_cobuchi(const HoaDoc& d)
{
  const auto& acc = d.acceptance;
  bool fin0 = acc.size() == 5 && acc[0] == "1" && acc[1] == "Fin"
              && acc[2] == "(" && acc[3] == "0" && acc[4] == ")";
  bool named = d.acc_name.empty()
               || (d.acc_name.size() == 1 && d.acc_name[0] == "co-Buchi");
  return fin0 && named;
}

std::string
acc_description(const HoaDoc& d)
{
  std::string s;
  for (const auto& p : d.acc_name)
    s += (s.empty() ? "" : " ") + p;
  return s.empty() ? "(none)" : s;
}

} // namespace

ParityAutomaton
parse_hoa(std::string_view text, ParseOptions opts)
{
  HoaDoc d = HoaParser(text).parse();
  auto sets = parity_min_even_sets(d);
  if (!sets)
    throw ValidationError("unsupported acceptance \"" + acc_description(d)
                          + "\"; expected \"parity min even k\"");
  if (!d.acceptance.empty() && d.acceptance[0] != std::to_string(*sets))
    throw ValidationError("Acceptance: set count disagrees with acc-name");

  ParityAutomaton a;
  a.alphabet = valuation_alphabet(d.aps);
  a.state_count = *d.states;
  a.initial = *d.start;
  for (const auto& e : d.edges)
    {
      if (e.acc.size() != 1 || e.acc[0] >= *sets)
        throw ParseError("each transition needs exactly one acceptance set "
                         "below " + std::to_string(*sets), e.line, e.col);
      for (std::size_t v = 0; v < e.valuations.size(); ++v)
        if (e.valuations[v])
          a.transitions.push_back({e.src, static_cast<Letter>(v), e.dst,
                                   static_cast<Color>(e.acc[0])});
    }
  if (!opts.validate)
    return a;
  auto rep = validate_dpa(a);
  for (const auto& v : rep.violations)
    if (!(opts.allow_incomplete && v.kind == Violation::Kind::missing))
      throw ValidationError("invalid parity automaton: " + v.message);
  return a;
}

CoBuchiAutomaton
parse_hoa_cobuchi(std::string_view text)
{
  HoaDoc d = HoaParser(text).parse();
  if (!is_cobuchi(d))
    throw ValidationError("unsupported acceptance \"" + acc_description(d)
                          + "\"; expected \"Acceptance: 1 Fin(0)\"");
  CoBuchiAutomaton a;
  a.alphabet = valuation_alphabet(d.aps);
  a.state_count = *d.states;
  a.initial = *d.start;
  a.gfg_claimed = d.gfg;
  for (const auto& e : d.edges)
    {
      bool rejecting = false;
      for (auto s : e.acc)
        {
          if (s != 0)
            throw ParseError("acceptance set out of range", e.line, e.col);
          rejecting = true;
        }
      for (std::size_t v = 0; v < e.valuations.size(); ++v)
        if (e.valuations[v])
          a.transitions.push_back({e.src, static_cast<Letter>(v), e.dst,
              rejecting ? rejecting_color : accepting_color});
    }
  a.transitions = sorted_transitions(std::move(a.transitions));
  a.transitions.erase(std::unique(a.transitions.begin(), a.transitions.end()),
                      a.transitions.end());
  require_valid(a);
  return a;
}

namespace
{

// AP names recovered from valuation-named letters, else p0, p1, ...
std::vector<std::string>
ap_names(const Alphabet& alpha)
{
  const std::size_t k = alpha.size();
  std::size_t m = 0;
  while ((std::size_t{1} << m) < k)
    ++m;
  if ((std::size_t{1} << m) != k)
    throw ValidationError("HOA needs an alphabet of size 2^n (have "
                          + std::to_string(k) + "); use the native format");
  if (m > max_aps)
    throw ValidationError("too many atomic propositions for HOA");

  std::vector<std::string> aps;
  if (m > 0)
    {
      std::stringstream all(alpha.name(static_cast<Letter>(k - 1)));
      for (std::string part; std::getline(all, part, '&');)
        aps.push_back(part);
      bool ok = aps.size() == m;
      for (std::size_t v = 0; ok && v < k; ++v)
        ok = alpha.name(static_cast<Letter>(v)) == valuation_name(aps, v);
      for (const auto& ap : aps)
        ok = ok && !ap.empty() && ap.front() != '!'
             && ap.find_first_of("\"\\") == std::string::npos;
      if (ok)
        return aps;
    }
  aps.clear();
  for (std::size_t j = 0; j < m; ++j)
    aps.push_back("p" + std::to_string(j));
  return aps;
}

std::string
label(std::size_t m, std::size_t v)
{
  if (m == 0)
    return "t";
  std::string s;
  for (std::size_t j = 0; j < m; ++j)
    {
      if (j)
        s += '&';
      if (!((v >> j) & 1u))
        s += '!';
      s += std::to_string(j);
    }
  return s;
}

std::string
parity_min_even_formula(std::size_t sets, std::size_t from = 0)
{
  std::string atom = (from % 2 == 0 ? "Inf(" : "Fin(")
                     + std::to_string(from) + ")";
  if (from + 1 == sets)
    return atom;
  std::string rest = parity_min_even_formula(sets, from + 1);
  if (from + 2 < sets)
    rest = "(" + rest + ")";
  return atom + (from % 2 == 0 ? " | " : " & ") + rest;
}

template <class Edge>
void
emit_hoa_body(std::ostringstream& os, std::size_t n, std::size_t m,
              const std::vector<Transition>& ts, Edge edge_suffix)
{
  os << "--BODY--\n";
  auto sorted = sorted_transitions(ts);
  std::size_t i = 0;
  for (State q = 0; q < n; ++q)
    {
      os << "State: " << q << "\n";
      for (; i < sorted.size() && sorted[i].src == q; ++i)
        os << "[" << label(m, sorted[i].sym) << "] " << sorted[i].dst
           << edge_suffix(sorted[i]) << "\n";
    }
  os << "--END--\n";
}

void
emit_hoa_head(std::ostringstream& os, std::size_t n, State initial,
              const std::vector<std::string>& aps)
{
  os << "HOA: v1\nStates: " << n << "\nStart: " << initial << "\nAP: "
     << aps.size();
  for (const auto& ap : aps)
    os << " \"" << ap << "\"";
  os << "\n";
}

} // namespace

std::string
emit_hoa(const ParityAutomaton& a)
{
  require_valid(a);
  auto aps = ap_names(a.alphabet);
  const std::size_t sets = max_color(a) + 1;
  std::ostringstream os;
  emit_hoa_head(os, a.state_count, a.initial, aps);
  os << "acc-name: parity min even " << sets << "\nAcceptance: " << sets
     << " " << parity_min_even_formula(sets) << "\n"
     << "properties: trans-labels explicit-labels trans-acc deterministic "
        "complete\n";
  emit_hoa_body(os, a.state_count, aps.size(), a.transitions,
                [](const Transition& t) {
                  return " {" + std::to_string(t.color) + "}";
                });
  return os.str();
}

std::string
emit_hoa(const CoBuchiAutomaton& a)
{
  require_valid(a);
  auto aps = ap_names(a.alphabet);
  std::ostringstream os;
  emit_hoa_head(os, a.state_count, a.initial, aps);
  os << "acc-name: co-Buchi\nAcceptance: 1 Fin(0)\n"
     << "properties: trans-labels explicit-labels trans-acc\n";
  if (a.gfg_claimed)
    os << "x-gfg: t\n";
  emit_hoa_body(os, a.state_count, aps.size(), a.transitions,
                [](const Transition& t) {
                  return std::string(t.color == rejecting_color ? " {0}" : "");
                });
  return os.str();
}

// DOT

namespace
{

std::string
dot_escape(const std::string& s)
{
  std::string out;
  for (char c : s)
    {
      if (c == '"' || c == '\\')
        out += '\\';
      out += c;
    }
  return out;
}

template <class Style>
std::string
emit_dot_impl(const char* name, const Alphabet& alpha, std::size_t n,
              State initial, const std::vector<Transition>& ts, Style style)
{
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=LR;\n"
     << "  node [shape=circle];\n"
     << "  init [shape=point, label=\"\"];\n"
     << "  init -> " << initial << ";\n";
  for (State q = 0; q < n; ++q)
    os << "  " << q << (q == initial ? " [peripheries=2]" : "") << ";\n";
  for (const auto& t : sorted_transitions(ts))
    os << "  " << t.src << " -> " << t.dst << " [label=\""
       << dot_escape(alpha.name(t.sym)) << "/" << t.color << "\""
       << style(t) << "];\n";
  os << "}\n";
  return os.str();
}

} // namespace

std::string
emit_dot(const ParityAutomaton& a)
{
  require_valid(a);
  return emit_dot_impl("dpa", a.alphabet, a.state_count, a.initial,
                       a.transitions, [](const Transition&) { return ""; });
}

std::string
emit_dot(const CoBuchiAutomaton& a)
{
  require_valid(a);
  return emit_dot_impl("ncw", a.alphabet, a.state_count, a.initial,
                       a.transitions, [](const Transition& t) {
                         return t.color == accepting_color
                                  ? ", style=bold, color=\"darkgreen\""
                                  : ", style=dashed";
                       });
}

AnyAutomaton
parse_any(std::string_view text, ParseOptions opts)
{
  auto b = text.find_first_not_of(" \t\r\n");
  if (b != std::string_view::npos && text.substr(b, 4) == "HOA:")
    {
      if (text.find("Fin(0)") != std::string_view::npos
          && text.find("parity") == std::string_view::npos)
        return parse_hoa_cobuchi(text);
      return parse_hoa(text, opts);
    }
  return parse_native(text, opts);
}

} // namespace dpacanon

namespace dpacanon
{

namespace
{

bool
single_char_letters(const Alphabet& alpha)
{
  return std::all_of(alpha.letters().begin(), alpha.letters().end(),
                     [](const std::string& l) { return l.size() == 1; });
}

std::vector<Letter>
parse_letters(std::string_view part, const Alphabet& alpha)
{
  std::vector<Letter> out;
  if (part.empty())
    return out;
  auto lookup = [&](std::string_view name) {
    auto x = alpha.find(std::string(name));
    if (!x)
      throw ValidationError("unknown letter '" + std::string(name) + "'");
    out.push_back(*x);
  };
  if (part.find(',') != std::string_view::npos || !single_char_letters(alpha))
    {
      std::size_t b = 0;
      for (;;)
        {
          auto e = part.find(',', b);
          lookup(part.substr(b, e == std::string_view::npos ? e : e - b));
          if (e == std::string_view::npos)
            break;
          b = e + 1;
        }
    }
  else
    for (std::size_t i = 0; i < part.size(); ++i)
      lookup(part.substr(i, 1));
  return out;
}

} // namespace

LassoWord
parse_lasso(std::string_view text, const Alphabet& alphabet)
{
  auto colon = text.find(':');
  if (colon == std::string_view::npos
      || text.find(':', colon + 1) != std::string_view::npos)
    throw ValidationError("lasso must have the form prefix:period");
  LassoWord w;
  w.prefix = parse_letters(text.substr(0, colon), alphabet);
  w.period = parse_letters(text.substr(colon + 1), alphabet);
  if (w.period.empty())
    throw ValidationError("lasso period must not be empty");
  return w;
}

std::string
format_lasso(const LassoWord& w, const Alphabet& alphabet)
{
  const bool compact = single_char_letters(alphabet);
  auto part = [&](const std::vector<Letter>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i)
      {
        if (i && !compact)
          s += ',';
        s += alphabet.name(xs[i]);
      }
    return s;
  };
  return part(w.prefix) + ":" + part(w.period);
}

} // namespace dpacanon
