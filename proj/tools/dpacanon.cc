// dpacanon -- command-line front end
//
// Exit codes: 0 success / positive verdict, 1 negative verdict
// (reject, inequivalent, invalid), 2 usage, I/O or parse errors.

#include <dpacanon/dpacanon.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace dpacanon;

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;

class UsageError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

std::string
read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw UsageError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void
write_file(const std::string& path, const std::string& text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw UsageError("cannot write '" + path + "'");
  out << text;
}

ParityAutomaton
load_dpa(const std::string& path, ParseOptions opts = {})
{
  auto any = parse_any(read_file(path), opts);
  if (auto* a = std::get_if<ParityAutomaton>(&any))
    return std::move(*a);
  throw UsageError("'" + path + "' holds a co-Buchi automaton; a parity "
                   "automaton is needed");
}

template <class A>
std::string
render(const A& a, const std::string& path)
{
  auto ext = fs::path(path).extension().string();
  if (ext == ".hoa")
    return emit_hoa(a);
  if (ext == ".dot")
    return emit_dot(a);
  return emit_native(a);
}

// Writes to `out` or, when empty, to stdout in native format.
template <class A>
void
store(const A& a, const std::string& out)
{
  if (out.empty())
    std::cout << emit_native(a);
  else
    write_file(out, render(a, out));
}

LassoWord
lasso_arg(const std::string& text, const Alphabet& alpha)
{
  if (text.empty())
    throw UsageError("a lasso is required (--lasso u:v)");
  try
    {
      return parse_lasso(text, alpha);
    }
  catch (const ValidationError& e)
    {
      throw UsageError(e.what());
    }
}

std::string
ids_json(const std::vector<State>& ids)
{
  return json(ids).dump();
}

struct Options
{
  bool json_out = false;
  std::string out;
  std::string lasso;
  std::uint64_t seed = 0;
  std::size_t states = 4;
  std::size_t colors = 3;
  std::size_t letters = 2;
  std::size_t aps = 0;
  bool use_aps = false;
  std::string input, second;
};

int
cmd_validate(const Options& o)
{
  auto any = parse_any(read_file(o.input), {.validate = false});
  auto rep = std::visit(
      [](const auto& a) {
        if constexpr (std::is_same_v<std::decay_t<decltype(a)>,
                                     ParityAutomaton>)
          return validate_dpa(a);
        else
          return validate_gca(a);
      },
      any);
  if (o.json_out)
    {
      json j{{"valid", rep.ok()}, {"violations", json::array()}};
      for (const auto& v : rep.violations)
        j["violations"].push_back(v.message);
      std::cout << j.dump() << "\n";
    }
  else
    std::cout << (rep.ok() ? "valid" : "invalid:\n" + rep.to_string()) << "\n";
  return rep.ok() ? exit_ok : exit_negative;
}

int
cmd_complete(const Options& o)
{
  store(complete_dpa(load_dpa(o.input, {.allow_incomplete = true})), o.out);
  return exit_ok;
}

int
cmd_structure(const Options& o)
{
  auto a = load_dpa(o.input);
  auto r = structure_dpa_with_map(a);
  store(r.automaton, o.out);
  if (!o.out.empty())
    {
      if (o.json_out)
        std::cout << json{{"states_before", a.state_count},
                          {"states_after", r.automaton.state_count},
                          {"original_id", r.original_id}}.dump()
                  << "\n";
      else
        std::cout << "structured: " << a.state_count << " -> "
                  << r.automaton.state_count << " states, original ids "
                  << ids_json(r.original_id) << "\n";
    }
  return exit_ok;
}

int
cmd_streamline(const Options& o)
{
  auto a = load_dpa(o.input);
  auto s = streamline(a);
  store(s, o.out);
  if (!o.out.empty())
    {
      auto before = colors_of(a).size(), after = colors_of(s).size();
      if (o.json_out)
        std::cout << json{{"colors_before", before},
                          {"colors_after", after}}.dump()
                  << "\n";
      else
        std::cout << "streamlined: " << before << " -> " << after
                  << " colors\n";
    }
  return exit_ok;
}

int
cmd_chain(const Options& o)
{
  if (o.out.empty())
    throw UsageError("chain needs an output directory (--out DIR)");
  auto a = canonicalize(load_dpa(o.input));
  auto chain = extract_chain(a, state_equivalence(a));
  fs::create_directories(o.out);

  json manifest{{"source_color_max", chain.source_color_max},
                {"levels", json::array()}};
  write_file((fs::path(o.out) / "streamlined.aut").string(), emit_native(a));
  manifest["streamlined"] = "streamlined.aut";
  auto stats = chain_stats(chain);
  for (std::size_t i = 0; i < chain.levels.size(); ++i)
    {
      std::string name = "A_" + std::to_string(i) + ".aut";
      write_file((fs::path(o.out) / name).string(),
                 emit_native(chain.levels[i]));
      manifest["levels"].push_back({{"level", i},
                                    {"file", name},
                                    {"states", stats[i].states},
                                    {"accepting", stats[i].accepting},
                                    {"rejecting", stats[i].rejecting},
                                    {"jumps", stats[i].jumps}});
    }
  write_file((fs::path(o.out) / "manifest.json").string(),
             manifest.dump(2) + "\n");
  if (o.json_out)
    std::cout << manifest.dump() << "\n";
  else
    std::cout << "wrote " << chain.levels.size() << " levels to " << o.out
              << "\n";
  return exit_ok;
}

int
cmd_color(const Options& o)
{
  auto a = canonicalize(load_dpa(o.input));
  auto w = lasso_arg(o.lasso, a.alphabet);
  auto c = corun_color(a, state_equivalence(a), w);
  bool accepted = c % 2 == 0;
  if (o.json_out)
    std::cout << json{{"lasso", format_lasso(normalize_lasso(w), a.alphabet)},
                      {"natural_color", c},
                      {"accepted", accepted}}.dump()
              << "\n";
  else
    std::cout << "natural color " << c << " ("
              << (accepted ? "accept" : "reject") << ")\n";
  return exit_ok;
}

int
cmd_member(const Options& o)
{
  auto any = parse_any(read_file(o.input));
  bool accepted;
  std::optional<Color> color;
  std::string lasso_text;
  if (auto* a = std::get_if<ParityAutomaton>(&any))
    {
      auto w = lasso_arg(o.lasso, a->alphabet);
      auto run = dpa_lasso_run(*a, w);
      accepted = run.accepted;
      color = run.dominating_color;
      lasso_text = format_lasso(normalize_lasso(w), a->alphabet);
    }
  else
    {
      const auto& c = std::get<CoBuchiAutomaton>(any);
      auto w = lasso_arg(o.lasso, c.alphabet);
      accepted = gca_lasso_member(c, w);
      lasso_text = format_lasso(normalize_lasso(w), c.alphabet);
    }
  if (o.json_out)
    {
      json j{{"lasso", lasso_text}, {"accepted", accepted}};
      if (color)
        j["color"] = *color;
      std::cout << j.dump() << "\n";
    }
  else
    {
      std::cout << (accepted ? "accept" : "reject");
      if (color)
        std::cout << ", color " << *color;
      std::cout << "\n";
    }
  return accepted ? exit_ok : exit_negative;
}

int
cmd_equiv(const Options& o)
{
  auto a = load_dpa(o.input);
  auto b = load_dpa(o.second);
  auto r = dpa_language_equiv(a, b);
  std::optional<std::string> witness;
  if (r.witness)
    witness = format_lasso(*r.witness, a.alphabet);
  if (o.json_out)
    {
      json j{{"equivalent", r.equivalent}};
      if (witness)
        j["witness"] = *witness;
      std::cout << j.dump() << "\n";
    }
  else if (r.equivalent)
    std::cout << "equal\n";
  else
    std::cout << "inequal, witness " << *witness << "\n";
  return r.equivalent ? exit_ok : exit_negative;
}

int
cmd_stats(const Options& o)
{
  auto a = load_dpa(o.input);
  auto scc = scc_decompose(a);
  auto structure = is_structured(a);
  bool streamlined = structure.ok() && is_streamlined(a);
  auto part = state_equivalence(a);
  if (o.json_out)
    std::cout << json{{"states", a.state_count},
                      {"letters", a.alphabet.size()},
                      {"colors", colors_of(a)},
                      {"distinct_colors", colors_of(a).size()},
                      {"sccs", scc.sccs.size()},
                      {"language_classes", part.classes.size()},
                      {"structured", structure.ok()},
                      {"streamlined", streamlined}}.dump()
              << "\n";
  else
    std::cout << "states: " << a.state_count << "\n"
              << "letters: " << a.alphabet.size() << "\n"
              << "distinct colors: " << colors_of(a).size() << " "
              << json(colors_of(a)).dump() << "\n"
              << "SCCs: " << scc.sccs.size() << "\n"
              << "language classes: " << part.classes.size() << "\n"
              << "structured: " << (structure.ok() ? "yes" : "no") << "\n"
              << "streamlined: " << (streamlined ? "yes" : "no") << "\n";
  return exit_ok;
}

int
cmd_random(const Options& o)
{
  auto a = o.use_aps
             ? random_dpa(o.states, o.colors, valuation_alphabet(o.aps), o.seed)
             : random_dpa(o.states, o.colors, o.letters, o.seed);
  store(a, o.out);
  return exit_ok;
}

} // namespace

int
main(int argc, char** argv)
{
  CLI::App app{"Canonical forms and natural colors for deterministic parity "
               "automata"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&)> run;

  auto add = [&](const char* name, const char* help, auto fn) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_flag("--json", o.json_out, "Machine-readable output");
    sub->callback([&run, fn] { run = fn; });
    return sub;
  };

  auto* v = add("validate", "Check determinism and completeness", cmd_validate);
  v->add_option("file", o.input, "Automaton file")->required();

  auto* c = add("complete", "Route missing transitions to a rejecting sink",
                cmd_complete);
  c->add_option("file", o.input, "Automaton file")->required();
  c->add_option("--out", o.out, "Output path (.aut, .hoa or .dot)");

  auto* st = add("structure", "Make the automaton structured", cmd_structure);
  st->add_option("file", o.input, "Automaton file")->required();
  st->add_option("--out", o.out, "Output path (.aut, .hoa or .dot)");

  auto* sl = add("streamline", "Streamline a structured automaton",
                 cmd_streamline);
  sl->add_option("file", o.input, "Automaton file")->required();
  sl->add_option("--out", o.out, "Output path (.aut, .hoa or .dot)");

  auto* ch = add("chain", "Write the co-Buchi chain A_0 .. A_{cmax+1}",
                 cmd_chain);
  ch->add_option("file", o.input, "Automaton file")->required();
  ch->add_option("--out", o.out, "Output directory")->required();

  auto* co = add("color", "Natural color of a lasso word", cmd_color);
  co->add_option("file", o.input, "Automaton file")->required();
  co->add_option("--lasso,lasso", o.lasso, "Lasso u:v");

  auto* me = add("member", "Membership of a lasso word", cmd_member);
  me->add_option("file", o.input, "Automaton file")->required();
  me->add_option("--lasso,lasso", o.lasso, "Lasso u:v");

  auto* eq = add("equiv", "Language equivalence of two DPAs", cmd_equiv);
  eq->add_option("a", o.input, "First automaton")->required();
  eq->add_option("b", o.second, "Second automaton")->required();

  auto* sa = add("stats", "Summary of an automaton", cmd_stats);
  sa->add_option("file", o.input, "Automaton file")->required();

  auto* ra = add("random", "Seeded random complete DPA", cmd_random);
  ra->add_option("--states", o.states, "Number of states")
      ->check(CLI::PositiveNumber);
  ra->add_option("--colors", o.colors, "Colors 0 .. n-1")
      ->check(CLI::PositiveNumber);
  auto* letters = ra->add_option("--letters", o.letters, "Number of letters")
                      ->check(CLI::PositiveNumber);
  auto* aps = ra->add_option("--aps", o.aps, "Atomic propositions (2^n letters)");
  letters->excludes(aps);
  ra->add_option("--seed", o.seed, "Random seed");
  ra->add_option("--out", o.out, "Output path (.aut, .hoa or .dot)");

  try
    {
      app.parse(argc, argv);
      o.use_aps = aps->count() > 0;
      return run(o);
    }
  catch (const CLI::ParseError& e)
    {
      int code = app.exit(e);
      return code == 0 ? exit_ok : exit_usage;
    }
  catch (const std::exception& e)
    {
      std::cerr << "error: " << e.what() << "\n";
      return exit_usage;
    }
}
