#include "support.hh"

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <sys/wait.h>

using namespace dpacanon;
using namespace dpacanon::test;

namespace
{

struct Outcome
{
  int status;
  std::string out;
};

Outcome
run(const std::string& args)
{
  std::string cmd = std::string(DPACANON_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p))
    out.append(buf, n);
  int rc = pclose(p);
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

std::string
fig1_file()
{
  return data_path("fig1.aut");
}

std::filesystem::path
scratch(const std::string& name)
{
  auto dir = std::filesystem::temp_directory_path() / "dpacanon_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

} // namespace

TEST_CASE("member on the flower automaton")
{
  auto r = run("member " + fig1_file() + " :ca");
  CHECK(r.status == 1);
  CHECK(r.out == "reject, color 5\n");

  r = run("member " + fig1_file() + " :cabb");
  CHECK(r.status == 0);
  CHECK(r.out == "accept, color 4\n");

  r = run("member " + fig1_file() + " --lasso :aa");
  CHECK(r.status == 1);
  CHECK(r.out == "reject, color 1\n");

  CHECK(run("member " + fig1_file() + " ca:").status == 2);
  CHECK(run("member " + fig1_file() + " :cd").status == 2);
}

TEST_CASE("color reports the natural color")
{
  auto r = run("color " + fig1_file() + " :cabb");
  CHECK(r.status == 0);
  CHECK(r.out == "natural color 4 (accept)\n");
  r = run("color " + fig1_file() + " :ca --json");
  CHECK(r.out.find("\"natural_color\":5") != std::string::npos);
}

TEST_CASE("validate, stats and usage errors")
{
  CHECK(run("validate " + fig1_file()).out == "valid\n");
  auto bad = scratch("bad.aut");
  {
    std::ofstream(bad) << R"({"kind": "dpa", "alphabet": ["a", "b"],
      "states": 1, "initial": 0,
      "transitions": [{"src": 0, "sym": 0, "dst": 0, "col": 1}]})";
  }
  auto r = run("validate " + bad.string());
  CHECK(r.status == 1);
  CHECK(r.out.find("(0, b) has no transition") != std::string::npos);

  r = run("complete " + bad.string());
  CHECK(r.status == 0);
  CHECK(parse_native_dpa(r.out).state_count == 2);

  r = run("stats " + fig1_file());
  CHECK(r.out.find("distinct colors: 5") != std::string::npos);
  CHECK(r.out.find("language classes: 4") != std::string::npos);

  CHECK(run("").status != 0);
  CHECK(run("member").status == 2);
  CHECK(run("validate /nonexistent/file.aut").status == 2);
  CHECK(run("--help").status == 0);
}

TEST_CASE("structure and streamline pipeline")
{
  auto structured = scratch("s.aut");
  auto r = run("structure " + fig1_file() + " --out " + structured.string());
  REQUIRE(r.status == 0);
  r = run("streamline " + structured.string());
  REQUIRE(r.status == 0);
  CHECK(r.out == slurp(data_path("fig1_streamlined.aut")));

  auto dot = scratch("s.dot");
  REQUIRE(run("streamline " + structured.string() + " --out " + dot.string())
            .status
          == 0);
  CHECK(slurp(dot.string()).rfind("digraph", 0) == 0);
}

TEST_CASE("chain writes every level and a manifest")
{
  auto dir = scratch("chain");
  std::filesystem::remove_all(dir);
  auto r = run("chain " + fig1_file() + " --out " + dir.string());
  REQUIRE(r.status == 0);
  for (int i = 0; i <= 6; ++i)
    CHECK(std::filesystem::exists(dir / ("A_" + std::to_string(i) + ".aut")));
  CHECK(slurp((dir / "A_5.aut").string())
        == slurp(data_path("fig1_chain_A5.aut")));
  CHECK(slurp((dir / "streamlined.aut").string())
        == slurp(data_path("fig1_streamlined.aut")));
  CHECK(std::filesystem::exists(dir / "manifest.json"));

  auto lvl = std::get<CoBuchiAutomaton>(
    parse_native(slurp((dir / "A_5.aut").string())));
  CHECK(lvl.gfg_claimed);
  CHECK(resolve_run(lvl, lasso("", "ca")).accepted);
  CHECK(run("member " + (dir / "A_5.aut").string() + " :ca").status == 0);
  CHECK(run("member " + (dir / "A_5.aut").string() + " :cabb").status == 1);
}

TEST_CASE("equiv")
{
  auto r = run("equiv " + fig1_file() + " " + fig1_file());
  CHECK(r.status == 0);
  CHECK(r.out == "equal\n");

  auto streamlined = data_path("fig1_streamlined.aut");
  CHECK(run("equiv " + fig1_file() + " " + streamlined).status == 0);

  auto other = scratch("other.aut");
  REQUIRE(run("random --states 3 --colors 2 --letters 3 --seed 1 --out "
              + other.string())
            .status
          == 0);
  r = run("equiv " + fig1_file() + " " + other.string());
  CHECK(r.status == 1);
  REQUIRE(r.out.rfind("inequal, witness ", 0) == 0);
  auto text = r.out.substr(17);
  text.pop_back();
  auto w = parse_lasso(text, fig1().alphabet);
  CHECK(dpa_lasso_run(fig1(), w).accepted
        != dpa_lasso_run(parse_native_dpa(slurp(other.string())), w).accepted);
}

TEST_CASE("random is reproducible and format follows the extension")
{
  auto a = run("random --states 5 --colors 4 --letters 3 --seed 7");
  auto b = run("random --states 5 --colors 4 --letters 3 --seed 7");
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == emit_native(random_dpa(5, 4, 3, 7)));

  auto hoa = scratch("r.hoa");
  REQUIRE(run("random --states 3 --colors 3 --aps 2 --seed 7 --out "
              + hoa.string())
            .status
          == 0);
  auto parsed = parse_hoa(slurp(hoa.string()));
  CHECK(parsed == random_dpa(3, 3, valuation_alphabet(2), 7));
  CHECK(run("random --letters 2 --aps 1").status == 2);
}

TEST_CASE("structure, streamline and color agree with the library")
{
  std::size_t pairs = 0;
  for (const auto& sc : random_suite(20, 5, 6060))
    {
      auto raw = scratch("pipe_raw.aut"), mid = scratch("pipe_mid.aut"),
           out = scratch("pipe_out.aut");
      {
        std::ofstream(raw) << emit_native(sc.automaton);
      }
      REQUIRE(run("structure " + raw.string() + " --out " + mid.string())
                .status
              == 0);
      REQUIRE(run("streamline " + mid.string() + " --out " + out.string())
                .status
              == 0);
      auto s = canonicalize(sc.automaton);
      CHECK(slurp(out.string()) == emit_native(s));
      auto p = state_equivalence(s);
      for (const auto& w : sc.lassos)
        {
          auto text = format_lasso(w, sc.automaton.alphabet);
          auto r = run("color " + out.string() + " " + text + " --json");
          REQUIRE(r.status == 0);
          auto j = nlohmann::json::parse(r.out);
          CHECK(j.at("natural_color").get<Color>() == corun_color(s, p, w));
          CHECK(j.at("lasso").get<std::string>() == text);
          ++pairs;
        }
    }
  CHECK(pairs == 100);
}

TEST_CASE("json output is well formed for every command")
{
  auto f = fig1_file();
  for (const std::string& args :
       {"validate " + f, "stats " + f, "member " + f + " :ca",
        "color " + f + " :ca", "equiv " + f + " " + f,
        "structure " + f + " --out " + scratch("j.aut").string()})
    {
      auto r = run(args + " --json");
      INFO(args);
      CHECK_NOTHROW(nlohmann::json::parse(r.out));
    }
  auto j = nlohmann::json::parse(run("member " + f + " :cabb --json").out);
  CHECK(j.at("accepted").get<bool>());
  CHECK(j.at("color").get<int>() == 4);
}
