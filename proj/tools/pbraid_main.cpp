#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

#include "pbraid/pbraid.hpp"

namespace {

using namespace pbraid;

// Parses "{1,2},{3,4}" into puncture sets; separators between groups are
// commas and/or whitespace.
std::vector<PunctureSet> parse_set_list(const std::string& text, const ConvexDisc& disc) {
  std::vector<PunctureSet> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '{') throw ParseError("expected '{' in set list", i);
    std::size_t close = text.find('}', i);
    if (close == std::string::npos) throw ParseError("unterminated set in set list", i);
    out.push_back(parse_set(text.substr(i, close - i + 1), disc));
    i = close + 1;
    skip();
  }
  return out;
}

int run_present(const std::string& kind, int n, const std::string& format) {
  Presentation p = presentation_by_name(kind, n);
  if (format == "structured")
    std::cout << presentation_to_json(p).dump(2) << "\n";
  else
    std::cout << presentation_to_text(p);
  return 0;
}

int run_verify(const std::string& kind, int n, unsigned jobs) {
  Presentation p = presentation_by_name(kind, n);
  VerifyReport rep = verify_presentation(p, jobs == 0 ? 1 : jobs);
  std::cout << rep.name << " n=" << rep.n << "\n";
  if (rep.quotient_only)
    std::cout << "note: checked in the quotient by the trivial swings; "
                 "a necessary condition only\n";
  for (std::size_t i : rep.failures) {
    const auto& c = rep.checks[i];
    std::cout << "FAIL [" << p.relation_tags[i] << "] " << print_word(p.relators[i]) << ":"
              << (c.pure ? "" : " not pure") << (c.trivial ? "" : " not trivial") << "\n";
  }
  std::cout << "relators: " << rep.checks.size() << ", failed: " << rep.failures.size() << "\n";
  return rep.all_passed() ? 0 : 1;
}

int run_equal(int n, const std::string& w1, const std::string& w2) {
  ConvexDisc disc(n);
  Word a = parse_word(w1, disc);
  Word b = parse_word(w2, disc);
  OracleEngine engine(n);
  if (engine.equivalent(a, b)) {
    std::cout << "equal\n";
    return 0;
  }
  std::cout << "different\n";
  return 1;
}

int run_expand(int n, const std::string& text) {
  ConvexDisc disc(n);
  Word w = expand_full(parse_word(text, disc));
  std::cout << print_word(w, /*artin_shorthand=*/true) << "\n";
  return 0;
}

int run_abelianize(const std::string& kind, int n) {
  Presentation p = presentation_by_name(kind, n);
  AbelianInvariants inv = abelianize(p);
  std::cout << p.name << " n=" << n << "\n";
  std::cout << "free rank: " << inv.free_rank << "\n";
  std::cout << "torsion:";
  if (inv.torsion.empty()) {
    std::cout << " none";
  } else {
    for (const auto& t : inv.torsion) std::cout << " " << t;
  }
  std::cout << "\n";
  return 0;
}

int run_witness(int n, int i, int j) {
  Word u = central_witness(i, j, n);
  std::cout << (u.empty() ? std::string("(empty word)") : print_word(u)) << "\n";
  ConvexDisc disc(n);
  Word sij = Word::letter(Generator::swing(PunctureSet(disc, {i, j})));
  Word sfull = Word::letter(Generator::swing(PunctureSet::full(disc)));
  OracleEngine engine(n);
  bool left = engine.equivalent(sij * u, sfull);
  bool right = engine.equivalent(u * sij, sfull);
  if (left && right) {
    std::cout << "verified: both products give the full swing\n";
    return 0;
  }
  std::cout << "FAILED:" << (left ? "" : " left product differs")
            << (right ? "" : " right product differs") << "\n";
  return 1;
}

int report_scripts(std::vector<RewriteScript>& scripts, OracleEngine& engine, bool debug) {
  std::size_t failed = 0;
  for (const auto& s : scripts) {
    ScriptReport rep = check_script(s, engine, debug);
    if (rep.passed) {
      std::cout << "[ok]   " << rep.name << " (" << rep.steps_applied << " steps)\n";
    } else {
      ++failed;
      std::cout << "[FAIL] " << rep.name << ": " << rep.message << "\n";
    }
  }
  std::cout << "scripts: " << scripts.size() << ", failed: " << failed << "\n";
  return failed == 0 ? 0 : 1;
}

int run_derive(const std::string& which, int n, bool debug) {
  const auto& names = bundled_script_names();
  if (std::find(names.begin(), names.end(), which) != names.end()) {
    OracleEngine engine(n);
    auto scripts = make_bundled_scripts(which, n, engine);
    return report_scripts(scripts, engine, debug);
  }
  std::ifstream in(which);
  if (!in) {
    std::cerr << "error: '" << which << "' is neither a bundled script nor a readable file\n";
    return 2;
  }
  nlohmann::ordered_json doc;
  RewriteScript script;
  int script_n = 0;
  try {
    doc = nlohmann::ordered_json::parse(in);
    script_n = doc.at("binding").at("n").get<int>();
  } catch (const std::exception& e) {
    std::cerr << "error: cannot read script: " << e.what() << "\n";
    return 2;
  }
  OracleEngine engine(script_n);
  try {
    script = script_from_json(doc, engine);
  } catch (const std::exception& e) {
    std::cerr << "error: cannot load script: " << e.what() << "\n";
    return 2;
  }
  std::vector<RewriteScript> scripts{std::move(script)};
  return report_scripts(scripts, engine, debug);
}

int run_diagram(int n, const std::string& sets_text, const std::string& out_path) {
  ConvexDisc disc(n);
  std::string svg = emit_diagram(n, parse_set_list(sets_text, disc));
  if (out_path.empty() || out_path == "-") {
    std::cout << svg;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return 2;
  }
  out << svg;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"presentations of the pure braid group on convex puncture sets"};
  app.require_subcommand(1);

  std::string kind, format = "text", word1, word2, script, sets_text, out_path;
  int n = 4, i = 1, j = 2;
  unsigned jobs = std::thread::hardware_concurrency();
  if (jobs == 0) jobs = 1;
  bool debug = false;

  auto* present = app.add_subcommand("present", "print a presentation");
  present->add_option("--kind", kind, "presentation name")->required();
  present->add_option("--n", n, "number of punctures")->required();
  present->add_option("--format", format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));

  auto* verify = app.add_subcommand("verify", "check every relator against the oracle");
  verify->add_option("--kind", kind, "presentation name")->required();
  verify->add_option("--n", n, "number of punctures")->required();
  verify->add_option("--jobs", jobs, "worker threads");

  auto* equal = app.add_subcommand("equal", "compare two words under the oracle");
  equal->add_option("--n", n, "number of punctures")->required();
  equal->add_option("word1", word1, "first word")->required();
  equal->add_option("word2", word2, "second word")->required();

  auto* expand = app.add_subcommand("expand", "rewrite a word in the Artin generators");
  expand->add_option("--n", n, "number of punctures")->required();
  expand->add_option("word", word1, "word to expand")->required();

  auto* abel = app.add_subcommand("abelianize", "abelian invariants of a presentation");
  abel->add_option("--kind", kind, "presentation name")->required();
  abel->add_option("--n", n, "number of punctures")->required();

  auto* witness = app.add_subcommand("witness", "factor the full swing through one pair swing");
  witness->add_option("--n", n, "number of punctures")->required();
  witness->add_option("i", i, "first label")->required();
  witness->add_option("j", j, "second label")->required();

  auto* derive = app.add_subcommand("derive", "replay a rewriting script");
  derive->add_option("--script", script, "bundled script name or JSON file")->required();
  derive->add_option("--n", n, "number of punctures for bundled scripts");
  derive->add_flag("--debug", debug, "oracle-check every intermediate step");

  auto* diagram = app.add_subcommand("diagram", "draw puncture sets as SVG");
  diagram->add_option("--n", n, "number of punctures")->required();
  diagram->add_option("--sets", sets_text, "comma separated sets, e.g. {1,2},{3,4}");
  diagram->add_option("--out", out_path, "output file ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(present)) return run_present(kind, n, format);
    if (app.got_subcommand(verify)) return run_verify(kind, n, jobs);
    if (app.got_subcommand(equal)) return run_equal(n, word1, word2);
    if (app.got_subcommand(expand)) return run_expand(n, word1);
    if (app.got_subcommand(abel)) return run_abelianize(kind, n);
    if (app.got_subcommand(witness)) return run_witness(n, i, j);
    if (app.got_subcommand(derive)) return run_derive(script, n, debug);
    if (app.got_subcommand(diagram)) return run_diagram(n, sets_text, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
