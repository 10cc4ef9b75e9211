// mcgrep: evaluate words in braid and mapping class groups under faithful
// linear representations.
//
//   mcgrep eval   --group braid --n 3 "(s1 s2)^3"
//   mcgrep equal  --group genus2 "t1 t2 t1" "t2 t1 t2"
//   mcgrep verify --group sphere --n 6
//   mcgrep export --group genus2 --out gens/
//   mcgrep bench  --group sphere --n 6 --length 10 --seed 7 --out report.json

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

void add_context_flags(CLI::App* cmd, mcgrep::cli::Options& opt) {
  cmd->add_option("--group", opt.group, "braid, sphere, genus2 or hyperelliptic")
      ->check(CLI::IsMember({"braid", "sphere", "genus2", "hyperelliptic"}));
  cmd->add_option("--n", opt.n, "strands (braid) or punctures (sphere)");
  cmd->add_option("--g", opt.g, "genus (hyperelliptic)");
  cmd->add_flag("--rescaled", opt.rescaled, "use the centre-killing rescaling (braid only)");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace mcgrep::cli;
  Options opt;
  CLI::App app{"Exact faithful representations of braid and mapping class groups"};
  app.require_subcommand(1, 1);

  auto* eval = app.add_subcommand("eval", "evaluate a word and summarise its matrix");
  add_context_flags(eval, opt);
  eval->add_option("word", opt.words, "word, e.g. \"s1 s2^-1\"")->expected(0, 1);
  eval->add_option("--file", opt.file, "read the word from a file");
  eval->add_option("--out", opt.out, "write the matrix record here");

  auto* equal = app.add_subcommand("equal", "decide whether two words are equal");
  add_context_flags(equal, opt);
  equal->add_option("words", opt.words, "two words")->expected(0, 2);
  equal->add_option("--file", opt.file, "read the two words from a file, one per line");

  auto* verify = app.add_subcommand("verify", "check the relation suite of the group");
  add_context_flags(verify, opt);

  auto* exp = app.add_subcommand("export", "write generator and inverse matrices");
  add_context_flags(exp, opt);
  exp->add_option("--out", opt.out, "output directory")->required();
  exp->add_flag("--blocks", opt.blocks, "also write block structure and symplectic parts");

  auto* bench = app.add_subcommand("bench", "time evaluation of random words");
  add_context_flags(bench, opt);
  bench->add_option("--length", opt.length, "word length");
  bench->add_option("--trials", opt.trials, "number of words")->check(CLI::PositiveNumber);
  bench->add_option("--seed", opt.seed, "random seed");
  bench->add_option("--out", opt.out, "write a deterministic JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : usage;
  }

  try {
    if (*eval) return cmd_eval(opt, std::cout);
    if (*equal) return cmd_equal(opt, std::cout);
    if (*verify) return cmd_verify(opt, std::cout);
    if (*exp) return cmd_export(opt, std::cout);
    if (*bench) return cmd_bench(opt, std::cout);
  } catch (const mcgrep::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return failed;
  }
  return usage;
}
