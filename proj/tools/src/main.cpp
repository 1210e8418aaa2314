#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "commands.hpp"

#ifndef QSCHUBERT_DATA_DIR
#define QSCHUBERT_DATA_DIR ""
#endif

int main(int argc, char** argv) {
  using qschubert::cli::RunConfig;
  RunConfig cfg;
  cfg.data_dir = QSCHUBERT_DATA_DIR;
  if (const char* d = std::getenv("QSCHUBERT_DATA_DIR")) cfg.data_dir = d;
  if (const char* d = std::getenv("QSCHUBERT_CACHE_DIR")) cfg.cache_dir = d;

  CLI::App app{"Canonical bases of quantum Schubert cells"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto common = [&](CLI::App* sub) {
    auto* t = sub->add_option("--type", cfg.type, "Cartan type: A1, A1xA1, A2, A3, B2, C2, G2");
    auto* g = sub->add_option("--gcm", cfg.gcm_file, "JSON file with a symmetrizable Cartan datum")
                  ->check(CLI::ExistingFile);
    t->excludes(g);
    sub->add_option("--word", cfg.word, "reduced word, e.g. 1,2,1 (default: a longest word)");
    sub->add_option("--word2", cfg.word2, "second reduced word");
    sub->add_option("--degree-bound", cfg.degree_bound, "largest height of the slices")
        ->check(CLI::PositiveNumber);
    sub->add_option("--degree", cfg.degree, "a single slice, e.g. 1,1,0");
    sub->add_option("--format", cfg.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--check-level", cfg.check_level, "fast or full")
        ->check(CLI::IsMember({"fast", "full"}));
    sub->add_option("--seed", cfg.seed, "seed of the sampled checks");
    sub->add_option("--max-words", cfg.max_words, "refuse slices with more words than this");
    sub->add_option("--element", cfg.element, "element, e.g. \"E2*E213 - v^-2 E21*E23\"");
    sub->add_option("--input", cfg.input, "element as JSON (the output format of basis)")
        ->check(CLI::ExistingFile);
    sub->add_option("--data-dir", cfg.data_dir, "directory of the golden tables");
  };

  const std::pair<const char*, const char*> commands[] = {
      {"roots", "root vectors of the word"},
      {"relations", "straightening relations between root vectors"},
      {"basis", "canonical basis of the cell, slice by slice"},
      {"expand", "PBW coordinates of an element"},
      {"verify", "run the invariant checks (and golden tables with --check-level full)"},
      {"compare", "compare the bases of two reduced words of one element"},
      {"embed", "check B(w) and T_w(B(w')) inside B(ww')"},
      {"bischubert", "basis of the bi-Schubert intersection of two cells"},
      {"strings", "string data of basis elements or of --element"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    sub->callback([&cfg, n = std::string(name)] { cfg.command = n; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : qschubert::cli::kInvalid;
  }
  return qschubert::cli::run(cfg, std::cout, std::cerr);
}
