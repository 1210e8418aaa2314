#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace qschubert::cli {

struct RunConfig {
  std::string command;
  std::string type;      // preset name
  std::string gcm_file;  // or a JSON Cartan datum
  std::string word, word2;
  int degree_bound = 10;
  std::string degree;  // optional single slice, "1,1,0"
  std::string format = "text";
  std::string check_level = "fast";
  std::uint64_t seed = 1;
  std::size_t max_words = 250000;
  std::string element;  // definition in the golden table syntax
  std::string input;    // JSON element file
  std::string data_dir;
  std::string cache_dir;
};

enum ExitCode { kOk = 0, kFailed = 1, kInvalid = 2 };

// Runs one command. Output goes to `out`, diagnostics to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace qschubert::cli
