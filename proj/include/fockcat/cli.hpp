#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fockcat::cli {

struct Config {
  std::optional<std::string> cache_path;
  int rank_buffer = 1;
  int max_boxes = 12;

  // key=value lines; '#' starts a comment. Unknown keys and bad values raise Parse errors.
  static Config parse(const std::string& text, const std::string& origin);
  static Config load(const std::string& path);
};

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

// args excludes the program name. The KL cache is reset, loaded from cache_path when set and
// written back after a successful run, so every call behaves like a fresh process.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fockcat::cli
