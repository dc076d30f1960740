#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wikidb::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,     ///< bad flags, missing store
  kFailure = 2,   ///< dump parse or build failure
  kNotFound = 3,  ///< unknown page or paragraph
};

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wikidb::cli
