#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tbundle::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kInconsistent = 2,
};

/// Command-line entry point. argv[0] is the program name. Subcommands:
///   classify <file>, homology <file>, spectral <file>,
///   swpoly --genus g --n n, sw0 --genus g --m m --n n,
///   verify-parity --g a..b --mn c..d
/// plus --format text|json. Returns 0, 1 (bad input) or 2 (oracles disagree).
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace tbundle::cli
