#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lsseq::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidParams = 1,
  kVerifyFailed = 2,
  kIoError = 3,
};

/// Runs one command line (program name excluded) against the given streams.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in);

}  // namespace lsseq::cli
