#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "schur/oracle.hpp"

namespace schur::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kRuntime = 3,
};

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::int64_t k_min = -4;
  std::int64_t k_max = 2;
  std::int64_t n_max = 12;
  unsigned jobs = 1;
  std::int64_t cap = kDefaultOracleCap;
};

/// The `verify` command body: JSON lines to `out`, offending records to `err`.
/// `source` replaces the solver (used to check that corruption is caught).
int run_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err,
               CertificateSource source = {});

}  // namespace schur::cli
