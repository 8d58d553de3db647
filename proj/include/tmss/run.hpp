/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <exception>
#include <string>

#include "tmss/config.hpp"
#include "tmss/errors.hpp"

namespace tmss {

/// Output file could not be written.
class IoError : public Error {
 public:
  using Error::Error;
};

enum ExitCode : int {
  kExitOk = 0,
  kExitOther = 1,
  kExitConfig = 2,
  kExitDomain = 3,
  kExitQuadrature = 4,
  kExitNumerical = 5,
  kExitUnphysical = 6,
  kExitVerifyFailed = 7,
  kExitIo = 8,
};

std::string_view tool_version();

struct RunOutput {
  std::string text;  ///< the full CSV or JSON document
  bool verify_failed = false;
};

/// Computes the command and renders it. Pure: touches no files.
RunOutput render(const RunConfig& config);

/// render() plus the write to config.out_path (standard output when empty).
/// Returns kExitOk, or kExitVerifyFailed when a verify check failed.
int run(const RunConfig& config);

/// Exit code for an in-flight exception. Call from inside a catch block.
int exit_code_for(const std::exception_ptr& e);

}  // namespace tmss
