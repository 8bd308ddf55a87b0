// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace mmkit {

extern const char* const kToolVersion;

/// Runs the command-line tool. Exit codes: 0 success, 2 usage or
/// configuration error, 3 numerical error, 4 I/O error.
int run_app(int argc, const char* const* argv);

/// Same, for in-process callers; args exclude the program name.
int run_app(const std::vector<std::string>& args);

} // namespace mmkit
