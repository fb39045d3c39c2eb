// Copyright (c) 2026 the sincconv authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SINCCONV_CLI_HPP
#define SINCCONV_CLI_HPP

#include <string>
#include <vector>

namespace sincconv {

// Parses "4", "4,9,16", or "start:stop:step" (stop inclusive when aligned).
// Throws std::invalid_argument on malformed input.
std::vector<int> parse_int_list(const std::string& text);

// Entry point behind the sincconv binary. Exit codes: 0 success, 1 usage
// error, 2 computational failure (including selftest failures).
int cli_main(int argc, const char* const* argv);

} // namespace sincconv

#endif
