// Copyright (c) 2026 the sincconv authors
// SPDX-License-Identifier: Apache-2.0

#include "sincconv/cli.hpp"

int main(int argc, char** argv) {
    return sincconv::cli_main(argc, argv);
}
