// Copyright 2026 The fockqo Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>

#include "fockqo_cli/commands.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return fockqo::cli::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
