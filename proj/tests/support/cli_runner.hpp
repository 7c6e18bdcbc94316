// Copyright 2026 the semicoarse contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace sc::testing {

// Path to the scs binary, taken from a --sc-cli= argument in main().
inline std::string& cli_path() {
    static std::string path;
    return path;
}

inline void init_cli_path(int argc, char** argv) {
    const std::string prefix = "--sc-cli=";
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg.rfind(prefix, 0) == 0) cli_path() = arg.substr(prefix.size());
    }
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

inline RunResult run_cli(const std::string& args, const std::string& stdin_file = "") {
    if (cli_path().empty()) throw std::runtime_error("pass --sc-cli=<path to scs>");
    std::string command = cli_path() + " " + args;
    if (!stdin_file.empty()) command += " < " + stdin_file;
    command += " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("cannot spawn: " + command);
    RunResult result;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.out.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

inline std::string write_temp(const std::string& name, const std::string& contents) {
    const std::string path = "/tmp/scs_test_" + std::to_string(getpid()) + "_" + name;
    std::ofstream out(path, std::ios::binary);
    out << contents;
    return path;
}

}  // namespace sc::testing
