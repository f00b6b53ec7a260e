#pragma once

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace umbral::testing {

struct CliResult {
    int status = -1;
    std::string out;
};

/// Runs the CLI with the given argument string through the shell; stderr is discarded.
inline CliResult run_cli(const std::string& args) {
    std::string command = std::string("'") + UMBRAL_CLI_PATH + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for " + command);
    CliResult r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline std::string golden(const std::string& name) { return read_file(std::string(UMBRAL_GOLDEN_DIR) + "/" + name); }

}  // namespace umbral::testing
