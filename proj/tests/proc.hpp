#pragma once

// Minimal subprocess runner for driving the CLI from tests.

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace proc {

struct Result {
    int code = -1;
    std::string out;
};

inline Result run(const std::string& command) {
    std::string cmd = command + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

}  // namespace proc
