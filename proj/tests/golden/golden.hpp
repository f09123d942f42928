#pragma once

// Golden CLI cases: <stem>.case holds "args: ..." and "exit: N" lines, <stem>.out
// the exact expected stdout. "@CASES@" in args expands to the case directory.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace golden {

struct Outcome {
    bool ok = false;
    std::string detail;
};

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::vector<std::string> split_args(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline Outcome run_case(const std::string& cli, const std::string& dir, const std::string& stem) {
    std::ifstream spec(dir + "/" + stem + ".case");
    if (!spec) return {false, "missing " + stem + ".case"};
    std::string line;
    std::string args;
    int expected_exit = 0;
    while (std::getline(spec, line)) {
        if (line.rfind("args:", 0) == 0) args = line.substr(5);
        if (line.rfind("exit:", 0) == 0) expected_exit = std::stoi(line.substr(5));
    }
    std::string command = "'" + cli + "'";
    for (auto arg : split_args(args)) {
        for (auto pos = arg.find("@CASES@"); pos != std::string::npos; pos = arg.find("@CASES@"))
            arg.replace(pos, 7, dir);
        command += " '" + arg + "'";
    }
    command += " 2>/dev/null";

    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return {false, "cannot run " + command};
    std::string actual;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) actual.append(buf.data(), got);
    const int status = pclose(pipe);
    const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

    const std::string expected = slurp(dir + "/" + stem + ".out");
    if (exit_code != expected_exit)
        return {false, stem + ": exit " + std::to_string(exit_code) + ", expected " + std::to_string(expected_exit)};
    if (actual != expected) return {false, stem + ": output differs\n--- expected\n" + expected + "--- actual\n" + actual};
    return {true, stem};
}

}  // namespace golden
