#pragma once

// Runs the orbistring executable through the shell, capturing both streams.

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

struct CliResult {
    int status = -1;
    std::string out;
    std::string err;
};

inline CliResult run_cli(const std::string& args, const std::string& env = "")
{
    static int counter = 0;
    const auto err_path = std::filesystem::temp_directory_path() /
                          ("orbistring_err_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    const std::string cmd = env + " '" + std::string(ORBISTRING_CLI) + "' " + args + " 2>'" + err_path.string() + "'";
    CliResult r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    const int raw = ::pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(err_path);
    std::ostringstream s;
    s << in.rdbuf();
    r.err = s.str();
    std::filesystem::remove(err_path);
    return r;
}
