// SPDX-License-Identifier: Apache-2.0
//
// Minimal subprocess runner for CLI integration tests. Arguments are
// single-quoted for the shell; stdout and stderr are captured through
// temporary files.

#ifndef RADIOPROP_TESTS_SUBPROCESS_HPP
#define RADIOPROP_TESTS_SUBPROCESS_HPP

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

namespace test_support {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string shell_quote(const std::string &arg) {
    std::string quoted = "'";
    for (char c : arg) {
        if (c == '\'')
            quoted += "'\\''";
        else
            quoted += c;
    }
    quoted += "'";
    return quoted;
}

inline std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline RunResult run_process(const std::vector<std::string> &args) {
    static int counter = 0;
    const auto dir = std::filesystem::temp_directory_path();
    const auto tag = std::to_string(static_cast<long>(getpid())) + "_" + std::to_string(counter++);
    const auto out_path = dir / ("radioprop_test_out_" + tag);
    const auto err_path = dir / ("radioprop_test_err_" + tag);

    std::string cmd;
    for (const auto &a : args) {
        if (!cmd.empty())
            cmd += ' ';
        cmd += shell_quote(a);
    }
    cmd += " > " + shell_quote(out_path.string()) + " 2> " + shell_quote(err_path.string());

    const int status = std::system(cmd.c_str());
    RunResult result;
    if (status == -1)
        result.exit_code = -1;
    else if (WIFEXITED(status))
        result.exit_code = WEXITSTATUS(status);
    else
        result.exit_code = 128;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::filesystem::remove(out_path);
    std::filesystem::remove(err_path);
    return result;
}

// Scratch directory cleaned up when the object leaves scope.
struct TempDir {
    std::filesystem::path path;

    TempDir() {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("radioprop_scratch_" + std::to_string(static_cast<long>(getpid())) + "_" +
                std::to_string(counter++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
    TempDir(const TempDir &) = delete;
    TempDir &operator=(const TempDir &) = delete;

    std::filesystem::path file(const std::string &name) const { return path / name; }
};

inline void write_file(const std::filesystem::path &p, const std::string &content) {
    std::ofstream out(p, std::ios::binary);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

} // namespace test_support

#endif
