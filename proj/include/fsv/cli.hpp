#pragma once

// Command-line front end: list, verify, benchmark and export.

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fsv::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;

enum class Format { Text, Json };

/// Everything a command needs, after flags and the config file are merged.
struct RunConfig {
    std::vector<std::string> ids;
    bool all = false;
    int nx = 41;
    int nt = 41;
    std::optional<double> tol_analytic;
    std::optional<double> tol_fd;
    std::map<std::string, double> constants;
    std::map<std::string, std::string> functions;  // slot -> pool id
    std::string out_dir;
    Format format = Format::Text;
    int jobs = 1;
    std::vector<int> nx_list{21, 41, 81};
    double t_end = 0.05;
    double dt_safety = 0.9;
};

/// Parses argv and runs the selected command; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fsv::cli
