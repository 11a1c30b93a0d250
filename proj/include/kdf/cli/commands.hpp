#pragma once

// The CLI verbs as library functions, so tests can drive them without a
// subprocess. Each returns a Report; exit_code() maps it to the process
// exit status (0 success, 1 check failure, 2 input error).

#include "kdf/cli/io.hpp"
#include "kdf/cli/report.hpp"
#include "kdf/tolerances.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace kdf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

struct CommandResult {
    Report report;
    int exit_code = kExitOk;
};

struct ExtremalityOptions {
    std::size_t samples = 200;
    std::uint64_t seed = 0;
    std::vector<double> alphas = {0.5, 1.0, 2.0, 5.0, kInfinity};
    /// Use V = I for sample 0 instead of a Haar draw.
    bool identity_first = false;
    /// 0 = hardware concurrency. Results do not depend on this.
    std::size_t threads = 0;
};

inline const std::vector<double> kDefaultBoundAlphas = {0.5, 1.0, 2.0, 3.0, 5.0, kInfinity};

Report frame_check(const Frame& f, const Tolerances& tol);
Report kd(const Frame& f, const StateSpec& state, const Tolerances& tol);
Report bounds(const Frame& f, const StateSpec& state, const std::vector<double>& alphas, const Tolerances& tol);
Report verify_extremality(const Frame& f, const StateSpec& state, const ExtremalityOptions& opts,
                          const Tolerances& tol);
Report reproduce_qubit_sic(const Tolerances& tol);

/// Runs `body`, turning exceptions into a failed Report with the right exit
/// code: InputError and DimensionError -> 2, any other kdf::Error -> 1.
CommandResult run_guarded(const std::string& command, const std::function<Report()>& body);

// Path-based wrappers used by the executable.
CommandResult cmd_frame_check(const std::filesystem::path& file, const Tolerances& tol);
CommandResult cmd_kd(const std::filesystem::path& file, const std::string& state, const Tolerances& tol);
CommandResult cmd_bounds(const std::filesystem::path& file, const std::string& state,
                         const std::vector<double>& alphas, const Tolerances& tol);
CommandResult cmd_verify_extremality(const std::filesystem::path& file, const std::string& state,
                                     const ExtremalityOptions& opts, const Tolerances& tol);
CommandResult cmd_reproduce_qubit_sic(const Tolerances& tol);
CommandResult cmd_frame_gen_sic2();
CommandResult cmd_frame_gen_complement(const std::filesystem::path& file, const Tolerances& tol);

} // namespace kdf::cli
