#pragma once

// On-disk formats.
//
// FrameFile (JSON):
//   { "d": 2, "n": 4, "vectors": [ [[re, im], [re, im]], ... ] }
// Complex numbers are two-element [re, im] arrays. Doubles are written in
// shortest round-trip form, so a write/read cycle is bit-exact.
//
// StateSpec (command-line string):
//   maximally-mixed            I/d
//   frame-state:<j>            |phi_j><phi_j|
//   mixture:<w0,w1,...>        sum_j w_j |phi_j><phi_j|
//   [[[re,im],...],...]        explicit d x d matrix, inline JSON
//   @<path>                    explicit d x d matrix read from a JSON file

#include "kdf/errors.hpp"
#include "kdf/frames.hpp"
#include "kdf/linalg.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace kdf::cli {

using json = nlohmann::json;

/// Malformed input: bad JSON, wrong shapes, unknown state names. Maps to exit 2.
class InputError : public Error {
public:
    using Error::Error;
};

json to_json(cplx z);
json to_json(const ComplexMatrix& m);
json to_json(const Frame& f);
json to_json(std::span<const double> values);

cplx complex_from_json(const json& j);
ComplexMatrix matrix_from_json(const json& j);

/// Unit norms are checked with `tol` (FrameFile contract: 1e-10).
Frame frame_from_json(const json& j, double tol = kNumericTol);

json parse_json(std::string_view text);
json read_json_file(const std::filesystem::path& path);
Frame read_frame_file(const std::filesystem::path& path, double tol = kNumericTol);
void write_frame_file(const std::filesystem::path& path, const Frame& f);
std::string dump(const json& j);

struct MaximallyMixed {};
struct FrameState {
    std::size_t index = 0;
};
struct Mixture {
    std::vector<double> weights;
};
struct ExplicitState {
    ComplexMatrix matrix;
};

struct StateSpec {
    std::variant<MaximallyMixed, FrameState, Mixture, ExplicitState> value;
    std::string text; // as given on the command line
};

StateSpec parse_state_spec(std::string_view text);
DensityMatrix resolve_state(const StateSpec& spec, const Frame& f, double tol = kStructuralTol);

/// Comma-separated orders; "inf" / "infinity" for the min-entropy.
std::vector<double> parse_alpha_list(std::string_view text);

} // namespace kdf::cli
