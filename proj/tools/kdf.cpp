// kdf: frames, Kirkwood-Dirac matrices, unravelings and their entropy bounds.

#include "kdf/cli/commands.hpp"
#include "kdf/kernels.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <unistd.h>

namespace {

using namespace kdf::cli;

enum class Format { automatic, json_out, table };

int emit(const CommandResult& result, Format format) try {
    const Report& report = result.report;
    if (format == Format::table) {
        std::cout << report.to_table();
    } else {
        std::cout << dump(report.to_json()) << '\n';
        if (format == Format::automatic && isatty(STDERR_FILENO)) {
            std::cerr << report.to_table();
        }
    }
    if (result.exit_code != kExitOk) {
        std::cerr << "kdf: " << report.to_json().value("failed", std::string("failed")) << '\n';
    }
    return result.exit_code;
} catch (const kdf::NumericalError& e) {
    std::cerr << "kdf: " << e.what() << '\n';
    return kExitCheckFailed;
}

/// `frame gen` writes the FrameFile to -o, or prints the bare FrameFile.
int emit_frame(const CommandResult& result, const std::string& out_path, Format format) {
    if (result.exit_code != kExitOk) {
        return emit(result, format);
    }
    const json& frame = result.report.data().at("frame");
    if (out_path.empty()) {
        std::cout << dump(frame) << '\n';
        return kExitOk;
    }
    try {
        write_frame_file(out_path, frame_from_json(frame));
    } catch (const kdf::Error& e) {
        std::cerr << "kdf: " << e.what() << '\n';
        return kExitInputError;
    }
    return emit(result, format);
}

std::uint64_t env_seed() {
    const char* text = std::getenv("KDF_SEED");
    if (text == nullptr || *text == '\0') {
        return 0;
    }
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(text, &used);
        if (text[used] == '\0') {
            return v;
        }
    } catch (const std::exception&) {
    }
    throw InputError(std::string("KDF_SEED is not an unsigned integer: ") + text);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frames, Kirkwood-Dirac quasiprobabilities and unraveling entropy bounds"};
    app.require_subcommand(1);
    // Global options may follow the verb.
    app.fallthrough();

    std::string format_name = "auto";
    kdf::Tolerances tol;
    std::string kernels_name;
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"auto", "json", "table"}))
        ->capture_default_str();
    app.add_option("--tol-structural", tol.structural, "Tolerance for exact identities")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--tol-numeric", tol.numeric, "Tolerance for numerical checks")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--tol-saturation", tol.saturation, "Tolerance for bound saturation")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--kernels", kernels_name, "Force a kernel backend (scalar, avx2, neon)");

    std::string file;
    std::string out_path;
    std::string state = "maximally-mixed";
    std::string alphas_text;
    std::optional<std::uint64_t> seed;
    ExtremalityOptions ext;

    auto* frame = app.add_subcommand("frame", "Frame files")->require_subcommand(1);
    auto* check = frame->add_subcommand("check", "Tightness, equiangularity and coherence of a frame file");
    check->add_option("file", file, "FrameFile")->required();
    auto* gen = frame->add_subcommand("gen", "Generate frame files")->require_subcommand(1);
    auto* sic2 = gen->add_subcommand("sic2", "Qubit SIC (tetrahedron)");
    sic2->add_option("-o,--output", out_path, "Write here instead of stdout");
    auto* complement = gen->add_subcommand("complement", "Naimark complement of an equiangular tight frame");
    complement->add_option("file", file, "FrameFile")->required();
    complement->add_option("-o,--output", out_path, "Write here instead of stdout");

    auto* kd = app.add_subcommand("kd", "Lambda and Kirkwood-Dirac matrices of the principal unraveling");
    kd->add_option("file", file, "FrameFile")->required();
    kd->add_option("--state", state, "State spec")->capture_default_str();

    auto* bounds = app.add_subcommand("bounds", "Eigenvalue location and entropy bounds against achieved values");
    bounds->add_option("file", file, "FrameFile")->required();
    bounds->add_option("--state", state, "State spec")->capture_default_str();
    bounds->add_option("--alphas", alphas_text, "Comma-separated entropy orders (inf allowed)");

    auto* verify = app.add_subcommand("verify-extremality", "Monte Carlo check that the extremal unraveling "
                                                            "minimizes entropy");
    verify->add_option("file", file, "FrameFile")->required();
    verify->add_option("--state", state, "State spec")->capture_default_str();
    verify->add_option("--samples", ext.samples, "Haar samples")->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--seed", seed, "Base seed (default: KDF_SEED, else 0)");
    verify->add_option("--alphas", alphas_text, "Comma-separated entropy orders (inf allowed)");
    verify->add_flag("--identity-first", ext.identity_first, "Use V = I for the first sample");
    verify->add_option("--threads", ext.threads, "Worker threads (0 = all cores)")->capture_default_str();

    auto* reproduce = app.add_subcommand("reproduce", "Reproduce worked examples")->require_subcommand(1);
    auto* qubit_sic = reproduce->add_subcommand("qubit-sic", "Qubit SIC example, every quantity checked");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    const Format format = format_name == "json" ? Format::json_out
                          : format_name == "table" ? Format::table
                                                   : Format::automatic;
    try {
        if (!kernels_name.empty()) {
            const auto backend = kdf::kernels::parse_backend(kernels_name);
            if (!backend) {
                throw InputError("unknown kernel backend: " + kernels_name);
            }
            kdf::kernels::set_backend(*backend);
        }
        const auto alpha_list = [&](const std::vector<double>& fallback) {
            return alphas_text.empty() ? fallback : parse_alpha_list(alphas_text);
        };

        if (check->parsed()) {
            return emit(cmd_frame_check(file, tol), format);
        }
        if (sic2->parsed()) {
            return emit_frame(cmd_frame_gen_sic2(), out_path, format);
        }
        if (complement->parsed()) {
            return emit_frame(cmd_frame_gen_complement(file, tol), out_path, format);
        }
        if (kd->parsed()) {
            return emit(cmd_kd(file, state, tol), format);
        }
        if (bounds->parsed()) {
            return emit(cmd_bounds(file, state, alpha_list(kDefaultBoundAlphas), tol), format);
        }
        if (verify->parsed()) {
            ext.seed = seed ? *seed : env_seed();
            ext.alphas = alpha_list(ext.alphas);
            return emit(cmd_verify_extremality(file, state, ext, tol), format);
        }
        if (qubit_sic->parsed()) {
            return emit(cmd_reproduce_qubit_sic(tol), format);
        }
    } catch (const kdf::Error& e) {
        std::cerr << "kdf: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
