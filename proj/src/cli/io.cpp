#include "kdf/cli/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace kdf::cli {

namespace {

double number_from_json(const json& j, const char* what) {
    if (!j.is_number()) {
        throw InputError(std::string(what) + ": expected a number, got " + j.dump());
    }
    const double x = j.get<double>();
    if (!std::isfinite(x)) {
        throw InputError(std::string(what) + ": non-finite number");
    }
    return x;
}

std::size_t size_from_json(const json& j, const char* key) {
    if (!j.contains(key)) {
        throw InputError(std::string("frame file: missing \"") + key + "\"");
    }
    const json& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() <= 0) {
        throw InputError(std::string("frame file: \"") + key + "\" must be a positive integer");
    }
    return v.get<std::size_t>();
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

double parse_double(std::string_view text, const char* what) {
    const std::string t = trim(text);
    if (t == "inf" || t == "infinity" || t == "Inf") {
        return kInfinity;
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
        throw InputError(std::string(what) + ": cannot parse \"" + t + "\" as a number");
    }
    return value;
}

std::vector<double> parse_number_list(std::string_view text, const char* what) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t stop = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(parse_double(text.substr(start, stop - start), what));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

} // namespace

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(to_json(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const Frame& f) {
    json vectors = json::array();
    for (std::size_t j = 0; j < f.size(); ++j) {
        json ket = json::array();
        for (const cplx& z : f.ket(j)) {
            ket.push_back(to_json(z));
        }
        vectors.push_back(std::move(ket));
    }
    return json{{"d", f.dim()}, {"n", f.size()}, {"vectors", std::move(vectors)}};
}

json to_json(std::span<const double> values) { return json(std::vector<double>(values.begin(), values.end())); }

cplx complex_from_json(const json& j) {
    if (j.is_number()) {
        return {number_from_json(j, "complex"), 0.0};
    }
    if (!j.is_array() || j.size() != 2) {
        throw InputError("complex numbers are [re, im] pairs, got " + j.dump());
    }
    return {number_from_json(j[0], "complex"), number_from_json(j[1], "complex")};
}

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) {
        throw InputError("matrix: expected a non-empty array of rows");
    }
    const std::size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty()) {
        throw InputError("matrix: rows must be non-empty arrays");
    }
    const std::size_t cols = j[0].size();
    std::vector<cplx> data;
    data.reserve(rows * cols);
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != cols) {
            throw InputError("matrix: ragged rows");
        }
        for (const auto& z : row) {
            data.push_back(complex_from_json(z));
        }
    }
    return ComplexMatrix(rows, cols, std::move(data));
}

Frame frame_from_json(const json& j, double tol) {
    if (!j.is_object()) {
        throw InputError("frame file: top level must be an object");
    }
    const std::size_t d = size_from_json(j, "d");
    const std::size_t n = size_from_json(j, "n");
    if (!j.contains("vectors") || !j.at("vectors").is_array()) {
        throw InputError("frame file: missing \"vectors\" array");
    }
    const json& vectors = j.at("vectors");
    if (vectors.size() != n) {
        throw InputError("frame file: n = " + std::to_string(n) + " but " + std::to_string(vectors.size()) +
                         " vectors given");
    }
    std::vector<cplx> data;
    data.reserve(n * d);
    for (std::size_t k = 0; k < n; ++k) {
        const json& ket = vectors[k];
        if (!ket.is_array() || ket.size() != d) {
            throw InputError("frame file: vector " + std::to_string(k) + " must have " + std::to_string(d) +
                             " components");
        }
        for (const auto& z : ket) {
            data.push_back(complex_from_json(z));
        }
    }
    // Shape problems are input errors; norm and count violations surface as
    // ValidationError from the Frame constructor.
    return Frame(ComplexMatrix(n, d, std::move(data)), tol);
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_json(buffer.str());
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

Frame read_frame_file(const std::filesystem::path& path, double tol) { return frame_from_json(read_json_file(path), tol); }

void write_frame_file(const std::filesystem::path& path, const Frame& f) {
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot write " + path.string());
    }
    out << dump(to_json(f)) << '\n';
}

std::string dump(const json& j) { return j.dump(2); }

StateSpec parse_state_spec(std::string_view text) {
    const std::string t = trim(text);
    StateSpec spec;
    spec.text = t;
    if (t == "maximally-mixed") {
        spec.value = MaximallyMixed{};
    } else if (t.rfind("frame-state:", 0) == 0) {
        const std::string idx = t.substr(12);
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), value);
        if (ec != std::errc{} || ptr != idx.data() + idx.size() || idx.empty()) {
            throw InputError("state: bad frame index \"" + idx + "\"");
        }
        spec.value = FrameState{value};
    } else if (t.rfind("mixture:", 0) == 0) {
        spec.value = Mixture{parse_number_list(t.substr(8), "state mixture")};
    } else if (!t.empty() && t.front() == '[') {
        spec.value = ExplicitState{matrix_from_json(parse_json(t))};
    } else if (!t.empty() && t.front() == '@') {
        spec.value = ExplicitState{matrix_from_json(read_json_file(t.substr(1)))};
    } else {
        throw InputError("state: unknown spec \"" + t +
                         "\" (expected maximally-mixed, frame-state:<j>, mixture:<w,...>, a JSON matrix or @file)");
    }
    return spec;
}

DensityMatrix resolve_state(const StateSpec& spec, const Frame& f, double tol) {
    struct Visitor {
        const Frame& f;
        double tol;
        DensityMatrix operator()(const MaximallyMixed&) const { return DensityMatrix::maximally_mixed(f.dim()); }
        DensityMatrix operator()(const FrameState& s) const {
            if (s.index >= f.size()) {
                throw InputError("state: frame-state:" + std::to_string(s.index) + " but the frame has " +
                                 std::to_string(f.size()) + " vectors");
            }
            return DensityMatrix::pure(f.ket(s.index), kNumericTol);
        }
        DensityMatrix operator()(const Mixture& m) const {
            if (m.weights.size() != f.size()) {
                throw InputError("state: mixture has " + std::to_string(m.weights.size()) + " weights for " +
                                 std::to_string(f.size()) + " vectors");
            }
            return frame_mixture(f, m.weights);
        }
        DensityMatrix operator()(const ExplicitState& e) const {
            if (e.matrix.rows() != f.dim() || e.matrix.cols() != f.dim()) {
                throw InputError("state: explicit matrix must be " + std::to_string(f.dim()) + "x" +
                                 std::to_string(f.dim()));
            }
            return DensityMatrix(e.matrix, tol);
        }
    };
    return std::visit(Visitor{f, tol}, spec.value);
}

std::vector<double> parse_alpha_list(std::string_view text) {
    std::vector<double> out = parse_number_list(text, "alphas");
    for (double a : out) {
        if (!(a > 0.0)) {
            throw InputError("alphas: orders must be positive");
        }
    }
    return out;
}

} // namespace kdf::cli
