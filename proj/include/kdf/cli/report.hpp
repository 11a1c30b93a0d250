#pragma once

#include "kdf/cli/io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kdf::cli {

/// One pass/fail line. Every flag comes from an explicit tolerance.
struct Check {
    std::string name;
    bool pass = false;
    double value = 0.0;
    double reference = 0.0;
    double tolerance = 0.0;
    std::string relation; // "==", "<=", ">=", "<", "in"
};

/// Machine-readable result of one command plus a short human summary.
class Report {
public:
    explicit Report(std::string command);

    json& data() noexcept { return data_; }
    const json& data() const noexcept { return data_; }

    /// |value - reference| <= tol
    bool check_near(const std::string& name, double value, double reference, double tol);
    /// value <= bound + tol
    bool check_le(const std::string& name, double value, double bound, double tol);
    /// value >= bound - tol
    bool check_ge(const std::string& name, double value, double bound, double tol);
    /// value < bound (strict, no tolerance)
    bool check_lt(const std::string& name, double value, double bound);
    bool check_true(const std::string& name, bool ok);

    /// A line for the table view only.
    void note(const std::string& label, const std::string& text);

    void fail(const std::string& kind, const std::string& message);

    bool passed() const;
    std::optional<std::string> first_failure() const;
    const std::vector<Check>& checks() const noexcept { return checks_; }

    /// Throws NumericalError if any number in the document is not finite.
    json to_json() const;
    std::string to_table() const;

private:
    std::string command_;
    json data_ = json::object();
    std::vector<Check> checks_;
    std::vector<std::pair<std::string, std::string>> notes_;
    std::optional<std::pair<std::string, std::string>> error_;
};

/// Throws NumericalError naming the first non-finite value's JSON pointer.
void require_finite(const json& j, const std::string& where = "");

std::string format_number(double x, int precision = 6);

} // namespace kdf::cli
