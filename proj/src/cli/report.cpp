#include "kdf/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace kdf::cli {

Report::Report(std::string command) : command_(std::move(command)) {}

namespace {

Check make_check(const std::string& name, bool pass, double value, double reference, double tol,
                 const char* relation) {
    // NaN compares false everywhere, so a non-finite value never passes.
    return Check{name, pass && std::isfinite(value), value, reference, tol, relation};
}

} // namespace

bool Report::check_near(const std::string& name, double value, double reference, double tol) {
    checks_.push_back(make_check(name, std::abs(value - reference) <= tol, value, reference, tol, "=="));
    return checks_.back().pass;
}

bool Report::check_le(const std::string& name, double value, double bound, double tol) {
    checks_.push_back(make_check(name, value <= bound + tol, value, bound, tol, "<="));
    return checks_.back().pass;
}

bool Report::check_ge(const std::string& name, double value, double bound, double tol) {
    checks_.push_back(make_check(name, value >= bound - tol, value, bound, tol, ">="));
    return checks_.back().pass;
}

bool Report::check_lt(const std::string& name, double value, double bound) {
    checks_.push_back(make_check(name, value < bound, value, bound, 0.0, "<"));
    return checks_.back().pass;
}

bool Report::check_true(const std::string& name, bool ok) {
    checks_.push_back(Check{name, ok, ok ? 1.0 : 0.0, 1.0, 0.0, "is"});
    return ok;
}

void Report::note(const std::string& label, const std::string& text) { notes_.emplace_back(label, text); }

void Report::fail(const std::string& kind, const std::string& message) { error_ = std::make_pair(kind, message); }

bool Report::passed() const {
    if (error_) {
        return false;
    }
    for (const auto& c : checks_) {
        if (!c.pass) {
            return false;
        }
    }
    return true;
}

std::optional<std::string> Report::first_failure() const {
    if (error_) {
        return error_->first + ": " + error_->second;
    }
    for (const auto& c : checks_) {
        if (!c.pass) {
            return c.name;
        }
    }
    return std::nullopt;
}

json Report::to_json() const {
    json checks = json::array();
    for (const auto& c : checks_) {
        checks.push_back({{"name", c.name},
                          {"pass", c.pass},
                          {"value", c.value},
                          {"reference", c.reference},
                          {"tolerance", c.tolerance},
                          {"relation", c.relation}});
    }
    json out{{"command", command_}, {"pass", passed()}, {"data", data_}, {"checks", std::move(checks)}};
    if (error_) {
        out["error"] = {{"kind", error_->first}, {"message", error_->second}};
    }
    if (const auto failure = first_failure()) {
        out["failed"] = *failure;
    }
    require_finite(out);
    return out;
}

std::string Report::to_table() const {
    std::ostringstream os;
    os << command_ << ": " << (passed() ? "PASS" : "FAIL") << '\n';
    for (const auto& [label, text] : notes_) {
        os << "  " << label << ": " << text << '\n';
    }
    for (const auto& c : checks_) {
        os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << "  " << format_number(c.value, 10) << ' '
           << c.relation << ' ' << format_number(c.reference, 10);
        if (c.tolerance > 0.0) {
            os << "  (tol " << format_number(c.tolerance, 2) << ')';
        }
        os << '\n';
    }
    if (error_) {
        os << "  error (" << error_->first << "): " << error_->second << '\n';
    }
    return os.str();
}

void require_finite(const json& j, const std::string& where) {
    if (j.is_number_float()) {
        if (!std::isfinite(j.get<double>())) {
            throw NumericalError("report: non-finite value at " + (where.empty() ? std::string("/") : where));
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            require_finite(j[i], where + "/" + std::to_string(i));
        }
    } else if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            require_finite(value, where + "/" + key);
        }
    }
}

std::string format_number(double x, int precision) {
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    return buf;
}

} // namespace kdf::cli
