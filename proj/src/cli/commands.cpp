#include "kdf/cli/commands.hpp"

#include "kdf/bounds.hpp"
#include "kdf/channels.hpp"
#include "kdf/entropy.hpp"
#include "kdf/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <thread>

namespace kdf::cli {

namespace {

json alpha_json(double alpha) { return std::isinf(alpha) ? json("inf") : json(alpha); }

std::string alpha_label(double alpha) { return std::isinf(alpha) ? "inf" : format_number(alpha, 6); }

json interval_json(const Interval& iv) { return json{{"lower", iv.lower}, {"upper", iv.upper}}; }

json spectrum_json(const HermitianMatrix& m) { return json(hermitian_eig(m).eigenvalues); }

std::string join_numbers(std::span<const double> xs, int precision = 6) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? ", " : "") + format_number(xs[i], precision);
    }
    return out;
}

void require_tight(const Frame& f, const Tolerances& tol) {
    const double defect = tightness_defect(f);
    if (defect > tol.numeric) {
        throw ValidationError("invariant 'tight' failed: relative frame-operator defect " + format_number(defect, 3));
    }
}

void require_etf(const Frame& f, const Tolerances& tol) {
    require_tight(f, tol);
    if (f.size() > f.dim() && !is_equiangular(f, tol.numeric)) {
        throw ValidationError("invariant 'equiangular' failed: pairwise overlaps differ");
    }
}

/// Lambda and its ingredients for the principal unraveling of a tight frame.
struct PrincipalSetup {
    EtfParameters params;
    DensityMatrix rho;
    Unraveling kraus;
    LambdaMatrix lambda;
};

PrincipalSetup principal_setup(const Frame& f, const StateSpec& state, const Tolerances& tol) {
    DensityMatrix rho = resolve_state(state, f, tol.numeric);
    Unraveling kraus = principal_kraus(f, tol.numeric);
    LambdaMatrix lam = lambda_matrix(kraus, rho, tol.numeric);
    return {EtfParameters::of(f), std::move(rho), std::move(kraus), std::move(lam)};
}

double relative_error(double estimate, double truth) { return (estimate - truth) / truth; }

} // namespace

// ---------------------------------------------------------------------------

Report frame_check(const Frame& f, const Tolerances& tol) {
    Report r("frame check");
    const EtfParameters p = EtfParameters::of(f);
    const HermitianMatrix s = frame_operator(f);
    const double defect = tightness_defect(f);
    const bool tight = defect <= tol.numeric;
    // Equiangularity needs at least one pair; a negative value marks "not equiangular".
    const double overlap = f.size() >= 2 ? is_equiangular(f, tol.numeric).value_or(-1.0) : -1.0;
    const bool equiangular = overlap >= 0.0;

    double norm_defect = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
        norm_defect = std::max(norm_defect, std::abs(kernels::norm_sq(f.ket(j).data(), f.dim()) - 1.0));
    }

    json& d = r.data();
    d["d"] = p.d;
    d["n"] = p.n;
    d["S"] = p.S;
    d["tight"] = tight;
    d["tightness_defect"] = defect;
    d["equiangular"] = equiangular;
    d["coherence_formula"] = p.c;
    d["coherence_measured"] = equiangular ? json(overlap) : json(nullptr);
    d["frame_operator_spectrum"] = spectrum_json(s);
    d["max_unit_norm_defect"] = norm_defect;

    r.check_le("unit_norm", norm_defect, 0.0, tol.numeric);
    r.check_near("frame_operator_trace", s.trace(), static_cast<double>(p.n), tol.numeric * p.n);
    if (tight && equiangular) {
        r.check_near("coherence", overlap, p.c, tol.numeric);
    }
    r.note("frame", std::to_string(p.n) + " vectors in C^" + std::to_string(p.d));
    r.note("tight", tight ? "yes" : "no (defect " + format_number(defect, 3) + ")");
    if (equiangular) {
        r.note("equiangular", "yes, c = " + format_number(overlap, 10));
    } else {
        r.note("equiangular", "no");
    }
    return r;
}

Report kd(const Frame& f, const StateSpec& state, const Tolerances& tol) {
    Report r("kd");
    require_tight(f, tol);
    const PrincipalSetup setup = principal_setup(f, state, tol);
    const Povm povm = povm_from_frame(f, tol.numeric);
    const KdMatrix pi = kd_matrix(povm, setup.rho, tol.numeric);
    const double ratio = static_cast<double>(f.dim()) / static_cast<double>(f.size());
    const double residual = max_abs_diff(pi.matrix(), setup.lambda.matrix() * cplx{ratio, 0.0});

    const Spectrum lam_spec = hermitian_eig(setup.lambda.hermitian());
    const ProbabilityVector probs = outcome_probabilities(povm, setup.rho);
    const std::vector<double> diag = setup.lambda.diagonal();
    double diag_defect = 0.0;
    for (std::size_t j = 0; j < diag.size(); ++j) {
        diag_defect = std::max(diag_defect, std::abs(diag[j] - probs[j]));
    }
    cplx pi_total{0.0, 0.0};
    for (const cplx& z : pi.matrix().data()) {
        pi_total += z;
    }

    json& d = r.data();
    d["state"] = state.text;
    d["purity"] = purity(setup.rho);
    d["lambda"] = to_json(setup.lambda.matrix());
    d["pi"] = to_json(pi.matrix());
    d["lambda_spectrum"] = lam_spec.eigenvalues;
    d["pi_spectrum"] = spectrum_json(pi.hermitian());
    d["probabilities"] = to_json(probs.values());
    d["pi_residual"] = residual;

    r.check_le("pi_equals_scaled_lambda", residual, 0.0, tol.structural);
    r.check_near("lambda_trace", setup.lambda.hermitian().trace(), 1.0, tol.numeric);
    r.check_ge("lambda_psd", lam_spec.eigenvalues.back(), 0.0, tol.numeric);
    r.check_near("pi_sum", std::abs(pi_total - cplx{1.0, 0.0}), 0.0, tol.numeric);
    r.check_le("lambda_diagonal_is_distribution", diag_defect, 0.0, tol.numeric);
    r.note("lambda spectrum", join_numbers(lam_spec.eigenvalues, 10));
    r.note("max |Pi - (d/n) Lambda|", format_number(residual, 3));
    return r;
}

Report bounds(const Frame& f, const StateSpec& state, const std::vector<double>& alphas, const Tolerances& tol) {
    Report r("bounds");
    require_etf(f, tol);
    const PrincipalSetup setup = principal_setup(f, state, tol);
    const EtfParameters& p = setup.params;
    const double pur = purity(setup.rho);
    const Spectrum spec = hermitian_eig(setup.lambda.hermitian());
    const double lmax = spec.eigenvalues.front();

    // Eigenvalue location.
    const Interval trace_norm = eigen_interval(setup.lambda.hermitian());
    const double trace_norm_upper = max_eig_upper_bound(setup.lambda.hermitian());
    const auto disks = gershgorin_disks(setup.lambda.matrix());
    const auto pieces = gershgorin_real_union(disks);
    const Interval hull = gershgorin_hull(disks);
    const Interval gersh = Interval::of(std::max(hull.lower, 0.0), hull.upper);
    const Interval etf = etf_eigen_interval(p, pur);

    json& d = r.data();
    d["state"] = state.text;
    d["purity"] = pur;
    d["params"] = {{"n", p.n}, {"d", p.d}, {"S", p.S}, {"c", p.c}};
    d["spectrum"] = spec.eigenvalues;
    json pieces_json = json::array();
    for (const auto& piece : pieces) {
        pieces_json.push_back(interval_json(piece));
    }
    d["location"] = {
        {"trace_norm", interval_json(trace_norm)},
        {"trace_norm_max_eig_bound", trace_norm_upper},
        {"gershgorin_union", pieces_json},
        {"gershgorin_nonnegative", interval_json(gersh)},
        {"etf_interval", interval_json(etf)},
        {"relative_error",
         {{"trace_norm", relative_error(trace_norm_upper, lmax)},
          {"gershgorin", relative_error(gersh.upper, lmax)},
          {"etf", relative_error(etf.upper, lmax)}}},
    };

    for (std::size_t k = 0; k < spec.eigenvalues.size(); ++k) {
        const double ev = spec.eigenvalues[k];
        const std::string tag = "[" + std::to_string(k) + "]";
        r.check_ge("trace_norm_contains" + tag, trace_norm.slack(ev), 0.0, tol.numeric);
        r.check_ge("etf_interval_contains" + tag, etf.slack(ev), 0.0, tol.numeric);
        const bool in_union = std::any_of(pieces.begin(), pieces.end(),
                                          [&](const Interval& iv) { return iv.contains(ev, tol.numeric); });
        r.check_true("gershgorin_contains" + tag, in_union);
    }
    r.check_ge("trace_norm_max_eig_bound", trace_norm_upper, lmax, tol.numeric);
    r.check_le("trace_norm_within_etf_bound", trace_norm_upper, etf.upper, tol.numeric);

    // Identities and the index of coincidence.
    const ProbabilityVector probs(setup.lambda.diagonal());
    const double ic = index_of_coincidence(probs);
    const double hs = frobenius_norm(setup.lambda.matrix());
    r.check_le("ic_bound", ic, ic_upper_bound(p, pur), tol.numeric);
    r.check_near("lambda_hs_norm_identity", hs * hs, lambda_hs_norm_sq(p, ic, pur), tol.numeric);
    r.check_le("lambda_hs_norm_bound", hs * hs, lambda_hs_norm_sq_bound(p, pur), tol.numeric);

    // Entropy bounds for the principal and the extremal unraveling.
    const ExtremalUnraveling ex = extremal_unraveling(setup.kraus, setup.rho);
    const std::pair<const char*, const ProbabilityVector*> targets[] = {{"principal", &probs},
                                                                        {"extremal", &ex.probabilities}};
    json entropy = json::array();
    for (double a : alphas) {
        const AlphaOrder alpha(a);
        for (const auto& [name, pv] : targets) {
            auto record = [&](const char* kind, const BoundReport& b) {
                entropy.push_back({{"alpha", alpha_json(a)},
                                   {"unraveling", name},
                                   {"entropy", kind},
                                   {"bound", b.bound_value},
                                   {"achieved", b.achieved_value},
                                   {"slack", b.slack},
                                   {"saturated", b.saturated}});
                r.check_ge(std::string(kind) + "_bound[" + name + ", alpha=" + alpha_label(a) + "]",
                           b.achieved_value, b.bound_value, tol.numeric);
            };
            if (a >= 2.0) {
                record("renyi", BoundReport::lower(renyi_uncertainty_bound(p, pur, alpha), renyi_entropy(*pv, alpha),
                                                   tol.saturation));
            }
            if (!alpha.is_infinite() && a <= 2.0) {
                record("tsallis", BoundReport::lower(tsallis_uncertainty_bound(p, pur, alpha),
                                                     tsallis_entropy(*pv, alpha), tol.saturation));
            }
        }
    }
    d["entropy"] = std::move(entropy);

    r.note("true max eigenvalue", format_number(lmax, 10));
    r.note("trace-norm upper", format_number(trace_norm_upper, 10) + " (error " +
                               format_number(100 * relative_error(trace_norm_upper, lmax), 4) + "%)");
    r.note("gershgorin upper", format_number(gersh.upper, 10) + " (error " +
                                   format_number(100 * relative_error(gersh.upper, lmax), 4) + "%)");
    r.note("etf interval", "[" + format_number(etf.lower, 10) + ", " + format_number(etf.upper, 10) + "]");
    return r;
}

// ---------------------------------------------------------------------------

namespace {

struct SampleSlacks {
    std::vector<double> tsallis; // NaN where undefined
    std::vector<double> renyi;
    bool majorized = false;
};

} // namespace

Report verify_extremality(const Frame& f, const StateSpec& state, const ExtremalityOptions& opts,
                          const Tolerances& tol) {
    if (opts.samples < 1) {
        throw InputError("verify-extremality: need at least one sample");
    }
    Report r("verify-extremality");
    require_tight(f, tol);
    const PrincipalSetup setup = principal_setup(f, state, tol);
    const ExtremalUnraveling ex = extremal_unraveling(setup.kraus, setup.rho);
    const std::size_t m = setup.kraus.size();

    std::vector<AlphaOrder> orders;
    for (double a : opts.alphas) {
        orders.emplace_back(a);
    }
    std::vector<double> ex_tsallis(orders.size(), std::numeric_limits<double>::quiet_NaN());
    std::vector<double> ex_renyi(orders.size());
    for (std::size_t k = 0; k < orders.size(); ++k) {
        if (!orders[k].is_infinite()) {
            ex_tsallis[k] = tsallis_entropy(ex.probabilities, orders[k]);
        }
        ex_renyi[k] = renyi_entropy(ex.probabilities, orders[k]);
    }

    std::vector<SampleSlacks> results(opts.samples);
    auto run_sample = [&](std::size_t i) {
        const ComplexMatrix v = (opts.identity_first && i == 0) ? ComplexMatrix::identity(m) : [&] {
            Rng rng = derive_rng(opts.seed, i);
            return haar_unitary(m, rng);
        }();
        const Unraveling b = transform_unraveling(setup.kraus, v, tol.numeric);
        const ProbabilityVector pb = unraveling_probabilities(b, setup.rho);
        SampleSlacks& out = results[i];
        out.tsallis.assign(orders.size(), std::numeric_limits<double>::quiet_NaN());
        out.renyi.resize(orders.size());
        for (std::size_t k = 0; k < orders.size(); ++k) {
            if (!orders[k].is_infinite()) {
                out.tsallis[k] = tsallis_entropy(pb, orders[k]) - ex_tsallis[k];
            }
            out.renyi[k] = renyi_entropy(pb, orders[k]) - ex_renyi[k];
        }
        out.majorized = is_majorized_by(pb, ex.probabilities, tol.numeric);
    };

    std::size_t threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, opts.samples);
    if (threads <= 1) {
        for (std::size_t i = 0; i < opts.samples; ++i) {
            run_sample(i);
        }
    } else {
        // Static striding; each sample owns its RNG stream and output slot.
        std::vector<std::exception_ptr> errors(threads);
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = t; i < opts.samples; i += threads) {
                        run_sample(i);
                    }
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) {
            th.join();
        }
        for (const auto& e : errors) {
            if (e) {
                std::rethrow_exception(e);
            }
        }
    }

    json per_alpha = json::array();
    std::size_t majorized = 0;
    for (const auto& s : results) {
        majorized += s.majorized ? 1 : 0;
    }
    for (std::size_t k = 0; k < orders.size(); ++k) {
        double t_min = std::numeric_limits<double>::infinity();
        double r_min = std::numeric_limits<double>::infinity();
        for (const auto& s : results) {
            if (!std::isnan(s.tsallis[k])) {
                t_min = std::min(t_min, s.tsallis[k]);
            }
            r_min = std::min(r_min, s.renyi[k]);
        }
        const double a = orders[k].value();
        json entry{{"alpha", alpha_json(a)}, {"renyi_min_slack", r_min}};
        r.check_ge("renyi_extremality[alpha=" + alpha_label(a) + "]", r_min, 0.0, tol.numeric);
        if (!orders[k].is_infinite()) {
            entry["tsallis_min_slack"] = t_min;
            r.check_ge("tsallis_extremality[alpha=" + alpha_label(a) + "]", t_min, 0.0, tol.numeric);
        }
        per_alpha.push_back(std::move(entry));
    }

    json& d = r.data();
    d["state"] = state.text;
    d["samples"] = opts.samples;
    d["seed"] = opts.seed;
    d["identity_first"] = opts.identity_first;
    d["extremal_probabilities"] = to_json(ex.probabilities.values());
    d["slacks"] = std::move(per_alpha);
    d["majorized_samples"] = majorized;
    r.check_near("majorized_by_extremal", static_cast<double>(majorized), static_cast<double>(opts.samples), 0.0);
    r.note("samples", std::to_string(opts.samples) + " (seed " + std::to_string(opts.seed) + ")");
    r.note("extremal distribution", join_numbers(ex.probabilities.values(), 10));
    return r;
}

// ---------------------------------------------------------------------------

Report reproduce_qubit_sic(const Tolerances& tol) {
    Report r("reproduce qubit-sic");
    const Frame f = sic_qubit();
    const EtfParameters p = EtfParameters::of(f);
    const Unraveling kraus = principal_kraus(f, tol.numeric);
    json& d = r.data();

    // Maximally mixed state: 1/4 on the diagonal, 1/12 elsewhere.
    const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
    const LambdaMatrix lam_mixed = lambda_matrix(kraus, mixed, tol.numeric);
    ComplexMatrix expected_mixed(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            expected_mixed(i, j) = i == j ? 0.25 : 1.0 / 12.0;
        }
    }
    d["lambda_maximally_mixed"] = to_json(lam_mixed.matrix());
    r.check_le("lambda_maximally_mixed", max_abs_diff(lam_mixed.matrix(), expected_mixed), 0.0, tol.structural);

    double max_radius_defect = 0.0;
    for (const auto& disk : gershgorin_disks(lam_mixed.matrix())) {
        max_radius_defect = std::max(max_radius_defect, std::abs(disk.radius - 0.25));
    }
    r.check_le("gershgorin_radius_maximally_mixed", max_radius_defect, 0.0, tol.structural);
    const Interval etf_mixed = etf_eigen_interval(p, 0.5);
    d["etf_radius_maximally_mixed"] = etf_mixed.radius();
    r.check_near("etf_radius_equals_gershgorin", etf_mixed.radius(), 0.25, tol.structural);

    // tr(Lambda^2) two ways.
    const double hs_mixed = frobenius_norm(lam_mixed.matrix());
    const double tlam_direct = hs_mixed * hs_mixed;
    const double tlam_closed = lambda_hs_norm_sq(p, 0.25, 0.5);
    d["tr_lambda_sq"] = {{"direct", tlam_direct}, {"closed_form", tlam_closed}};
    r.check_near("tr_lambda_sq_direct", tlam_direct, 1.0 / 3.0, tol.structural);
    r.check_near("tr_lambda_sq_closed_form", tlam_closed, 1.0 / 3.0, tol.structural);
    r.check_near("tr_lambda_sq_agreement", tlam_direct, tlam_closed, tol.structural);

    // Pure state |phi_0>.
    const DensityMatrix pure = DensityMatrix::pure(f.ket(0));
    const LambdaMatrix lam_pure = lambda_matrix(kraus, pure, tol.numeric);
    const double off = 1.0 / (6.0 * std::sqrt(3.0));
    ComplexMatrix expected_pure(4, 4);
    expected_pure(0, 0) = 0.5;
    for (std::size_t k = 1; k < 4; ++k) {
        expected_pure(0, k) = expected_pure(k, 0) = 1.0 / 6.0;
        expected_pure(k, k) = 1.0 / 6.0;
        for (std::size_t j = 1; j < 4; ++j) {
            if (j != k) {
                // (1 + 2 w^(k-j)) / 18 = +-i sqrt(3)/18
                expected_pure(j, k) = cplx{0.0, (k + 3 - j) % 3 == 1 ? off : -off};
            }
        }
    }
    d["lambda_frame_state_0"] = to_json(lam_pure.matrix());
    r.check_le("lambda_frame_state_0", max_abs_diff(lam_pure.matrix(), expected_pure), 0.0, tol.structural);

    const Spectrum spec = hermitian_eig(lam_pure.hermitian());
    d["spectrum"] = spec.eigenvalues;
    const double expected_spec[] = {2.0 / 3.0, 1.0 / 3.0, 0.0, 0.0};
    for (std::size_t k = 0; k < 4; ++k) {
        r.check_near("spectrum[" + std::to_string(k) + "]", spec.eigenvalues[k], expected_spec[k], tol.numeric);
    }

    const double bound = max_eig_upper_bound(lam_pure.hermitian());
    const double bound_exact = (1.0 + std::sqrt(11.0 / 3.0)) / 4.0;
    const double lmax = spec.eigenvalues.front();
    const double bound_error = relative_error(bound, lmax);
    d["max_eig_bound"] = bound;
    d["max_eig_bound_exact"] = bound_exact;
    r.check_near("max_eig_bound", bound, bound_exact, tol.numeric);
    r.check_lt("max_eig_bound_below_0.729", bound, 0.729);
    r.check_near("etf_spectral_bound_matches", etf_spectral_bound(p, 1.0), bound, tol.numeric);

    const auto disks = gershgorin_disks(lam_pure.matrix());
    const Interval hull = gershgorin_hull(disks);
    const Interval gersh = Interval::of(std::max(hull.lower, 0.0), hull.upper);
    const double gersh_error = relative_error(gersh.upper, lmax);
    d["gershgorin_nonnegative"] = interval_json(gersh);
    d["relative_error"] = {{"max_eig_bound", bound_error}, {"gershgorin", gersh_error}};
    r.check_near("gershgorin_lower", gersh.lower, 0.0, tol.structural);
    r.check_near("gershgorin_upper", gersh.upper, 1.0, tol.structural);
    r.check_near("relative_error_max_eig_bound", bound_error, 0.093, 0.001);
    r.check_near("relative_error_gershgorin", gersh_error, 0.5, tol.numeric);

    r.note("spectrum", join_numbers(spec.eigenvalues, 12));
    r.note("bound", format_number(bound, 12) + " < 0.729, error " + format_number(100 * bound_error, 4) + "%");
    r.note("gershgorin", "[" + format_number(gersh.lower, 6) + ", " + format_number(gersh.upper, 6) +
                             "], error " + format_number(100 * gersh_error, 4) + "%");
    return r;
}

// ---------------------------------------------------------------------------

CommandResult run_guarded(const std::string& command, const std::function<Report()>& body) {
    auto failed = [&](const char* kind, const std::exception& e, int code) {
        Report r(command);
        r.fail(kind, e.what());
        return CommandResult{std::move(r), code};
    };
    try {
        Report r = body();
        const int code = r.passed() ? kExitOk : kExitCheckFailed;
        return CommandResult{std::move(r), code};
    } catch (const InputError& e) {
        return failed("input", e, kExitInputError);
    } catch (const DimensionError& e) {
        return failed("dimension", e, kExitInputError);
    } catch (const nlohmann::json::exception& e) {
        return failed("input", e, kExitInputError);
    } catch (const ValidationError& e) {
        return failed("validation", e, kExitCheckFailed);
    } catch (const DomainError& e) {
        return failed("domain", e, kExitCheckFailed);
    } catch (const NumericalError& e) {
        return failed("numerical", e, kExitCheckFailed);
    } catch (const Error& e) {
        return failed("error", e, kExitCheckFailed);
    }
}

CommandResult cmd_frame_check(const std::filesystem::path& file, const Tolerances& tol) {
    return run_guarded("frame check", [&] { return frame_check(read_frame_file(file, tol.numeric), tol); });
}

CommandResult cmd_kd(const std::filesystem::path& file, const std::string& state, const Tolerances& tol) {
    return run_guarded("kd", [&] {
        const StateSpec spec = parse_state_spec(state);
        return kd(read_frame_file(file, tol.numeric), spec, tol);
    });
}

CommandResult cmd_bounds(const std::filesystem::path& file, const std::string& state,
                         const std::vector<double>& alphas, const Tolerances& tol) {
    return run_guarded("bounds", [&] {
        const StateSpec spec = parse_state_spec(state);
        return bounds(read_frame_file(file, tol.numeric), spec, alphas, tol);
    });
}

CommandResult cmd_verify_extremality(const std::filesystem::path& file, const std::string& state,
                                     const ExtremalityOptions& opts, const Tolerances& tol) {
    return run_guarded("verify-extremality", [&] {
        const StateSpec spec = parse_state_spec(state);
        return verify_extremality(read_frame_file(file, tol.numeric), spec, opts, tol);
    });
}

CommandResult cmd_reproduce_qubit_sic(const Tolerances& tol) {
    return run_guarded("reproduce qubit-sic", [&] { return reproduce_qubit_sic(tol); });
}

CommandResult cmd_frame_gen_sic2() {
    return run_guarded("frame gen sic2", [] {
        Report r("frame gen sic2");
        r.data()["frame"] = to_json(sic_qubit());
        return r;
    });
}

CommandResult cmd_frame_gen_complement(const std::filesystem::path& file, const Tolerances& tol) {
    return run_guarded("frame gen complement", [&] {
        Report r("frame gen complement");
        r.data()["frame"] = to_json(complement_etf(read_frame_file(file, tol.numeric), tol.numeric));
        return r;
    });
}

} // namespace kdf::cli
