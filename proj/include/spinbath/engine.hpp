// engine.hpp — Decoherence-factor evaluation.
//
// The central spin entangles with N environmental spins; interference of the
// central spin survives only through the overlap r(t) of the two conditional
// environment branches:
//
//   r(t)      = prod_i [ |alpha_i|^2 e^{-i g_i t} + |beta_i|^2 e^{+i g_i t} ]
//   |r(t)|^2  = prod_i [ |alpha_i|^4 + |beta_i|^4
//                        + 2 |alpha_i|^2 |beta_i|^2 cos(2 g_i t) ]
//
// Every grid point is evaluated from scratch with direct cosine calls, so
// per-point error never accumulates across the series. Points are independent
// and may be evaluated in any order; results are deterministic for a fixed
// particle order.

#pragma once

#include <cfloat>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "spinbath/model.hpp"

namespace spinbath {

// ------------------------- Per-particle factors ------------------------------

// Squared modulus of one particle's branch overlap, f(t) in [(2a-1)^2, 1]
// for a = alpha_sq. Clamped into [0, 1] to absorb last-bit rounding.
inline double particle_overlap_sq(double alpha_sq, double g, double t) {
    if (!(alpha_sq >= 0.0 && alpha_sq <= 1.0)) {
        throw std::domain_error("particle_overlap_sq: alpha_sq outside [0, 1]");
    }
    const double beta_sq = 1.0 - alpha_sq;
    const double f = alpha_sq * alpha_sq + beta_sq * beta_sq +
                     2.0 * alpha_sq * beta_sq * std::cos(2.0 * g * t);
    return f < 0.0 ? 0.0 : (f > 1.0 ? 1.0 : f);
}

// One particle's complex branch overlap. With |alpha|^2 + |beta|^2 = 1 the
// bracket reduces to cos(g t) + i (1 - 2 alpha_sq) sin(g t).
inline Complex particle_overlap(double alpha_sq, double g, double t) {
    if (!(alpha_sq >= 0.0 && alpha_sq <= 1.0)) {
        throw std::domain_error("particle_overlap: alpha_sq outside [0, 1]");
    }
    const double phase = g * t;
    return {std::cos(phase), (1.0 - 2.0 * alpha_sq) * std::sin(phase)};
}

// One evaluated time point.
struct DecoherenceSample {
    double t = 0.0;
    Complex r;
    double abs_r2 = 0.0;
};

// --------------------------- Whole-environment products ----------------------

namespace detail {

// Applies fn(first_particle_index, count) to each group block, or to the whole
// list when no boundaries are recorded. Grouped and flat traversal visit the
// same particles in the same order; only the partial-product bracketing
// differs, which floating-point reordering keeps within ~1e-15.
template <typename Fn>
void for_each_block(const EnvironmentRealization& env, Fn&& fn) {
    if (env.groups.empty()) {
        fn(std::size_t{0}, env.particles.size());
        return;
    }
    std::size_t start = 0;
    for (const auto& grp : env.groups) {
        fn(start, grp.count);
        start += grp.count;
    }
}

}  // namespace detail

// r(t): product of per-particle overlaps, evaluated block-by-block when the
// realization is grouped.
inline Complex decoherence_factor(const EnvironmentRealization& env, double t) {
    Complex total(1.0, 0.0);
    detail::for_each_block(env, [&](std::size_t start, std::size_t count) {
        Complex block(1.0, 0.0);
        for (std::size_t i = start; i < start + count; ++i) {
            const auto& p = env.particles[i];
            block *= particle_overlap(p.alpha_sq, p.g, t);
        }
        total *= block;
    });
    return total;
}

// |r(t)|^2 as the direct product of per-particle factors. Underflows to 0 for
// very large N; abs_r2_series switches to log accumulation in that regime.
inline double abs_r2_at(const EnvironmentRealization& env, double t) {
    double total = 1.0;
    detail::for_each_block(env, [&](std::size_t start, std::size_t count) {
        double block = 1.0;
        for (std::size_t i = start; i < start + count; ++i) {
            const auto& p = env.particles[i];
            block *= particle_overlap_sq(p.alpha_sq, p.g, t);
        }
        total *= block;
    });
    return total;
}

// sum_i log f_i(t); -inf when any factor vanishes exactly.
inline double log_abs_r2_at(const EnvironmentRealization& env, double t) {
    double total = 0.0;
    for (const auto& p : env.particles) {
        total += std::log(particle_overlap_sq(p.alpha_sq, p.g, t));
    }
    return total;
}

// ------------------------------- Series ---------------------------------------

namespace detail {

// Shared series loop. When the direct product drops out of the normal double
// range at any point, a per-point log sum is kept for the whole series and
// abs_r2 becomes exp(log sum), which is exactly 0 once the log sum is below
// the representable range.
inline TimeSeries evaluate_series_impl(const EnvironmentRealization& env,
                                       const TimeGrid& grid, bool with_r) {
    std::vector<Complex> r_values;
    if (with_r) r_values.reserve(grid.samples);
    std::vector<double> abs_r2(grid.samples, 0.0);
    std::vector<double> log_abs_r2;

    for (std::size_t k = 0; k < grid.samples; ++k) {
        const double t = grid.time_at(k);
        const double direct = abs_r2_at(env, t);
        if (direct >= DBL_MIN) {
            abs_r2[k] = direct;
            if (!log_abs_r2.empty()) log_abs_r2[k] = std::log(direct);
        } else {
            if (log_abs_r2.empty()) {
                log_abs_r2.resize(grid.samples, 0.0);
                for (std::size_t j = 0; j < k; ++j) {
                    log_abs_r2[j] = std::log(abs_r2[j]);
                }
            }
            const double logsum = log_abs_r2_at(env, t);
            log_abs_r2[k] = logsum;
            abs_r2[k] = std::exp(logsum);
        }
        if (with_r) r_values.push_back(decoherence_factor(env, t));
    }
    return TimeSeries(grid, std::move(r_values), std::move(abs_r2),
                      std::move(log_abs_r2));
}

}  // namespace detail

// |r(t)|^2 over the grid (r_values left empty).
inline TimeSeries abs_r2_series(const EnvironmentRealization& env,
                                const TimeGrid& grid) {
    return detail::evaluate_series_impl(env, grid, false);
}

// Both r(t) and |r(t)|^2 over the grid.
inline TimeSeries evaluate_series(const EnvironmentRealization& env,
                                  const TimeGrid& grid) {
    return detail::evaluate_series_impl(env, grid, true);
}

// Single point with both r and |r|^2.
inline DecoherenceSample evaluate_at(const EnvironmentRealization& env, double t) {
    return {t, decoherence_factor(env, t), abs_r2_at(env, t)};
}

// --------------------------- Expectation values -------------------------------

// Expectation of a system observable in the entangled state, written in terms
// of the decoherence factor:
//
//   <O> = |a|^2 s_uu + |b|^2 s_dd + 2 Re[ a b* s_du r(t) ]
//
// Real (up to rounding) whenever the observable is Hermitian.
inline Complex expectation_value(const SystemCoefficients& sys,
                                 const ObservableSpec& obs, Complex r) {
    const double w_up = std::norm(sys.a);
    const double w_down = std::norm(sys.b);
    const double interference =
        2.0 * std::real(sys.a * std::conj(sys.b) * obs.s_du * r);
    return w_up * obs.s_uu + w_down * obs.s_dd + interference;
}

}  // namespace spinbath
