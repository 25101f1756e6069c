// model.hpp — Core domain types for the spin-bath decoherence simulator:
// system amplitudes, environment particles and realizations, observables,
// time grids and sampled series. All types are immutable after construction
// and validate their invariants in the constructor.

#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spinbath {

using Complex = std::complex<double>;

inline constexpr const char* kVersion = "0.1.0";

// Tolerance used for normalization checks at construction.
inline constexpr double kNormTol = 1e-12;

// --------------------------- SystemCoefficients ------------------------------

// Amplitudes (a, b) of the central spin state a|up> + b|down>.
// Construction rejects non-normalized pairs instead of renormalizing,
// so bad configs surface early.
struct SystemCoefficients {
    Complex a;
    Complex b;

    SystemCoefficients(Complex a_, Complex b_) : a(a_), b(b_) {
        const double n = std::norm(a) + std::norm(b);
        if (std::abs(n - 1.0) > kNormTol) {
            throw std::invalid_argument(
                "SystemCoefficients: |a|^2 + |b|^2 = " + std::to_string(n) +
                " violates normalization (tolerance 1e-12)");
        }
    }

    static SystemCoefficients balanced() {
        const double s = 1.0 / std::sqrt(2.0);
        return {Complex(s, 0.0), Complex(s, 0.0)};
    }
};

// --------------------------- EnvironmentParticle -----------------------------

// One environmental spin: |alpha|^2 in [0,1], coupling g > 0 (inverse time,
// hbar = 1). |beta|^2 is never stored; it is always derived as 1 - alpha_sq.
// Phases are carried only so the brute-force checker can confirm that
// |r(t)|^2 depends on moduli alone; they default to 0.
struct EnvironmentParticle {
    double alpha_sq;
    double g;
    double phase_alpha;
    double phase_beta;

    EnvironmentParticle(double alpha_sq_, double g_,
                        double phase_alpha_ = 0.0, double phase_beta_ = 0.0)
        : alpha_sq(alpha_sq_), g(g_),
          phase_alpha(phase_alpha_), phase_beta(phase_beta_) {
        if (!(alpha_sq >= 0.0 && alpha_sq <= 1.0)) {
            throw std::invalid_argument(
                "EnvironmentParticle: alpha_sq = " + std::to_string(alpha_sq_) +
                " outside [0, 1]");
        }
        if (!(g > 0.0)) {
            throw std::invalid_argument(
                "EnvironmentParticle: coupling g = " + std::to_string(g_) +
                " must be > 0");
        }
    }

    double beta_sq() const { return 1.0 - alpha_sq; }

    // Complex single-particle amplitudes (moduli from alpha_sq, carried phases).
    Complex alpha() const {
        return std::polar(std::sqrt(alpha_sq), phase_alpha);
    }
    Complex beta() const {
        return std::polar(std::sqrt(beta_sq()), phase_beta);
    }
};

// ------------------------- EnvironmentRealization ----------------------------

// A named contiguous block of particles of one kind.
struct GroupBoundary {
    std::string kind;
    std::size_t count = 0;
};

// The concrete particle list the decoherence products run over. Optional
// group boundaries record kinds for non-homogeneous environments; when
// present they must partition the particle list exactly.
struct EnvironmentRealization {
    std::vector<EnvironmentParticle> particles;
    std::vector<GroupBoundary> groups;  // empty means ungrouped

    explicit EnvironmentRealization(std::vector<EnvironmentParticle> particles_,
                                    std::vector<GroupBoundary> groups_ = {})
        : particles(std::move(particles_)), groups(std::move(groups_)) {
        if (particles.empty()) {
            throw std::invalid_argument("EnvironmentRealization: empty particle list");
        }
        if (!groups.empty()) {
            std::size_t total = 0;
            for (const auto& grp : groups) total += grp.count;
            if (total != particles.size()) {
                throw std::invalid_argument(
                    "EnvironmentRealization: group counts sum to " +
                    std::to_string(total) + " but " +
                    std::to_string(particles.size()) + " particles present");
            }
        }
    }

    std::size_t size() const { return particles.size(); }
};

// ------------------------------ ObservableSpec -------------------------------

// Coefficients s_{ss'} of a system observable O_S = sum s_{ss'} |s><s'|,
// with s, s' in {up, down}. Environment factors are the identity.
struct ObservableSpec {
    Complex s_uu;
    Complex s_ud;  // coefficient of |up><down|
    Complex s_du;  // coefficient of |down><up|
    Complex s_dd;

    bool is_hermitian(double tol = kNormTol) const {
        return std::abs(s_ud - std::conj(s_du)) <= tol &&
               std::abs(s_uu.imag()) <= tol && std::abs(s_dd.imag()) <= tol;
    }

    static ObservableSpec identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static ObservableSpec sigma_x() { return {0.0, 1.0, 1.0, 0.0}; }
    static ObservableSpec sigma_z() { return {1.0, 0.0, 0.0, -1.0}; }
};

// -------------------------------- TimeGrid -----------------------------------

// Uniformly spaced sample times on [t_start, t_end], at least 2 samples.
struct TimeGrid {
    double t_start;
    double t_end;
    std::size_t samples;

    TimeGrid(double t_start_, double t_end_, std::size_t samples_)
        : t_start(t_start_), t_end(t_end_), samples(samples_) {
        if (!(t_start >= 0.0)) {
            throw std::invalid_argument("TimeGrid: t_start must be >= 0");
        }
        if (!(t_end > t_start)) {
            throw std::invalid_argument("TimeGrid: t_end must exceed t_start");
        }
        if (samples < 2) {
            throw std::invalid_argument("TimeGrid: at least 2 samples required");
        }
    }

    double spacing() const {
        return (t_end - t_start) / static_cast<double>(samples - 1);
    }
    double time_at(std::size_t k) const {
        return t_start + static_cast<double>(k) * spacing();
    }
};

// ------------------------------- TimeSeries ----------------------------------

// Sampled decoherence data on a grid. r_values may be empty when only
// |r(t)|^2 was requested. log_abs_r2, when non-empty, holds sum(log f_i)
// per point; the engine fills it only when the direct product left the
// normal double range (see engine.hpp).
struct TimeSeries {
    TimeGrid grid;
    std::vector<Complex> r_values;
    std::vector<double> abs_r2;
    std::vector<double> log_abs_r2;

    TimeSeries(TimeGrid grid_, std::vector<Complex> r_values_,
               std::vector<double> abs_r2_, std::vector<double> log_abs_r2_ = {})
        : grid(grid_), r_values(std::move(r_values_)),
          abs_r2(std::move(abs_r2_)), log_abs_r2(std::move(log_abs_r2_)) {
        if (abs_r2.size() != grid.samples) {
            throw std::invalid_argument("TimeSeries: abs_r2 length != grid samples");
        }
        if (!r_values.empty() && r_values.size() != grid.samples) {
            throw std::invalid_argument("TimeSeries: r_values length != grid samples");
        }
        if (!log_abs_r2.empty() && log_abs_r2.size() != grid.samples) {
            throw std::invalid_argument("TimeSeries: log_abs_r2 length != grid samples");
        }
        for (std::size_t k = 0; k < abs_r2.size(); ++k) {
            if (!(abs_r2[k] >= 0.0 && abs_r2[k] <= 1.0 + kNormTol)) {
                throw std::invalid_argument(
                    "TimeSeries: abs_r2[" + std::to_string(k) + "] outside [0, 1]");
            }
            if (!r_values.empty() &&
                std::abs(abs_r2[k] - std::norm(r_values[k])) > kNormTol) {
                throw std::invalid_argument(
                    "TimeSeries: abs_r2[" + std::to_string(k) +
                    "] inconsistent with |r|^2");
            }
        }
    }
};

}  // namespace spinbath
