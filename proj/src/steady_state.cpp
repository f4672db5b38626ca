#include "ness/steady_state.hpp"

#include "ness/errors.hpp"
#include "ness/numeric.hpp"
#include "ness/spin_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <sstream>
#include <string>

namespace ness {

namespace {

using std::complex;
constexpr complex<double> kI{0.0, 1.0};

std::string describe(const DriveParams& p) {
    std::ostringstream os;
    os << "n_atoms=" << p.n_atoms << ", omega_s=" << p.omega_s << ", phase=" << p.phase;
    return os.str();
}

// (-i)^delta * e^{i delta phi}. The quarter-turn factor is taken from an
// exact cycle so phi = 0 yields exactly real or exactly imaginary entries.
complex<double> coherence_phase(int delta, double phi) {
    static const complex<double> cycle[4] = {{1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};
    const complex<double> quarter = cycle[((delta % 4) + 4) % 4];
    if (phi == 0.0) return quarter;
    return quarter * std::polar(1.0, delta * phi);
}

// Shared tail sums of the ladder expansion. Every element (i, j) of the
// unnormalised steady state is
//   log |rho~_{ij}| = a[i] + a[j] + (i + j) ln G + h[max(i, j)]
// where a[i] = (lfact(N-i) - lfact(i)) / 2 and h[k] is the log-sum-exp of
//   g(r) = -2 r ln G + lfact(r) - lfact(N - r)
// over r = k..N. The rearrangement works because both ladder factors of a
// term depend on i, j, and the summation index only through r = i + m.
struct LogTables {
    std::vector<double> a;
    std::vector<double> h;
    double ln_g = 0.0;
    double log_trace = 0.0;
};

LogTables build_log_tables(int n_atoms, double coupling) {
    const int n = n_atoms;
    LogTables t;
    t.ln_g = std::log(coupling);
    t.a.resize(n + 1);
    t.h.resize(n + 1);
    for (int i = 0; i <= n; ++i)
        t.a[i] = 0.5 * (log_factorial(n - i) - log_factorial(i));
    auto g = [&](int r) { return -2.0 * r * t.ln_g + log_factorial(r) - log_factorial(n - r); };
    t.h[n] = g(n);
    for (int k = n - 1; k >= 0; --k)
        t.h[k] = log_add_exp(g(k), t.h[k + 1]);
    double log_trace = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= n; ++i)
        log_trace = log_add_exp(log_trace, 2.0 * t.a[i] + 2.0 * i * t.ln_g + t.h[i]);
    t.log_trace = log_trace;
    return t;
}

// Turn log magnitudes of the lower triangle into the full normalised state.
// log_mag(i, j) is only evaluated for i >= j; the upper triangle is the
// exact conjugate mirror, so the result is Hermitian to the bit.
DensityMatrix assemble_state(int n_atoms, double phi, const DriveParams& params,
                             const std::function<double(int, int)>& log_mag) {
    const int dim = n_atoms + 1;
    Eigen::MatrixXcd rho(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j <= i; ++j) {
            const double lm = log_mag(i, j);
            if (!std::isfinite(lm) && lm != -std::numeric_limits<double>::infinity())
                throw numeric_range_error("steady-state element (" + std::to_string(i) + "," +
                                          std::to_string(j) +
                                          ") is not finite for " + describe(params));
            const double mag = std::exp(lm);
            const complex<double> value = coherence_phase(i - j, phi) * mag;
            rho(i, j) = value;
            if (i != j) rho(j, i) = std::conj(value);
        }
    }
    const double trace = rho.real().diagonal().sum();
    if (!std::isfinite(trace) || trace <= 0.0)
        throw numeric_range_error("steady-state trace is not positive for " + describe(params));
    rho /= trace;
    return DensityMatrix(rho);
}

DensityMatrix ground_state(int n_atoms) {
    return DensityMatrix::pure_basis_state(n_atoms + 1, 0);
}

} // namespace

void DriveParams::validate() const {
    if (n_atoms < 1)
        throw domain_error("n_atoms must be at least 1, got " + std::to_string(n_atoms));
    if (!std::isfinite(omega_s) || omega_s < 0.0)
        throw domain_error("omega_s must be finite and non-negative, got " +
                           std::to_string(omega_s));
    if (!std::isfinite(phase)) throw domain_error("phase must be finite");
}

DensityMatrix exact_steady_state(const DriveParams& params) {
    params.validate();
    if (params.omega_s == 0.0) return ground_state(params.n_atoms);
    const LogTables t = build_log_tables(params.n_atoms, params.coupling());
    auto log_mag = [&](int i, int j) {
        return t.a[i] + t.a[j] + (i + j) * t.ln_g + t.h[i] - t.log_trace;
    };
    return assemble_state(params.n_atoms, params.phase, params, log_mag);
}

DensityMatrix phase_averaged_steady_state(const DriveParams& params) {
    params.validate();
    const int dim = params.n_atoms + 1;
    if (params.omega_s == 0.0) return ground_state(params.n_atoms);
    const LogTables t = build_log_tables(params.n_atoms, params.coupling());
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    double trace = 0.0;
    for (int i = 0; i < dim; ++i) {
        const double p = std::exp(2.0 * t.a[i] + 2.0 * i * t.ln_g + t.h[i] - t.log_trace);
        if (!std::isfinite(p))
            throw numeric_range_error("phase-averaged population " + std::to_string(i) +
                                      " is not finite for " + describe(params));
        rho(i, i) = p;
        trace += p;
    }
    rho /= trace;
    return DensityMatrix(rho);
}

namespace detail {

DensityMatrix exact_steady_state_direct(const DriveParams& params) {
    params.validate();
    const int n = params.n_atoms;
    if (params.omega_s == 0.0) return ground_state(n);
    const double ln_g = std::log(params.coupling());
    const int dim = n + 1;

    // Per-element ladder sums. All terms are positive, so a two-pass
    // max-shifted accumulation loses no significance.
    Eigen::MatrixXd log_mag = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j <= i; ++j) {
            const int delta = i - j;
            const int m_max = n - i;
            std::vector<double> terms(m_max + 1);
            double peak = -std::numeric_limits<double>::infinity();
            for (int m = 0; m <= m_max; ++m) {
                const LogValue fi = log_ladder_coefficient(n, 2 * i - n, m);
                const LogValue fj = log_ladder_coefficient(n, 2 * j - n, m + delta);
                if (fi.is_zero || fj.is_zero)
                    throw invariant_error("ladder factor vanished inside its valid range");
                terms[m] = -(2.0 * m + delta) * ln_g + fi.log_magnitude + fj.log_magnitude;
                peak = std::max(peak, terms[m]);
            }
            double sum = 0.0;
            for (double term : terms) sum += std::exp(term - peak);
            log_mag(i, j) = peak + std::log(sum);
        }
    }
    double log_trace = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < dim; ++i) log_trace = log_add_exp(log_trace, log_mag(i, i));
    auto entry = [&](int i, int j) { return log_mag(i, j) - log_trace; };
    return assemble_state(n, params.phase, params, entry);
}

} // namespace detail

Eigen::MatrixXcd liouvillian_matrix(const DriveParams& params) {
    params.validate();
    constexpr int kMaxAtoms = 30;
    if (params.n_atoms > kMaxAtoms)
        throw resource_error("dense superoperator is limited to n_atoms <= " +
                             std::to_string(kMaxAtoms) + ", got " +
                             std::to_string(params.n_atoms));
    const int dim = params.n_atoms + 1;
    const DickeBasis basis(params.n_atoms);
    const Eigen::MatrixXcd sp = collective_operator_matrix(basis, CollectiveOperator::raise);
    const Eigen::MatrixXcd sm = collective_operator_matrix(basis, CollectiveOperator::lower);
    const Eigen::MatrixXcd dec = sp * sm; // diagonal
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);

    auto kron = [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
        Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j)
                out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        return out;
    };

    // Column stacking: vec(A rho B) = (B^T kron A) vec(rho).
    const double g = params.coupling();
    const complex<double> cplus = -kI * g * std::polar(1.0, params.phase);
    const complex<double> cminus = -kI * g * std::polar(1.0, -params.phase);
    Eigen::MatrixXcd lv = Eigen::MatrixXcd::Zero(dim * dim, dim * dim);
    lv += cplus * (kron(id, sp) - kron(sp.transpose(), id));
    lv += cminus * (kron(id, sm) - kron(sm.transpose(), id));
    lv -= kron(id, dec) + kron(dec.transpose(), id);
    lv += 2.0 * kron(sp.transpose(), sm);
    return lv;
}

DensityMatrix steady_state_via_nullspace(const DriveParams& params) {
    params.validate();
    if (params.omega_s == 0.0) return ground_state(params.n_atoms);
    const Eigen::MatrixXcd lv = liouvillian_matrix(params);
    const int d2 = static_cast<int>(lv.rows());
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(lv, Eigen::ComputeFullV);
    const Eigen::VectorXd sv = svd.singularValues();
    constexpr double kKernelGap = 1e-6;
    if (d2 >= 2 && sv(d2 - 2) <= kKernelGap)
        throw degeneracy_error("Liouvillian kernel is not one-dimensional for " +
                               describe(params) + " (second singular value " +
                               std::to_string(sv(d2 - 2)) + ")");
    const Eigen::VectorXcd kernel = svd.matrixV().col(d2 - 1);
    const int dim = params.n_atoms + 1;
    Eigen::MatrixXcd x = Eigen::Map<const Eigen::MatrixXcd>(kernel.data(), dim, dim);
    const complex<double> tr = x.trace();
    if (std::abs(tr) < 1e-12)
        throw degeneracy_error("Liouvillian kernel vector is traceless for " + describe(params));
    x *= std::conj(tr) / std::abs(tr); // rotate the arbitrary SVD phase away
    Eigen::MatrixXcd h = 0.5 * (x + x.adjoint());
    h /= h.trace().real();
    DensityMatrix state(h);
    state.require_positive();
    return state;
}

namespace {

// d rho / dt in the Dicke basis. The generator couples only neighbouring
// ladder indices, so one evaluation is O(dim^2). Only the lower triangle is
// computed; the upper one is its conjugate mirror, which keeps the state
// Hermitian to the bit for the whole integration.
void master_rhs(int n, const complex<double>& cplus, const complex<double>& cminus,
                const std::vector<double>& s, const std::vector<double>& dec,
                const Eigen::MatrixXcd& rho, Eigen::MatrixXcd& out) {
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= i; ++j) {
            complex<double> acc = -(dec[i] + dec[j]) * rho(i, j);
            if (i < n && j < n) acc += 2.0 * s[i] * s[j] * rho(i + 1, j + 1);
            if (i >= 1) acc += cplus * (s[i - 1] * rho(i - 1, j));
            if (j < n) acc -= cplus * (s[j] * rho(i, j + 1));
            if (i < n) acc += cminus * (s[i] * rho(i + 1, j));
            if (j >= 1) acc -= cminus * (s[j - 1] * rho(i, j - 1));
            if (i == j) acc = complex<double>(acc.real(), 0.0); // Hermitian flow: diagonal stays real
            out(i, j) = acc;
            if (i != j) out(j, i) = std::conj(acc);
        }
    }
}

} // namespace

double default_time_step(const DriveParams& params) {
    params.validate();
    const int n = params.n_atoms;
    const double g = params.coupling();
    const double heuristic = std::min(0.05, 0.5 / (n * std::max(1.0, g)));
    // Explicit stability: the decay rates i(n-i+1) peak near (n+1)^2/4, and
    // the drive contributes about 2 g n, so keep dt within the classical
    // 4th-order stability disc of that spectral radius.
    const int k = (n + 1) / 2;
    const double decay_peak = static_cast<double>(k) * (n - k + 1);
    const double spectral_radius = 2.0 * decay_peak + 2.0 * g * n;
    const double stability = 2.5 / std::max(spectral_radius, 1.0);
    return std::min(heuristic, stability);
}

Trajectory evolve(const DriveParams& params, const DensityMatrix& initial, double t_final,
                  double dt, int sample_stride) {
    params.validate();
    const int n = params.n_atoms;
    if (initial.dimension() != n + 1)
        throw domain_error("initial state dimension " + std::to_string(initial.dimension()) +
                           " does not match n_atoms=" + std::to_string(n));
    if (!(dt > 0.0) || !std::isfinite(dt)) throw domain_error("dt must be positive and finite");
    if (!(t_final >= 0.0) || !std::isfinite(t_final))
        throw domain_error("t_final must be non-negative and finite");
    if (sample_stride < 1) throw domain_error("sample_stride must be at least 1");

    std::vector<double> s(n), dec(n + 1);
    for (int i = 0; i < n; ++i) s[i] = std::sqrt(static_cast<double>(n - i) * (i + 1));
    for (int i = 0; i <= n; ++i) dec[i] = static_cast<double>(i) * (n - i + 1);
    const double g = params.coupling();
    const complex<double> cplus = -kI * g * std::polar(1.0, params.phase);
    const complex<double> cminus = -kI * g * std::polar(1.0, -params.phase);

    const int dim = n + 1;
    Eigen::MatrixXcd rho = initial.matrix();
    Eigen::MatrixXcd k1(dim, dim), k2(dim, dim), k3(dim, dim), k4(dim, dim), stage(dim, dim);

    auto sample_of = [&](double time) {
        Eigen::MatrixXcd snap = rho;
        snap /= snap.real().diagonal().sum(); // shed integrator trace drift
        return TrajectorySample{time, DensityMatrix(snap)};
    };

    Trajectory traj;
    traj.samples.push_back(sample_of(0.0));
    if (t_final == 0.0) return traj;

    const long total_steps = static_cast<long>(std::ceil(t_final / dt - 1e-12));
    double t = 0.0;
    for (long step = 1; step <= total_steps; ++step) {
        const double h = (step == total_steps) ? (t_final - t) : dt;
        master_rhs(n, cplus, cminus, s, dec, rho, k1);
        stage = rho + (0.5 * h) * k1;
        master_rhs(n, cplus, cminus, s, dec, stage, k2);
        stage = rho + (0.5 * h) * k2;
        master_rhs(n, cplus, cminus, s, dec, stage, k3);
        stage = rho + h * k3;
        master_rhs(n, cplus, cminus, s, dec, stage, k4);
        rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t = (step == total_steps) ? t_final : t + h;

        const double trace = rho.real().diagonal().sum();
        const double peak = rho.cwiseAbs().maxCoeff();
        if (!std::isfinite(trace) || std::abs(trace - 1.0) > 1e-9 || !(peak <= 4.0))
            throw integration_error("master-equation integration diverged at t=" +
                                    std::to_string(t) + " (trace=" + std::to_string(trace) +
                                    ") for " + describe(params) + "; reduce dt");
        if (step == total_steps || step % sample_stride == 0) traj.samples.push_back(sample_of(t));
    }
    return traj;
}

DensityMatrix rotate_drive_phase(const DensityMatrix& rho, double phi) {
    const int dim = rho.dimension();
    Eigen::MatrixXcd out = rho.matrix();
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (i != j) out(i, j) *= std::polar(1.0, phi * (i - j));
    return DensityMatrix(out);
}

} // namespace ness
