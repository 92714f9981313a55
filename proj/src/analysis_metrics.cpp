#include "qlps/analysis_metrics.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "qlps/errors.hpp"

namespace qlps {

namespace {

Mat normalized_copy(const Mat& rho) {
    const double tr = rho.trace().real();
    if (!(tr > 0)) throw ArgumentError("state has nonpositive trace");
    return rho / tr;
}

Mat psd_sqrt(const Mat& m, double tol) {
    Eigen::SelfAdjointEigenSolver<Mat> es(m);
    if (es.info() != Eigen::Success) throw ArgumentError("eigendecomposition failed");
    Eigen::VectorXd lambda = es.eigenvalues();
    for (long i = 0; i < lambda.size(); ++i) {
        if (lambda(i) < -tol) throw ArgumentError("matrix is not positive semidefinite");
        lambda(i) = std::sqrt(std::max(0.0, lambda(i)));
    }
    return es.eigenvectors() * lambda.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

double fidelity(const Mat& rho, const Mat& sigma) {
    if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
        throw ArgumentError("fidelity: dimension mismatch");
    const Mat a = normalized_copy(rho);
    const Mat b = normalized_copy(sigma);
    const double tol = 1e-7;
    const Mat sa = psd_sqrt(a, tol);
    Eigen::SelfAdjointEigenSolver<Mat> es(sa * b * sa);
    if (es.info() != Eigen::Success) throw ArgumentError("eigendecomposition failed");
    double f = 0;
    for (long i = 0; i < es.eigenvalues().size(); ++i)
        f += std::sqrt(std::max(0.0, es.eigenvalues()(i)));
    return std::min(f, 1.0);
}

double distance(const Mat& rho, const Mat& sigma) {
    if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
        throw ArgumentError("distance: dimension mismatch");
    return (normalized_copy(rho) - normalized_copy(sigma)).squaredNorm();
}

CircularStats circular_stats(std::span<const double> bins, SigmaDefinition def) {
    const std::size_t nbins = bins.size();
    if (nbins == 0) throw ArgumentError("empty histogram");
    double total = 0;
    for (double b : bins) {
        if (b < -1e-12) throw ArgumentError("negative histogram bin");
        total += b;
    }
    if (!(total > 0)) throw ArgumentError("histogram has no mass");
    cplx z = 0;
    for (std::size_t j = 0; j < nbins; ++j)
        z += (bins[j] / total) * std::exp(cplx(0, 2.0 * kPi * static_cast<double>(j) / nbins));
    CircularStats out;
    out.resultant = std::abs(z);
    if (out.resultant < 1e-12) throw UndefinedMeanError("circular mean undefined: zero resultant");
    double mean = std::arg(z) / (2.0 * kPi);
    out.mean = mean - std::floor(mean);
    const double r = std::min(out.resultant, 1.0);
    out.sigma = def == SigmaDefinition::CircularStd ? std::sqrt(-2.0 * std::log(r)) / (2.0 * kPi)
                                                    : std::sqrt(2.0 * (1.0 - r)) / (2.0 * kPi);
    return out;
}

double circular_distance(double a, double b) {
    double d = std::abs(a - b);
    d -= std::floor(d);
    return std::min(d, 1.0 - d);
}

double n_min(int m, double sigma, double lost_info) {
    if (m < 1) throw ArgumentError("precision must be at least one digit");
    if (lost_info >= 1.0) throw InformationLostError("all information lost: N_min undefined");
    return std::ldexp(1.0, 2 * m) * sigma * sigma / (1.0 - lost_info);
}

TrialBound kitaev_trial_bound(double epsilon, double d, double lost_info) {
    if (!(epsilon > 0 && epsilon < 1)) throw ArgumentError("epsilon must be in (0,1)");
    TrialBound out;
    const double fail_threshold = (std::sqrt(2.0) - 1.0) / 2.0;
    if (d >= fail_threshold) {
        out.failed = true;
        out.n = std::numeric_limits<double>::infinity();
        return out;
    }
    const double a = (2.0 - std::sqrt(2.0)) / 4.0;
    out.n = std::log(2.0 / epsilon) / (2.0 * (1.0 - lost_info) * (a * a - d * d / 2.0));
    return out;
}

double success_probability(std::span<const double> bins, double true_phase, int m) {
    if (bins.size() != (1ull << m)) throw ArgumentError("histogram size does not match precision");
    double total = 0;
    for (double b : bins) total += b;
    if (!(total > 0)) throw ArgumentError("histogram has no mass");
    double phase = true_phase - std::floor(true_phase);
    const long lower = static_cast<long>(std::floor(phase * std::ldexp(1.0, m)));
    const long upper = (lower + 1) & ((1l << m) - 1);
    return (bins[lower] + bins[upper]) / total;
}

std::pair<double, double> majority_vote_update(double p0, double p1, int n) {
    if (std::abs(p0 + p1 - 1.0) > 1e-9) throw ArgumentError("outcome probabilities must sum to 1");
    if (n < 1 || n % 2 == 0) throw ArgumentError("repetition count must be odd");
    if (n == 1) return {p0, p1};
    auto tail = [n](double win, double lose) {
        // Probability that `lose` occurs at most floor(n/2) times.
        double sum = 0, comb = 1;
        for (int k = 0; k <= n / 2; ++k) {
            sum += comb * std::pow(lose, k) * std::pow(win, n - k);
            comb = comb * (n - k) / (k + 1);
        }
        return sum;
    };
    const double q0 = tail(p0, p1);
    const double q1 = tail(p1, p0);
    const double norm = q0 + q1;
    return {q0 / norm, q1 / norm};
}

ScalingFit fit_error_scaling(std::span<const std::pair<double, double>> points) {
    std::vector<std::pair<double, double>> logs;
    ScalingFit fit;
    for (const auto& [p, perr] : points) {
        if (!(p > 0)) throw ArgumentError("noise strength must be positive");
        if (!(perr > 0)) {
            ++fit.dropped;
            continue;
        }
        logs.emplace_back(std::log(p), std::log(perr));
    }
    if (logs.size() < 4) throw ArgumentError("scaling fit needs at least four usable points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : logs) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(logs.size());
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / n;
    fit.exponent = slope;
    fit.coefficient = std::exp(intercept);
    double ss = 0;
    for (const auto& [x, y] : logs) {
        const double r = y - (slope * x + intercept);
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

}  // namespace qlps
