#include "plunge/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "plunge/errors.hpp"

namespace plunge {

namespace {

constexpr double symmetry_tolerance = 1e-12;
constexpr double convergence_tolerance = 1e-12;
constexpr int max_sweeps = 100;

double off_diagonal_norm(const Matrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            sum += 2.0 * a(i, j) * a(i, j);
        }
    }
    return std::sqrt(sum);
}

// One Jacobi rotation zeroing a(p, q), p < q. Trace is preserved exactly.
void rotate(Matrix& a, std::size_t p, std::size_t q) {
    const double apq = a(p, q);
    if (apq == 0.0) return;

    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    double t;
    if (std::abs(theta) > 1e100) {
        t = 1.0 / (2.0 * theta);  // theta^2 would overflow; first-order form
    } else {
        t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    a(p, p) -= t * apq;
    a(q, q) += t * apq;
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        if (k == p || k == q) continue;
        const double akp = a(k, p);
        const double akq = a(k, q);
        a(k, p) = c * akp - s * akq;
        a(p, k) = a(k, p);
        a(k, q) = s * akp + c * akq;
        a(q, k) = a(k, q);
    }
}

}  // namespace

SpectrumResult eigen_spectrum(const Matrix& symmetric) {
    const std::size_t n = symmetric.rows();
    if (n == 0 || symmetric.cols() != n) {
        throw InputError("eigen spectrum: matrix must be square and nonempty");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(symmetric(i, j) - symmetric(j, i)) > symmetry_tolerance) {
                throw NumericalError("eigen spectrum: matrix not symmetric at (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }

    Matrix a = symmetric;
    int sweeps = 0;
    while (off_diagonal_norm(a) >= convergence_tolerance) {
        if (sweeps >= max_sweeps) {
            throw NumericalError("eigen spectrum: no convergence within " +
                                 std::to_string(max_sweeps) + " sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                rotate(a, p, q);
            }
        }
        ++sweeps;
    }

    SpectrumResult result;
    result.eigenvalues.reserve(n);
    for (std::size_t i = 0; i < n; ++i) result.eigenvalues.push_back(a(i, i));
    std::sort(result.eigenvalues.begin(), result.eigenvalues.end(), std::greater<>());

    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    result.lecm = result.eigenvalues[0];
    result.second = n > 1 ? result.eigenvalues[1] : nan;
    result.third = n > 2 ? result.eigenvalues[2] : nan;
    result.iterations = sweeps;
    return result;
}

SpectrumResult eigen_spectrum(const CorrelationMatrix& c) {
    return eigen_spectrum(c.values);
}

}  // namespace plunge
