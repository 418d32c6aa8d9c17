// spectrum.hpp
// Full eigenvalue spectrum of symmetric correlation matrices via cyclic
// Jacobi rotations. Matrices here are small (N <= ~20), where Jacobi is
// unconditionally stable and needs no external solver.

#pragma once

#include <vector>

#include "plunge/corrnet.hpp"
#include "plunge/matrix.hpp"

namespace plunge {

struct SpectrumResult {
    std::vector<double> eigenvalues;  // sorted descending
    double lecm = 0.0;                // largest eigenvalue
    double second = 0.0;              // NaN when N < 2
    double third = 0.0;               // NaN when N < 3
    int iterations = 0;               // Jacobi sweeps used
};

// Requires a square matrix, symmetric within 1e-12. Converges when the
// off-diagonal Frobenius norm drops below 1e-12; more than 100 sweeps is
// a numerical error. Each eigenvalue is accurate to 1e-10 absolute.
SpectrumResult eigen_spectrum(const Matrix& symmetric);
SpectrumResult eigen_spectrum(const CorrelationMatrix& c);

}  // namespace plunge
