#pragma once

#include <vector>

#include "conal/spectrum.hpp"
#include "conal/state_space.hpp"

namespace conal {

enum class NormMethod { Bisection, Grid };

struct NormResult {
    double value = 0.0;
    double peak_frequency = 0.0;
    NormMethod method = NormMethod::Grid;
    double lo = 0.0;  // certified interval [lo, hi]
    double hi = 0.0;
};

/// Largest singular value over the grid; a lower bound on the L-infinity norm.
NormResult linf_norm_grid(const StateSpace& g, const FrequencyGrid& grid);
NormResult linf_norm_grid(const std::vector<CMat>& samples, const FrequencyGrid& grid);

/// H-infinity norm of a stable system via bisection on gamma, deciding each
/// level with the unit-modulus eigenvalues of the discrete bounded-real
/// symplectic pencil and refining the lower bound at their angles.
NormResult hinf_norm(const StateSpace& g, double tol = 1e-8);

/// Squared H2 norm from the Stein equation P = A P A^T + B B^T.
double h2_norm_sq(const StateSpace& g);

/// Solve P = A P A^T + Q by the vectorized direct method.
Mat stein_solve(const Mat& A, const Mat& Q);

}  // namespace conal
