#pragma once

#include <numbers>
#include <vector>

#include "conal/laurent.hpp"
#include "conal/types.hpp"

namespace conal {

struct FrequencyGrid {
    int n = 4096;
    double theta(int k) const { return -std::numbers::pi_v<double> + 2.0 * std::numbers::pi_v<double> * k / n; }
};

/// Real rational matrix G(z) = C (zI - A)^{-1} B + D.
struct StateSpace {
    Mat A, B, C, D;

    StateSpace() : A(0, 0), B(0, 1), C(1, 0), D(Mat::Zero(1, 1)) {}
    StateSpace(Mat a, Mat b, Mat c, Mat d);

    int state_dim() const { return static_cast<int>(A.rows()); }
    int inputs() const { return static_cast<int>(D.cols()); }
    int outputs() const { return static_cast<int>(D.rows()); }

    static StateSpace constant(const Mat& d);
    /// Controllable canonical realization of num(z)/den(z); requires
    /// deg num <= deg den. A numerically constant ratio collapses to a
    /// zero-state system.
    static StateSpace from_rational(const Polynomial& num, const Polynomial& den);
};

CMat evaluate(const StateSpace& g, Complex z);
std::vector<CMat> sample(const StateSpace& g, const FrequencyGrid& grid);

StateSpace series(const StateSpace& g1, const StateSpace& g2);  // G1 * G2
StateSpace add(const StateSpace& g1, const StateSpace& g2);
StateSpace inverse(const StateSpace& g);

std::vector<Complex> poles(const StateSpace& g);
std::vector<Complex> zeros(const StateSpace& g);

double spectral_radius(const StateSpace& g);
bool is_stable(const StateSpace& g, double margin = 1e-9);

}  // namespace conal
