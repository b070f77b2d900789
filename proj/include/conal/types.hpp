#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace conal {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using Complex = std::complex<double>;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input does not satisfy a documented precondition (bad dimensions,
/// non-PSD values, mismatched grids, ...).
class InvalidInputError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// A pole sits (numerically) on the unit circle.
class PoleOnCircleError : public Error {
public:
    using Error::Error;
};

/// A spectral-factor root sits within tolerance of the unit circle.
class BoundaryRootError : public Error {
public:
    using Error::Error;
};

/// Rank-deficient spectrum: no algorithm provided, refuse instead of guessing.
class UnsupportedRankError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

class UnstableSystemError : public Error {
public:
    using Error::Error;
};

}  // namespace conal
