#pragma once

#include <Eigen/Dense>
#include <complex>

namespace negcurv {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

/// C^n -> R^2n with interleaved coordinates (x1, y1, ..., xn, yn),
/// z_k = x_k + i y_k.
RVector realify(const CVector& v);
CVector complexify(const RVector& x);

/// The complex structure J acting on realified vectors (multiplication by i).
RVector complex_structure(const RVector& x);

}  // namespace negcurv
