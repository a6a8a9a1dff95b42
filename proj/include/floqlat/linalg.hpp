#pragma once

#include <complex>

#include <Eigen/Dense>

namespace floqlat {

using Complex = std::complex<double>;
using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;

// Thin wrappers over LAPACK. Eigenvalues of the symmetric/Hermitian
// solvers come back ascending with orthonormal eigenvectors in columns.
struct SymmetricEigen {
  RealVector values;
  RealMatrix vectors;
};

struct HermitianEigen {
  RealVector values;
  ComplexMatrix vectors;
};

SymmetricEigen eigh(const RealMatrix& a);
HermitianEigen eigh(const ComplexMatrix& a);
RealVector eigvalsh(const RealMatrix& a);
RealVector eigvalsh(const ComplexMatrix& a);

// General (non-Hermitian) eigenvalues, unordered.
ComplexVector eigvals(const ComplexMatrix& a);

// exp(-i t H) for Hermitian H, through its spectral decomposition.
ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t);

double hermiticity_error(const ComplexMatrix& a);
double unitarity_error(const ComplexMatrix& u);

}  // namespace floqlat
