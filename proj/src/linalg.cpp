#include "floqlat/linalg.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "floqlat/error.hpp"

namespace floqlat {
namespace {

lapack_complex_double* as_lapack(Complex* p) { return reinterpret_cast<lapack_complex_double*>(p); }

void check_square(Eigen::Index rows, Eigen::Index cols, const char* what) {
  if (rows != cols) {
    throw Error(ErrorCode::kDim, std::string(what) + ": matrix is not square");
  }
}

void check_info(lapack_int info, const char* routine) {
  if (info != 0) {
    throw Error(ErrorCode::kDomain, std::string(routine) + " failed, info=" + std::to_string(info));
  }
}

}  // namespace

SymmetricEigen eigh(const RealMatrix& a) {
  check_square(a.rows(), a.cols(), "eigh");
  SymmetricEigen out{RealVector(a.rows()), a};
  if (a.rows() == 0) return out;
  const auto n = static_cast<lapack_int>(a.rows());
  check_info(LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, out.vectors.data(), n, out.values.data()),
             "dsyevd");
  return out;
}

HermitianEigen eigh(const ComplexMatrix& a) {
  check_square(a.rows(), a.cols(), "eigh");
  HermitianEigen out{RealVector(a.rows()), a};
  if (a.rows() == 0) return out;
  const auto n = static_cast<lapack_int>(a.rows());
  check_info(LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n, as_lapack(out.vectors.data()), n,
                            out.values.data()),
             "zheevd");
  return out;
}

RealVector eigvalsh(const RealMatrix& a) {
  check_square(a.rows(), a.cols(), "eigvalsh");
  RealMatrix work = a;
  RealVector values(a.rows());
  if (a.rows() == 0) return values;
  const auto n = static_cast<lapack_int>(a.rows());
  check_info(LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'L', n, work.data(), n, values.data()), "dsyevd");
  return values;
}

RealVector eigvalsh(const ComplexMatrix& a) {
  check_square(a.rows(), a.cols(), "eigvalsh");
  ComplexMatrix work = a;
  RealVector values(a.rows());
  if (a.rows() == 0) return values;
  const auto n = static_cast<lapack_int>(a.rows());
  check_info(LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', n, as_lapack(work.data()), n, values.data()),
             "zheevd");
  return values;
}

ComplexVector eigvals(const ComplexMatrix& a) {
  check_square(a.rows(), a.cols(), "eigvals");
  ComplexMatrix work = a;
  ComplexVector values(a.rows());
  if (a.rows() == 0) return values;
  const auto n = static_cast<lapack_int>(a.rows());
  Complex dummy;
  check_info(LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n, as_lapack(work.data()), n,
                           as_lapack(values.data()), as_lapack(&dummy), 1, as_lapack(&dummy), 1),
             "zgeev");
  return values;
}

ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t) {
  const HermitianEigen es = eigh(h);
  ComplexVector phases(es.values.size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) {
    phases[i] = std::exp(Complex(0.0, -t * es.values[i]));
  }
  return es.vectors * phases.asDiagonal() * es.vectors.adjoint();
}

double hermiticity_error(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) return INFINITY;
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_error(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) return INFINITY;
  if (u.size() == 0) return 0.0;
  return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

}  // namespace floqlat
