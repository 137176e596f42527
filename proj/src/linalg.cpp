#include "linalg.hpp"

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <string>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace shiftlab::detail {

using Complex = std::complex<double>;

LeftSingular left_singular(const Eigen::MatrixXcd& a, bool full) {
  const lapack_int m = static_cast<lapack_int>(a.rows());
  const lapack_int n = static_cast<lapack_int>(a.cols());
  const lapack_int k = std::min(m, n);
  LeftSingular out;
  if (k == 0) {
    out.u = full ? Eigen::MatrixXcd::Identity(m, m) : Eigen::MatrixXcd(m, 0);
    return out;
  }
  Eigen::MatrixXcd work = a;
  out.sigma.resize(k);
  out.u.resize(m, full ? m : k);
  Eigen::MatrixXcd vt(full ? n : k, n);
  const lapack_int info =
      LAPACKE_zgesdd(LAPACK_COL_MAJOR, full ? 'A' : 'S', m, n, work.data(), m, out.sigma.data(), out.u.data(), m,
                     vt.data(), static_cast<lapack_int>(vt.rows()));
  if (info != 0) throw std::runtime_error("zgesdd failed with info " + std::to_string(info));
  return out;
}

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& a) {
  const lapack_int m = static_cast<lapack_int>(a.rows());
  const lapack_int n = static_cast<lapack_int>(a.cols());
  Eigen::VectorXd sigma(std::min(m, n));
  if (sigma.size() == 0) return sigma;
  Eigen::MatrixXcd work = a;
  Complex dummy;
  const lapack_int info =
      LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', m, n, work.data(), m, sigma.data(), &dummy, 1, &dummy, 1);
  if (info != 0) throw std::runtime_error("zgesdd failed with info " + std::to_string(info));
  return sigma;
}

HermitianEigen hermitian_eigen(const Eigen::MatrixXcd& a, bool vectors) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  HermitianEigen out;
  out.values.resize(n);
  if (n == 0) return out;
  Eigen::MatrixXcd work = a;
  const lapack_int info =
      LAPACKE_zheevd(LAPACK_COL_MAJOR, vectors ? 'V' : 'N', 'L', n, work.data(), n, out.values.data());
  if (info != 0) throw std::runtime_error("zheevd failed with info " + std::to_string(info));
  if (vectors) out.vectors = std::move(work);
  return out;
}

}  // namespace shiftlab::detail
