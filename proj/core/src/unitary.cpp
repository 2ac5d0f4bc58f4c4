#include "anyons/unitary.hpp"

#include <limits>

namespace anyons {

double Unitary::unitarity_error() const {
  if (matrix.rows() != matrix.cols())
    return std::numeric_limits<double>::infinity();
  if (matrix.size() == 0) return 0.0;
  Eigen::MatrixXcd g = matrix.adjoint() * matrix;
  return (g - Eigen::MatrixXcd::Identity(g.rows(), g.cols()))
      .cwiseAbs()
      .maxCoeff();
}

Unitary Unitary::adjoint() const {
  return Unitary{matrix.adjoint(), codomain, domain};
}

Unitary compose(const Unitary& b, const Unitary& a) {
  if (!(a.codomain == b.domain))
    throw Error("basis mismatch in composition: the first map lands in a "
                "different basis than the second map expects");
  if (a.matrix.rows() != b.matrix.cols())
    throw Error("dimension mismatch in composition: " +
                std::to_string(b.matrix.cols()) + " vs " +
                std::to_string(a.matrix.rows()));
  return Unitary{b.matrix * a.matrix, a.domain, b.codomain};
}

Unitary identity_on(const AnyonModel& model, const BasisRef& basis) {
  long long d = static_cast<long long>(
      enumerate_basis(model, basis.surface, basis.shape).size());
  return Unitary{Eigen::MatrixXcd::Identity(d, d), basis, basis};
}

double max_deviation(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                     bool allow_phase) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return std::numeric_limits<double>::infinity();
  if (a.size() == 0) return 0.0;
  cx phase = 1.0;
  if (allow_phase) {
    Eigen::Index r = 0, c = 0;
    a.cwiseAbs().maxCoeff(&r, &c);
    if (std::abs(a(r, c)) > 0 && std::abs(b(r, c)) > 0)
      phase = (a(r, c) / b(r, c)) / std::abs(a(r, c) / b(r, c));
  }
  return (a - phase * b).cwiseAbs().maxCoeff();
}

}  // namespace anyons
