#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "anyons/common.hpp"
#include "anyons/fusion.hpp"

namespace anyons {

// Identifies the fusion basis a matrix index runs over: the labeled surface
// together with the pair-of-pants decomposition whose trees order the basis.
struct BasisRef {
  StandardSurface surface;
  TreeShape shape;

  bool operator==(const BasisRef&) const = default;
};

// A linear map between two fusion bases.  Rows run over the codomain basis,
// columns over the domain basis, both in enumeration order.
struct Unitary {
  Eigen::MatrixXcd matrix;
  BasisRef domain;
  BasisRef codomain;

  // Largest deviation of matrix^dagger * matrix from the identity.
  double unitarity_error() const;

  Unitary adjoint() const;
};

// Matrix product b * a, checking that a's codomain matches b's domain.
Unitary compose(const Unitary& b, const Unitary& a);

Unitary identity_on(const AnyonModel& model, const BasisRef& basis);

// Largest entry-wise deviation |a - b| after aligning the global phase of b
// to a (using the largest-magnitude entry of a as reference).  Infinity if
// shapes differ.  Set allow_phase=false to compare entries directly.
double max_deviation(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                     bool allow_phase);

}  // namespace anyons
