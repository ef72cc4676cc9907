#pragma once

#include <vector>

#include "dynfeat/attributes.hpp"
#include "dynfeat/walk_operator.hpp"

namespace dynfeat {

struct SecondEigenpair {
  std::vector<double> vector;  // unit-norm left eigenvector of M
  double eigenvalue = 0.0;
  double residual = 0.0;       // |wM - lambda w|_2
  bool degenerate = false;     // the eigenvalue magnitude is shared with another eigenvector
  int iterations = 0;
};

/// Left eigenvector of M for the eigenvalue of second-largest magnitude.
///
/// Works on the symmetric similarity S = D^-1/2 W D^-1/2, whose top eigenvector
/// sqrt(d)/|sqrt(d)| is deflated explicitly. Iterating with S^2 makes +mu and
/// -mu equally attracting, so bipartite spectra converge too; the pair is then
/// separated as mu x +/- S x. The result maps back through w = D^1/2 y.
/// The sign is fixed so that the entry of largest magnitude is positive.
///
/// Throws ArgumentError for n < 2 and ConvergenceError (with the last
/// residual) when |wM - lambda w| <= tol is not reached within max_iter.
SecondEigenpair second_left_eigenvector(const WalkOperator& walk, double tol = 1e-10,
                                        int max_iter = 10000);

}  // namespace dynfeat
