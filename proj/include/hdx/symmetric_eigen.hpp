#pragma once

#include <span>
#include <vector>

namespace hdx {

struct EigenResult {
    std::vector<double> values;  // descending
    double off_diagonal_norm = 0.0;  // Frobenius norm left off the diagonal
    int sweeps = 0;
};

/// Eigenvalues of a dense symmetric n x n matrix (row-major) by the cyclic
/// Jacobi method. Sweeps until the off-diagonal Frobenius norm falls to
/// `tolerance` times a small safety factor or stops decreasing; by Weyl's
/// inequality every returned value is then within off_diagonal_norm of an
/// exact eigenvalue. Throws Error if the norm is still above `tolerance`.
EigenResult symmetric_eigenvalues(std::span<const double> matrix, int n,
                                  double tolerance = 1e-9);

}  // namespace hdx
