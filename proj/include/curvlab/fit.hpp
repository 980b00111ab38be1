#pragma once

#include <span>
#include <string>
#include <vector>

namespace curvlab {

// Least-squares expansion of a target tensor in a finite basis, all tensors
// flattened to component vectors.
struct FitResult {
    std::vector<double> coefficients;   // one per basis element, in input order
    std::vector<std::string> basis_labels;
    double residual = 0.0;              // |target - sum c_i b_i| / max(|target|, 1e-30)
    int rank = 0;                       // numerical rank of the basis Gram matrix
    bool underdetermined = false;       // rank < basis size; coefficients are min-norm
};

// Solve min |target - sum c_i basis_i| by the normal equations on
// unit-normalized columns. Columns with negligible norm get coefficient zero.
// Gram eigenvalues below 1e-10 x largest are treated as zero, and the
// minimum-norm solution is returned in that case.
FitResult fit_in_span(std::span<const double> target,
                      const std::vector<std::span<const double>>& basis,
                      const std::vector<std::string>& labels);

} // namespace curvlab
