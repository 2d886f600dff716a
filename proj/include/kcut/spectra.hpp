#ifndef KCUT_SPECTRA_HPP
#define KCUT_SPECTRA_HPP

#include <vector>

#include "kcut/graph.hpp"

namespace kcut {

// Dense square matrix, row-major.
class SquareMatrix {
public:
    explicit SquareMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}
    int size() const { return n_; }
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

private:
    int n_;
    std::vector<double> a_;
};

SquareMatrix adjacency_matrix(const Graph& g);
SquareMatrix laplacian_matrix(const Graph& g); // D - A, weighted degrees on the diagonal

struct EigenResult {
    std::vector<double> values; // ascending
    double off_residual = 0.0;  // achieved off-diagonal Frobenius norm
    int sweeps = 0;
};

// Full spectrum of a symmetric matrix by cyclic Jacobi rotations in a fixed
// serial order. Iteration stops once the off-diagonal Frobenius norm drops
// to 1e-12 * max(1, ||M||_F). Rejects non-finite entries and matrices whose
// asymmetry exceeds the same relative tolerance.
EigenResult jacobi_eigenvalues(const SquareMatrix& m);

// Ascending eigenvalues only.
std::vector<double> symmetric_eigenvalues(const SquareMatrix& m);

// The three spectral quantities the bounds consume, for one graph.
struct SpectralSummary {
    double mu_min = 0.0;     // smallest adjacency eigenvalue
    double mu_max = 0.0;     // largest adjacency eigenvalue
    double lambda_max = 0.0; // largest Laplacian eigenvalue
    double tol = 0.0;        // a posteriori off-diagonal residual bound
};

SpectralSummary spectral_summary(const Graph& g);

} // namespace kcut

#endif
