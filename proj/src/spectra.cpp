#include "kcut/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kcut/errors.hpp"

namespace kcut {

SquareMatrix adjacency_matrix(const Graph& g) {
    SquareMatrix a(g.order());
    for (const Edge& e : g.edges()) {
        a(e.u, e.v) = e.w;
        a(e.v, e.u) = e.w;
    }
    return a;
}

SquareMatrix laplacian_matrix(const Graph& g) {
    SquareMatrix l(g.order());
    std::vector<double> deg = g.weighted_degrees();
    for (int i = 0; i < g.order(); ++i) l(i, i) = deg[i];
    for (const Edge& e : g.edges()) {
        l(e.u, e.v) = -e.w;
        l(e.v, e.u) = -e.w;
    }
    return l;
}

namespace {

double frobenius_norm(const SquareMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) s += m(i, j) * m(i, j);
    return std::sqrt(s);
}

double off_diagonal_norm(const SquareMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j)
            if (i != j) s += m(i, j) * m(i, j);
    return std::sqrt(s);
}

} // namespace

EigenResult jacobi_eigenvalues(const SquareMatrix& m) {
    const int n = m.size();
    if (n < 1) throw input_error("eigensolver needs a matrix of order >= 1");

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!std::isfinite(m(i, j))) throw input_error("matrix has a non-finite entry");

    const double scale = std::max(1.0, frobenius_norm(m));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(m(i, j) - m(j, i)) > 1e-12 * scale)
                throw input_error("matrix asymmetry at (" + std::to_string(i) + ", " +
                                  std::to_string(j) + ") exceeds tolerance");

    SquareMatrix a = m;
    const double target = 1e-12 * scale;
    const int max_sweeps = 100;

    EigenResult result;
    result.off_residual = off_diagonal_norm(a);
    while (result.off_residual > target && result.sweeps < max_sweeps) {
        // One cyclic sweep over the strict upper triangle, fixed row order.
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                            : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - s * aiq;
                    a(p, i) = a(i, p);
                    a(i, q) = s * aip + c * aiq;
                    a(q, i) = a(i, q);
                }
            }
        }
        ++result.sweeps;
        result.off_residual = off_diagonal_norm(a);
    }
    if (result.off_residual > target)
        throw numeric_error("Jacobi iteration failed to converge in " +
                            std::to_string(max_sweeps) + " sweeps");

    result.values.resize(n);
    for (int i = 0; i < n; ++i) result.values[i] = a(i, i);
    std::sort(result.values.begin(), result.values.end());
    return result;
}

std::vector<double> symmetric_eigenvalues(const SquareMatrix& m) {
    return jacobi_eigenvalues(m).values;
}

SpectralSummary spectral_summary(const Graph& g) {
    EigenResult adj = jacobi_eigenvalues(adjacency_matrix(g));
    EigenResult lap = jacobi_eigenvalues(laplacian_matrix(g));
    SpectralSummary s;
    s.mu_min = adj.values.front();
    s.mu_max = adj.values.back();
    s.lambda_max = lap.values.back();
    s.tol = std::max(adj.off_residual, lap.off_residual);
    return s;
}

} // namespace kcut
