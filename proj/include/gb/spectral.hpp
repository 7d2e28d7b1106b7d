#pragma once

#include "gb/graph.hpp"

#include <Eigen/SparseCore>

#include <optional>
#include <string>

namespace gb {

enum class LaplacianKind { neumann, dirichlet };

/// The Laplacian of (X,b,m) in symmetrized form M^{-1/2} A M^{-1/2}, where
/// (A f)(x) = sum_y b(x,y)(f(x)-f(y)) restricted to the active vertices and
/// M = diag(m). Neumann keeps all of X active; Dirichlet keeps omega and
/// treats functions as extended by zero on the complement (the diagonal
/// retains the full weighted degree, including edges into the removed set).
class LaplacianOperator {
public:
    static LaplacianOperator neumann(const Graph& g);
    static LaplacianOperator dirichlet(const Graph& g, const SubsetSpec& subset);

    LaplacianKind kind() const { return kind_; }
    int dimension() const { return static_cast<int>(active_.size()); }
    /// Active vertices, canonical order (all of X, or omega).
    const std::vector<int>& active() const { return active_; }
    const std::vector<double>& active_measure() const { return m_; }

    const Eigen::SparseMatrix<double>& symmetrized() const { return sym_; }
    Eigen::MatrixXd dense_symmetrized() const { return Eigen::MatrixXd(sym_); }

    /// H g = M^{-1} A g on the active set (the operator in l^2(m) terms).
    Eigen::VectorXd apply_operator(const Eigen::VectorXd& g) const;

    /// Upper bound on the spectrum of the symmetrized form (Gershgorin).
    double spectral_upper_bound() const;

    /// Embeds an active-set vector into a full vertex function (zero on the
    /// removed set); the identity map for Neumann.
    VertexFunction embed(const Eigen::VectorXd& g) const;
    Eigen::VectorXd restrict_to_active(const VertexFunction& f) const;

private:
    LaplacianOperator(const Graph& g, LaplacianKind kind, std::vector<int> active);

    const Graph* graph_;
    LaplacianKind kind_;
    std::vector<int> active_;
    std::vector<double> m_;
    Eigen::SparseMatrix<double> sym_;      // M^{-1/2} A M^{-1/2}
    Eigen::SparseMatrix<double> quad_;     // A itself
};

struct SpectralResult {
    double eigenvalue = 0.0;
    VertexFunction eigenfunction;  // on all vertices; m-normalized, sign-fixed
    double residual = 0.0;         // ||H f - lambda f|| in l^2(m), for ||f||_m = 1
    std::string solver;            // "dense" | "iterative"
    /// Gap to the next eigenvalue above, when the solver resolves it.
    std::optional<double> gap;
};

struct SolverOptions {
    int dense_threshold = 2048;
    double tolerance = 1e-10;   // iterative Ritz residual gate
    int max_iterations = 1000;  // Lanczos steps
    std::uint64_t seed = 0x6b8b4567327b23c6ull;
    bool force_iterative = false;
};

/// Residual gate every SpectralResult must satisfy.
constexpr double kResidualGate = 1e-8;

/// First non-zero Neumann eigenvalue: the minimum of E(f)/||f||_m^2 over f
/// m-orthogonal to constants. Requires a connected graph with >= 2 vertices.
SpectralResult lambda1(const Graph& g, const SolverOptions& options = {});

/// Minimum eigenvalue of the Dirichlet Laplacian on omega; strictly positive
/// for non-empty D on a finite connected graph.
SpectralResult lambda_dirichlet(const Graph& g, const SubsetSpec& subset,
                                const SolverOptions& options = {});

/// E(f) / ||f||_m^2. With a subset, f must vanish on its Dirichlet set.
double rayleigh(const Graph& g, const VertexFunction& f, const SubsetSpec* subset = nullptr);

struct KernelCheck {
    bool ok = false;
    double constant_residual = 0.0;  // ||H 1||_m
    double second_eigenvalue = 0.0;
    std::string detail;
};

/// Verifies that the Neumann operator annihilates constants and that its
/// kernel is one-dimensional.
KernelCheck kernel_check(const Graph& g);

}  // namespace gb
