#include "gb/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <vector>

namespace gb {

namespace {

// splitmix64; keeps seeded start vectors identical across toolchains.
struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double uniform() { return (next() >> 11) * 0x1.0p-53; }
};

}  // namespace

LaplacianOperator::LaplacianOperator(const Graph& g, LaplacianKind kind, std::vector<int> active)
    : graph_(&g), kind_(kind), active_(std::move(active)) {
    int n = dimension();
    m_.resize(n);
    std::vector<int> local(g.vertex_count(), -1);
    for (int i = 0; i < n; ++i) {
        local[active_[i]] = i;
        m_[i] = g.measure(active_[i]);
        if (!(m_[i] > 0.0)) throw std::invalid_argument("nonpositive measure");
    }

    std::vector<Eigen::Triplet<double>> tq, ts;
    tq.reserve(4 * g.edge_count() + n);
    ts.reserve(tq.capacity());
    for (int i = 0; i < n; ++i) {
        int x = active_[i];
        double deg = 0.0;
        for (const auto& [y, w] : g.neighbors(x)) {
            if (y == x) continue;  // self-loops contribute nothing to the form
            deg += w;
            int j = local[y];
            if (j >= 0) {
                tq.emplace_back(i, j, -w);
                ts.emplace_back(i, j, -w / std::sqrt(m_[i] * m_[j]));
            }
        }
        tq.emplace_back(i, i, deg);
        ts.emplace_back(i, i, deg / m_[i]);
    }
    quad_.resize(n, n);
    quad_.setFromTriplets(tq.begin(), tq.end());
    sym_.resize(n, n);
    sym_.setFromTriplets(ts.begin(), ts.end());
}

LaplacianOperator LaplacianOperator::neumann(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("laplacian requires a connected graph");
    std::vector<int> all(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) all[i] = i;
    return LaplacianOperator(g, LaplacianKind::neumann, std::move(all));
}

LaplacianOperator LaplacianOperator::dirichlet(const Graph& g, const SubsetSpec& subset) {
    if (!is_connected(g)) throw std::invalid_argument("laplacian requires a connected graph");
    if (subset.dirichlet().empty()) throw std::invalid_argument("dirichlet laplacian: empty D");
    if (subset.omega().empty()) throw std::invalid_argument("dirichlet laplacian: empty omega");
    return LaplacianOperator(g, LaplacianKind::dirichlet, subset.omega());
}

Eigen::VectorXd LaplacianOperator::apply_operator(const Eigen::VectorXd& g) const {
    Eigen::VectorXd out = quad_ * g;
    for (int i = 0; i < dimension(); ++i) out[i] /= m_[i];
    return out;
}

double LaplacianOperator::spectral_upper_bound() const {
    double bound = 0.0;
    for (int k = 0; k < sym_.outerSize(); ++k) {
        double row = 0.0;
        for (Eigen::SparseMatrix<double>::InnerIterator it(sym_, k); it; ++it)
            row += std::abs(it.value());
        bound = std::max(bound, row);
    }
    return bound;
}

VertexFunction LaplacianOperator::embed(const Eigen::VectorXd& g) const {
    VertexFunction f = VertexFunction::Zero(graph_->vertex_count());
    for (int i = 0; i < dimension(); ++i) f[active_[i]] = g[i];
    return f;
}

Eigen::VectorXd LaplacianOperator::restrict_to_active(const VertexFunction& f) const {
    Eigen::VectorXd g(dimension());
    for (int i = 0; i < dimension(); ++i) g[i] = f[active_[i]];
    return g;
}

namespace {

struct SymResult {
    double value;
    Eigen::VectorXd vector;  // in symmetrized coordinates
    std::optional<double> gap;
    const char* solver;
};

// Lanczos with full reorthogonalization on C = sigma I - S, so the wanted
// smallest eigenvalue of S becomes the dominant eigenvalue of C. `deflate`
// is projected out of every iterate (used for the constant direction).
SymResult lanczos_smallest(const Eigen::SparseMatrix<double>& S, double sigma,
                           const std::optional<Eigen::VectorXd>& deflate,
                           const SolverOptions& opt) {
    const int n = static_cast<int>(S.rows());
    auto project = [&](Eigen::VectorXd& v) {
        if (deflate) v -= (deflate->dot(v)) * (*deflate);
    };

    SplitMix rng{opt.seed};
    Eigen::VectorXd v0(n);
    for (int i = 0; i < n; ++i) v0[i] = rng.uniform() - 0.5;
    project(v0);
    double nrm = v0.norm();
    if (nrm == 0.0) {
        v0.setOnes();
        project(v0);
        nrm = v0.norm();
    }
    v0 /= nrm;

    int max_steps = std::min(n, opt.max_iterations);
    std::vector<Eigen::VectorXd> basis;
    basis.reserve(max_steps);
    std::vector<double> alpha, beta;

    Eigen::VectorXd v = v0;
    Eigen::VectorXd ritz;
    double theta = 0.0, theta2 = 0.0;
    bool have_theta2 = false;

    for (int k = 0; k < max_steps; ++k) {
        basis.push_back(v);
        Eigen::VectorXd w = sigma * v - S * v;
        project(w);
        double a = basis[k].dot(w);
        alpha.push_back(a);
        w -= a * basis[k];
        if (k > 0) w -= beta[k - 1] * basis[k - 1];
        for (const auto& q : basis) w -= q.dot(w) * q;  // full reorthogonalization
        double b = w.norm();

        int m = k + 1;
        Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
        for (int i = 0; i < m; ++i) {
            T(i, i) = alpha[i];
            if (i + 1 < m) T(i, i + 1) = T(i + 1, i) = beta[i];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
        theta = es.eigenvalues()(m - 1);
        have_theta2 = m >= 2;
        if (have_theta2) theta2 = es.eigenvalues()(m - 2);
        Eigen::VectorXd y = es.eigenvectors().col(m - 1);
        double ritz_residual = b * std::abs(y(m - 1));

        if (ritz_residual <= opt.tolerance * std::max(1.0, std::abs(theta)) || b <= 1e-14 ||
            k + 1 == max_steps) {
            ritz = Eigen::VectorXd::Zero(n);
            for (int i = 0; i < m; ++i) ritz += y(i) * basis[i];
            project(ritz);
            ritz.normalize();
            break;
        }
        beta.push_back(b);
        v = w / b;
    }

    SymResult out;
    out.value = sigma - theta;
    out.vector = ritz;
    if (have_theta2) out.gap = theta - theta2;  // = next_lambda - lambda
    out.solver = "iterative";
    return out;
}

// index: 0 for the smallest wanted eigenvalue; for Neumann lambda1 the
// dense path takes column 1 (the kernel holds column 0).
SymResult dense_eigen(const Eigen::MatrixXd& S, int index) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S);
    if (es.info() != Eigen::Success) throw std::runtime_error("dense eigensolver failed");
    SymResult out;
    out.value = es.eigenvalues()(index);
    out.vector = es.eigenvectors().col(index);
    if (index + 1 < S.rows()) out.gap = es.eigenvalues()(index + 1) - out.value;
    out.solver = "dense";
    return out;
}

SpectralResult finalize(const Graph& g, const LaplacianOperator& op, const SymResult& sym) {
    // back to l^2(m): f = M^{-1/2} g, m-normalized, first nonzero entry positive
    Eigen::VectorXd f = sym.vector;
    for (int i = 0; i < op.dimension(); ++i) f[i] /= std::sqrt(op.active_measure()[i]);
    double norm_m = 0.0;
    for (int i = 0; i < op.dimension(); ++i) norm_m += f[i] * f[i] * op.active_measure()[i];
    norm_m = std::sqrt(norm_m);
    if (norm_m > 0.0) f /= norm_m;
    for (int i = 0; i < op.dimension(); ++i) {
        if (f[i] != 0.0) {
            if (f[i] < 0.0) f = -f;
            break;
        }
    }

    Eigen::VectorXd resid = op.apply_operator(f) - sym.value * f;
    double rnorm = 0.0;
    for (int i = 0; i < op.dimension(); ++i) rnorm += resid[i] * resid[i] * op.active_measure()[i];

    SpectralResult result;
    result.eigenvalue = sym.value;
    result.eigenfunction = op.embed(f);
    result.residual = std::sqrt(rnorm);
    result.solver = sym.solver;
    result.gap = sym.gap;
    return result;
}

}  // namespace

SpectralResult lambda1(const Graph& g, const SolverOptions& options) {
    if (g.vertex_count() < 2) throw std::invalid_argument("lambda1 requires >= 2 vertices");
    LaplacianOperator op = LaplacianOperator::neumann(g);

    SymResult sym;
    if (!options.force_iterative && op.dimension() <= options.dense_threshold) {
        sym = dense_eigen(op.dense_symmetrized(), 1);
    } else {
        // kernel direction of the symmetrized form: M^{1/2} 1
        Eigen::VectorXd ground(op.dimension());
        for (int i = 0; i < op.dimension(); ++i) ground[i] = std::sqrt(op.active_measure()[i]);
        ground.normalize();
        sym = lanczos_smallest(op.symmetrized(), op.spectral_upper_bound(), ground, options);
    }
    return finalize(g, op, sym);
}

SpectralResult lambda_dirichlet(const Graph& g, const SubsetSpec& subset,
                                const SolverOptions& options) {
    LaplacianOperator op = LaplacianOperator::dirichlet(g, subset);
    SymResult sym;
    if (!options.force_iterative && op.dimension() <= options.dense_threshold) {
        sym = dense_eigen(op.dense_symmetrized(), 0);
    } else {
        sym = lanczos_smallest(op.symmetrized(), op.spectral_upper_bound(), std::nullopt, options);
    }
    return finalize(g, op, sym);
}

double rayleigh(const Graph& g, const VertexFunction& f, const SubsetSpec* subset) {
    if (f.size() != g.vertex_count()) throw std::invalid_argument("function domain mismatch");
    if (subset) {
        for (int v : subset->dirichlet())
            if (f[v] != 0.0)
                throw std::invalid_argument("rayleigh: function does not vanish on D at '" + g.name(v) + "'");
    }
    double norm2 = 0.0;
    for (int v = 0; v < g.vertex_count(); ++v) norm2 += f[v] * f[v] * g.measure(v);
    if (norm2 <= 0.0) throw std::invalid_argument("rayleigh of the zero function");
    return energy(g, f) / norm2;
}

KernelCheck kernel_check(const Graph& g) {
    KernelCheck check;
    LaplacianOperator op = LaplacianOperator::neumann(g);
    Eigen::VectorXd ones = Eigen::VectorXd::Ones(op.dimension());
    Eigen::VectorXd h1 = op.apply_operator(ones);
    double r = 0.0;
    for (int i = 0; i < op.dimension(); ++i) r += h1[i] * h1[i] * op.active_measure()[i];
    check.constant_residual = std::sqrt(r);

    if (g.vertex_count() == 1) {
        check.second_eigenvalue = kInfDistance;
        check.ok = check.constant_residual <= 1e-12;
        return check;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.dense_symmetrized());
    check.second_eigenvalue = es.eigenvalues()(1);
    check.ok = check.constant_residual <= 1e-12 && std::abs(es.eigenvalues()(0)) <= 1e-10 &&
               check.second_eigenvalue > 1e-10;
    if (!check.ok) check.detail = "kernel is not exactly the constants";
    return check;
}

}  // namespace gb
