#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "polar/error.hpp"
#include "polar/partition.hpp"

namespace polar {
namespace {

/// y = D^{-1/2} (A + (tau/n) 11^T) D^{-1/2} x with D = diag(k + tau).
class NormalizedOperator {
 public:
  NormalizedOperator(const Graph& g, double tau) : g_(g), tau_(tau) {
    const std::size_t n = g.node_count();
    inv_sqrt_.resize(static_cast<Eigen::Index>(n));
    for (std::size_t u = 0; u < n; ++u) {
      const double d = g.degree(static_cast<NodeId>(u)) + tau;
      if (d <= 0) throw Error("spectral bisection needs positive regularized degrees");
      inv_sqrt_[static_cast<Eigen::Index>(u)] = 1.0 / std::sqrt(d);
    }
  }

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const {
    const Eigen::VectorXd z = inv_sqrt_.cwiseProduct(x);
    const auto n = static_cast<Eigen::Index>(g_.node_count());
    const double dense = tau_ / static_cast<double>(n) * z.sum();
    Eigen::VectorXd y(n);
    for (Eigen::Index u = 0; u < n; ++u) {
      double s = dense;
      for (NodeId v : g_.neighbors(static_cast<NodeId>(u))) s += z[v];
      y[u] = s;
    }
    return inv_sqrt_.cwiseProduct(y);
  }

  /// Top eigenvector, D^{1/2} 1 normalized (eigenvalue 1).
  Eigen::VectorXd trivial_vector() const {
    Eigen::VectorXd q = inv_sqrt_.cwiseInverse();
    return q / q.norm();
  }

 private:
  const Graph& g_;
  double tau_;
  Eigen::VectorXd inv_sqrt_;
};

void orthogonalize(Eigen::VectorXd& w, const Eigen::VectorXd& q0, const Eigen::MatrixXd& basis,
                   Eigen::Index columns) {
  // Two rounds of classical Gram-Schmidt keep the basis orthogonal to
  // working precision.
  for (int round = 0; round < 2; ++round) {
    w -= q0 * q0.dot(w);
    if (columns > 0) {
      const auto v = basis.leftCols(columns);
      w -= v * (v.transpose() * w);
    }
  }
}

}  // namespace

FiedlerVector fiedler_vector(const Graph& g, double tau, double tolerance) {
  const std::size_t n = g.node_count();
  if (n < 2) throw Error("cannot bipartition");
  if (tau < 0) throw Error("spectral regularizer must be non-negative");
  const NormalizedOperator op(g, tau);
  const Eigen::VectorXd q0 = op.trivial_vector();
  const auto dim = static_cast<Eigen::Index>(n);
  const Eigen::Index krylov = std::min<Eigen::Index>(dim - 1, 64);
  const std::size_t max_matvecs = 10 * n;

  // Deterministic, well-spread start vector.
  Eigen::VectorXd x(dim);
  std::uint64_t state = 0x2545f4914f6cdd1dULL;
  for (Eigen::Index i = 0; i < dim; ++i) {
    state = splitmix64(state);
    x[i] = static_cast<double>(state >> 11) * 0x1.0p-53 - 0.5;
  }
  orthogonalize(x, q0, Eigen::MatrixXd(), 0);
  x.normalize();

  FiedlerVector out;
  Eigen::MatrixXd basis(dim, krylov);
  while (true) {
    Eigen::VectorXd alpha(krylov), beta(krylov);
    Eigen::Index steps = 0;
    basis.col(0) = x;
    for (Eigen::Index j = 0; j < krylov; ++j) {
      Eigen::VectorXd w = op.apply(basis.col(j));
      ++out.matvecs;
      alpha[j] = basis.col(j).dot(w);
      orthogonalize(w, q0, basis, j + 1);
      steps = j + 1;
      const double b = w.norm();
      beta[j] = b;
      if (j + 1 == krylov || b < 1e-12) break;
      basis.col(j + 1) = w / b;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    tri.computeFromTridiagonal(alpha.head(steps), beta.head(std::max<Eigen::Index>(steps - 1, 0)));
    const Eigen::Index top = steps - 1;  // eigenvalues ascend
    const double theta = tri.eigenvalues()[top];
    Eigen::VectorXd y = basis.leftCols(steps) * tri.eigenvectors().col(top);
    y.normalize();

    Eigen::VectorXd r = op.apply(y) - theta * y;
    ++out.matvecs;
    r -= q0 * q0.dot(r);
    out.residual = r.norm();
    out.eigenvalue = 1.0 - theta;
    if (out.residual < tolerance || steps == dim - 1) {
      out.values.assign(y.data(), y.data() + dim);
      return out;
    }
    if (out.matvecs >= max_matvecs) {
      throw Error("spectral eigen-solve did not converge after " + std::to_string(out.matvecs) +
                  " iterations (residual " + std::to_string(out.residual) + ")");
    }
    x = y;
  }
}

Partition bisect_spectral(const Graph& g, std::optional<double> tau) {
  const double reg = tau.value_or(g.mean_degree());
  auto fv = fiedler_vector(g, reg);
  // Orient so the first clearly nonzero entry is negative; sign is arbitrary.
  double scale = 0;
  for (double v : fv.values) scale = std::max(scale, std::abs(v));
  for (double v : fv.values) {
    if (std::abs(v) > 1e-9 * scale) {
      if (v > 0) {
        for (double& w : fv.values) w = -w;
      }
      break;
    }
  }
  std::vector<Block> blocks(fv.values.size());
  for (std::size_t u = 0; u < blocks.size(); ++u) {
    blocks[u] = fv.values[u] > 0 ? Block::B : Block::A;
  }
  Partition p(std::move(blocks));
  if (p.size_a() == 0 || p.size_b() == 0) throw Error("spectral bisection left a block empty");
  return p;
}

}  // namespace polar
