#include "slspec/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "slspec/error.hpp"

namespace slspec {
namespace {

// w <- H w over the leading `length` entries (entries beyond are ignored).
void apply_H(std::span<const double> w, std::span<double> out, std::size_t length) {
  for (std::size_t m = 0; m < length; ++m) {
    const double dm = static_cast<double>(m);
    double s = 0.0;
    if (m > 0) s += dm / (2.0 * dm + 1.0) * w[m - 1];
    if (m + 1 < length) s += (dm + 1.0) / (2.0 * dm + 1.0) * w[m + 1];
    out[m] = s;
  }
}

}  // namespace

double PentadiagonalMatrix::operator()(int m, int n) const {
  if (m > n) std::swap(m, n);
  switch (n - m) {
    case 0: return diag0[m];
    case 1: return diag1[m];
    case 2: return diag2[m];
    default: return 0.0;
  }
}

Eigen::MatrixXd PentadiagonalMatrix::dense() const {
  const int n = size();
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    b(i, i) = diag0[i];
    if (i + 1 < n) b(i, i + 1) = b(i + 1, i) = diag1[i];
    if (i + 2 < n) b(i, i + 2) = b(i + 2, i) = diag2[i];
  }
  return b;
}

std::vector<double> apply_g_of_H(const ChebyshevApproximant& fit, std::span<const double> v,
                                 int exact_count) {
  const int d = fit.degree();
  if (d < 0) throw InvalidInput("apply_g_of_H: empty approximant");
  if (exact_count < 0 || v.size() < static_cast<std::size_t>(exact_count + d + 2)) {
    throw InvalidInput("apply_g_of_H: need at least " + std::to_string(exact_count + d + 2) +
                       " moments, got " + std::to_string(v.size()));
  }
  const std::size_t len = v.size();
  const auto& c = fit.coefficients;
  std::vector<double> b1(len, 0.0), b2(len, 0.0), hb(len, 0.0);
  for (int k = d; k >= 1; --k) {
    apply_H(b1, hb, len);
    for (std::size_t m = 0; m < len; ++m) {
      const double b0 = c[k] * v[m] + 2.0 * hb[m] - b2[m];
      b2[m] = b1[m];
      b1[m] = b0;
    }
  }
  apply_H(b1, hb, len);
  std::vector<double> out(exact_count);
  for (int m = 0; m < exact_count; ++m) out[m] = c[0] * v[m] + hb[m] - b2[m];
  return out;
}

Eigen::MatrixXd qhat_matrix(std::span<const double> q0, int N) {
  if (N < 0) throw InvalidInput("qhat_matrix: negative size");
  const std::size_t full = 2 * static_cast<std::size_t>(N) + 3;
  if (q0.size() < full) {
    throw InvalidInput("qhat_matrix: first column needs " + std::to_string(full) + " entries");
  }
  const int size = N + 2;
  Eigen::MatrixXd qh(size, size);
  std::vector<double> prev(full, 0.0), cur(q0.begin(), q0.begin() + full), next(full, 0.0),
      hc(full, 0.0);
  for (int m = 0; m < size; ++m) qh(m, 0) = cur[m];

  // Column n+1 from columns n and n-1; each step consumes one trailing row.
  std::size_t valid = full;
  for (int n = 0; n + 1 < size; ++n) {
    apply_H(cur, hc, valid);
    --valid;
    const double a = (2.0 * n + 1.0) / (n + 1.0);
    const double b = static_cast<double>(n) / (n + 1.0);
    for (std::size_t m = 0; m < valid; ++m) next[m] = a * hc[m] - b * prev[m];
    std::swap(prev, cur);
    std::swap(cur, next);
    for (int m = 0; m < size; ++m) qh(m, n + 1) = cur[m];
  }
  return qh;
}

std::vector<double> potential_first_column(const PotentialTerm& term, int count) {
  term.exponents.validate();
  const auto fit = chebyshev_fit(term.g.value);
  const int length = count + fit.degree() + 2;
  const auto mom = moments(term.exponents, length - 1);
  return apply_g_of_H(fit, mom.values, count);
}

Eigen::MatrixXd legendre_potential_matrix(std::span<const PotentialTerm> terms, int N) {
  const int size = N + 2;
  Eigen::MatrixXd total = Eigen::MatrixXd::Zero(size, size);
  for (const auto& term : terms) {
    if (term.is_constant()) {
      // Exact: c times the Legendre Gram matrix.
      const double c = term.g(0.0);
      for (int m = 0; m < size; ++m) total(m, m) += c * 2.0 / (2.0 * m + 1.0);
      continue;
    }
    const auto q0 = potential_first_column(term, 2 * N + 3);
    total += qhat_matrix(q0, N);
  }
  return total;
}

Eigen::MatrixXd basis_congruence(std::span<const BasisCoefficients> basis,
                                 const Eigen::MatrixXd& legendre_matrix) {
  const int N = static_cast<int>(basis.size());
  if (legendre_matrix.rows() < N + 2 || legendre_matrix.cols() < N + 2) {
    throw InvalidInput("basis_congruence: Legendre matrix smaller than (N+2)x(N+2)");
  }
  // M R: column n combines columns n, n+1, n+2.
  Eigen::MatrixXd mr(N + 2, N);
  for (int n = 0; n < N; ++n) {
    const auto& c = basis[n];
    mr.col(n) = c.xi * legendre_matrix.col(n).head(N + 2) +
                c.eta * legendre_matrix.col(n + 1).head(N + 2) +
                c.theta * legendre_matrix.col(n + 2).head(N + 2);
  }
  Eigen::MatrixXd out(N, N);
  for (int m = 0; m < N; ++m) {
    const auto& c = basis[m];
    out.row(m) = c.xi * mr.row(m) + c.eta * mr.row(m + 1) + c.theta * mr.row(m + 2);
  }
  return out;
}

GalerkinSystem assemble(const Problem& problem, int N) {
  if (N < 4) throw InvalidInput("assemble: N must be at least 4");
  problem.bc.validate();
  for (const auto& t : problem.terms) t.validate();

  GalerkinSystem sys;
  sys.N = N;
  sys.bc = problem.bc;
  sys.flags = kappa_flags(problem.bc);
  const BasisTable table(problem.bc, N);
  sys.basis.assign(table.coefficients().begin(), table.coefficients().end());

  sys.stiffness_diagonal.resize(N);
  for (int n = 0; n < N; ++n) {
    const auto& c = sys.basis[n];
    sys.stiffness_diagonal[n] = -2.0 * (2.0 * n + 3.0) * c.xi * c.theta;
  }

  // B = R^T diag(2/(2j+1)) R, pentadiagonal.
  auto bhat = [](int j) { return 2.0 / (2.0 * j + 1.0); };
  sys.mass.diag0.resize(N);
  sys.mass.diag1.resize(N > 0 ? N - 1 : 0);
  sys.mass.diag2.resize(N > 1 ? N - 2 : 0);
  for (int n = 0; n < N; ++n) {
    const auto& c = sys.basis[n];
    sys.mass.diag0[n] = c.xi * c.xi * bhat(n) + c.eta * c.eta * bhat(n + 1) +
                        c.theta * c.theta * bhat(n + 2);
    if (n + 1 < N) {
      const auto& d = sys.basis[n + 1];
      sys.mass.diag1[n] = c.eta * d.xi * bhat(n + 1) + c.theta * d.eta * bhat(n + 2);
    }
    if (n + 2 < N) {
      const auto& d = sys.basis[n + 2];
      sys.mass.diag2[n] = c.theta * d.xi * bhat(n + 2);
    }
  }

  if (problem.terms.empty()) {
    sys.potential = Eigen::MatrixXd::Zero(N, N);
    return sys;
  }
  const Eigen::MatrixXd qhat = legendre_potential_matrix(problem.terms, N);
  Eigen::MatrixXd q = basis_congruence(sys.basis, qhat);
  sys.potential_asymmetry = (q - q.transpose()).cwiseAbs().maxCoeff();
  sys.potential = 0.5 * (q + q.transpose());
  return sys;
}

SplitSystem symmetric_split(const GalerkinSystem& sys, bool potential_is_even) {
  if (!potential_is_even) throw InvalidInput("symmetric_split: potential is not even");
  if (!sys.bc.symmetric()) throw InvalidInput("symmetric_split: boundary conditions not symmetric");
  if (sys.N % 2 != 0) throw InvalidInput("symmetric_split: N must be even");

  const int N = sys.N;
  const double qscale = std::max(1.0, sys.potential.cwiseAbs().maxCoeff());
  for (int m = 0; m < N; ++m) {
    if (sys.basis[m].eta != 0.0) throw InvalidInput("symmetric_split: basis has eta != 0");
    for (int n = m + 1; n < N; n += 2) {
      if (std::abs(sys.potential(m, n)) > 1e-12 * qscale) {
        throw InvalidInput("symmetric_split: potential matrix does not decouple by parity");
      }
    }
  }

  auto block = [&](int parity) {
    GalerkinBlock b;
    for (int n = parity; n < N; n += 2) b.indices.push_back(n);
    const int h = static_cast<int>(b.indices.size());
    b.stiffness_diagonal.resize(h);
    b.mass.resize(h, h);
    b.potential.resize(h, h);
    for (int i = 0; i < h; ++i) {
      b.stiffness_diagonal[i] = sys.stiffness_diagonal[b.indices[i]];
      for (int j = 0; j < h; ++j) {
        b.mass(i, j) = sys.mass(b.indices[i], b.indices[j]);
        b.potential(i, j) = sys.potential(b.indices[i], b.indices[j]);
      }
    }
    return b;
  };
  return {block(0), block(1)};
}

}  // namespace slspec
