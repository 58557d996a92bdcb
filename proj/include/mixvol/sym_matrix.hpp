#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "mixvol/vec.hpp"

namespace mixvol {

/// Dense symmetric real matrix.  Construction mirrors the upper triangle into
/// the lower one, so entries(i,j) == entries(j,i) holds exactly (bitwise).
class SymMatrix {
  public:
    explicit SymMatrix(int dim) : m_(Eigen::MatrixXd::Zero(dim, dim)) {
        if (dim < 1) throw std::invalid_argument("SymMatrix: dim must be positive");
    }

    explicit SymMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols() || m_.rows() < 1)
            throw std::invalid_argument("SymMatrix: matrix must be square and nonempty");
        for (Eigen::Index i = 0; i < m_.rows(); ++i)
            for (Eigen::Index j = i + 1; j < m_.cols(); ++j) m_(j, i) = m_(i, j);
        if (!m_.allFinite()) throw std::invalid_argument("SymMatrix: non-finite entry");
    }

    static SymMatrix identity(int dim) {
        return SymMatrix(Eigen::MatrixXd::Identity(dim, dim));
    }

    static SymMatrix diagonal(const Vec& d) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d.size()),
                                                  static_cast<Eigen::Index>(d.size()));
        for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<Eigen::Index>(i),
                                                     static_cast<Eigen::Index>(i)) = d[i];
        return SymMatrix(std::move(m));
    }

    int dim() const { return static_cast<int>(m_.rows()); }
    double operator()(int i, int j) const { return m_(i, j); }
    const Eigen::MatrixXd& mat() const { return m_; }

    double trace() const { return m_.trace(); }

    bool operator==(const SymMatrix& o) const { return m_ == o.m_; }

  private:
    Eigen::MatrixXd m_;
};

/// det via pivoted LU.
inline double det(const SymMatrix& m) {
    return Eigen::PartialPivLU<Eigen::MatrixXd>(m.mat()).determinant();
}

/// Inverse via pivoted LU, re-symmetrized so downstream identities see an
/// exactly symmetric matrix.
inline SymMatrix inverse(const SymMatrix& m) {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(m.mat());
    Eigen::MatrixXd inv = lu.inverse();
    return SymMatrix(0.5 * (inv + inv.transpose()).eval());
}

/// Ascending eigenvalues of a symmetric matrix.
inline Eigen::VectorXd eigenvalues(const SymMatrix& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.mat(), Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

/// Number of eigenvalues above tol * (largest eigenvalue, or 1 if none is
/// positive), with an absolute floor of 1e-12 for numerically-zero matrices.
inline int rank_psd(const SymMatrix& m, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("rank_psd: tol must be positive");
    Eigen::VectorXd ev = eigenvalues(m);
    const double lambda_max = ev(ev.size() - 1);
    const double thresh = std::max(tol * (lambda_max > 0.0 ? lambda_max : 1.0), 1e-12);
    int r = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        if (ev(i) > thresh) ++r;
    return r;
}

/// G * G^T for a dim x rank factor G with uniform [-1,1) entries from a
/// seeded deterministic engine.  Same seed gives a bitwise-identical matrix.
inline SymMatrix random_psd(int dim, int rank, std::uint64_t seed) {
    if (dim < 1) throw std::invalid_argument("random_psd: dim must be positive");
    if (rank < 0 || rank > dim)
        throw std::invalid_argument("random_psd: rank must satisfy 0 <= rank <= dim");
    std::mt19937_64 eng(splitmix64(seed));
    Eigen::MatrixXd g(dim, rank);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < rank; ++j) g(i, j) = uniform(eng, -1.0, 1.0);
    Eigen::MatrixXd m = g * g.transpose();
    return SymMatrix(std::move(m));
}

}  // namespace mixvol
