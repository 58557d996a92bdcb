#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "mixvol/sym_matrix.hpp"
#include "mixvol/vec.hpp"

namespace mixvol {

/// Ordered multiset of symmetric matrices with multiplicities summing to the
/// common dimension n; the argument list of a mixed discriminant D(A1,...,An).
struct MatArgs {
    int dim = 0;
    std::vector<std::pair<SymMatrix, int>> items;

    MatArgs(int n, std::vector<std::pair<SymMatrix, int>> it)
        : dim(n), items(std::move(it)) {
        int total = 0;
        for (const auto& [m, mult] : items) {
            if (m.dim() != dim) throw std::invalid_argument("MatArgs: dimension mismatch");
            if (mult < 0) throw std::invalid_argument("MatArgs: negative multiplicity");
            total += mult;
        }
        if (total != dim)
            throw std::invalid_argument("MatArgs: multiplicities must sum to dim");
    }

    /// A1,...,An as a flat length-n list.
    std::vector<Eigen::MatrixXd> flat() const {
        std::vector<Eigen::MatrixXd> out;
        out.reserve(static_cast<std::size_t>(dim));
        for (const auto& [m, mult] : items)
            for (int k = 0; k < mult; ++k) out.push_back(m.mat());
        return out;
    }
};

namespace detail {

/// In-place determinant by Gaussian elimination with partial pivoting;
/// avoids per-call heap traffic in the permutation/subset loops.
inline double det_inplace(std::vector<double>& a, int n) {
    double d = 1.0;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        double best = std::abs(a[static_cast<std::size_t>(c) * n + c]);
        for (int r = c + 1; r < n; ++r) {
            const double v = std::abs(a[static_cast<std::size_t>(r) * n + c]);
            if (v > best) { best = v; piv = r; }
        }
        if (best == 0.0) return 0.0;
        if (piv != c) {
            for (int j = 0; j < n; ++j)
                std::swap(a[static_cast<std::size_t>(piv) * n + j],
                          a[static_cast<std::size_t>(c) * n + j]);
            d = -d;
        }
        const double p = a[static_cast<std::size_t>(c) * n + c];
        d *= p;
        for (int r = c + 1; r < n; ++r) {
            const double f = a[static_cast<std::size_t>(r) * n + c] / p;
            if (f == 0.0) continue;
            for (int j = c; j < n; ++j)
                a[static_cast<std::size_t>(r) * n + j] -= f * a[static_cast<std::size_t>(c) * n + j];
        }
    }
    return d;
}

}  // namespace detail

inline constexpr int kMdPermMaxDim = 8;
inline constexpr int kMdSubsetMaxDim = 20;

/// Mixed discriminant of general square matrices by the column-permutation
/// expansion: (1/n!) sum over permutations s of det whose i-th column is
/// column i of A_{s(i)}.
inline double md_perm(const std::vector<Eigen::MatrixXd>& mats) {
    const int n = static_cast<int>(mats.size());
    if (n < 1) throw std::invalid_argument("md_perm: empty argument list");
    if (n > kMdPermMaxDim)
        throw capacity_error("md_perm: n=" + std::to_string(n) +
                             " exceeds the n! expansion bound n<=" +
                             std::to_string(kMdPermMaxDim));
    for (const auto& m : mats)
        if (m.rows() != n || m.cols() != n)
            throw std::invalid_argument("md_perm: matrix dimension mismatch");

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<double> buf(static_cast<std::size_t>(n) * n);
    double sum = 0.0;
    double fact = 1.0;
    for (int k = 2; k <= n; ++k) fact *= k;
    do {
        for (int col = 0; col < n; ++col) {
            const Eigen::MatrixXd& src = mats[static_cast<std::size_t>(perm[static_cast<std::size_t>(col)])];
            for (int row = 0; row < n; ++row)
                buf[static_cast<std::size_t>(row) * n + col] = src(row, col);
        }
        sum += detail::det_inplace(buf, n);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum / fact;
}

inline double md_perm(const MatArgs& args) { return md_perm(args.flat()); }

/// Mixed discriminant by polarization of the determinant: (1/n!) sum over
/// nonempty subsets S of (-1)^{n-|S|} det(sum_{i in S} A_i).  Subsets are
/// walked in Gray-code order so each step updates the running sum by one
/// matrix.
inline double md_incl_excl(const std::vector<Eigen::MatrixXd>& mats) {
    const int n = static_cast<int>(mats.size());
    if (n < 1) throw std::invalid_argument("md_incl_excl: empty argument list");
    if (n > kMdSubsetMaxDim)
        throw capacity_error("md_incl_excl: n=" + std::to_string(n) +
                             " exceeds the 2^n expansion bound n<=" +
                             std::to_string(kMdSubsetMaxDim));
    for (const auto& m : mats)
        if (m.rows() != n || m.cols() != n)
            throw std::invalid_argument("md_incl_excl: matrix dimension mismatch");

    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
    std::vector<double> buf(static_cast<std::size_t>(n) * n);
    double sum = 0.0;
    std::uint64_t prev_gray = 0;
    const std::uint64_t count = 1ULL << n;
    for (std::uint64_t k = 1; k < count; ++k) {
        const std::uint64_t gray = k ^ (k >> 1);
        const std::uint64_t diff = gray ^ prev_gray;
        int bit = 0;
        while (!((diff >> bit) & 1ULL)) ++bit;
        if ((gray >> bit) & 1ULL)
            acc += mats[static_cast<std::size_t>(bit)];
        else
            acc -= mats[static_cast<std::size_t>(bit)];
        prev_gray = gray;

        const int card = static_cast<int>(std::popcount(gray));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) buf[static_cast<std::size_t>(r) * n + c] = acc(r, c);
        const double d = detail::det_inplace(buf, n);
        sum += ((n - card) % 2 == 0) ? d : -d;
    }
    double fact = 1.0;
    for (int k = 2; k <= n; ++k) fact *= k;
    return sum / fact;
}

inline double md_incl_excl(const MatArgs& args) { return md_incl_excl(args.flat()); }

/// Closed forms for the identity-padded discriminants:
///   D(X, I[n-1]) = tr(X)/n
///   D(Y, I[n-1]) = tr(Y)/n
///   D(X, Y, I[n-2]) = (tr(X)tr(Y) - tr(XY)) / (n(n-1))
struct ReducedPattern {
    double dx_i;   // D(X, I[n-1])
    double dy_i;   // D(Y, I[n-1])
    double dxy_i;  // D(X, Y, I[n-2])
};

inline ReducedPattern md_reduced_pattern(const SymMatrix& x, const SymMatrix& y) {
    const int n = x.dim();
    if (y.dim() != n) throw std::invalid_argument("md_reduced_pattern: dimension mismatch");
    if (n < 2) throw std::invalid_argument("md_reduced_pattern: requires n >= 2");
    const double tx = x.trace();
    const double ty = y.trace();
    const double txy = (x.mat() * y.mat()).trace();
    return ReducedPattern{tx / n, ty / n, (tx * ty - txy) / (static_cast<double>(n) * (n - 1))};
}

enum class Thm1Case { strict, case_i, case_ii, case_iii };

inline const char* to_string(Thm1Case c) {
    switch (c) {
        case Thm1Case::strict: return "strict";
        case Thm1Case::case_i: return "case_i";
        case Thm1Case::case_ii: return "case_ii";
        case Thm1Case::case_iii: return "case_iii";
    }
    return "strict";
}

/// Outcome of the discriminant inequality
///   D(A1,A3[n-1]) D(A2,A3[n-1]) >= (n-1)/n D(A1,A2,A3[n-2]) D(A3[n])
/// together with the exact-gap identity and the equality-case label.
struct Thm1Report {
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;
    std::optional<double> trace_identity_residual;  // only when A3 has full rank
    Thm1Case equality_case = Thm1Case::strict;
    double scale = 1.0;
    double tol = 0.0;

    bool is_equality() const { return std::abs(gap) <= tol * scale; }
};

namespace detail {

/// Does Im(a) lie in Im(a3)?  Tested by projecting a's columns onto the
/// orthogonal complement of a3's numeric column space.
inline bool image_contained(const SymMatrix& a, const SymMatrix& a3, double tol) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a3.mat());
    const Eigen::VectorXd ev = es.eigenvalues();
    const double lambda_max = ev(ev.size() - 1);
    const double thresh = std::max(1e-9 * (lambda_max > 0.0 ? lambda_max : 1.0), 1e-12);
    const int n = a3.dim();
    Eigen::MatrixXd proj = Eigen::MatrixXd::Identity(n, n);
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        if (ev(i) > thresh) proj -= es.eigenvectors().col(i) * es.eigenvectors().col(i).transpose();
    const double resid = (proj * a.mat()).norm();
    return resid <= tol * std::max(1.0, a.mat().norm());
}

}  // namespace detail

inline Thm1Report thm1_check(const SymMatrix& a1, const SymMatrix& a2, const SymMatrix& a3,
                             double tol = 1e-8) {
    const int n = a1.dim();
    if (a2.dim() != n || a3.dim() != n)
        throw std::invalid_argument("thm1_check: dimension mismatch");
    if (n < 2) throw std::invalid_argument("thm1_check: requires n >= 2");

    auto pad = [&](std::initializer_list<std::pair<SymMatrix, int>> init) {
        return md_incl_excl(MatArgs(n, std::vector<std::pair<SymMatrix, int>>(init)));
    };
    const double d1 = pad({{a1, 1}, {a3, n - 1}});
    const double d2 = pad({{a2, 1}, {a3, n - 1}});
    const double d12 = pad({{a1, 1}, {a2, 1}, {a3, n - 2}});
    const double d3 = pad({{a3, n}});

    Thm1Report rep;
    rep.lhs = d1 * d2;
    rep.rhs = (static_cast<double>(n - 1) / n) * d12 * d3;
    rep.gap = rep.lhs - rep.rhs;
    rep.scale = std::max({1.0, std::abs(rep.lhs), std::abs(rep.rhs)});
    rep.tol = tol;

    const int rank3 = rank_psd(a3, 1e-9);
    if (rank3 == n) {
        const SymMatrix a3inv = inverse(a3);
        const double d3det = det(a3);
        const double tr_xy = (a3inv.mat() * a1.mat() * a3inv.mat() * a2.mat()).trace();
        rep.trace_identity_residual =
            std::abs(rep.gap - d3det * d3det * tr_xy / (static_cast<double>(n) * n));
        const Eigen::MatrixXd prod = a1.mat() * a3inv.mat() * a2.mat();
        const double prod_scale =
            std::max(1.0, a1.mat().norm() * a3inv.mat().norm() * a2.mat().norm());
        if (prod.norm() <= tol * prod_scale) rep.equality_case = Thm1Case::case_i;
    } else if (rank3 <= n - 2) {
        rep.equality_case = Thm1Case::case_ii;
    } else {  // rank3 == n-1
        if (detail::image_contained(a1, a3, tol) || detail::image_contained(a2, a3, tol))
            rep.equality_case = Thm1Case::case_iii;
    }
    return rep;
}

}  // namespace mixvol
