#pragma once

// Exact linear and convex geometry in a rational Euclidean space whose inner
// product is given by an arbitrary positive-definite rational Gram matrix.
// Nothing in here touches floating point.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nullcone/errors.hpp"
#include "nullcone/rational.hpp"

namespace nullcone {

/// Row-major rational matrix.
using Matrix = std::vector<QVec>;

inline Matrix identity_matrix(std::size_t n) {
    Matrix m(n, zero_vec(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline QVec mat_vec(const Matrix& m, const QVec& v) {
    QVec out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != v.size()) throw InputError("matrix/vector size mismatch");
        Rat acc = 0;
        for (std::size_t j = 0; j < v.size(); ++j) acc += m[i][j] * v[j];
        out[i] = acc;
    }
    return out;
}

inline bool is_square(const Matrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) return false;
    return true;
}

/// 1-based index of the first leading principal minor that is <= 0, or
/// nullopt when the matrix is positive definite. Non-square input throws.
inline std::optional<std::size_t> first_nonpositive_minor(const Matrix& gram) {
    if (!is_square(gram)) throw InputError("positive-definiteness test needs a square matrix");
    // Symmetric Gaussian elimination without row exchanges: the k-th pivot is
    // the ratio of the k-th and (k-1)-th leading minors, so all minors are
    // positive iff all pivots are.
    Matrix a = gram;
    const std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (sgn(a[k][k]) <= 0) return k + 1;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (sgn(a[i][k]) == 0) continue;
            Rat f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return std::nullopt;
}

inline bool is_positive_definite(const Matrix& gram) {
    return !first_nonpositive_minor(gram).has_value();
}

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row. Pivot is the first nonzero entry in column order.
inline std::vector<std::size_t> row_reduce(Matrix& a, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
        std::size_t sel = row;
        while (sel < a.size() && sgn(a[sel][col]) == 0) ++sel;
        if (sel == a.size()) continue;
        std::swap(a[row], a[sel]);
        Rat inv = 1 / a[row][col];
        for (auto& x : a[row]) x *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || sgn(a[i][col]) == 0) continue;
            Rat f = a[i][col];
            for (std::size_t j = col; j < a[i].size(); ++j) a[i][j] -= f * a[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

struct LinearSolution {
    enum class Status { unique, inconsistent, underdetermined };
    Status status;
    /// The unique solution, or one particular solution (free variables set to
    /// zero) when underdetermined. Empty when inconsistent.
    std::optional<QVec> x;
};

/// Exact Gauss-Jordan solve of A x = b. A may be rectangular.
inline LinearSolution solve_linear_system(const Matrix& a, const QVec& b) {
    if (a.size() != b.size()) throw InputError("solve: row count of A differs from length of b");
    const std::size_t ncols = a.empty() ? 0 : a[0].size();
    Matrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) {
        if (aug[i].size() != ncols) throw InputError("solve: ragged matrix");
        aug[i].push_back(b[i]);
    }
    auto pivots = row_reduce(aug, ncols);
    for (std::size_t i = pivots.size(); i < aug.size(); ++i)
        if (sgn(aug[i][ncols]) != 0) return {LinearSolution::Status::inconsistent, std::nullopt};
    QVec x = zero_vec(ncols);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][ncols];
    auto status = pivots.size() == ncols ? LinearSolution::Status::unique
                                         : LinearSolution::Status::underdetermined;
    return {status, std::move(x)};
}

/// Square-system convenience: the unique solution, or nullopt when the system
/// is inconsistent or underdetermined.
inline std::optional<QVec> solve_linear_exact(const Matrix& a, const QVec& b) {
    if (!is_square(a)) throw InputError("solve_linear_exact needs a square matrix");
    auto sol = solve_linear_system(a, b);
    if (sol.status != LinearSolution::Status::unique) return std::nullopt;
    return sol.x;
}

inline std::size_t matrix_rank(Matrix a) {
    if (a.empty()) return 0;
    return row_reduce(a, a[0].size()).size();
}

/// Rational vector space with a positive-definite Gram form.
class GramSpace {
public:
    GramSpace() = default;

    /// Throws InputError unless gram is square, symmetric and positive definite.
    explicit GramSpace(Matrix gram) : gram_(std::move(gram)) {
        if (gram_.empty()) throw InputError("Gram matrix must have positive rank");
        if (!is_square(gram_)) throw InputError("Gram matrix is not square");
        for (std::size_t i = 0; i < gram_.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (gram_[i][j] != gram_[j][i])
                    throw InputError("Gram matrix is not symmetric at (" + std::to_string(i) +
                                     ", " + std::to_string(j) + ")");
        if (auto k = first_nonpositive_minor(gram_))
            throw InputError("gram not positive definite at minor " + std::to_string(*k));
    }

    std::size_t rank() const { return gram_.size(); }
    const Matrix& gram() const { return gram_; }

    Rat inner(const QVec& u, const QVec& v) const {
        check_dim(u);
        check_dim(v);
        Rat acc = 0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (sgn(u[i]) == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j) acc += u[i] * gram_[i][j] * v[j];
        }
        return acc;
    }

    Rat norm2(const QVec& v) const { return inner(v, v); }

    GramSpace scaled(const Rat& c) const {
        if (sgn(c) <= 0) throw InputError("Gram scaling factor must be positive");
        Matrix g = gram_;
        for (auto& row : g)
            for (auto& x : row) x *= c;
        return GramSpace(std::move(g));
    }

    void check_dim(const QVec& v) const {
        if (v.size() != gram_.size())
            throw InputError("vector " + to_string(v) + " has length " + std::to_string(v.size()) +
                             ", expected rank " + std::to_string(gram_.size()));
    }

private:
    Matrix gram_;
};

inline Rat inner(const GramSpace& space, const QVec& u, const QVec& v) {
    return space.inner(u, v);
}

/// Foot of the perpendicular dropped from the origin onto aff(points): the
/// unique p in aff(points) orthogonal to every difference of two points.
inline QVec perp(const GramSpace& space, const std::vector<QVec>& points) {
    if (points.empty()) throw InputError("perp of an empty point set");
    for (const auto& q : points) space.check_dim(q);
    const QVec& base = points.front();

    // Independent directions spanning aff(points) - base.
    Matrix dirs;
    for (std::size_t i = 1; i < points.size(); ++i) dirs.push_back(points[i] - base);
    if (!dirs.empty()) {
        auto pivots = row_reduce(dirs, space.rank());
        dirs.resize(pivots.size());
    }
    if (dirs.empty()) return base;

    // (D G D^T) c = -D G base
    const std::size_t k = dirs.size();
    Matrix normal(k, zero_vec(k));
    QVec rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) normal[i][j] = space.inner(dirs[i], dirs[j]);
        rhs[i] = -space.inner(dirs[i], base);
    }
    auto coeffs = solve_linear_exact(normal, rhs);
    if (!coeffs) throw InternalError("perp: Gram normal equations are singular");
    QVec p = base;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < p.size(); ++j) p[j] += (*coeffs)[i] * dirs[i][j];
    return p;
}

/// Phase-1 simplex feasibility test for { lambda >= 0 : A lambda = b } with
/// Bland's rule. Tableau is dense; instances here have at most rank+1 rows.
inline bool feasible_nonnegative(const Matrix& a, const QVec& b) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    // Columns: n structural, m artificial, last = rhs.
    const std::size_t width = n + m + 1;
    Matrix t(m, zero_vec(width));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = sgn(b[i]) < 0;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rat(-a[i][j]) : a[i][j];
        t[i][n + i] = 1;
        t[i][width - 1] = flip ? Rat(-b[i]) : b[i];
        basis[i] = n + i;
    }
    // Reduced costs of the phase-1 objective (minimize sum of artificials).
    QVec cost = zero_vec(width);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < width; ++j)
            if (j < n || j == width - 1) cost[j] -= t[i][j];

    for (;;) {
        std::size_t enter = width;
        for (std::size_t j = 0; j < n + m; ++j) {
            if (sgn(cost[j]) < 0) {
                enter = j;
                break;
            }
        }
        if (enter == width) break;

        std::size_t leave = m;
        Rat best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(t[i][enter]) <= 0) continue;
            Rat ratio = t[i][width - 1] / t[i][enter];
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        // Phase-1 objective is bounded below by zero.
        if (leave == m) throw InternalError("phase-1 simplex reported an unbounded ray");

        Rat piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || sgn(t[i][enter]) == 0) continue;
            Rat f = t[i][enter];
            for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
        }
        if (sgn(cost[enter]) != 0) {
            Rat f = cost[enter];
            for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    // cost[rhs] holds minus the objective value.
    return sgn(cost[width - 1]) == 0;
}

/// True iff p is a convex combination of points.
inline bool in_convex_hull(const GramSpace& space, const QVec& p, const std::vector<QVec>& points) {
    if (points.empty()) throw InputError("convex hull of an empty point set");
    space.check_dim(p);
    const std::size_t r = space.rank();
    Matrix a(r + 1, zero_vec(points.size()));
    QVec b(r + 1);
    for (std::size_t j = 0; j < points.size(); ++j) {
        space.check_dim(points[j]);
        for (std::size_t i = 0; i < r; ++i) a[i][j] = points[j][i];
        a[r][j] = 1;
    }
    for (std::size_t i = 0; i < r; ++i) b[i] = p[i];
    b[r] = 1;
    return feasible_nonnegative(a, b);
}

/// Orthogonal projection onto the hyperplane {x : <l, x> = 0}.
inline QVec project_hyperplane(const GramSpace& space, const QVec& l, const QVec& v) {
    Rat ll = space.norm2(l);
    if (sgn(ll) == 0) throw InputError("projection along the zero vector");
    return v - (space.inner(l, v) / ll) * l;
}

/// Incremental affine-independence tracker: keeps an echelon basis of the
/// differences to the first point.
class AffineSpan {
public:
    explicit AffineSpan(std::size_t dim) : dim_(dim) {}

    /// Adds q if it is affinely independent of the points held so far.
    bool try_add(const QVec& q) {
        if (!origin_) {
            origin_ = q;
            return true;
        }
        QVec d = q - *origin_;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rat& c = d[pivots_[i]];
            if (sgn(c) == 0) continue;
            Rat f = c;
            for (std::size_t j = 0; j < dim_; ++j) d[j] -= f * rows_[i][j];
        }
        std::size_t col = 0;
        while (col < dim_ && sgn(d[col]) == 0) ++col;
        if (col == dim_) return false;
        Rat inv = 1 / d[col];
        for (auto& x : d) x *= inv;
        rows_.push_back(std::move(d));
        pivots_.push_back(col);
        return true;
    }

private:
    std::size_t dim_;
    std::optional<QVec> origin_;
    Matrix rows_;
    std::vector<std::size_t> pivots_;
};

using IndexSubset = std::vector<std::size_t>;

/// Visits every index subset S with 1 <= |S| <= max_size whose points are
/// affinely independent, in lexicographic order of the sorted index tuples.
/// `first_indices`, when given, restricts the smallest element of S (used to
/// split the enumeration into disjoint ranges).
inline void for_each_affinely_independent_subset(
    const std::vector<QVec>& points, std::size_t max_size,
    const std::function<void(const IndexSubset&)>& visit,
    const std::optional<std::vector<std::size_t>>& first_indices = std::nullopt) {
    if (max_size < 1) throw InputError("max_size must be at least 1");
    if (points.empty()) return;
    const std::size_t dim = points.front().size();
    IndexSubset current;

    std::function<void(std::size_t, const AffineSpan&)> extend =
        [&](std::size_t next, const AffineSpan& span) {
            visit(current);
            if (current.size() == max_size) return;
            for (std::size_t i = next; i < points.size(); ++i) {
                AffineSpan grown = span;
                if (!grown.try_add(points[i])) continue;
                current.push_back(i);
                extend(i + 1, grown);
                current.pop_back();
            }
        };

    auto start = [&](std::size_t i) {
        AffineSpan span(dim);
        span.try_add(points[i]);
        current.assign(1, i);
        extend(i + 1, span);
    };
    if (first_indices) {
        for (auto i : *first_indices)
            if (i < points.size()) start(i);
    } else {
        for (std::size_t i = 0; i < points.size(); ++i) start(i);
    }
}

inline std::vector<IndexSubset> affinely_independent_subsets(const std::vector<QVec>& points,
                                                             std::size_t max_size) {
    std::vector<IndexSubset> out;
    for_each_affinely_independent_subset(points, max_size,
                                         [&](const IndexSubset& s) { out.push_back(s); });
    return out;
}

}  // namespace nullcone
