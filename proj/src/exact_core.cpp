#include "hyperlat/exact_core.hpp"

#include <algorithm>

namespace hyperlat {

Int det(const IntMatrix& m) {
    if (!m.is_square()) throw input_error("NonSquare", "det needs a square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Int(1);
    IntMatrix a = m;
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t piv = k;
            while (piv < n && a.at(piv, k) == 0) ++piv;
            if (piv == n) return Int(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    Int d = a.at(n - 1, n - 1);
    return sign > 0 ? d : Int(-d);
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) += q * m.at(src, j);
}

void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

IntMatrix reverse_both(const IntMatrix& m) {
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.at(i, j) = m.at(m.rows() - 1 - i, m.cols() - 1 - j);
    return r;
}

}  // namespace

HnfResult hnf_row(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(rows);
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        // Euclid on the entries at and below pivot_row until one survives.
        for (;;) {
            std::size_t best = rows;
            for (std::size_t i = pivot_row; i < rows; ++i) {
                if (h.at(i, col) == 0) continue;
                if (best == rows || cmp(abs(h.at(i, col)), abs(h.at(best, col))) < 0) best = i;
            }
            if (best == rows) break;
            if (best != pivot_row) {
                swap_rows(h, pivot_row, best);
                swap_rows(u, pivot_row, best);
            }
            bool cleared = true;
            for (std::size_t i = pivot_row + 1; i < rows; ++i) {
                if (h.at(i, col) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(pivot_row, col).get_mpz_t());
                add_row_multiple(h, i, pivot_row, -q);
                add_row_multiple(u, i, pivot_row, -q);
                if (h.at(i, col) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (h.at(pivot_row, col) == 0) continue;
        if (h.at(pivot_row, col) < 0) {
            negate_row(h, pivot_row);
            negate_row(u, pivot_row);
        }
        for (std::size_t i = 0; i < pivot_row; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(pivot_row, col).get_mpz_t());
            add_row_multiple(h, i, pivot_row, -q);
            add_row_multiple(u, i, pivot_row, -q);
        }
        ++pivot_row;
    }
    return {h, u};
}

HnfResult hnf(const IntMatrix& m) {
    HnfResult rev = hnf_row(reverse_both(m));
    return {reverse_both(rev.h), reverse_both(rev.u)};
}

namespace {

struct LdlAttempt {
    bool ok = false;
    RatMatrix l;
    std::vector<Rat> d;
    std::size_t fail_stage = 0;
    RatMatrix work;  // state at failure, for pivot selection
};

LdlAttempt ldl_nopivot(const RatMatrix& g0) {
    const std::size_t n = g0.rows();
    LdlAttempt r;
    RatMatrix a = g0;
    r.l = RatMatrix::identity(n);
    r.d.assign(n, Rat(0));
    for (std::size_t k = 0; k < n; ++k) {
        if (a.at(k, k) == 0) {
            r.fail_stage = k;
            r.work = a;
            return r;
        }
        r.d[k] = a.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            Rat f = a.at(i, k) / r.d[k];
            r.l.at(i, k) = f;
            if (f == 0) continue;
            for (std::size_t j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
        }
        // Keep the trailing block literally symmetric.
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < i; ++j) a.at(j, i) = a.at(i, j);
    }
    r.ok = true;
    return r;
}

}  // namespace

LdlResult ldl(const IntMatrix& g) {
    if (!g.is_symmetric()) throw input_error("NotSymmetric", "ldl needs a symmetric matrix");
    const std::size_t n = g.rows();
    IntMatrix t = IntMatrix::identity(n);
    bool pure_permutation = true;

    // Repair zero pivots by adjusting the congruence transform and rerunning;
    // stage-k fixes leave earlier pivots alone (they are ratios of leading
    // principal minors in columns < k, which the fix does not touch).
    for (std::size_t round = 0; round <= n; ++round) {
        RatMatrix a = RatMatrix(t.transpose() * g * t);
        LdlAttempt att = ldl_nopivot(a);
        if (att.ok) return {att.l, att.d, t, pure_permutation};

        const std::size_t k = att.fail_stage;
        std::size_t j = k + 1;
        while (j < n && att.work.at(j, j) == 0) ++j;
        if (j < n) {
            for (std::size_t i = 0; i < n; ++i) std::swap(t.at(i, k), t.at(i, j));
            continue;
        }
        j = k + 1;
        while (j < n && att.work.at(k, j) == 0) ++j;
        if (j == n) throw input_error("DegenerateForm", "zero pivot with zero remaining block");
        for (std::size_t i = 0; i < n; ++i) t.at(i, k) += t.at(i, j);
        pure_permutation = false;
    }
    throw math_error("LdlDiverged", "pivot repair failed to converge");
}

std::optional<DiophantineSolution> solve_linear_diophantine(const IntVec& a, const Int& c) {
    const std::size_t r = a.size();
    bool all_zero = true;
    for (const Int& x : a)
        if (x != 0) all_zero = false;
    if (r == 0 || all_zero) throw input_error("ZeroVector", "coefficient vector must be nonzero");

    IntMatrix col(r, 1);
    for (std::size_t i = 0; i < r; ++i) col.at(i, 0) = a[i];
    HnfResult hr = hnf_row(col);
    const Int& g = hr.h.at(0, 0);
    Int q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    if (rem != 0) return std::nullopt;

    DiophantineSolution sol;
    sol.particular.resize(r);
    for (std::size_t j = 0; j < r; ++j) sol.particular[j] = q * hr.u.at(0, j);
    for (std::size_t i = 1; i < r; ++i) {
        IntVec b(r);
        for (std::size_t j = 0; j < r; ++j) b[j] = hr.u.at(i, j);
        sol.basis.push_back(std::move(b));
    }
    return sol;
}

RatMatrix rat_solve(const IntMatrix& m, const IntMatrix& rhs) {
    if (!m.is_square()) throw input_error("NonSquare", "solve needs a square matrix");
    if (m.rows() != rhs.rows()) throw input_error("BadShape", "solve shape mismatch");
    const std::size_t n = m.rows(), w = rhs.cols();
    RatMatrix a(m);
    RatMatrix b(rhs);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a.at(piv, k) == 0) ++piv;
        if (piv == n) throw input_error("SingularMatrix", "singular matrix in solve");
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            for (std::size_t j = 0; j < w; ++j) std::swap(b.at(k, j), b.at(piv, j));
        }
        Rat inv = Rat(1) / a.at(k, k);
        for (std::size_t j = k; j < n; ++j) a.at(k, j) *= inv;
        for (std::size_t j = 0; j < w; ++j) b.at(k, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a.at(i, k) == 0) continue;
            Rat f = a.at(i, k);
            for (std::size_t j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
            for (std::size_t j = 0; j < w; ++j) b.at(i, j) -= f * b.at(k, j);
        }
    }
    return b;
}

RatMatrix rat_inverse(const IntMatrix& m) {
    return rat_solve(m, IntMatrix::identity(m.rows()));
}

}  // namespace hyperlat
