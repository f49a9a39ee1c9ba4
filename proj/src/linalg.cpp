#include "kces/linalg.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace kces {

RMatrix RMatrix::identity(std::size_t n) {
    RMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

RMatrix RMatrix::from_rows(const std::vector<RVector>& rs) {
    RMatrix m;
    m.rows = rs.size();
    m.cols = rs.empty() ? 0 : rs.front().size();
    m.entries.reserve(m.rows * m.cols);
    for (const auto& r : rs) {
        if (r.size() != m.cols)
            throw std::invalid_argument("ragged rows");
        m.entries.insert(m.entries.end(), r.begin(), r.end());
    }
    return m;
}

Rational dot(const RVector& a, const RVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

RMatrix matmul(const RMatrix& a, const RMatrix& b) {
    if (a.cols != b.rows)
        throw std::invalid_argument("matmul: shape mismatch");
    RMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

RMatrix transpose(const RMatrix& m) {
    RMatrix t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            t.at(j, i) = m.at(i, j);
    return t;
}

RrefResult rref(const RMatrix& m) {
    RrefResult res{m, {}};
    RMatrix& a = res.reduced;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols && pivot_row < a.rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < a.rows && a.at(sel, col) == 0)
            ++sel;
        if (sel == a.rows)
            continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < a.cols; ++j)
                std::swap(a.at(sel, j), a.at(pivot_row, j));
        const Rational inv = 1 / a.at(pivot_row, col);
        for (std::size_t j = col; j < a.cols; ++j)
            a.at(pivot_row, j) *= inv;
        for (std::size_t i = 0; i < a.rows; ++i) {
            if (i == pivot_row || a.at(i, col) == 0)
                continue;
            const Rational f = a.at(i, col);
            for (std::size_t j = col; j < a.cols; ++j)
                a.at(i, j) -= f * a.at(pivot_row, j);
        }
        res.pivot_columns.push_back(col);
        ++pivot_row;
    }
    return res;
}

std::size_t rank(const RMatrix& m) {
    // Plain forward elimination; cheaper than full rref.
    RMatrix a = m;
    std::size_t r = 0;
    for (std::size_t col = 0; col < a.cols && r < a.rows; ++col) {
        std::size_t sel = r;
        while (sel < a.rows && a.at(sel, col) == 0)
            ++sel;
        if (sel == a.rows)
            continue;
        if (sel != r)
            for (std::size_t j = col; j < a.cols; ++j)
                std::swap(a.at(sel, j), a.at(r, j));
        for (std::size_t i = r + 1; i < a.rows; ++i) {
            if (a.at(i, col) == 0)
                continue;
            const Rational f = a.at(i, col) / a.at(r, col);
            for (std::size_t j = col; j < a.cols; ++j)
                a.at(i, j) -= f * a.at(r, j);
        }
        ++r;
    }
    return r;
}

RMatrix nullspace_basis(const RMatrix& m) {
    const RrefResult rr = rref(m);
    const auto& piv = rr.pivot_columns;
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : piv)
        is_pivot[c] = true;

    RMatrix basis(m.cols - piv.size(), m.cols);
    std::size_t out = 0;
    for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col])
            continue;
        basis.at(out, free_col) = 1;
        for (std::size_t i = 0; i < piv.size(); ++i)
            basis.at(out, piv[i]) = -rr.reduced.at(i, free_col);
        ++out;
    }
    return basis;
}

RVector kron(const RVector& a, const RVector& b) {
    RVector r;
    r.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b)
            r.push_back(x * y);
    return r;
}

Rational determinant(const RMatrix& m) {
    if (m.rows != m.cols)
        throw std::invalid_argument("determinant: non-square matrix");
    RMatrix a = m;
    Rational det = 1;
    for (std::size_t col = 0; col < a.cols; ++col) {
        std::size_t sel = col;
        while (sel < a.rows && a.at(sel, col) == 0)
            ++sel;
        if (sel == a.rows)
            return 0;
        if (sel != col) {
            for (std::size_t j = col; j < a.cols; ++j)
                std::swap(a.at(sel, j), a.at(col, j));
            det = -det;
        }
        det *= a.at(col, col);
        for (std::size_t i = col + 1; i < a.rows; ++i) {
            if (a.at(i, col) == 0)
                continue;
            const Rational f = a.at(i, col) / a.at(col, col);
            for (std::size_t j = col; j < a.cols; ++j)
                a.at(i, j) -= f * a.at(col, j);
        }
    }
    return det;
}

namespace {

// Gauss-Jordan inverse; returns false when singular.
bool invert(RMatrix g, RMatrix& out) {
    const std::size_t n = g.rows;
    out = RMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && g.at(sel, col) == 0)
            ++sel;
        if (sel == n)
            return false;
        if (sel != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(g.at(sel, j), g.at(col, j));
                std::swap(out.at(sel, j), out.at(col, j));
            }
        const Rational inv = 1 / g.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            g.at(col, j) *= inv;
            out.at(col, j) *= inv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || g.at(i, col) == 0)
                continue;
            const Rational f = g.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                g.at(i, j) -= f * g.at(col, j);
                out.at(i, j) -= f * out.at(col, j);
            }
        }
    }
    return true;
}

}  // namespace

RMatrix gram_projector(const RMatrix& basis) {
    const RMatrix bt = transpose(basis);
    const RMatrix gram = matmul(basis, bt);
    RMatrix gram_inv;
    if (!invert(gram, gram_inv))
        throw std::invalid_argument("not linearly independent");
    return matmul(bt, matmul(gram_inv, basis));
}

bool psd_check(const RMatrix& s) {
    if (s.rows != s.cols)
        throw std::invalid_argument("psd_check: non-square matrix");
    for (std::size_t i = 0; i < s.rows; ++i)
        for (std::size_t j = i + 1; j < s.cols; ++j)
            if (s.at(i, j) != s.at(j, i))
                throw std::invalid_argument("psd_check: non-symmetric matrix");

    RMatrix a = s;
    const std::size_t n = a.rows;
    for (std::size_t i = 0; i < n; ++i) {
        const Rational& d = a.at(i, i);
        if (d < 0)
            return false;
        if (d == 0) {
            for (std::size_t j = i + 1; j < n; ++j)
                if (a.at(i, j) != 0)
                    return false;
            continue;
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (a.at(j, i) == 0)
                continue;
            const Rational f = a.at(j, i) / d;
            for (std::size_t k = i; k < n; ++k)
                a.at(j, k) -= f * a.at(i, k);
        }
        // Restore symmetry of the trailing block (column entries under the
        // pivot are now zero).
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                a.at(k, j) = a.at(j, k);
    }
    return true;
}

RMatrix partial_transpose(const RMatrix& m, const std::vector<long>& dims,
                          const std::set<int>& block) {
    std::size_t total = 1;
    for (long d : dims) {
        if (d < 1)
            throw std::invalid_argument("partial_transpose: invalid local dimension");
        total *= static_cast<std::size_t>(d);
    }
    if (m.rows != total || m.cols != total)
        throw std::invalid_argument("partial_transpose: matrix size does not match dims");
    for (int p : block)
        if (p < 0 || p >= static_cast<int>(dims.size()))
            throw std::invalid_argument("partial_transpose: party index out of range");

    const int n = static_cast<int>(dims.size());
    std::vector<long> row_idx(static_cast<std::size_t>(n)), col_idx(static_cast<std::size_t>(n));
    RMatrix out(total, total);
    for (std::size_t r = 0; r < total; ++r) {
        std::size_t rr = r;
        for (int p = n - 1; p >= 0; --p) {
            row_idx[static_cast<std::size_t>(p)] = static_cast<long>(rr % static_cast<std::size_t>(dims[static_cast<std::size_t>(p)]));
            rr /= static_cast<std::size_t>(dims[static_cast<std::size_t>(p)]);
        }
        for (std::size_t c = 0; c < total; ++c) {
            std::size_t cc = c;
            for (int p = n - 1; p >= 0; --p) {
                col_idx[static_cast<std::size_t>(p)] = static_cast<long>(cc % static_cast<std::size_t>(dims[static_cast<std::size_t>(p)]));
                cc /= static_cast<std::size_t>(dims[static_cast<std::size_t>(p)]);
            }
            std::size_t sr = 0, sc = 0;
            for (int p = 0; p < n; ++p) {
                const bool swap_p = block.count(p) > 0;
                sr = sr * static_cast<std::size_t>(dims[static_cast<std::size_t>(p)]) +
                     static_cast<std::size_t>(swap_p ? col_idx[static_cast<std::size_t>(p)] : row_idx[static_cast<std::size_t>(p)]);
                sc = sc * static_cast<std::size_t>(dims[static_cast<std::size_t>(p)]) +
                     static_cast<std::size_t>(swap_p ? row_idx[static_cast<std::size_t>(p)] : col_idx[static_cast<std::size_t>(p)]);
            }
            out.at(sr, sc) = m.at(r, c);
        }
    }
    return out;
}

namespace {

void combinations(std::size_t n, std::size_t k,
                  const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        if (!visit(idx))
            return;
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k)
                break;
            if (i == 0)
                return;
        }
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

bool all_minors_positive(const RMatrix& m) {
    const std::size_t max_order = std::min(m.rows, m.cols);
    for (std::size_t order = 1; order <= max_order; ++order) {
        bool ok = true;
        combinations(m.rows, order, [&](const std::vector<std::size_t>& ri) {
            combinations(m.cols, order, [&](const std::vector<std::size_t>& ci) {
                RMatrix sub(order, order);
                for (std::size_t i = 0; i < order; ++i)
                    for (std::size_t j = 0; j < order; ++j)
                        sub.at(i, j) = m.at(ri[i], ci[j]);
                if (determinant(sub) <= 0) {
                    ok = false;
                    return false;
                }
                return true;
            });
            return ok;
        });
        if (!ok)
            return false;
    }
    return true;
}

}  // namespace kces
