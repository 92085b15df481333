#include "kin/linalg.hpp"

namespace kin {

FnMatrix FnMatrix::identity(int n) {
    FnMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RationalFn(1);
    return m;
}

LinearSolve solve_linear(FnMatrix a, std::vector<RationalFn> b) {
    const int m = a.rows(), n = a.cols();
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int p = -1;
        for (int i = row; i < m; ++i) {
            if (!a.at(i, col).is_zero()) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != row) {
            for (int j = col; j < n; ++j) std::swap(a.at(p, j), a.at(row, j));
            std::swap(b[p], b[row]);
        }
        RationalFn inv = RationalFn(1) / a.at(row, col);
        for (int j = col; j < n; ++j) a.at(row, j) *= inv;
        b[row] *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == row || a.at(i, col).is_zero()) continue;
            RationalFn f = a.at(i, col);
            for (int j = col; j < n; ++j) a.at(i, j) -= f * a.at(row, j);
            b[i] -= f * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    LinearSolve out;
    out.consistent = true;
    for (int i = row; i < m; ++i) {
        if (!b[i].is_zero()) {
            out.consistent = false;
            return out;
        }
    }
    out.unique = (int(pivot_col.size()) == n);
    out.x.assign(n, RationalFn(0));
    for (size_t k = 0; k < pivot_col.size(); ++k) out.x[pivot_col[k]] = b[k];
    return out;
}

int fn_rank(FnMatrix a) {
    const int m = a.rows(), n = a.cols();
    int rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        int p = -1;
        for (int i = rank; i < m; ++i) {
            if (!a.at(i, col).is_zero()) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != rank)
            for (int j = col; j < n; ++j) std::swap(a.at(p, j), a.at(rank, j));
        RationalFn inv = RationalFn(1) / a.at(rank, col);
        for (int i = rank + 1; i < m; ++i) {
            if (a.at(i, col).is_zero()) continue;
            RationalFn f = a.at(i, col) * inv;
            for (int j = col; j < n; ++j) a.at(i, j) -= f * a.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

RationalFn fn_det(FnMatrix a) {
    const int n = a.rows();
    RationalFn det(1);
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int i = col; i < n; ++i) {
            if (!a.at(i, col).is_zero()) {
                p = i;
                break;
            }
        }
        if (p < 0) return RationalFn(0);
        if (p != col) {
            for (int j = col; j < n; ++j) std::swap(a.at(p, j), a.at(col, j));
            det = -det;
        }
        det *= a.at(col, col);
        RationalFn inv = RationalFn(1) / a.at(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (a.at(i, col).is_zero()) continue;
            RationalFn f = a.at(i, col) * inv;
            for (int j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
        }
    }
    return det;
}

std::optional<FnMatrix> fn_inverse(const FnMatrix& a) {
    const int n = a.rows();
    FnMatrix w = a, inv = FnMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int i = col; i < n; ++i) {
            if (!w.at(i, col).is_zero()) {
                p = i;
                break;
            }
        }
        if (p < 0) return std::nullopt;
        if (p != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(p, j), w.at(col, j));
                std::swap(inv.at(p, j), inv.at(col, j));
            }
        }
        RationalFn piv = RationalFn(1) / w.at(col, col);
        for (int j = 0; j < n; ++j) {
            w.at(col, j) *= piv;
            inv.at(col, j) *= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || w.at(i, col).is_zero()) continue;
            RationalFn f = w.at(i, col);
            for (int j = 0; j < n; ++j) {
                w.at(i, j) -= f * w.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

Inertia rational_inertia(std::vector<std::vector<Rational>> m) {
    const int n = int(m.size());
    Inertia inertia;
    std::vector<int> alive(n, 1);
    for (;;) {
        // Pick a nonzero diagonal pivot; if none, symmetrize an off-diagonal
        // pair (congruence e_i += e_j) to create one.
        int piv = -1;
        for (int i = 0; i < n; ++i) {
            if (alive[i] && !m[i][i].is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv < 0) {
            int oi = -1, oj = -1;
            for (int i = 0; i < n && oi < 0; ++i) {
                if (!alive[i]) continue;
                for (int j = i + 1; j < n; ++j) {
                    if (alive[j] && !m[i][j].is_zero()) {
                        oi = i;
                        oj = j;
                        break;
                    }
                }
            }
            if (oi < 0) break;  // matrix is zero on the remaining block
            for (int k = 0; k < n; ++k) m[oi][k] += m[oj][k];
            for (int k = 0; k < n; ++k) m[k][oi] += m[k][oj];
            piv = oi;
        }
        Rational d = m[piv][piv];
        if (d.sign() > 0) ++inertia.plus;
        else ++inertia.minus;
        alive[piv] = 0;
        for (int i = 0; i < n; ++i) {
            if (!alive[i] || m[i][piv].is_zero()) continue;
            Rational f = m[i][piv] / d;
            for (int j = 0; j < n; ++j) m[i][j] -= f * m[piv][j];
            for (int j = 0; j < n; ++j) m[j][i] -= f * m[j][piv];
        }
    }
    return inertia;
}

}  // namespace kin
