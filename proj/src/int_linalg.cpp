#include "rotvec/int_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace rotvec {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Integer& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

std::vector<Integer> IntMatrix::operator*(std::span<const Integer> v) const {
    if (cols_ != static_cast<int>(v.size()))
        throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<Integer> r(rows_, Integer(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::add_row(int i, int j, const Integer& q) {
    for (int c = 0; c < cols_; ++c) at(i, c) += q * at(j, c);
}

namespace {

// g = gcd(a,b) >= 0 with s*a + t*b = g.
void gcd2(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t) {
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

} // namespace

ExtGcd ext_gcd(std::span<const Integer> values) {
    if (values.empty()) throw std::invalid_argument("ext_gcd of an empty list");
    ExtGcd r;
    r.coeffs.assign(values.size(), Integer(0));
    r.g = abs(values[0]);
    r.coeffs[0] = values[0] >= 0 ? 1 : -1;
    if (values[0] == 0) r.coeffs[0] = 0;
    for (size_t i = 1; i < values.size(); ++i) {
        if (values[i] == 0) continue;
        Integer g, s, t;
        gcd2(r.g, values[i], g, s, t);
        for (size_t j = 0; j < i; ++j) r.coeffs[j] *= s;
        r.coeffs[i] = t;
        r.g = g;
    }
    return r;
}

namespace {

// Builds G in GL_n(Z) whose FIRST row is the given primitive row, following
// the recursive construction: with row (p1, tail), let d = gcd(tail); recurse
// on tail/d to get a matrix with tail/d as its last row, and stitch with s,t
// from s*p1 + t*d = 1.
IntMatrix complete_first(std::span<const Integer> row) {
    const int n = static_cast<int>(row.size());
    if (n == 1) {
        IntMatrix g(1, 1);
        g.at(0, 0) = row[0]; // +-1 by the gcd precondition
        return g;
    }
    std::vector<Integer> tail(row.begin() + 1, row.end());
    ExtGcd tg = ext_gcd(tail);
    if (tg.g == 0) {
        // tail all zero, so row = (+-1, 0, ..., 0)
        IntMatrix g = IntMatrix::identity(n);
        g.at(0, 0) = row[0];
        return g;
    }
    std::vector<Integer> unit(tail.size());
    for (size_t i = 0; i < tail.size(); ++i) unit[i] = tail[i] / tg.g;
    IntMatrix sub = complete_first(unit); // (n-1) x (n-1), first row = unit

    Integer g, s, t;
    gcd2(row[0], tg.g, g, s, t); // s*p1 + t*d = 1

    IntMatrix out(n, n);
    for (int j = 0; j < n; ++j) out.at(0, j) = row[j];
    // middle rows: sub with its first row removed, shifted one column right
    for (int i = 1; i < n - 1; ++i)
        for (int j = 0; j < n - 1; ++j) out.at(i, j + 1) = sub.at(i, j);
    out.at(n - 1, 0) = -t;
    for (int j = 0; j < n - 1; ++j) out.at(n - 1, j + 1) = s * unit[j];
    return out;
}

} // namespace

IntMatrix unimodular_complete(std::span<const Integer> row, int index) {
    const int n = static_cast<int>(row.size());
    if (n == 0) throw std::invalid_argument("empty row");
    if (index < 0 || index >= n) throw std::invalid_argument("row index out of range");
    ExtGcd e = ext_gcd(row);
    if (e.g != 1) throw std::invalid_argument("row entries must have gcd 1");
    IntMatrix g = complete_first(row);
    if (index == 0) return g;
    // rotate rows so the completed row lands at `index`
    IntMatrix out(n, n);
    for (int i = 0; i < n; ++i) {
        int src = ((i - index) % n + n) % n;
        for (int j = 0; j < n; ++j) out.at(i, j) = g.at(src, j);
    }
    return out;
}

Integer det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Integer v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    Integer d = a.at(n - 1, n - 1);
    return sign > 0 ? d : Integer(-d);
}

bool is_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) return false;
    Integer d = det(m);
    return d == 1 || d == -1;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
    if (!is_unimodular(m)) throw std::invalid_argument("matrix is not unimodular");
    const int n = m.rows();
    // Gauss-Jordan over Q; the result is integral because |det| = 1.
    RatMatrix a(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a.at(i, j) = Rational(m.at(i, j));
        a.at(i, n + i) = 1;
    }
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int i = col; i < n; ++i)
            if (a.at(i, col) != 0) {
                p = i;
                break;
            }
        for (int j = 0; j < 2 * n; ++j) std::swap(a.at(col, j), a.at(p, j));
        Rational inv = 1 / a.at(col, col);
        for (int j = 0; j < 2 * n; ++j) a.at(col, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == col || a.at(i, col) == 0) continue;
            Rational f = a.at(i, col);
            for (int j = 0; j < 2 * n; ++j) a.at(i, j) -= f * a.at(col, j);
        }
    }
    IntMatrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rational& q = a.at(i, n + j);
            if (q.get_den() != 1) throw std::logic_error("unimodular inverse is not integral");
            r.at(i, j) = q.get_num();
        }
    return r;
}

HnfResult hnf(const IntMatrix& m) {
    HnfResult r{m, IntMatrix::identity(m.rows())};
    IntMatrix& h = r.h;
    IntMatrix& u = r.u;
    const int rows = m.rows(), cols = m.cols();
    int pivot_row = 0;
    for (int col = 0; col < cols && pivot_row < rows; ++col) {
        // gather the column gcd into h(pivot_row, col)
        for (int i = pivot_row + 1; i < rows; ++i) {
            if (h.at(i, col) == 0) continue;
            if (h.at(pivot_row, col) == 0) {
                h.swap_rows(pivot_row, i);
                u.swap_rows(pivot_row, i);
                continue;
            }
            Integer g, s, t;
            gcd2(h.at(pivot_row, col), h.at(i, col), g, s, t);
            Integer p = h.at(pivot_row, col) / g;
            Integer q = h.at(i, col) / g;
            // 2x2 unimodular transform [[s, t], [-q, p]] on rows (pivot_row, i)
            for (int j = 0; j < cols; ++j) {
                Integer a = h.at(pivot_row, j), b = h.at(i, j);
                h.at(pivot_row, j) = s * a + t * b;
                h.at(i, j) = p * b - q * a;
            }
            for (int j = 0; j < rows; ++j) {
                Integer a = u.at(pivot_row, j), b = u.at(i, j);
                u.at(pivot_row, j) = s * a + t * b;
                u.at(i, j) = p * b - q * a;
            }
        }
        if (h.at(pivot_row, col) == 0) continue;
        if (h.at(pivot_row, col) < 0) {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        // reduce the entries above the pivot into [0, pivot)
        for (int i = 0; i < pivot_row; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(pivot_row, col).get_mpz_t());
            if (q != 0) {
                h.add_row(i, pivot_row, -q);
                u.add_row(i, pivot_row, -q);
            }
        }
        ++pivot_row;
    }
    return r;
}

SnfResult snf(const IntMatrix& m) {
    SnfResult r{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    IntMatrix& s = r.s;
    const int rows = m.rows(), cols = m.cols();
    const int steps = std::min(rows, cols);

    auto col_gcd_step = [&](int k) {
        // clear column k below the diagonal
        for (int i = k + 1; i < rows; ++i) {
            if (s.at(i, k) == 0) continue;
            Integer g, a, b;
            gcd2(s.at(k, k), s.at(i, k), g, a, b);
            Integer p = s.at(k, k) / g, q = s.at(i, k) / g;
            for (int j = 0; j < cols; ++j) {
                Integer x = s.at(k, j), y = s.at(i, j);
                s.at(k, j) = a * x + b * y;
                s.at(i, j) = p * y - q * x;
            }
            for (int j = 0; j < rows; ++j) {
                Integer x = r.u.at(k, j), y = r.u.at(i, j);
                r.u.at(k, j) = a * x + b * y;
                r.u.at(i, j) = p * y - q * x;
            }
        }
    };
    auto row_gcd_step = [&](int k) {
        // clear row k right of the diagonal (column operations tracked in v)
        for (int j = k + 1; j < cols; ++j) {
            if (s.at(k, j) == 0) continue;
            Integer g, a, b;
            gcd2(s.at(k, k), s.at(k, j), g, a, b);
            Integer p = s.at(k, k) / g, q = s.at(k, j) / g;
            for (int i = 0; i < rows; ++i) {
                Integer x = s.at(i, k), y = s.at(i, j);
                s.at(i, k) = a * x + b * y;
                s.at(i, j) = p * y - q * x;
            }
            for (int i = 0; i < cols; ++i) {
                Integer x = r.v.at(i, k), y = r.v.at(i, j);
                r.v.at(i, k) = a * x + b * y;
                r.v.at(i, j) = p * y - q * x;
            }
        }
    };
    auto column_has_offdiag = [&](int k) {
        for (int i = k + 1; i < rows; ++i)
            if (s.at(i, k) != 0) return true;
        return false;
    };
    auto row_has_offdiag = [&](int k) {
        for (int j = k + 1; j < cols; ++j)
            if (s.at(k, j) != 0) return true;
        return false;
    };

    for (int k = 0; k < steps; ++k) {
        // move a nonzero entry to the diagonal slot
        int pi = -1, pj = -1;
        for (int i = k; i < rows && pi < 0; ++i)
            for (int j = k; j < cols; ++j)
                if (s.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break; // remaining block is zero
        if (pi != k) {
            s.swap_rows(k, pi);
            r.u.swap_rows(k, pi);
        }
        if (pj != k) {
            for (int i = 0; i < rows; ++i) std::swap(s.at(i, k), s.at(i, pj));
            for (int i = 0; i < cols; ++i) std::swap(r.v.at(i, k), r.v.at(i, pj));
        }
        while (column_has_offdiag(k) || row_has_offdiag(k)) {
            col_gcd_step(k);
            row_gcd_step(k);
        }
        if (s.at(k, k) < 0) {
            s.negate_row(k);
            r.u.negate_row(k);
        }
    }
    // enforce the divisibility chain
    for (int k = 0; k + 1 < steps; ++k) {
        if (s.at(k, k) == 0) continue;
        for (int j = k + 1; j < steps; ++j) {
            if (s.at(j, j) % s.at(k, k) == 0) continue;
            // fold s(j,j) into column k, then re-diagonalize the 2x2 block
            for (int i = 0; i < rows; ++i) s.at(i, k) += s.at(i, j);
            for (int i = 0; i < cols; ++i) r.v.at(i, k) += r.v.at(i, j);
            while (column_has_offdiag(k) || row_has_offdiag(k)) {
                col_gcd_step(k);
                row_gcd_step(k);
            }
            if (s.at(k, k) < 0) {
                s.negate_row(k);
                r.u.negate_row(k);
            }
            if (s.at(j, j) < 0) {
                s.negate_row(j);
                r.u.negate_row(j);
            }
        }
    }
    return r;
}

std::optional<IntegerSolution> solve_integer(const IntMatrix& a, std::span<const Integer> b) {
    if (a.rows() != static_cast<int>(b.size()))
        throw std::invalid_argument("solve_integer dimension mismatch");
    SnfResult f = snf(a);
    const int rows = a.rows(), cols = a.cols();
    std::vector<Integer> ub = f.u * b;
    std::vector<Integer> y(cols, Integer(0));
    const int steps = std::min(rows, cols);
    for (int i = 0; i < rows; ++i) {
        Integer d = (i < steps) ? f.s.at(i, i) : Integer(0);
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % d != 0) return std::nullopt;
            y[i] = ub[i] / d;
        }
    }
    IntegerSolution sol;
    sol.x0 = f.v * y;
    for (int j = 0; j < cols; ++j) {
        bool free_col = j >= steps || f.s.at(j, j) == 0;
        if (!free_col) continue;
        std::vector<Integer> k(cols);
        for (int i = 0; i < cols; ++i) k[i] = f.v.at(i, j);
        sol.kernel.push_back(std::move(k));
    }
    return sol;
}

int rational_rank(const RatMatrix& m) {
    RatMatrix a = m;
    const int rows = a.rows(), cols = a.cols();
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int p = -1;
        for (int i = rank; i < rows; ++i)
            if (a.at(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        for (int j = 0; j < cols; ++j) std::swap(a.at(rank, j), a.at(p, j));
        for (int i = rank + 1; i < rows; ++i) {
            if (a.at(i, col) == 0) continue;
            Rational f = a.at(i, col) / a.at(rank, col);
            for (int j = col; j < cols; ++j) a.at(i, j) -= f * a.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

std::optional<std::vector<Rational>> solve_rational(const RatMatrix& m, std::span<const Rational> rhs) {
    if (m.rows() != static_cast<int>(rhs.size()))
        throw std::invalid_argument("solve_rational dimension mismatch");
    const int rows = m.rows(), cols = m.cols();
    RatMatrix a(rows, cols + 1);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) a.at(i, j) = m.at(i, j);
        a.at(i, cols) = rhs[i];
    }
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int p = -1;
        for (int i = rank; i < rows; ++i)
            if (a.at(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        for (int j = 0; j <= cols; ++j) std::swap(a.at(rank, j), a.at(p, j));
        Rational inv = 1 / a.at(rank, col);
        for (int j = col; j <= cols; ++j) a.at(rank, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == rank || a.at(i, col) == 0) continue;
            Rational f = a.at(i, col);
            for (int j = col; j <= cols; ++j) a.at(i, j) -= f * a.at(rank, j);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (int i = rank; i < rows; ++i)
        if (a.at(i, cols) != 0) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (int i = 0; i < rank; ++i) x[pivot_col[i]] = a.at(i, cols);
    return x;
}

std::vector<std::vector<Integer>> left_kernel_lattice(const RatMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    // scale each column to integers; column scaling preserves the left kernel
    IntMatrix mi(rows, cols);
    for (int j = 0; j < cols; ++j) {
        Integer l(1);
        for (int i = 0; i < rows; ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den_mpz_t());
        for (int i = 0; i < rows; ++i) {
            Rational v = m.at(i, j) * Rational(l);
            mi.at(i, j) = v.get_num();
        }
    }
    HnfResult f = hnf(mi);
    std::vector<std::vector<Integer>> basis;
    for (int i = 0; i < rows; ++i) {
        bool zero = true;
        for (int j = 0; j < cols; ++j)
            if (f.h.at(i, j) != 0) {
                zero = false;
                break;
            }
        if (!zero) continue;
        std::vector<Integer> k(rows);
        for (int j = 0; j < rows; ++j) k[j] = f.u.at(i, j);
        basis.push_back(std::move(k));
    }
    return basis;
}

} // namespace rotvec
