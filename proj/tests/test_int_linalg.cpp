#include "rotvec/int_linalg.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace rotvec;

namespace {

IntMatrix make(int rows, int cols, std::initializer_list<long> vals) {
    IntMatrix m(rows, cols);
    auto it = vals.begin();
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = *it++;
    return m;
}

bool is_row_hnf(const IntMatrix& h) {
    int last_pivot_col = -1;
    bool seen_zero_row = false;
    for (int i = 0; i < h.rows(); ++i) {
        int p = -1;
        for (int j = 0; j < h.cols(); ++j)
            if (h.at(i, j) != 0) {
                p = j;
                break;
            }
        if (p < 0) {
            seen_zero_row = true;
            continue;
        }
        if (seen_zero_row) return false;           // zero rows must be last
        if (p <= last_pivot_col) return false;     // echelon
        if (h.at(i, p) <= 0) return false;         // positive pivot
        for (int r = 0; r < i; ++r)                // reduced above the pivot
            if (h.at(r, p) < 0 || h.at(r, p) >= h.at(i, p)) return false;
        last_pivot_col = p;
    }
    return true;
}

} // namespace

TEST_CASE("ext_gcd satisfies the Bezout identity") {
    std::vector<Integer> v{12, 18};
    ExtGcd r = ext_gcd(v);
    CHECK(r.g == 6);
    CHECK(r.coeffs[0] * 12 + r.coeffs[1] * 18 == 6);

    std::vector<Integer> one{1};
    r = ext_gcd(one);
    CHECK(r.g == 1);
    CHECK(r.coeffs == std::vector<Integer>{1});

    std::vector<Integer> v3{4, 6, 9};
    r = ext_gcd(v3);
    CHECK(r.g == 1);
    CHECK(r.coeffs[0] * 4 + r.coeffs[1] * 6 + r.coeffs[2] * 9 == 1);

    std::vector<Integer> zeros{0, 0, 0};
    r = ext_gcd(zeros);
    CHECK(r.g == 0);
    CHECK(r.coeffs == std::vector<Integer>(3, Integer(0)));

    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> val(-40, 40);
    std::uniform_int_distribution<int> len(1, 6);
    for (int it = 0; it < 300; ++it) {
        std::vector<Integer> vals(len(rng));
        for (Integer& x : vals) x = val(rng);
        ExtGcd e = ext_gcd(vals);
        Integer acc = 0, g = 0;
        for (size_t i = 0; i < vals.size(); ++i) {
            acc += e.coeffs[i] * vals[i];
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), vals[i].get_mpz_t());
        }
        CHECK(acc == e.g);
        CHECK(e.g == g);
        for (const Integer& x : vals)
            if (e.g != 0) CHECK(x % e.g == 0);
    }
}

TEST_CASE("unimodular_complete places the row and has |det| = 1") {
    std::vector<Integer> e1{1, 0, 0};
    CHECK(unimodular_complete(e1, 0) == IntMatrix::identity(3));

    std::vector<Integer> r23{2, 3};
    IntMatrix g = unimodular_complete(r23, 0);
    CHECK(g.at(0, 0) == 2);
    CHECK(g.at(0, 1) == 3);
    CHECK(is_unimodular(g));

    std::vector<Integer> r{6, 10, 15};
    g = unimodular_complete(r, 2);
    CHECK(is_unimodular(g));
    for (int j = 0; j < 3; ++j) CHECK(g.at(2, j) == r[j]);

    std::vector<Integer> bad{2, 4};
    CHECK_THROWS_AS(unimodular_complete(bad, 0), std::invalid_argument);
    CHECK_THROWS_AS(unimodular_complete(std::vector<Integer>{}, 0), std::invalid_argument);

    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> val(-20, 20);
    std::uniform_int_distribution<int> len(1, 6);
    int done = 0;
    while (done < 500) {
        std::vector<Integer> row(len(rng));
        for (Integer& x : row) x = val(rng);
        if (ext_gcd(row).g != 1) continue;
        std::uniform_int_distribution<int> idx(0, static_cast<int>(row.size()) - 1);
        int at = idx(rng);
        IntMatrix m = unimodular_complete(row, at);
        CHECK(is_unimodular(m));
        for (size_t j = 0; j < row.size(); ++j) CHECK(m.at(at, static_cast<int>(j)) == row[j]);
        ++done;
    }
}

TEST_CASE("det is exact") {
    CHECK(det(IntMatrix::identity(3)) == 1);
    CHECK(det(make(2, 2, {1, 0, -2, 1})) == 1);
    CHECK(det(make(2, 2, {2, 3, 4, 6})) == 0);
    CHECK_FALSE(is_unimodular(make(2, 2, {2, 3, 4, 6})));
    CHECK_THROWS_AS(det(IntMatrix(2, 3)), std::invalid_argument);

    // compare against cofactor expansion on random 4x4 matrices
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> val(-9, 9);
    auto cofactor_det = [](auto&& self, const IntMatrix& m) -> Integer {
        if (m.rows() == 1) return m.at(0, 0);
        Integer acc = 0;
        for (int j = 0; j < m.cols(); ++j) {
            if (m.at(0, j) == 0) continue;
            IntMatrix sub(m.rows() - 1, m.cols() - 1);
            for (int r = 1; r < m.rows(); ++r) {
                int cc = 0;
                for (int c = 0; c < m.cols(); ++c) {
                    if (c == j) continue;
                    sub.at(r - 1, cc++) = m.at(r, c);
                }
            }
            Integer term = m.at(0, j) * self(self, sub);
            acc += (j % 2 == 0) ? term : Integer(-term);
        }
        return acc;
    };
    for (int it = 0; it < 50; ++it) {
        IntMatrix m(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m.at(i, j) = val(rng);
        CHECK(det(m) == cofactor_det(cofactor_det, m));
    }
}

TEST_CASE("hnf produces a certified row Hermite form") {
    HnfResult r = hnf(IntMatrix::identity(3));
    CHECK(r.h == IntMatrix::identity(3));
    CHECK(r.u == IntMatrix::identity(3));

    r = hnf(make(2, 1, {2, 3}));
    CHECK(r.h == make(2, 1, {1, 0}));
    CHECK(is_unimodular(r.u));
    CHECK(r.u * make(2, 1, {2, 3}) == r.h);

    IntMatrix diag = make(2, 2, {4, 0, 0, 6});
    r = hnf(diag);
    CHECK(r.h == diag);
    CHECK(r.u == IntMatrix::identity(2));

    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> val(-12, 12);
    std::uniform_int_distribution<int> dim(1, 6);
    for (int it = 0; it < 200; ++it) {
        IntMatrix m(dim(rng), dim(rng));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = val(rng);
        HnfResult f = hnf(m);
        CHECK(is_unimodular(f.u));
        CHECK(f.u * m == f.h);
        CHECK(is_row_hnf(f.h));
    }
}

TEST_CASE("snf produces a certified Smith form") {
    SnfResult r = snf(IntMatrix::identity(3));
    CHECK(r.s == IntMatrix::identity(3));

    r = snf(make(2, 2, {2, 0, 0, 3}));
    CHECK(r.s == make(2, 2, {1, 0, 0, 6}));

    r = snf(make(1, 1, {0}));
    CHECK(r.s == make(1, 1, {0}));

    std::mt19937_64 rng(37);
    std::uniform_int_distribution<int> val(-12, 12);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int it = 0; it < 200; ++it) {
        IntMatrix m(dim(rng), dim(rng));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = val(rng);
        SnfResult f = snf(m);
        CHECK(is_unimodular(f.u));
        CHECK(is_unimodular(f.v));
        CHECK(f.u * m * f.v == f.s);
        int steps = std::min(m.rows(), m.cols());
        Integer prod = 1;
        for (int i = 0; i < steps; ++i) {
            CHECK(f.s.at(i, i) >= 0);
            if (i + 1 < steps && f.s.at(i, i) != 0) CHECK(f.s.at(i + 1, i + 1) % f.s.at(i, i) == 0);
            if (i + 1 < steps && f.s.at(i, i) == 0) CHECK(f.s.at(i + 1, i + 1) == 0);
            prod *= f.s.at(i, i);
            for (int j = 0; j < steps; ++j)
                if (i != j) CHECK(f.s.at(i, j) == 0);
        }
        if (m.rows() == m.cols()) CHECK(prod == abs(det(m)));
    }
}

TEST_CASE("solve_integer decides solvability exactly") {
    auto r = solve_integer(make(1, 1, {2}), std::vector<Integer>{4});
    REQUIRE(r.has_value());
    CHECK(r->x0 == std::vector<Integer>{2});
    CHECK(r->kernel.empty());

    CHECK_FALSE(solve_integer(make(1, 1, {2}), std::vector<Integer>{3}).has_value());

    auto r2 = solve_integer(make(1, 2, {3, 5}), std::vector<Integer>{1});
    REQUIRE(r2.has_value());
    CHECK(r2->x0[0] * 3 + r2->x0[1] * 5 == 1);
    REQUIRE(r2->kernel.size() == 1);
    CHECK(r2->kernel[0][0] * 3 + r2->kernel[0][1] * 5 == 0);
    CHECK((abs(r2->kernel[0][0]) == 5 && abs(r2->kernel[0][1]) == 3));

    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> val(-9, 9);
    std::uniform_int_distribution<int> dim(1, 4);
    for (int it = 0; it < 200; ++it) {
        int rows = dim(rng), cols = dim(rng);
        IntMatrix a(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) a.at(i, j) = val(rng);
        std::vector<Integer> x(cols);
        for (Integer& v : x) v = val(rng);
        std::vector<Integer> b = a * x;
        auto sol = solve_integer(a, b);
        REQUIRE(sol.has_value());
        CHECK(a * sol->x0 == b);
        for (const auto& k : sol->kernel)
            CHECK(a * k == std::vector<Integer>(rows, Integer(0)));
    }
}

TEST_CASE("rational_rank by exact elimination") {
    RatMatrix z(3, 3);
    CHECK(rational_rank(z) == 0);
    RatMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    CHECK(rational_rank(id) == 3);
    RatMatrix p(2, 2);
    p.at(0, 0) = 1;
    p.at(0, 1) = 2;
    p.at(1, 0) = 2;
    p.at(1, 1) = 4;
    CHECK(rational_rank(p) == 1);
}

TEST_CASE("inverse_unimodular inverts exactly") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 100; ++it) {
        IntMatrix u = rotvec::testing::random_unimodular(rng, 1 + it % 5, 10);
        CHECK(u * inverse_unimodular(u) == IntMatrix::identity(u.rows()));
    }
    CHECK_THROWS_AS(inverse_unimodular(make(2, 2, {2, 0, 0, 1})), std::invalid_argument);
}
