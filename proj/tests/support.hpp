#pragma once

#include "rotvec/rotation.hpp"

#include <random>

namespace rotvec::testing {

inline SymbolTablePtr table_ab() {
    auto t = std::make_shared<SymbolTable>();
    t->declare("a", 1.4142135623730951);  // sqrt(2)
    t->declare("b", 1.7320508075688772);  // sqrt(3)
    return t;
}

inline SymbolTablePtr table_abc() {
    auto t = std::make_shared<SymbolTable>();
    t->declare("a", 1.4142135623730951);
    t->declare("b", 1.7320508075688772);
    t->declare("c", 2.2360679774997896);  // sqrt(5)
    return t;
}

inline Rational random_rational(std::mt19937_64& rng, int max_den) {
    std::uniform_int_distribution<int> den(1, max_den);
    int q = den(rng);
    std::uniform_int_distribution<int> num(-2 * q, 2 * q);
    Rational r(num(rng), q);
    r.canonicalize();
    return r;
}

// random vector mixing rational parts with up to `max_symbols` symbols
inline RotationVector random_vector(std::mt19937_64& rng, const SymbolTablePtr& table, int length,
                                    int max_symbols, int max_den = 8) {
    std::uniform_int_distribution<int> coin(0, 2);
    std::vector<ExactReal> entries;
    entries.reserve(length);
    int nsym = std::min(max_symbols, table->size());
    for (int i = 0; i < length; ++i) {
        ExactReal e = ExactReal::constant(random_rational(rng, max_den), table);
        for (int s = 0; s < nsym; ++s) {
            if (coin(rng) != 0) continue; // sparse symbol usage
            Rational c = random_rational(rng, 3);
            if (c != 0) e = e + scale(c, ExactReal::symbol(s, table));
        }
        entries.push_back(e);
    }
    return RotationVector(std::move(entries), table);
}

inline RotationVector random_rational_vector(std::mt19937_64& rng, const SymbolTablePtr& table,
                                             int length, int max_den) {
    std::vector<ExactReal> entries;
    for (int i = 0; i < length; ++i)
        entries.push_back(ExactReal::constant(random_rational(rng, max_den), table));
    return RotationVector(std::move(entries), table);
}

// product of `ops` random elementary matrices (row adds, swaps, negations)
inline IntMatrix random_unimodular(std::mt19937_64& rng, int n, int ops) {
    IntMatrix m = IntMatrix::identity(n);
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> idx(0, n - 1);
    std::uniform_int_distribution<int> mult(1, 2);
    std::uniform_int_distribution<int> sgn(0, 1);
    for (int k = 0; k < ops; ++k) {
        int i = idx(rng), j = idx(rng);
        switch (n == 1 ? 1 : kind(rng)) {
            case 0:
                if (i != j) m.add_row(i, j, Integer(sgn(rng) ? mult(rng) : -mult(rng)));
                break;
            case 1:
                m.negate_row(i);
                break;
            default:
                m.swap_rows(i, j);
                break;
        }
    }
    return m;
}

} // namespace rotvec::testing
