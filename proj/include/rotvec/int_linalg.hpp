#pragma once

#include "rotvec/exact_real.hpp"

#include <optional>
#include <span>
#include <vector>

namespace rotvec {

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Integer(0)) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Integer& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Integer& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    std::vector<Integer> operator*(std::span<const Integer> v) const;
    IntMatrix transposed() const;

    void swap_rows(int i, int j);
    void negate_row(int i);
    // row i += q * row j
    void add_row(int i, int j, const Integer& q);

    bool operator==(const IntMatrix& o) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Integer> a_;
};

/// Dense rational matrix.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Rational(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

struct ExtGcd {
    Integer g; // gcd, nonnegative; 0 only for an all-zero input
    std::vector<Integer> coeffs; // sum coeffs[i]*values[i] == g
};

// Extended gcd of a nonempty list.
ExtGcd ext_gcd(std::span<const Integer> values);

// Completes a primitive integer row (gcd 1) to a matrix in GL_n(Z) whose row
// at `index` is the given one. The construction is the deterministic
// recursive one: split off the leading entry, recurse on the reduced tail,
// stitch with a Bezout pair, then rotate the assembled row into place.
IntMatrix unimodular_complete(std::span<const Integer> row, int index);

// Exact determinant by fraction-free (Bareiss) elimination.
Integer det(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);

// Exact inverse of a matrix with determinant +-1.
IntMatrix inverse_unimodular(const IntMatrix& m);

struct HnfResult {
    IntMatrix h; // row-style Hermite normal form of the input
    IntMatrix u; // unimodular, u * input == h
};

// Row-style Hermite normal form: echelon, positive pivots, entries above each
// pivot reduced into [0, pivot), zero rows last.
HnfResult hnf(const IntMatrix& m);

struct SnfResult {
    IntMatrix s; // diagonal, d_i >= 0, d_i | d_{i+1}
    IntMatrix u; // unimodular
    IntMatrix v; // unimodular, u * input * v == s
};

SnfResult snf(const IntMatrix& m);

struct IntegerSolution {
    std::vector<Integer> x0; // one solution of A x = b
    std::vector<std::vector<Integer>> kernel; // lattice basis of {x : A x = 0}
};

// Solves A x = b over the integers; nullopt when no integer solution exists.
std::optional<IntegerSolution> solve_integer(const IntMatrix& a, std::span<const Integer> b);

// Rank over Q by exact Gaussian elimination.
int rational_rank(const RatMatrix& m);

// Solves M x = rhs over Q; nullopt when inconsistent. When the system is
// underdetermined the free variables are set to zero.
std::optional<std::vector<Rational>> solve_rational(const RatMatrix& m, std::span<const Rational> rhs);

// Basis of the left kernel lattice {k in Z^rows : k * M = 0} of a rational
// matrix, via HNF of the column-scaled integer matrix. Every basis vector is
// primitive; the list is empty exactly when the rows are Q-independent.
std::vector<std::vector<Integer>> left_kernel_lattice(const RatMatrix& m);

} // namespace rotvec
