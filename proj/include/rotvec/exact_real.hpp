#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rotvec {

using Integer = mpz_class;
using Rational = mpq_class;

/// Session-wide table of irrational symbols. Each symbol is a name plus a
/// floating-point approximation used only for numeric verification; the
/// declaration order fixes the coordinate order of every value built on top
/// of the table. The caller asserts that the declared reals are rationally
/// independent irrationals; nothing here can prove that.
class SymbolTable {
public:
    // Returns the index of the new symbol. Throws std::invalid_argument on a
    // duplicate or malformed name, or a non-finite / zero approximation.
    int declare(const std::string& name, double approx);

    int size() const { return static_cast<int>(entries_.size()); }
    const std::string& name(int i) const { return entries_.at(i).name; }
    double approx(int i) const { return entries_.at(i).approx; }
    // -1 when the name is not declared.
    int index_of(std::string_view name) const;

private:
    struct Entry {
        std::string name;
        double approx;
    };
    std::vector<Entry> entries_;
    std::map<std::string, int, std::less<>> index_;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

/// A real number of the form q0 + sum_i q_i * s_i with all q rational and the
/// s_i symbols from one table. Values are immutable; arithmetic is exact.
/// Only finitely many coefficients are stored and none of them is zero.
class ExactReal {
public:
    ExactReal() = default;

    static ExactReal constant(Rational q, SymbolTablePtr table);
    static ExactReal symbol(int index, SymbolTablePtr table);

    const Rational& rat() const { return rat_; }
    const std::map<int, Rational>& coeffs() const { return coeffs_; }
    const SymbolTablePtr& table() const { return table_; }

    bool is_rational() const { return coeffs_.empty(); }
    bool is_zero() const { return coeffs_.empty() && rat_ == 0; }

    ExactReal operator-() const;
    ExactReal operator+(const ExactReal& o) const;
    ExactReal operator-(const ExactReal& o) const;

    bool operator==(const ExactReal& o) const;

private:
    friend ExactReal scale(const Rational& q, const ExactReal& x);
    friend ExactReal parse(std::string_view text, SymbolTablePtr table);

    Rational rat_{0};
    std::map<int, Rational> coeffs_;
    SymbolTablePtr table_;
};

// q * x, exact.
ExactReal scale(const Rational& q, const ExactReal& x);

// Equality in R/Z: same irrational part and integer difference of the
// rational parts.
bool eq_mod_z(const ExactReal& x, const ExactReal& y);

// Representative with rational part reduced into [0,1). The coefficients are
// untouched, so the represented real may still lie outside [0,1); only the
// residue class mod Z is canonical.
ExactReal canonical_mod_z(const ExactReal& x);

// Coordinates over the basis {1, s_1, ..., s_k} in table order, zeros
// included. Length is 1 + table->size().
std::vector<Rational> coordinates(const ExactReal& x);

// Double-precision evaluation using the table approximations.
double approx(const ExactReal& x);

// Parses `term (('+'|'-') term)*` with term = rational | rational'*'symbol |
// symbol and rational = ['-']p['/'q]. Throws std::invalid_argument on unknown
// symbols, malformed rationals, or a zero denominator.
ExactReal parse(std::string_view text, SymbolTablePtr table);

// Grammar-compatible rendering; parse(render(x), x.table()) == x.
std::string render(const ExactReal& x);

std::string to_string(const Rational& q);

} // namespace rotvec
