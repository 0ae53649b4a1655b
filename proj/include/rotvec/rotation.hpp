#pragma once

#include "rotvec/exact_real.hpp"
#include "rotvec/int_linalg.hpp"

#include <optional>

namespace rotvec {

/// Rotation vector of a torus translation: n exact reals stored mod Z, each
/// with its rational part reduced into [0,1).
class RotationVector {
public:
    RotationVector(std::vector<ExactReal> entries, SymbolTablePtr table);

    int size() const { return static_cast<int>(entries_.size()); }
    const ExactReal& operator[](int i) const { return entries_.at(i); }
    const std::vector<ExactReal>& entries() const { return entries_; }
    const SymbolTablePtr& table() const { return table_; }

    bool is_rational() const;
    // entries 1..n-1, same table
    RotationVector tail() const;

    bool operator==(const RotationVector& o) const;

private:
    std::vector<ExactReal> entries_;
    SymbolTablePtr table_;
};

// dim over Q of the span of the entries themselves (the rational direction
// counts). Computed on the canonical representatives.
int rank(const RotationVector& rho);

// dim over Q of span{1, entries...}/Q, i.e. the rank of the irrational
// coordinate block. Invariant under the unimodular action mod Z^n.
int reductive_rank(const RotationVector& rho);

std::vector<ExactReal> linear_combination(const IntMatrix& m, std::span<const ExactReal> entries);

// Integer combination of the entries followed by reduction mod Z; for square
// unimodular m this is the GL_n(Z) action on rotation vectors.
RotationVector apply_matrix(const RotationVector& rho, const IntMatrix& m);

struct IntegerRelation {
    std::vector<Integer> coeffs; // primitive: gcd 1
    Rational value;              // sum coeffs[i] * rho[i] == value
};

// A primitive integer relation sum coeffs[i]*rho[i] = value in Q, or nullopt
// when the entries are rationally independent.
std::optional<IntegerRelation> relation(const RotationVector& rho);

/// Image of a rotation vector under a witnessing unimodular transform:
/// (beta_1..beta_m, k/d, 0...) with the betas rationally independent
/// irrationals and gcd(k,d) = 1. The case d = 1, k = 0 encodes the absence of
/// a rational slot.
struct NormalForm {
    int m = 0;
    std::vector<ExactReal> betas;
    Integer k{0};
    Integer d{1};
    int zeros = 0;
    IntMatrix transform;

    // (beta_1..beta_m, k/d when d > 1, then zeros) as exact entries
    std::vector<ExactReal> vector(const SymbolTablePtr& table) const;

    bool operator==(const NormalForm&) const = default;
};

NormalForm normal_form(const RotationVector& rho);

struct OrbitInvariants {
    int dimension = 0;      // dimension of each component of the orbit closure
    Integer components{1};  // number of components
};

OrbitInvariants orbit_invariants(const RotationVector& rho);

enum class CaseTag { case1, case2, case3 };

/// Conjugacy invariants of a length-(n+1) vector (theta_0, torus tail):
/// reductive ranks and orbit component counts of the full vector and of the
/// tail, plus the trichotomy on theta_0.
struct InvariantProfile {
    int r = 0;
    int r_tilde = 0;
    Integer n_components{1};
    int r_tilde_prime = 0;
    Integer n_prime{1};
    CaseTag case_tag = CaseTag::case1;

    bool operator==(const InvariantProfile&) const = default;
};

InvariantProfile su2_profile(const RotationVector& rho);

const char* to_string(CaseTag tag);

} // namespace rotvec
