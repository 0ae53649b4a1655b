#pragma once

#include "rotvec/rotation.hpp"

#include <optional>

namespace rotvec {

/// Witness that two torus rotation vectors are related by a unimodular matrix
/// mod Z^n: apply_matrix(rho_f, a) == rho_g entrywise mod Z.
struct TorusCertificate {
    IntMatrix a;

    bool operator==(const TorusCertificate&) const = default;
};

/// Witness for translation actions on SU(2) x T^n: the block matrix
/// [[sign, ell], [0, a]] maps one rotation vector to the other mod Z^{n+1}.
struct SU2Certificate {
    int sign = 1; // +1 or -1
    std::vector<Integer> ell;
    IntMatrix a;

    IntMatrix block() const;

    bool operator==(const SU2Certificate&) const = default;
};

struct ZModMembership {
    std::vector<Integer> ell;
    Integer n{0};
};

// Decides target = sum ell_i * gens_i + n with all unknowns integers, i.e.
// membership of target in Z*1 + sum Z*gens_i, exactly.
std::optional<ZModMembership> membership_zmod(const ExactReal& target,
                                              std::span<const ExactReal> gens);

// Decision procedure for topological conjugacy of torus rotations, returning
// an explicit certificate on success.
std::optional<TorusCertificate> torus_conjugate(const RotationVector& rho_f,
                                                const RotationVector& rho_g);

// Decision procedure for translation actions on SU(2) x T^n; entry 0 is the
// SU(2) angle, the rest the torus tail. Lengths must be >= 2.
std::optional<SU2Certificate> su2_conjugate(const RotationVector& rho,
                                            const RotationVector& rho_prime);

// Re-checks a certificate with exact arithmetic, independent of how it was
// produced: required block shape, |det| = 1, and the mod-Z mapping property.
bool verify_certificate(const TorusCertificate& cert, const RotationVector& rho_f,
                        const RotationVector& rho_g);
bool verify_certificate(const SU2Certificate& cert, const RotationVector& rho,
                        const RotationVector& rho_prime);

enum class OracleMode { torus, su2 };

// Ground truth for purely rational vectors: breadth-first search of the orbit
// of rho_f under a generating set of the allowed transforms, mod Z^n. Throws
// std::invalid_argument when an entry is irrational.
bool brute_force_oracle(const RotationVector& rho_f, const RotationVector& rho_g,
                        OracleMode mode);

} // namespace rotvec
