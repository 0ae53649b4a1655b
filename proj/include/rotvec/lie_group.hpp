#pragma once

#include "rotvec/conjugacy.hpp"

#include <complex>
#include <span>
#include <vector>

namespace rotvec {

/// Unit quaternion (w, x, y, z), identified with the SU(2) matrix
/// [[z1, -conj(z2)], [z2, conj(z1)]] via z1 = w + ix, z2 = y + iz.
/// Multiplication is the matrix product; the norm is renormalized after
/// every product.
struct SU2Element {
    double w = 1, x = 0, y = 0, z = 0;

    static SU2Element from_complex(std::complex<double> z1, std::complex<double> z2);
    static SU2Element diagonal(double phase); // diag(e^{2 pi i phase}, conj)

    std::complex<double> z1() const { return {w, x}; }
    std::complex<double> z2() const { return {y, z}; }
    double norm() const;
    void renormalize();

    SU2Element operator*(const SU2Element& o) const;
    SU2Element conjugated() const; // entrywise complex conjugation
    SU2Element inverse() const;
};

/// An element of SU(2) x T^n: an SU(2) factor plus n torus angles in [0,1).
struct GroupPoint {
    SU2Element su2;
    std::vector<double> angles;
};

// Group product; the left action of g is x -> multiply(g, x).
GroupPoint multiply(const GroupPoint& g, const GroupPoint& x);
inline GroupPoint left_action(const GroupPoint& g, const GroupPoint& x) { return multiply(g, x); }
GroupPoint inverse(const GroupPoint& g);
GroupPoint identity_point(int n);

// Max of the SU(2) chordal distance and the per-angle circle distances.
double distance(const GroupPoint& a, const GroupPoint& b);

// Maximal-torus element with coordinates theta = (theta_0, ..., theta_n):
// the diagonal SU(2) factor carries the phase theta_0 + theta_1 + ... +
// theta_n and the torus factor the tail angles.
GroupPoint torus_embed(std::span<const double> theta);

struct TorusRepresentative {
    std::vector<double> theta; // torus coordinates of t
    GroupPoint s;              // conjugator with s*g = t*s
};

// Diagonalizes the SU(2) factor (eigenphase branch in [0, 1/2]) and returns
// the torus coordinates of the representative together with the conjugator.
TorusRepresentative to_torus_representative(const GroupPoint& g);

// N-th iterate of the translation lift x -> x + theta, divided by N.
std::vector<double> estimate_rotation_vector(std::span<const double> theta,
                                             std::span<const double> x0, long steps);

/// Evaluator for the explicit conjugacy homeomorphisms: a phase twist of the
/// SU(2) factor by e^{2 pi i ell*phi} (entrywise conjugation first for the
/// orientation-reversed variant) and the unimodular map phi -> A*phi on the
/// torus factor.
struct ConjugacyMap {
    enum class Kind { h1, h2 };
    Kind kind = Kind::h1;
    std::vector<Integer> ell;
    IntMatrix a;
    IntMatrix a_inv;

    GroupPoint apply(const GroupPoint& u) const;
};

// sign +1 builds the direct twist map, sign -1 the conjugated one.
ConjugacyMap build_conjugacy_map(int sign, std::span<const Integer> ell, const IntMatrix& a);

// Map realizing a certificate between embedded rotation vectors. The torus
// coordinates fold the angle sum into the SU(2) phase, so the twist row of
// the map is ell + colsum(a) - sign * 1.
ConjugacyMap certificate_conjugacy_map(const SU2Certificate& cert);

// Max over seeded random sample points of ||map(g x) - g' map(x)|| in the
// product metric.
double verify_conjugacy_numeric(const ConjugacyMap& map, const GroupPoint& g,
                                const GroupPoint& g_prime, int samples, unsigned seed);

GroupPoint embed_rotation_vector(const RotationVector& rho);

} // namespace rotvec
