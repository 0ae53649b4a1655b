#include "rotvec/lie_group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace rotvec {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double mod1(double x) {
    double r = x - std::floor(x);
    return r >= 1.0 ? r - 1.0 : r;
}

std::complex<double> unit_phase(double turns) {
    double t = two_pi * mod1(turns);
    return {std::cos(t), std::sin(t)};
}

double circle_distance(double a, double b) {
    double d = std::fabs(mod1(a) - mod1(b));
    return std::min(d, 1.0 - d);
}

} // namespace

SU2Element SU2Element::from_complex(std::complex<double> z1, std::complex<double> z2) {
    SU2Element e{z1.real(), z1.imag(), z2.real(), z2.imag()};
    e.renormalize();
    return e;
}

SU2Element SU2Element::diagonal(double phase) {
    return from_complex(unit_phase(phase), {0.0, 0.0});
}

double SU2Element::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

void SU2Element::renormalize() {
    double n = norm();
    if (n == 0.0) throw std::invalid_argument("zero quaternion");
    w /= n;
    x /= n;
    y /= n;
    z /= n;
}

SU2Element SU2Element::operator*(const SU2Element& o) const {
    // matrix product of [[z1, -conj z2], [z2, conj z1]] factors
    std::complex<double> a = z1() * o.z1() - std::conj(z2()) * o.z2();
    std::complex<double> b = z2() * o.z1() + std::conj(z1()) * o.z2();
    return from_complex(a, b);
}

SU2Element SU2Element::conjugated() const {
    return from_complex(std::conj(z1()), std::conj(z2()));
}

SU2Element SU2Element::inverse() const {
    // conjugate transpose
    return from_complex(std::conj(z1()), -z2());
}

GroupPoint multiply(const GroupPoint& g, const GroupPoint& x) {
    if (g.angles.size() != x.angles.size())
        throw std::invalid_argument("group points of different dimensions");
    GroupPoint r;
    r.su2 = g.su2 * x.su2;
    r.angles.reserve(g.angles.size());
    for (size_t i = 0; i < g.angles.size(); ++i) r.angles.push_back(mod1(g.angles[i] + x.angles[i]));
    return r;
}

GroupPoint inverse(const GroupPoint& g) {
    GroupPoint r;
    r.su2 = g.su2.inverse();
    r.angles.reserve(g.angles.size());
    for (double a : g.angles) r.angles.push_back(mod1(-a));
    return r;
}

GroupPoint identity_point(int n) {
    return GroupPoint{SU2Element{}, std::vector<double>(n, 0.0)};
}

double distance(const GroupPoint& a, const GroupPoint& b) {
    if (a.angles.size() != b.angles.size())
        throw std::invalid_argument("group points of different dimensions");
    double dw = a.su2.w - b.su2.w, dx = a.su2.x - b.su2.x;
    double dy = a.su2.y - b.su2.y, dz = a.su2.z - b.su2.z;
    double d = std::sqrt(dw * dw + dx * dx + dy * dy + dz * dz);
    for (size_t i = 0; i < a.angles.size(); ++i)
        d = std::max(d, circle_distance(a.angles[i], b.angles[i]));
    return d;
}

GroupPoint torus_embed(std::span<const double> theta) {
    if (theta.empty()) throw std::invalid_argument("torus coordinates must have length >= 1");
    double phase = 0;
    for (double t : theta) phase += t;
    GroupPoint g;
    g.su2 = SU2Element::diagonal(phase);
    g.angles.assign(theta.begin() + 1, theta.end());
    for (double& a : g.angles) a = mod1(a);
    return g;
}

TorusRepresentative to_torus_representative(const GroupPoint& g) {
    // eigenphase of the SU(2) factor: Re z1 = cos(2 pi t), branch t in [0, 1/2]
    std::complex<double> z1 = g.su2.z1();
    std::complex<double> z2 = g.su2.z2();
    double c = std::clamp(z1.real(), -1.0, 1.0);
    double t = std::acos(c) / two_pi;

    SU2Element s; // identity
    if (std::abs(z2) < 1e-15) {
        // already diagonal; swap the eigenvalues if the phase is in the lower branch
        if (z1.imag() < 0) s = SU2Element::from_complex({0.0, 0.0}, {1.0, 0.0});
    } else {
        // unit eigenvector v for the eigenvalue e^{2 pi i t}; the inverse of
        // [[v1, -conj v2], [v2, conj v1]] conjugates g.su2 to the diagonal
        std::complex<double> mu = unit_phase(t);
        std::complex<double> v1 = std::conj(z2);
        std::complex<double> v2 = z1 - mu;
        double n = std::sqrt(std::norm(v1) + std::norm(v2));
        v1 /= n;
        v2 /= n;
        s = SU2Element::from_complex(std::conj(v1), -v2);
    }

    TorusRepresentative rep;
    rep.s = GroupPoint{s, std::vector<double>(g.angles.size(), 0.0)};
    rep.theta.resize(g.angles.size() + 1);
    double tail_sum = 0;
    for (size_t i = 0; i < g.angles.size(); ++i) {
        rep.theta[1 + i] = mod1(g.angles[i]);
        tail_sum += rep.theta[1 + i];
    }
    // torus coordinates put the angle sum into the SU(2) phase
    rep.theta[0] = mod1(t - tail_sum);
    return rep;
}

std::vector<double> estimate_rotation_vector(std::span<const double> theta,
                                             std::span<const double> x0, long steps) {
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
    if (theta.size() != x0.size()) throw std::invalid_argument("dimension mismatch");
    std::vector<double> r(theta.size());
    for (size_t i = 0; i < theta.size(); ++i)
        r[i] = (x0[i] + static_cast<double>(steps) * theta[i]) / static_cast<double>(steps);
    return r;
}

GroupPoint ConjugacyMap::apply(const GroupPoint& u) const {
    const int n = a.rows();
    if (static_cast<int>(u.angles.size()) != n)
        throw std::invalid_argument("group point dimension mismatch");
    double twist = 0;
    for (int i = 0; i < n; ++i) twist += ell[i].get_d() * u.angles[i];
    std::complex<double> t = unit_phase(twist);
    SU2Element m = kind == Kind::h2 ? u.su2.conjugated() : u.su2;
    GroupPoint r;
    r.su2 = SU2Element::from_complex(t * m.z1(), std::conj(t) * m.z2());
    r.angles.resize(n);
    for (int i = 0; i < n; ++i) {
        double acc = 0;
        for (int j = 0; j < n; ++j) acc += a.at(i, j).get_d() * u.angles[j];
        r.angles[i] = mod1(acc);
    }
    return r;
}

ConjugacyMap build_conjugacy_map(int sign, std::span<const Integer> ell, const IntMatrix& a) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
    if (a.rows() != a.cols() || a.rows() != static_cast<int>(ell.size()))
        throw std::invalid_argument("twist row and matrix dimensions disagree");
    if (!is_unimodular(a)) throw std::invalid_argument("matrix must be unimodular");
    ConjugacyMap m;
    m.kind = sign == 1 ? ConjugacyMap::Kind::h1 : ConjugacyMap::Kind::h2;
    m.ell.assign(ell.begin(), ell.end());
    m.a = a;
    m.a_inv = inverse_unimodular(a);
    return m;
}

ConjugacyMap certificate_conjugacy_map(const SU2Certificate& cert) {
    const int n = cert.a.rows();
    std::vector<Integer> row(cert.ell);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) row[j] += cert.a.at(i, j);
        row[j] -= cert.sign;
    }
    return build_conjugacy_map(cert.sign, row, cert.a);
}

double verify_conjugacy_numeric(const ConjugacyMap& map, const GroupPoint& g,
                                const GroupPoint& g_prime, int samples, unsigned seed) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const size_t n = g.angles.size();
    double worst = 0;
    for (int k = 0; k < samples; ++k) {
        GroupPoint x;
        x.su2 = SU2Element{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
        x.su2.renormalize();
        x.angles.resize(n);
        for (size_t i = 0; i < n; ++i) x.angles[i] = unif(rng);
        GroupPoint lhs = map.apply(left_action(g, x));
        GroupPoint rhs = left_action(g_prime, map.apply(x));
        worst = std::max(worst, distance(lhs, rhs));
    }
    return worst;
}

GroupPoint embed_rotation_vector(const RotationVector& rho) {
    std::vector<double> theta(rho.size());
    for (int i = 0; i < rho.size(); ++i) theta[i] = approx(rho[i]);
    return torus_embed(theta);
}

} // namespace rotvec
