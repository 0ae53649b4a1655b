#include "rotvec/conjugacy.hpp"

#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace rotvec {

namespace {

Integer mod_positive(const Integer& a, const Integer& d) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return r;
}

Integer invert_mod(const Integer& k, const Integer& d) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), k.get_mpz_t(), d.get_mpz_t()) == 0)
        throw std::logic_error("no modular inverse");
    return r;
}

} // namespace

IntMatrix SU2Certificate::block() const {
    const int n = a.rows();
    IntMatrix b(n + 1, n + 1);
    b.at(0, 0) = sign;
    for (int j = 0; j < n; ++j) b.at(0, 1 + j) = ell.at(j);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b.at(1 + i, 1 + j) = a.at(i, j);
    return b;
}

std::optional<ZModMembership> membership_zmod(const ExactReal& target,
                                              std::span<const ExactReal> gens) {
    const SymbolTablePtr& table = target.table();
    for (const ExactReal& g : gens)
        if (g.table() != table)
            throw std::invalid_argument("membership over mixed symbol tables");
    const int nsym = table->size();
    const int ng = static_cast<int>(gens.size());
    // unknowns: (ell_0 .. ell_{ng-1}, N); one equation per symbol plus the
    // rational equation carrying N. Each row is scaled to integers.
    RatMatrix sys(nsym + 1, ng + 1);
    std::vector<Rational> rhs(nsym + 1);
    std::vector<std::vector<Rational>> gcoords;
    gcoords.reserve(gens.size());
    for (const ExactReal& g : gens) gcoords.push_back(coordinates(g));
    std::vector<Rational> tcoords = coordinates(target);
    for (int s = 0; s < nsym; ++s) {
        for (int i = 0; i < ng; ++i) sys.at(s, i) = gcoords[i][1 + s];
        rhs[s] = tcoords[1 + s];
    }
    for (int i = 0; i < ng; ++i) sys.at(nsym, i) = gcoords[i][0];
    sys.at(nsym, ng) = 1;
    rhs[nsym] = tcoords[0];

    IntMatrix ai(nsym + 1, ng + 1);
    std::vector<Integer> bi(nsym + 1);
    for (int r = 0; r <= nsym; ++r) {
        Integer l(1);
        for (int c = 0; c <= ng; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), sys.at(r, c).get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rhs[r].get_den_mpz_t());
        for (int c = 0; c <= ng; ++c) {
            Rational v = sys.at(r, c) * Rational(l);
            ai.at(r, c) = v.get_num();
        }
        Rational v = rhs[r] * Rational(l);
        bi[r] = v.get_num();
    }
    auto sol = solve_integer(ai, bi);
    if (!sol) return std::nullopt;
    ZModMembership m;
    m.ell.assign(sol->x0.begin(), sol->x0.begin() + ng);
    m.n = sol->x0[ng];
    return m;
}

namespace {

/*
 * Decision rule for torus rotations, validated against the brute-force
 * oracle. Reduce both vectors to normal form (betas, k/d, zeros) with
 * witnessing transforms G, G'. A conjugating matrix exists iff one exists
 * between the normal forms, and any such matrix B must have the block shape
 *
 *      [ M  c  0 ]      M in GL_m(Z),  c in Z^m,
 *  B = [ 0  a  u ]      a with gcd(a, d) = 1,  u in Z^z,
 *      [ 0  dw D ]      w in Z^z,  D in GL_z(Z),
 *
 * because the betas are rationally independent irrationals and the zero
 * slots must stay zero mod Z. Reading off the rows: beta' = M beta + v with
 * v in (1/d)Z^m, and a*k = k' (mod d). When z = 0 unimodularity forces
 * a = +-1; when z >= 1 any a coprime to d can be completed, and since both
 * k and k' are coprime to d that congruence is always solvable. Conversely
 * every choice below assembles into a unimodular B mapping one normal form
 * to the other, so the conditions are exact.
 */
struct TorusDecision {
    bool conjugate = false;
    IntMatrix a;
};

TorusDecision decide_torus(const RotationVector& rho_f, const RotationVector& rho_g) {
    if (rho_f.size() != rho_g.size())
        throw std::invalid_argument("rotation vectors of different lengths");
    if (rho_f.table() != rho_g.table())
        throw std::invalid_argument("rotation vectors over different symbol tables");
    const int n = rho_f.size();
    const SymbolTablePtr& table = rho_f.table();

    NormalForm nf = normal_form(rho_f);
    NormalForm ng = normal_form(rho_g);
    TorusDecision out;
    if (nf.m != ng.m || nf.d != ng.d) return out;
    const int m = nf.m;
    const Integer& d = nf.d;
    const int z = n - m - (d != 1 ? 1 : 0);

    // express each beta'_i over {1, beta_1..beta_m}; the representation is
    // unique, so conjugacy forces it to be integral with |det| = 1
    RatMatrix mm(m, m);
    std::vector<Rational> v(m);
    if (m > 0) {
        const int nsym = table->size();
        RatMatrix basis(nsym, m);
        for (int j = 0; j < m; ++j) {
            std::vector<Rational> c = coordinates(nf.betas[j]);
            for (int s = 0; s < nsym; ++s) basis.at(s, j) = c[1 + s];
        }
        for (int i = 0; i < m; ++i) {
            std::vector<Rational> c = coordinates(ng.betas[i]);
            std::vector<Rational> rhs(c.begin() + 1, c.end());
            auto row = solve_rational(basis, rhs);
            if (!row) return out;
            v[i] = ng.betas[i].rat();
            for (int j = 0; j < m; ++j) {
                if ((*row)[j].get_den() != 1) return out;
                mm.at(i, j) = (*row)[j];
                v[i] -= (*row)[j] * nf.betas[j].rat();
            }
            Rational dv = v[i] * Rational(d);
            if (dv.get_den() != 1) return out;
        }
    }
    IntMatrix mi(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) mi.at(i, j) = mm.at(i, j).get_num();
    if (m > 0 && !is_unimodular(mi)) return out;

    Integer a_scalar(1);
    if (d != 1) {
        if (z == 0) {
            if (mod_positive(ng.k - nf.k, d) == 0)
                a_scalar = 1;
            else if (mod_positive(ng.k + nf.k, d) == 0)
                a_scalar = -1;
            else
                return out;
        } else {
            a_scalar = mod_positive(ng.k * invert_mod(nf.k, d), d);
        }
    }

    // assemble B = [[M, c, 0], [0, S]] mapping normal form to normal form
    IntMatrix b = IntMatrix::identity(n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) b.at(i, j) = mi.at(i, j);
    if (d != 1) {
        Integer kinv = invert_mod(nf.k, d);
        for (int i = 0; i < m; ++i) {
            Rational dvq = v[i] * Rational(d);
            b.at(i, m) = mod_positive(kinv * dvq.get_num(), d);
        }
        if (z == 0) {
            b.at(m, m) = a_scalar;
        } else {
            std::vector<Integer> col(1 + z, Integer(0));
            col[0] = a_scalar;
            col[1] = d;
            IntMatrix s = unimodular_complete(col, 0).transposed();
            for (int i = 0; i <= z; ++i)
                for (int j = 0; j <= z; ++j) b.at(m + i, m + j) = s.at(i, j);
        }
    }

    out.conjugate = true;
    out.a = inverse_unimodular(ng.transform) * b * nf.transform;
    return out;
}

} // namespace

std::optional<TorusCertificate> torus_conjugate(const RotationVector& rho_f,
                                                const RotationVector& rho_g) {
    TorusDecision d = decide_torus(rho_f, rho_g);
    if (!d.conjugate) return std::nullopt;
    TorusCertificate cert{std::move(d.a)};
    if (!verify_certificate(cert, rho_f, rho_g))
        throw std::logic_error("constructed torus certificate failed verification");
    return cert;
}

std::optional<SU2Certificate> su2_conjugate(const RotationVector& rho,
                                            const RotationVector& rho_prime) {
    if (rho.size() != rho_prime.size())
        throw std::invalid_argument("rotation vectors of different lengths");
    if (rho.size() < 2) throw std::invalid_argument("su2 vectors need length >= 2");
    auto tail_cert = torus_conjugate(rho.tail(), rho_prime.tail());
    if (!tail_cert) return std::nullopt;
    std::span<const ExactReal> gens(rho.entries().data() + 1, rho.size() - 1);
    // theta_0' = s*theta_0 + ell*tail (mod Z); the ell row is independent of
    // the tail block, so the two searches do not interact
    for (int s : {1, -1}) {
        ExactReal target = rho_prime[0] - (s == 1 ? rho[0] : -rho[0]);
        auto mem = membership_zmod(target, gens);
        if (!mem) continue;
        SU2Certificate cert{s, std::move(mem->ell), tail_cert->a};
        if (!verify_certificate(cert, rho, rho_prime))
            throw std::logic_error("constructed su2 certificate failed verification");
        return cert;
    }
    return std::nullopt;
}

bool verify_certificate(const TorusCertificate& cert, const RotationVector& rho_f,
                        const RotationVector& rho_g) {
    if (cert.a.rows() != rho_f.size() || cert.a.cols() != rho_f.size()) return false;
    if (rho_f.size() != rho_g.size()) return false;
    if (!is_unimodular(cert.a)) return false;
    return apply_matrix(rho_f, cert.a) == rho_g;
}

bool verify_certificate(const SU2Certificate& cert, const RotationVector& rho,
                        const RotationVector& rho_prime) {
    const int n = rho.size() - 1;
    if (n < 1 || rho_prime.size() != rho.size()) return false;
    if (cert.sign != 1 && cert.sign != -1) return false;
    if (static_cast<int>(cert.ell.size()) != n) return false;
    if (cert.a.rows() != n || cert.a.cols() != n) return false;
    if (!is_unimodular(cert.a)) return false;
    return apply_matrix(rho, cert.block()) == rho_prime;
}

namespace {

Rational frac(const Rational& q) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return q - Rational(fl);
}

using OracleState = std::vector<Rational>;

std::vector<Rational> rational_entries(const RotationVector& rho) {
    std::vector<Rational> v;
    v.reserve(rho.size());
    for (const ExactReal& e : rho.entries()) {
        if (!e.is_rational())
            throw std::invalid_argument("oracle requires purely rational rotation vectors");
        v.push_back(frac(e.rat()));
    }
    return v;
}

} // namespace

bool brute_force_oracle(const RotationVector& rho_f, const RotationVector& rho_g,
                        OracleMode mode) {
    if (rho_f.size() != rho_g.size())
        throw std::invalid_argument("rotation vectors of different lengths");
    OracleState start = rational_entries(rho_f);
    OracleState target = rational_entries(rho_g);
    const int n = static_cast<int>(start.size());
    if (mode == OracleMode::su2 && n < 2)
        throw std::invalid_argument("su2 oracle needs length >= 2");
    const int lo = mode == OracleMode::su2 ? 1 : 0; // first row of the A block

    std::vector<std::function<void(OracleState&)>> gens;
    auto negate = [](OracleState& s, int i) { s[i] = frac(-s[i]); };
    auto add = [](OracleState& s, int i, int j) { s[i] = frac(s[i] + s[j]); };
    for (int i = lo; i < n; ++i)
        gens.push_back([=](OracleState& s) { negate(s, i); });
    for (int i = lo; i < n; ++i)
        for (int j = lo; j < n; ++j)
            if (i != j) gens.push_back([=](OracleState& s) { add(s, i, j); });
    for (int i = lo; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            gens.push_back([=](OracleState& s) { std::swap(s[i], s[j]); });
    if (mode == OracleMode::su2) {
        gens.push_back([=](OracleState& s) { negate(s, 0); });
        for (int j = 1; j < n; ++j)
            gens.push_back([=](OracleState& s) { add(s, 0, j); });
    }

    std::set<OracleState> seen{start};
    std::deque<OracleState> queue{start};
    while (!queue.empty()) {
        OracleState cur = std::move(queue.front());
        queue.pop_front();
        if (cur == target) return true;
        for (const auto& g : gens) {
            OracleState next = cur;
            g(next);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return false;
}

} // namespace rotvec
