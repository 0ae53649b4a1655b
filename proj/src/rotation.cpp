#include "rotvec/rotation.hpp"

#include <stdexcept>

namespace rotvec {

namespace {

// rows = entries, columns = coordinates over {1, s_1, ..., s_k}
RatMatrix coordinate_matrix(std::span<const ExactReal> entries, const SymbolTablePtr& table,
                            bool include_rational_column) {
    const int n = static_cast<int>(entries.size());
    const int k = table->size();
    RatMatrix m(n, include_rational_column ? 1 + k : k);
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> c = coordinates(entries[i]);
        if (include_rational_column)
            for (int j = 0; j <= k; ++j) m.at(i, j) = c[j];
        else
            for (int j = 0; j < k; ++j) m.at(i, j) = c[1 + j];
    }
    return m;
}

int rank_of(std::span<const ExactReal> entries, const SymbolTablePtr& table) {
    return rational_rank(coordinate_matrix(entries, table, true));
}

int reductive_rank_of(std::span<const ExactReal> entries, const SymbolTablePtr& table) {
    return rational_rank(coordinate_matrix(entries, table, false));
}

void normalize_sign(std::vector<Integer>& k) {
    for (const Integer& v : k) {
        if (v == 0) continue;
        if (v < 0)
            for (Integer& x : k) x = -x;
        break;
    }
}

// First primitive integer vector k with sum k_i * entries_i = 0 exactly.
// Exists iff the entries are Q-linearly dependent (rational column included).
std::optional<std::vector<Integer>> exact_relation(std::span<const ExactReal> entries,
                                                   const SymbolTablePtr& table) {
    auto basis = left_kernel_lattice(coordinate_matrix(entries, table, true));
    if (basis.empty()) return std::nullopt;
    normalize_sign(basis.front());
    return basis.front();
}

// First primitive integer vector k with sum k_i * entries_i rational.
std::optional<IntegerRelation> rational_relation(std::span<const ExactReal> entries,
                                                 const SymbolTablePtr& table) {
    auto basis = left_kernel_lattice(coordinate_matrix(entries, table, false));
    if (basis.empty()) return std::nullopt;
    normalize_sign(basis.front());
    IntegerRelation rel;
    rel.coeffs = basis.front();
    rel.value = 0;
    for (size_t i = 0; i < rel.coeffs.size(); ++i) rel.value += Rational(rel.coeffs[i]) * entries[i].rat();
    rel.value.canonicalize();
    return rel;
}

} // namespace

RotationVector::RotationVector(std::vector<ExactReal> entries, SymbolTablePtr table)
    : table_(std::move(table)) {
    if (entries.empty()) throw std::invalid_argument("rotation vector must have length >= 1");
    if (!table_) throw std::invalid_argument("null symbol table");
    entries_.reserve(entries.size());
    for (ExactReal& e : entries) {
        if (e.table() != table_)
            throw std::invalid_argument("rotation vector entries built over a different symbol table");
        entries_.push_back(canonical_mod_z(e));
    }
}

bool RotationVector::is_rational() const {
    for (const ExactReal& e : entries_)
        if (!e.is_rational()) return false;
    return true;
}

RotationVector RotationVector::tail() const {
    if (size() < 2) throw std::invalid_argument("tail of a length-1 vector");
    return RotationVector(std::vector<ExactReal>(entries_.begin() + 1, entries_.end()), table_);
}

bool RotationVector::operator==(const RotationVector& o) const {
    return table_ == o.table_ && entries_ == o.entries_;
}

int rank(const RotationVector& rho) { return rank_of(rho.entries(), rho.table()); }

int reductive_rank(const RotationVector& rho) {
    return reductive_rank_of(rho.entries(), rho.table());
}

std::vector<ExactReal> linear_combination(const IntMatrix& m, std::span<const ExactReal> entries) {
    if (m.cols() != static_cast<int>(entries.size()))
        throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<ExactReal> out;
    out.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        ExactReal acc = ExactReal::constant(0, entries.empty() ? nullptr : entries[0].table());
        for (int j = 0; j < m.cols(); ++j)
            acc = acc + scale(Rational(m.at(i, j)), entries[j]);
        out.push_back(acc);
    }
    return out;
}

RotationVector apply_matrix(const RotationVector& rho, const IntMatrix& m) {
    // the RotationVector constructor reduces every entry mod Z
    return RotationVector(linear_combination(m, rho.entries()), rho.table());
}

std::optional<IntegerRelation> relation(const RotationVector& rho) {
    return rational_relation(rho.entries(), rho.table());
}

std::vector<ExactReal> NormalForm::vector(const SymbolTablePtr& table) const {
    std::vector<ExactReal> v = betas;
    if (d != 1) v.push_back(ExactReal::constant(Rational(k, d), table));
    for (int i = 0; i < zeros; ++i) v.push_back(ExactReal::constant(0, table));
    return v;
}

NormalForm normal_form(const RotationVector& rho) {
    const int n = rho.size();
    const SymbolTablePtr& table = rho.table();
    std::vector<ExactReal> cur = rho.entries();
    IntMatrix g = IntMatrix::identity(n);

    auto apply_block = [&](const IntMatrix& block, int p) {
        // diag(block, I_{n-p}) acting on cur and accumulated into g
        IntMatrix full = IntMatrix::identity(n);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) full.at(i, j) = block.at(i, j);
        std::vector<ExactReal> next = linear_combination(full, cur);
        for (ExactReal& e : next) e = canonical_mod_z(e);
        cur = std::move(next);
        g = full * g;
    };

    // eliminate exact dependencies until the leading entries are Q-independent
    int p = n;
    while (p > 0) {
        std::span<const ExactReal> prefix(cur.data(), p);
        if (rank_of(prefix, table) == p) break;
        auto rel = exact_relation(prefix, table);
        apply_block(unimodular_complete(*rel, p - 1), p);
        // the combination is exactly zero, so slot p-1 joins the zero tail
        --p;
    }

    NormalForm nf;
    nf.transform = g;
    std::span<const ExactReal> prefix(cur.data(), p);
    int rr = reductive_rank_of(prefix, table);
    if (rr == p) {
        // the prefix is already a tuple of rationally independent irrationals
        nf.m = p;
        nf.betas.assign(cur.begin(), cur.begin() + p);
        nf.k = 0;
        nf.d = 1;
        nf.zeros = n - p;
        return nf;
    }
    // one rational slot remains: rotate a rational-valued combination into it
    auto rel = rational_relation(prefix, table);
    apply_block(unimodular_complete(rel->coeffs, p - 1), p);
    nf.transform = g;
    const Rational& slot = cur[p - 1].rat(); // canonical, in [0,1)
    nf.m = p - 1;
    nf.betas.assign(cur.begin(), cur.begin() + p - 1);
    if (slot == 0) {
        nf.k = 0;
        nf.d = 1;
        nf.zeros = n - p + 1;
    } else {
        nf.k = slot.get_num();
        nf.d = slot.get_den();
        nf.zeros = n - p;
    }
    return nf;
}

OrbitInvariants orbit_invariants(const RotationVector& rho) {
    NormalForm nf = normal_form(rho);
    return OrbitInvariants{nf.m, nf.d};
}

InvariantProfile su2_profile(const RotationVector& rho) {
    if (rho.size() < 2) throw std::invalid_argument("su2 profile needs length >= 2");
    RotationVector tail = rho.tail();
    InvariantProfile p;
    p.r = rank(rho);
    p.r_tilde = reductive_rank(rho);
    p.n_components = normal_form(rho).d;
    p.r_tilde_prime = reductive_rank(tail);
    p.n_prime = normal_form(tail).d;
    const ExactReal& theta0 = rho[0];
    if (theta0.is_rational())
        p.case_tag = CaseTag::case1;
    else if (p.r_tilde == p.r_tilde_prime + 1)
        p.case_tag = CaseTag::case2;
    else
        p.case_tag = CaseTag::case3;
    return p;
}

const char* to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::case1: return "case1";
        case CaseTag::case2: return "case2";
        case CaseTag::case3: return "case3";
    }
    return "?";
}

} // namespace rotvec
