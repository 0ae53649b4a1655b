#include "rotvec/exact_real.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rotvec {

namespace {

bool valid_symbol_name(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

void require_same_table(const ExactReal& x, const ExactReal& y) {
    if (x.table() != y.table())
        throw std::invalid_argument("exact reals built over different symbol tables");
}

} // namespace

int SymbolTable::declare(const std::string& name, double approx) {
    if (!valid_symbol_name(name) || name == "1")
        throw std::invalid_argument("invalid symbol name: '" + name + "'");
    if (index_.contains(name))
        throw std::invalid_argument("symbol already declared: '" + name + "'");
    if (!std::isfinite(approx) || approx == 0.0)
        throw std::invalid_argument("symbol approximation must be finite and nonzero: '" + name + "'");
    int idx = static_cast<int>(entries_.size());
    entries_.push_back({name, approx});
    index_.emplace(name, idx);
    return idx;
}

int SymbolTable::index_of(std::string_view name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

ExactReal ExactReal::constant(Rational q, SymbolTablePtr table) {
    if (!table) throw std::invalid_argument("null symbol table");
    ExactReal r;
    q.canonicalize();
    r.rat_ = std::move(q);
    r.table_ = std::move(table);
    return r;
}

ExactReal ExactReal::symbol(int index, SymbolTablePtr table) {
    if (!table) throw std::invalid_argument("null symbol table");
    if (index < 0 || index >= table->size())
        throw std::invalid_argument("symbol index out of range");
    ExactReal r;
    r.coeffs_[index] = 1;
    r.table_ = std::move(table);
    return r;
}

ExactReal ExactReal::operator-() const {
    ExactReal r;
    r.rat_ = -rat_;
    r.table_ = table_;
    for (const auto& [i, c] : coeffs_) r.coeffs_[i] = -c;
    return r;
}

ExactReal ExactReal::operator+(const ExactReal& o) const {
    require_same_table(*this, o);
    ExactReal r = *this;
    r.rat_ += o.rat_;
    for (const auto& [i, c] : o.coeffs_) {
        Rational& slot = r.coeffs_[i];
        slot += c;
        if (slot == 0) r.coeffs_.erase(i);
    }
    return r;
}

ExactReal ExactReal::operator-(const ExactReal& o) const { return *this + (-o); }

bool ExactReal::operator==(const ExactReal& o) const {
    return table_ == o.table_ && rat_ == o.rat_ && coeffs_ == o.coeffs_;
}

ExactReal scale(const Rational& q, const ExactReal& x) {
    ExactReal r;
    r.table_ = x.table_;
    if (q == 0) return r;
    r.rat_ = q * x.rat_;
    for (const auto& [i, c] : x.coeffs_) r.coeffs_[i] = q * c;
    return r;
}

bool eq_mod_z(const ExactReal& x, const ExactReal& y) {
    require_same_table(x, y);
    if (x.coeffs() != y.coeffs()) return false;
    Rational d = x.rat() - y.rat();
    return d.get_den() == 1;
}

ExactReal canonical_mod_z(const ExactReal& x) {
    Rational r = x.rat();
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    ExactReal out = x;
    return out - ExactReal::constant(Rational(fl), x.table());
}

std::vector<Rational> coordinates(const ExactReal& x) {
    if (!x.table()) throw std::invalid_argument("null symbol table");
    std::vector<Rational> v(1 + x.table()->size(), Rational(0));
    v[0] = x.rat();
    for (const auto& [i, c] : x.coeffs()) v[1 + i] = c;
    return v;
}

double approx(const ExactReal& x) {
    double acc = x.rat().get_d();
    for (const auto& [i, c] : x.coeffs()) acc += c.get_d() * x.table()->approx(i);
    return acc;
}

namespace {

struct Parser {
    std::string_view text;
    size_t pos = 0;
    const SymbolTablePtr& table;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at offset " + std::to_string(pos) + ": " + what);
    }

    Rational rational(bool negative) {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a rational");
        Integer num(std::string(text.substr(start, pos - start)));
        Integer den(1);
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            size_t dstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == dstart) fail("malformed rational");
            den = Integer(std::string(text.substr(dstart, pos - dstart)));
            if (den == 0) fail("zero denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        return negative ? Rational(-q) : q;
    }

    std::string identifier() {
        skip_ws();
        size_t start = pos;
        if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
            fail("expected a symbol");
        ++pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return std::string(text.substr(start, pos - start));
    }

    ExactReal symbol_by_name(const std::string& name) {
        int idx = table->index_of(name);
        if (idx < 0) fail("unknown symbol '" + name + "'");
        return ExactReal::symbol(idx, table);
    }

    // term = rational | rational '*' symbol | symbol
    ExactReal term(bool negative) {
        char c = peek();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ExactReal s = symbol_by_name(identifier());
            return negative ? -s : s;
        }
        Rational q = rational(negative);
        if (peek() == '*') {
            ++pos;
            return scale(q, symbol_by_name(identifier()));
        }
        return ExactReal::constant(q, table);
    }

    ExactReal expression() {
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos;
        }
        ExactReal acc = term(neg);
        while (!eof()) {
            char op = peek();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            ++pos;
            acc = acc + term(op == '-');
        }
        return acc;
    }
};

} // namespace

ExactReal parse(std::string_view text, SymbolTablePtr table) {
    if (!table) throw std::invalid_argument("null symbol table");
    Parser p{text, 0, table};
    if (p.eof()) throw std::invalid_argument("empty expression");
    return p.expression();
}

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q.get_num();
    if (q.get_den() != 1) os << '/' << q.get_den();
    return os.str();
}

std::string render(const ExactReal& x) {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Rational& q, const std::string* sym) {
        Rational mag = abs(q);
        if (first) {
            if (q < 0) os << '-';
            first = false;
        } else {
            os << (q < 0 ? " - " : " + ");
        }
        if (!sym) {
            os << to_string(mag);
        } else if (mag == 1) {
            os << *sym;
        } else {
            os << to_string(mag) << '*' << *sym;
        }
    };
    if (x.rat() != 0) emit(x.rat(), nullptr);
    for (const auto& [i, c] : x.coeffs()) emit(c, &x.table()->name(i));
    if (first) os << '0';
    return os.str();
}

} // namespace rotvec
