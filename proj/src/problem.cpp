#include "rotvec/problem.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rotvec {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) {
        cur = trim(cur);
        if (cur.empty()) throw std::invalid_argument("empty list entry");
        out.push_back(cur);
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

std::vector<Integer> parse_int_list(const std::string& s) {
    std::vector<Integer> out;
    for (const std::string& item : split_list(s)) out.emplace_back(item);
    return out;
}

} // namespace

ProblemFile parse_problem_file(std::istream& in) {
    ProblemFile f;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        size_t sp = t.find_first_of(" \t");
        std::string key = sp == std::string::npos ? t : t.substr(0, sp);
        std::string rest = sp == std::string::npos ? "" : trim(t.substr(sp));
        try {
            if (key == "symbol") {
                size_t sp2 = rest.find_first_of(" \t");
                if (sp2 == std::string::npos) throw std::invalid_argument("expected 'symbol <name> <approx>'");
                std::string name = rest.substr(0, sp2);
                std::string val = trim(rest.substr(sp2));
                size_t used = 0;
                double approx = std::stod(val, &used);
                if (used != val.size()) throw std::invalid_argument("trailing characters after approximation");
                f.symbols.emplace_back(name, approx);
            } else if (key == "group") {
                if (rest != "torus" && rest != "su2xtn")
                    throw std::invalid_argument("group must be 'torus' or 'su2xtn'");
                f.group = rest;
            } else if (key == "left") {
                f.left = split_list(rest);
            } else if (key == "right") {
                f.right = split_list(rest);
            } else if (key == "cert_sign") {
                if (rest != "1" && rest != "-1" && rest != "+1")
                    throw std::invalid_argument("cert_sign must be 1 or -1");
                f.cert_sign = rest == "-1" ? -1 : 1;
            } else if (key == "cert_ell") {
                f.cert_ell = parse_int_list(rest);
            } else if (key == "cert_row") {
                f.cert_rows.push_back(parse_int_list(rest));
            } else {
                throw std::invalid_argument("unknown key '" + key + "'");
            }
        } catch (const std::exception& e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (f.group.empty()) throw std::invalid_argument("missing 'group' line");
    if (f.left.empty()) throw std::invalid_argument("missing 'left' line");
    return f;
}

ProblemFile parse_problem_file_at(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
    return parse_problem_file(in);
}

ProblemInstance build_instance(const ProblemFile& file) {
    auto table = std::make_shared<SymbolTable>();
    for (const auto& [name, approx] : file.symbols) table->declare(name, approx);
    ProblemInstance inst;
    inst.table = table;
    inst.group = file.group;

    auto build_vector = [&](const std::vector<std::string>& exprs) {
        std::vector<ExactReal> entries;
        entries.reserve(exprs.size());
        for (const std::string& e : exprs) entries.push_back(parse(e, table));
        return RotationVector(std::move(entries), table);
    };
    inst.left = build_vector(file.left);
    if (!file.right.empty()) inst.right = build_vector(file.right);

    const int min_len = file.group == "su2xtn" ? 2 : 1;
    if (inst.left->size() < min_len)
        throw std::invalid_argument("vector too short for group " + file.group);
    if (inst.right && inst.right->size() != inst.left->size())
        throw std::invalid_argument("left and right vectors have different lengths");

    inst.cert_sign = file.cert_sign;
    inst.cert_ell = file.cert_ell;
    if (!file.cert_rows.empty()) {
        const int n = static_cast<int>(file.cert_rows.size());
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(file.cert_rows[i].size()) != n)
                throw std::invalid_argument("cert_row lines must form a square matrix");
            for (int j = 0; j < n; ++j) m.at(i, j) = file.cert_rows[i][j];
        }
        inst.cert_matrix = m;
    }
    return inst;
}

namespace {

Integer from_ll(long long v) { return Integer(static_cast<long>(v)); }

long long to_ll(const Integer& v) {
    if (!v.fits_slong_p()) throw std::invalid_argument("integer too large for report serialization");
    return v.get_si();
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_ll(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const json& j) {
    const int rows = static_cast<int>(j.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int c = 0; c < cols; ++c) m.at(i, c) = from_ll(j.at(i).at(c).get<long long>());
    return m;
}

json ints_to_json(const std::vector<Integer>& v) {
    json a = json::array();
    for (const Integer& x : v) a.push_back(to_ll(x));
    return a;
}

std::vector<Integer> ints_from_json(const json& j) {
    std::vector<Integer> v;
    for (const auto& x : j) v.push_back(from_ll(x.get<long long>()));
    return v;
}

CaseTag case_from_string(const std::string& s) {
    if (s == "case1") return CaseTag::case1;
    if (s == "case2") return CaseTag::case2;
    if (s == "case3") return CaseTag::case3;
    throw std::invalid_argument("unknown case tag '" + s + "'");
}

} // namespace

bool Report::operator==(const Report& o) const {
    return conjugate == o.conjugate && certificate == o.certificate &&
           invariants == o.invariants && normal_form == o.normal_form &&
           numeric_check == o.numeric_check && certificate_valid == o.certificate_valid &&
           orbit == o.orbit && errors == o.errors;
}

std::string to_report_json(const Report& r, const SymbolTablePtr& table) {
    json j;
    j["errors"] = r.errors;
    if (r.conjugate) j["conjugate"] = *r.conjugate;
    if (r.certificate) {
        json c;
        c["sign"] = r.certificate->sign;
        c["ell"] = ints_to_json(r.certificate->ell);
        c["a"] = matrix_to_json(r.certificate->a);
        j["certificate"] = std::move(c);
    }
    if (r.invariants) {
        json p;
        p["r"] = r.invariants->r;
        p["r_tilde"] = r.invariants->r_tilde;
        p["n"] = to_ll(r.invariants->n_components);
        p["r_tilde_prime"] = r.invariants->r_tilde_prime;
        p["n_prime"] = to_ll(r.invariants->n_prime);
        p["case"] = to_string(r.invariants->case_tag);
        j["invariants"] = std::move(p);
    }
    if (r.normal_form) {
        json nf;
        nf["m"] = r.normal_form->m;
        json betas = json::array();
        for (const ExactReal& b : r.normal_form->betas) betas.push_back(render(b));
        nf["betas"] = std::move(betas);
        nf["k"] = to_ll(r.normal_form->k);
        nf["d"] = to_ll(r.normal_form->d);
        nf["zeros"] = r.normal_form->zeros;
        nf["transform"] = matrix_to_json(r.normal_form->transform);
        j["normal_form"] = std::move(nf);
    }
    if (r.numeric_check) j["numeric_check"] = *r.numeric_check;
    if (r.certificate_valid) j["certificate_valid"] = *r.certificate_valid;
    if (r.orbit) {
        json o;
        o["estimate"] = r.orbit->estimate;
        if (r.orbit->distinct_points) o["distinct_points"] = *r.orbit->distinct_points;
        o["dimension"] = r.orbit->dimension;
        o["components"] = to_ll(r.orbit->components);
        j["orbit"] = std::move(o);
    }
    return j.dump(2) + "\n";
}

Report from_report_json(const std::string& text, const SymbolTablePtr& table) {
    json j = json::parse(text);
    Report r;
    r.errors = j.at("errors").get<std::vector<std::string>>();
    if (j.contains("conjugate")) r.conjugate = j["conjugate"].get<bool>();
    if (j.contains("certificate")) {
        SU2Certificate c;
        c.sign = j["certificate"].at("sign").get<int>();
        c.ell = ints_from_json(j["certificate"].at("ell"));
        c.a = matrix_from_json(j["certificate"].at("a"));
        r.certificate = std::move(c);
    }
    if (j.contains("invariants")) {
        InvariantProfile p;
        const json& q = j["invariants"];
        p.r = q.at("r").get<int>();
        p.r_tilde = q.at("r_tilde").get<int>();
        p.n_components = from_ll(q.at("n").get<long long>());
        p.r_tilde_prime = q.at("r_tilde_prime").get<int>();
        p.n_prime = from_ll(q.at("n_prime").get<long long>());
        p.case_tag = case_from_string(q.at("case").get<std::string>());
        r.invariants = p;
    }
    if (j.contains("normal_form")) {
        NormalForm nf;
        const json& q = j["normal_form"];
        nf.m = q.at("m").get<int>();
        for (const auto& b : q.at("betas")) nf.betas.push_back(parse(b.get<std::string>(), table));
        nf.k = from_ll(q.at("k").get<long long>());
        nf.d = from_ll(q.at("d").get<long long>());
        nf.zeros = q.at("zeros").get<int>();
        nf.transform = matrix_from_json(q.at("transform"));
        r.normal_form = std::move(nf);
    }
    if (j.contains("numeric_check")) r.numeric_check = j["numeric_check"].get<double>();
    if (j.contains("certificate_valid")) r.certificate_valid = j["certificate_valid"].get<bool>();
    if (j.contains("orbit")) {
        Report::Orbit o;
        const json& q = j["orbit"];
        o.estimate = q.at("estimate").get<std::vector<double>>();
        if (q.contains("distinct_points")) o.distinct_points = q["distinct_points"].get<long>();
        o.dimension = q.at("dimension").get<int>();
        o.components = from_ll(q.at("components").get<long long>());
        r.orbit = std::move(o);
    }
    return r;
}

std::string to_report_text(const Report& r, const SymbolTablePtr& table) {
    std::ostringstream os;
    if (r.conjugate) os << "conjugate: " << (*r.conjugate ? "yes" : "no") << "\n";
    if (r.certificate) {
        os << "certificate: sign " << r.certificate->sign << ", ell [";
        for (size_t i = 0; i < r.certificate->ell.size(); ++i)
            os << (i ? ", " : "") << r.certificate->ell[i];
        os << "], matrix rows";
        for (int i = 0; i < r.certificate->a.rows(); ++i) {
            os << " [";
            for (int j = 0; j < r.certificate->a.cols(); ++j)
                os << (j ? ", " : "") << r.certificate->a.at(i, j);
            os << "]";
        }
        os << "\n";
    }
    if (r.invariants) {
        os << "invariants: R=" << r.invariants->r << " R~=" << r.invariants->r_tilde
           << " N=" << r.invariants->n_components << " R~'=" << r.invariants->r_tilde_prime
           << " N'=" << r.invariants->n_prime << " " << to_string(r.invariants->case_tag) << "\n";
    }
    if (r.normal_form) {
        os << "normal form: m=" << r.normal_form->m << " betas [";
        for (size_t i = 0; i < r.normal_form->betas.size(); ++i)
            os << (i ? ", " : "") << render(r.normal_form->betas[i]);
        os << "] k=" << r.normal_form->k << " d=" << r.normal_form->d
           << " zeros=" << r.normal_form->zeros << "\n";
    }
    if (r.numeric_check) os << "numeric check: max error " << *r.numeric_check << "\n";
    if (r.certificate_valid)
        os << "certificate valid: " << (*r.certificate_valid ? "yes" : "no") << "\n";
    if (r.orbit) {
        os << "orbit: estimate [";
        for (size_t i = 0; i < r.orbit->estimate.size(); ++i)
            os << (i ? ", " : "") << r.orbit->estimate[i];
        os << "]";
        if (r.orbit->distinct_points) os << " distinct points " << *r.orbit->distinct_points;
        os << " dimension " << r.orbit->dimension << " components " << r.orbit->components << "\n";
    }
    for (const std::string& e : r.errors) os << "error: " << e << "\n";
    return os.str();
}

} // namespace rotvec
