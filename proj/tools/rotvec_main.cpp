#include "rotvec/lie_group.hpp"
#include "rotvec/problem.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <set>

namespace {

using namespace rotvec;

constexpr int exit_positive = 0;
constexpr int exit_negative = 1;
constexpr int exit_error = 2;

struct Options {
    std::string input;
    bool json = false;
    unsigned seed = 0;
    long steps = 1000;
    double tolerance = 1e-9;
};

int emit(const Report& report, const SymbolTablePtr& table, const Options& opt, int code) {
    std::cout << (opt.json ? to_report_json(report, table) : to_report_text(report, table));
    return code;
}

int emit_error(const std::string& message, const Options& opt) {
    Report r;
    r.errors.push_back(message);
    return emit(r, nullptr, opt, exit_error);
}

int cmd_classify(const ProblemInstance& inst, const Options& opt) {
    Report r;
    if (!inst.right) return emit_error("classify requires a 'right' vector", opt);
    if (inst.group == "torus") {
        auto cert = torus_conjugate(*inst.left, *inst.right);
        r.conjugate = cert.has_value();
        if (cert) {
            r.certificate = SU2Certificate{1, {}, cert->a};
            r.certificate_valid = verify_certificate(*cert, *inst.left, *inst.right);
        }
    } else {
        auto cert = su2_conjugate(*inst.left, *inst.right);
        r.conjugate = cert.has_value();
        if (cert) {
            r.certificate = *cert;
            r.certificate_valid = verify_certificate(*cert, *inst.left, *inst.right);
            ConjugacyMap map = certificate_conjugacy_map(*cert);
            r.numeric_check = verify_conjugacy_numeric(map, embed_rotation_vector(*inst.left),
                                                       embed_rotation_vector(*inst.right), 1000,
                                                       opt.seed);
            if (*r.numeric_check > opt.tolerance)
                r.errors.push_back("numeric check exceeded tolerance");
        }
    }
    return emit(r, inst.table, opt, *r.conjugate && r.errors.empty() ? exit_positive : exit_negative);
}

int cmd_invariants(const ProblemInstance& inst, const Options& opt) {
    Report r;
    if (inst.group == "su2xtn") {
        r.invariants = su2_profile(*inst.left);
    } else {
        // torus vectors get the tail-free part of the profile
        InvariantProfile p;
        p.r = rank(*inst.left);
        p.r_tilde = reductive_rank(*inst.left);
        p.n_components = normal_form(*inst.left).d;
        p.r_tilde_prime = p.r_tilde;
        p.n_prime = p.n_components;
        p.case_tag = (*inst.left)[0].is_rational() ? CaseTag::case1 : CaseTag::case2;
        r.invariants = p;
    }
    return emit(r, inst.table, opt, exit_positive);
}

int cmd_normal_form(const ProblemInstance& inst, const Options& opt) {
    Report r;
    r.normal_form = normal_form(*inst.left);
    return emit(r, inst.table, opt, exit_positive);
}

int cmd_orbit(const ProblemInstance& inst, const Options& opt) {
    Report r;
    Report::Orbit o;
    const RotationVector& rho = *inst.left;
    OrbitInvariants inv = orbit_invariants(rho);
    o.dimension = inv.dimension;
    o.components = inv.components;

    std::vector<double> theta(rho.size());
    for (int i = 0; i < rho.size(); ++i) theta[i] = approx(rho[i]);
    std::vector<double> x0(rho.size(), 0.0);
    o.estimate = estimate_rotation_vector(theta, x0, opt.steps);

    if (rho.is_rational()) {
        // exact orbit of the identity, counted over at most `steps` iterates
        std::set<std::vector<Rational>> seen;
        std::vector<Rational> cur(rho.size(), Rational(0));
        for (long s = 0; s < opt.steps; ++s) {
            if (!seen.insert(cur).second) break;
            for (int i = 0; i < rho.size(); ++i) {
                cur[i] += rho[i].rat();
                Integer fl;
                mpz_fdiv_q(fl.get_mpz_t(), cur[i].get_num_mpz_t(), cur[i].get_den_mpz_t());
                cur[i] -= Rational(fl);
            }
        }
        o.distinct_points = static_cast<long>(seen.size());
    }
    r.orbit = std::move(o);
    return emit(r, inst.table, opt, exit_positive);
}

int cmd_oracle(const ProblemInstance& inst, const Options& opt) {
    Report r;
    if (!inst.right) return emit_error("oracle requires a 'right' vector", opt);
    if (!inst.left->is_rational() || !inst.right->is_rational())
        return emit_error("oracle requires purely rational vectors", opt);
    bool ok = brute_force_oracle(*inst.left, *inst.right,
                                 inst.group == "torus" ? OracleMode::torus : OracleMode::su2);
    r.conjugate = ok;
    return emit(r, inst.table, opt, ok ? exit_positive : exit_negative);
}

int cmd_verify(const ProblemInstance& inst, const Options& opt) {
    Report r;
    if (!inst.right) return emit_error("verify requires a 'right' vector", opt);
    if (!inst.cert_matrix) return emit_error("verify requires cert_row lines", opt);
    bool ok;
    if (inst.group == "torus") {
        TorusCertificate cert{*inst.cert_matrix};
        ok = verify_certificate(cert, *inst.left, *inst.right);
        r.certificate = SU2Certificate{1, {}, cert.a};
    } else {
        SU2Certificate cert;
        cert.sign = inst.cert_sign.value_or(1);
        cert.a = *inst.cert_matrix;
        cert.ell = inst.cert_ell.value_or(std::vector<Integer>(inst.left->size() - 1, Integer(0)));
        ok = verify_certificate(cert, *inst.left, *inst.right);
        if (ok) {
            ConjugacyMap map = certificate_conjugacy_map(cert);
            r.numeric_check = verify_conjugacy_numeric(map, embed_rotation_vector(*inst.left),
                                                       embed_rotation_vector(*inst.right), 1000,
                                                       opt.seed);
        }
        r.certificate = cert;
    }
    r.certificate_valid = ok;
    return emit(r, inst.table, opt, ok ? exit_positive : exit_negative);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact conjugacy classification of translation actions on T^n and SU(2)xT^n"};
    app.require_subcommand(1);

    Options opt;
    std::string command;
    for (const char* name : {"classify", "invariants", "normal-form", "orbit", "oracle", "verify"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--input", opt.input, "problem file")->required();
        sub->add_flag("--json", opt.json, "machine-readable output");
        sub->add_option("--seed", opt.seed, "random seed for numeric checks");
        sub->add_option("--steps", opt.steps, "iteration count for orbit simulation");
        sub->add_option("--tolerance", opt.tolerance, "numeric tolerance");
        sub->callback([&command, name]() { command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (app.exit(e) == 0) return exit_positive;
        return exit_error;
    }

    try {
        ProblemInstance inst = build_instance(parse_problem_file_at(opt.input));
        if (command == "classify") return cmd_classify(inst, opt);
        if (command == "invariants") return cmd_invariants(inst, opt);
        if (command == "normal-form") return cmd_normal_form(inst, opt);
        if (command == "orbit") return cmd_orbit(inst, opt);
        if (command == "oracle") return cmd_oracle(inst, opt);
        if (command == "verify") return cmd_verify(inst, opt);
        return exit_error;
    } catch (const std::exception& e) {
        return emit_error(e.what(), opt);
    }
}
