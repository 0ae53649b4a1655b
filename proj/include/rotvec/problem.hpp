#pragma once

#include "rotvec/conjugacy.hpp"
#include "rotvec/rotation.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace rotvec {

/// Parsed problem file. Line-oriented key/value format:
///
///   # comment
///   symbol <name> <decimal approximation>     (0 or more, order matters)
///   group <torus|su2xtn>
///   left  <expr>[, <expr>]*
///   right <expr>[, <expr>]*                   (optional)
///   cert_sign <1|-1>                          (optional, verify command)
///   cert_ell  <int>[, <int>]*                 (optional)
///   cert_row  <int>[, <int>]*                 (one line per matrix row)
///
/// Expressions follow the exact-real grammar, e.g. "1/2 + a".
struct ProblemFile {
    std::vector<std::pair<std::string, double>> symbols;
    std::string group;
    std::vector<std::string> left;
    std::vector<std::string> right;
    std::optional<int> cert_sign;
    std::optional<std::vector<Integer>> cert_ell;
    std::vector<std::vector<Integer>> cert_rows;
};

ProblemFile parse_problem_file(std::istream& in);
ProblemFile parse_problem_file_at(const std::string& path);

/// Problem file with the expressions resolved against a symbol table.
struct ProblemInstance {
    SymbolTablePtr table;
    std::string group; // torus | su2xtn
    std::optional<RotationVector> left;
    std::optional<RotationVector> right;
    std::optional<int> cert_sign;
    std::optional<std::vector<Integer>> cert_ell;
    std::optional<IntMatrix> cert_matrix;
};

ProblemInstance build_instance(const ProblemFile& file);

/// Serializable result of a CLI command. Optional sections appear only when
/// the command produced them; a present certificate implies conjugate=true.
struct Report {
    std::optional<bool> conjugate;
    std::optional<SU2Certificate> certificate; // torus results use sign=+1, ell empty
    std::optional<InvariantProfile> invariants;
    std::optional<NormalForm> normal_form;
    std::optional<double> numeric_check;
    std::optional<bool> certificate_valid;
    struct Orbit {
        std::vector<double> estimate;
        std::optional<long> distinct_points;
        int dimension = 0;
        Integer components{1};
        bool operator==(const Orbit&) const = default;
    };
    std::optional<Orbit> orbit;
    std::vector<std::string> errors;

    bool operator==(const Report&) const;
};

// Stable machine-readable serialization (sorted keys) and its inverse;
// from_report_json(to_report_json(r)) == r.
std::string to_report_json(const Report& r, const SymbolTablePtr& table);
Report from_report_json(const std::string& text, const SymbolTablePtr& table);

// Human-readable rendering.
std::string to_report_text(const Report& r, const SymbolTablePtr& table);

} // namespace rotvec
