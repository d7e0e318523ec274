#pragma once

#include <optional>
#include <string>
#include <vector>

#include "darboux/autom.hpp"
#include "darboux/derivation.hpp"
#include "darboux/grading.hpp"
#include "darboux/linalg.hpp"

namespace darboux {

// Coefficient system of a linear map between spaces of polynomials.
// Column j is the source monomial columns[j], row i the target monomial
// rows[i]; both lists are in descending grevlex order.
struct LinearSystem {
    std::vector<Monomial> columns;
    std::vector<Monomial> rows;
    ExactMatrix matrix{0, 0};
};

struct SolveOptions {
    // Cross-check every system with at most oracle_column_limit columns
    // against the dense oracle; a mismatch raises InvariantViolation.
    bool oracle_check = false;
    std::size_t oracle_column_limit = 200;
};

// One solved degree level.
struct LevelReport {
    long degree = 0;
    std::size_t columns = 0;
    std::size_t rows = 0;
    std::size_t rank = 0;
    bool oracle_checked = false;
    double millis = 0.0;
    std::vector<QPoly> basis;

    std::size_t nullity() const { return basis.size(); }
};

// F -> d(F) on the degree-p space; d must be standard-homogeneous.
LinearSystem assemble_constants_system(const QDerivation& d, long p);
// F -> d(F) - lam * F on the degree-p space.
LinearSystem assemble_fixed_cofactor_system(const QDerivation& d, const QPoly& lam, long p);
// F -> d(F) on monomials of degree 1..maxdeg.
LinearSystem assemble_inhomogeneous_system(const QDerivation& d, long maxdeg);

// Solves a system with the sparse solver, optionally cross-checking with the
// dense oracle, and turns null vectors into monic polynomials.
LevelReport solve_system(const LinearSystem& sys, const ContextPtr& ctx, long degree, const SolveOptions& opts);

// Runs the dense oracle on the system unconditionally and compares it with
// the sparse solver; true when the bases agree exactly.
bool oracle_agrees(const LinearSystem& sys);

// Nonconstant polynomial constants of degree p (p = 0 gives {1}). Every
// returned element is verified to satisfy d(B) = 0.
std::vector<QPoly> constants_basis(const QDerivation& d, long p, const SolveOptions& opts = {});
LevelReport constants_level(const QDerivation& d, long p, const SolveOptions& opts = {});

// Constants of degree <= maxdeg modulo the ground field.
std::vector<QPoly> constants_basis_inhomogeneous(const QDerivation& d, long maxdeg, const SolveOptions& opts = {});

// Solutions of d(F) = lam * F of degree p; lam must be zero or homogeneous
// of the derivation's standard degree.
std::vector<QPoly> darboux_basis_fixed_cofactor(const QDerivation& d, const QPoly& lam, long p,
                                                const SolveOptions& opts = {});

struct VariableElimination {
    std::string variable;
    long exponent = 0;        // (c + w_j) mod m
    bool eliminated = false;  // sum_i root^(exponent*i) == 0
};

struct EliminationReport {
    SymmetrySolution symmetry;
    std::vector<VariableElimination> variables;
    bool forced_zero = false;  // every cofactor coefficient eliminated
    // The following are only computed when the modulus divides 8, so the
    // symmetry is realised over Q(z8).
    bool realizable = false;
    bool conjugation_verified = false;  // s^-1 d s == root^c d
    bool generic_vanishes = false;      // generic_cofactor_vanishes agrees

    bool usable() const { return forced_zero && realizable && conjugation_verified && generic_vanishes; }
};

// Which coefficients of a degree-1 cofactor k1*x1 + ... + kn*xn are forced
// to zero by averaging over the symmetry. Requires standard degree 1.
EliminationReport eliminate_cofactors(const QDerivation& d, const SymmetrySolution& sol);

enum class Verdict { Certified, Inconclusive, Counterexample };
std::string to_string(Verdict v);

struct SoundnessRecheck {
    bool conjugation = false;
    bool generic_vanishes = false;
    long oracle_degree = 0;
    bool oracle_agrees = false;
};

struct Certificate {
    explicit Certificate(QDerivation d) : derivation(std::move(d)) {}

    QDerivation derivation;
    long modulus = 0;
    long requested_bound = 0;  // D
    std::optional<long> standard_degree;
    std::size_t symmetries_found = 0;
    std::vector<SymmetrySolution> eliminating_symmetries;  // usable ones, lexicographic order
    std::optional<EliminationReport> elimination;          // for the symmetry used
    long constants_checked_through = 0;                    // N = m * D
    std::vector<LevelReport> levels;
    std::optional<long> darboux_free_bound;  // floor(N / m) when certified
    Verdict verdict = Verdict::Inconclusive;
    std::optional<DarbouxPair<Rational>> witness;
    std::string reason;
    std::optional<SoundnessRecheck> recheck;
};

struct CertifyOptions {
    unsigned threads = 1;
    SolveOptions solve;
    // Use this symmetry when it is among the usable ones; otherwise the
    // first usable symmetry in lexicographic order.
    std::optional<SymmetrySolution> preferred_symmetry;
};

// Bounded-degree Darboux-freeness certificate: a usable cofactor-eliminating
// symmetry of order m plus no nonconstant polynomial constants up to degree
// m*D rules out Darboux polynomials of degree <= D.
Certificate certify_darboux_free(const QDerivation& d, long D, long m, const CertifyOptions& opts = {});

// Levels p = first..last solved on up to `threads` workers; the result is
// ordered by degree regardless of scheduling.
std::vector<LevelReport> constants_levels(const QDerivation& d, long first, long last, unsigned threads,
                                          const SolveOptions& opts);

// Pairs (x_j, d(x_j) / x_j) for images divisible by their variable.
std::vector<DarbouxPair<Rational>> variable_darboux_pairs(const QDerivation& d);

}  // namespace darboux
