#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperlat/lattice.hpp"
#include "hyperlat/polynomial.hpp"

namespace hyperlat {

struct FactorReport {
    IntPolynomial input;
    std::vector<std::pair<unsigned long, long>> cyclotomic;    // (n, multiplicity), ascending n
    std::optional<std::pair<IntPolynomial, long>> salem;       // factor with multiplicity
    IntPolynomial residual;                                    // expected 1
    long degree = 0;
    std::vector<std::string> flags;

    // input == prod(cyclotomic) * salem^mult * residual, checked exactly.
    bool reconstructs() const;
};

bool reports_equal(const FactorReport& a, const FactorReport& b);

enum class SalemReason {
    not_reciprocal,
    has_cyclotomic_factor,
    wrong_root_count,
    quadratic_reciprocal,
    degree_too_small,
    ok,
};

const char* to_string(SalemReason r);

struct SalemVerdict {
    bool is_salem = false;
    SalemReason reason = SalemReason::wrong_root_count;
    // Trace-polynomial root counts: in (2, inf) and in (-2, 2).
    std::pair<long, long> root_counts{0, 0};
};

// Removes every cyclotomic factor with multiplicity and classifies what is
// left (nothing, a Salem factor, a quadratic unit, or an unexpected
// remainder, in which case the report is flagged).
FactorReport strip_cyclotomic(const IntPolynomial& p);

// Salem polynomial test: reciprocal, no cyclotomic factor, even degree >= 4,
// trace polynomial with exactly one root beyond 2 and the rest inside
// (-2, 2). Irreducibility needs no factorization: a factor with all roots on
// the closed unit disk would be cyclotomic, which is excluded.
SalemVerdict is_salem(const IntPolynomial& p);

// Salem degree of a validated isometry, with the full factor report.
// Hyperbolic owners assert the remainder is trivial, Salem, or a flagged
// quadratic unit; other owners get a best-effort degree with a warning flag.
std::pair<long, FactorReport> salem_degree(const Lattice& owner, const Isometry& f);

}  // namespace hyperlat
