#include "hyperlat/salem.hpp"

#include <algorithm>

namespace hyperlat {

const char* to_string(SalemReason r) {
    switch (r) {
        case SalemReason::not_reciprocal: return "NotReciprocal";
        case SalemReason::has_cyclotomic_factor: return "HasCyclotomicFactor";
        case SalemReason::wrong_root_count: return "WrongRootCount";
        case SalemReason::quadratic_reciprocal: return "QuadraticReciprocal";
        case SalemReason::degree_too_small: return "DegreeTooSmall";
        case SalemReason::ok: return "OK";
    }
    return "Unknown";
}

bool FactorReport::reconstructs() const {
    IntPolynomial prod({1});
    for (const auto& [n, mult] : cyclotomic)
        prod = prod * hyperlat::cyclotomic(n).pow(static_cast<unsigned long>(mult));
    if (salem) prod = prod * salem->first.pow(static_cast<unsigned long>(salem->second));
    prod = prod * residual;
    return prod == input;
}

bool reports_equal(const FactorReport& a, const FactorReport& b) {
    return a.input == b.input && a.cyclotomic == b.cyclotomic && a.salem == b.salem &&
           a.residual == b.residual && a.degree == b.degree && a.flags == b.flags;
}

namespace {

bool has_cyclotomic_divisor(const IntPolynomial& p) {
    const long deg = p.degree();
    if (deg <= 0) return false;
    const unsigned long limit = 2UL * static_cast<unsigned long>(deg) * static_cast<unsigned long>(deg);
    for (unsigned long n = 1; n <= std::max(limit, 2UL); ++n) {
        if (euler_phi(n) > static_cast<unsigned long>(deg)) continue;
        if (exact_divide(p, cyclotomic(n))) return true;
    }
    return false;
}

}  // namespace

SalemVerdict is_salem(const IntPolynomial& p) {
    if (p.is_zero() || !p.is_monic()) throw input_error("NotMonic", "Salem test needs a monic polynomial");
    SalemVerdict v;
    if (!is_reciprocal(p)) {
        v.reason = SalemReason::not_reciprocal;
        return v;
    }
    if (has_cyclotomic_divisor(p)) {
        v.reason = SalemReason::has_cyclotomic_factor;
        return v;
    }
    // Reciprocal with no Phi_1/Phi_2 factor forces even degree.
    if (p.degree() == 0) {
        v.reason = SalemReason::degree_too_small;
        return v;
    }
    IntPolynomial q = trace_poly(p);
    long outside = sturm_count(q, SturmBound::at(Rat(2)), SturmBound::plus_inf());
    long below = sturm_count(q, SturmBound::minus_inf(), SturmBound::at(Rat(-2)));
    long inside = sturm_count(q, SturmBound::at(Rat(-2)), SturmBound::at(Rat(2)));
    v.root_counts = {outside, inside};
    if (p.degree() == 2) {
        v.reason = (outside == 1 && below == 0) ? SalemReason::quadratic_reciprocal
                                                : SalemReason::wrong_root_count;
        return v;
    }
    if (outside == 1 && below == 0 && inside == q.degree() - 1) {
        v.is_salem = true;
        v.reason = SalemReason::ok;
    } else {
        v.reason = SalemReason::wrong_root_count;
    }
    return v;
}

FactorReport strip_cyclotomic(const IntPolynomial& p) {
    if (p.is_zero() || !p.is_monic()) throw input_error("NotMonic", "cyclotomic stripping needs a monic polynomial");
    FactorReport rep;
    rep.input = p;
    IntPolynomial r = p;
    const long deg0 = p.degree();
    const unsigned long limit = std::max(2UL, 2UL * static_cast<unsigned long>(deg0 > 0 ? deg0 : 0) *
                                                  static_cast<unsigned long>(deg0 > 0 ? deg0 : 0));
    for (unsigned long n = 1; n <= limit && r.degree() > 0; ++n) {
        if (euler_phi(n) > static_cast<unsigned long>(r.degree())) continue;
        long mult = 0;
        const IntPolynomial phi = cyclotomic(n);
        while (r.degree() >= phi.degree()) {
            auto q = exact_divide(r, phi);
            if (!q) break;
            r = *q;
            ++mult;
        }
        if (mult > 0) rep.cyclotomic.emplace_back(n, mult);
    }

    if (r.is_one()) {
        rep.residual = IntPolynomial({1});
        rep.degree = 0;
        return rep;
    }

    SalemVerdict v = is_salem(r);
    if (v.is_salem) {
        rep.salem = std::make_pair(r, 1L);
        rep.residual = IntPolynomial({1});
        rep.degree = r.degree();
        return rep;
    }
    if (v.reason == SalemReason::quadratic_reciprocal) {
        rep.residual = r;
        rep.degree = 2;
        rep.flags.push_back("quadratic_unit");
        return rep;
    }

    // The remainder may still be a power of a Salem polynomial, or contain
    // one next to an unexpected cofactor; extract when unambiguous.
    auto decomp = squarefree_decomposition(r);
    std::size_t salem_hits = 0;
    std::pair<IntPolynomial, long> found;
    bool quad_hit = false;
    for (const auto& [g, m] : decomp) {
        SalemVerdict vg = is_salem(g);
        if (vg.is_salem) {
            ++salem_hits;
            found = {g, m};
        } else if (vg.reason == SalemReason::quadratic_reciprocal) {
            quad_hit = true;
            found = {g, m};
        }
    }
    if (salem_hits == 1 && !quad_hit) {
        rep.salem = found;
        auto rest = exact_divide(r, found.first.pow(static_cast<unsigned long>(found.second)));
        rep.residual = rest ? *rest : r;
        rep.degree = found.first.degree();
        if (found.second > 1) rep.flags.push_back("salem_multiplicity");
        if (!rep.residual.is_one()) rep.flags.push_back("residual_nonunit");
        return rep;
    }
    if (quad_hit && salem_hits == 0 && decomp.size() == 1) {
        rep.residual = r;
        rep.degree = 2;
        rep.flags.push_back("quadratic_unit");
        if (found.second > 1) rep.flags.push_back("quadratic_multiplicity");
        return rep;
    }

    rep.residual = r;
    rep.degree = r.degree();
    rep.flags.push_back("non_salem_remainder");
    return rep;
}

std::pair<long, FactorReport> salem_degree(const Lattice& owner, const Isometry& f) {
    if (f.owner != owner.label) throw input_error("OwnerMismatch", "isometry owned by a different lattice");
    FactorReport rep = strip_cyclotomic(charpoly(f.matrix));

    const bool hyp = is_hyperbolic(owner);
    if (!hyp) {
        if (rep.degree != 0) rep.flags.push_back("non_hyperbolic_owner");
        return {rep.degree, rep};
    }

    const bool clean_trivial = !rep.salem && rep.residual.is_one();
    const bool clean_salem = rep.salem && rep.salem->second == 1 && rep.residual.is_one();
    const bool clean_quadratic =
        !rep.salem && rep.residual.degree() == 2 &&
        std::find(rep.flags.begin(), rep.flags.end(), "quadratic_unit") != rep.flags.end();
    if (!clean_trivial && !clean_salem && !clean_quadratic)
        throw math_error("SalemAssertionFailure",
                         "hyperbolic isometry left a remainder that is neither trivial, Salem, nor a "
                         "quadratic unit: " +
                             rep.residual.to_string());
    return {rep.degree, rep};
}

}  // namespace hyperlat
