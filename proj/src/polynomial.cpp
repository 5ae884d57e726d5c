#include "hyperlat/polynomial.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace hyperlat {

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    IntVec r(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    IntVec r(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    IntVec r(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const Int& s) const {
    IntVec r = c_;
    for (Int& x : r) x *= s;
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-() const {
    IntVec r = c_;
    for (Int& x : r) x = -x;
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::derivative() const {
    if (c_.size() <= 1) return IntPolynomial();
    IntVec r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<long>(i));
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::pow(unsigned long k) const {
    IntPolynomial acc({1});
    IntPolynomial base = *this;
    while (k) {
        if (k & 1UL) acc = acc * base;
        base = base * base;
        k >>= 1UL;
    }
    return acc;
}

Int IntPolynomial::eval(const Int& x) const {
    Int v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
}

Rat IntPolynomial::eval(const Rat& x) const {
    Rat v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = v * x + Rat(c_[i]);
    return v;
}

int IntPolynomial::sign_at(const Rat& x) const {
    return sgn(eval(x));
}

Int IntPolynomial::content() const {
    Int g = 0;
    for (const Int& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return IntPolynomial();
    Int g = content();
    IntVec r = c_;
    for (Int& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(r));
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Int& a = c_[i];
        if (a == 0) continue;
        Int mag = abs(a);
        if (first) {
            if (a < 0) out << "-";
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        if (i == 0 || mag != 1) out << mag.get_str();
        if (i >= 1) {
            out << "x";
            if (i >= 2) out << "^" << i;
        }
    }
    return out.str();
}

IntPolynomial charpoly(const IntMatrix& m) {
    if (!m.is_square()) throw input_error("NonSquare", "charpoly needs a square matrix");
    const std::size_t n = m.rows();
    IntVec c(n + 1, Int(0));
    c[n] = 1;
    IntMatrix nk(n, n);  // starts at zero
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i) nk.at(i, i) += c[n - k + 1];
        nk = m * nk;
        Int tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += nk.at(i, i);
        Int ck = -tr;
        mpz_divexact_ui(ck.get_mpz_t(), ck.get_mpz_t(), static_cast<unsigned long>(k));
        c[n - k] = ck;
    }
    return IntPolynomial(std::move(c));
}

unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    unsigned long m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

IntPolynomial cyclotomic(unsigned long n) {
    if (n == 0) throw input_error("BadArgument", "cyclotomic index must be >= 1");
    static std::map<unsigned long, IntPolynomial> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    IntVec xn(n + 1, Int(0));
    xn[0] = -1;
    xn[n] = 1;
    IntPolynomial p(std::move(xn));
    for (unsigned long d = 1; d < n; ++d) {
        if (n % d) continue;
        auto q = exact_divide(p, cyclotomic(d));
        if (!q) throw math_error("CyclotomicDivision", "x^n - 1 not divisible by a proper cyclotomic");
        p = *q;
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(n, p);
    return p;
}

bool is_reciprocal(const IntPolynomial& p) {
    if (p.is_zero()) return false;
    const IntVec& c = p.coeffs();
    for (std::size_t i = 0, j = c.size() - 1; i < j; ++i, --j)
        if (c[i] != c[j]) return false;
    return true;
}

IntPolynomial trace_poly(const IntPolynomial& p) {
    if (!is_reciprocal(p)) throw input_error("NotReciprocal", "trace polynomial needs a reciprocal input");
    if (p.degree() % 2 != 0) throw input_error("OddDegree", "trace polynomial needs even degree");
    const long h = p.degree() / 2;
    IntPolynomial r = p;
    IntVec q(static_cast<std::size_t>(h) + 1, Int(0));
    IntPolynomial x2p1({1, 0, 1});
    for (long k = h; k >= 0; --k) {
        Int c = r.coeff(static_cast<std::size_t>(h + k));
        q[static_cast<std::size_t>(k)] = c;
        if (c != 0)
            r = r - (x2p1.pow(static_cast<unsigned long>(k)) *
                     IntPolynomial::x_power(static_cast<std::size_t>(h - k)) * c);
    }
    if (!r.is_zero()) throw math_error("TraceExpansion", "reciprocal expansion left a residue");
    return IntPolynomial(std::move(q));
}

std::optional<IntPolynomial> exact_divide(const IntPolynomial& p, const IntPolynomial& q) {
    if (q.is_zero()) throw input_error("DivisionByZero", "polynomial division by zero");
    if (p.is_zero()) return IntPolynomial();
    if (p.degree() < q.degree()) return std::nullopt;
    // Rational long division; exact integer divisibility means zero remainder
    // and integral quotient.
    std::vector<Rat> rem(p.coeffs().size());
    for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = Rat(p.coeffs()[i]);
    const long dq = q.degree();
    Rat lc(q.leading());
    std::vector<Rat> quot(static_cast<std::size_t>(p.degree() - dq) + 1, Rat(0));
    for (long d = p.degree(); d >= dq;) {
        Rat c = rem[static_cast<std::size_t>(d)] / lc;
        quot[static_cast<std::size_t>(d - dq)] = c;
        if (c != 0)
            for (long i = 0; i <= dq; ++i)
                rem[static_cast<std::size_t>(d - dq + i)] -= c * Rat(q.coeffs()[static_cast<std::size_t>(i)]);
        --d;
        while (d >= dq && rem[static_cast<std::size_t>(d)] == 0) --d;
    }
    for (const Rat& r : rem)
        if (r != 0) return std::nullopt;
    IntVec qi(quot.size());
    for (std::size_t i = 0; i < quot.size(); ++i) {
        if (quot[i].get_den() != 1) return std::nullopt;
        qi[i] = quot[i].get_num();
    }
    return IntPolynomial(std::move(qi));
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial f = a.primitive_part();
    IntPolynomial g = b.primitive_part();
    if (f.is_zero()) return g.is_zero() ? g : (g.leading() < 0 ? -g : g);
    if (g.is_zero()) return f.leading() < 0 ? -f : f;
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        // Pseudo-remainder of f by g, then primitive part.
        IntPolynomial r = f;
        const long dg = g.degree();
        while (!r.is_zero() && r.degree() >= dg) {
            Int c = r.leading();
            long shift = r.degree() - dg;
            r = r * g.leading() - (g * c) * IntPolynomial::x_power(static_cast<std::size_t>(shift));
        }
        f = g;
        g = r.is_zero() ? r : r.primitive_part();
    }
    return f.leading() < 0 ? -f : f;
}

std::vector<std::pair<IntPolynomial, long>> squarefree_decomposition(const IntPolynomial& p) {
    if (p.is_zero()) throw input_error("ZeroPolynomial", "squarefree decomposition of zero");
    std::vector<std::pair<IntPolynomial, long>> out;
    IntPolynomial f = p.primitive_part();
    if (f.leading() < 0) f = -f;
    if (f.degree() == 0) return out;

    IntPolynomial a = poly_gcd(f, f.derivative());
    IntPolynomial b = *exact_divide(f, a);
    IntPolynomial c = *exact_divide(f.derivative(), a);
    IntPolynomial d = c - b.derivative();
    long i = 1;
    while (b.degree() > 0) {
        IntPolynomial g = poly_gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = *exact_divide(b, g);
        c = *exact_divide(d, g);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

SturmChain SturmChain::build(const IntPolynomial& p) {
    if (p.is_zero()) throw input_error("ZeroPolynomial", "Sturm chain of zero polynomial");
    SturmChain chain;
    IntPolynomial f = p.primitive_part();
    IntPolynomial sf_gcd = poly_gcd(f, f.derivative());
    if (sf_gcd.degree() > 0) f = exact_divide(f, sf_gcd)->primitive_part();
    chain.seq.push_back(f);
    if (f.degree() == 0) return chain;
    chain.seq.push_back(f.derivative().primitive_part());
    while (chain.seq.back().degree() > 0) {
        const IntPolynomial& s0 = chain.seq[chain.seq.size() - 2];
        const IntPolynomial& s1 = chain.seq.back();
        // Positive-scaled pseudo-remainder keeps the Sturm sign structure.
        IntPolynomial r = s0;
        const long d1 = s1.degree();
        const Int lc_abs = abs(s1.leading());
        const int lc_sign = sgn(s1.leading());
        while (!r.is_zero() && r.degree() >= d1) {
            Int c = r.leading();
            long shift = r.degree() - d1;
            IntPolynomial shifted = s1 * IntPolynomial::x_power(static_cast<std::size_t>(shift));
            r = r * lc_abs - shifted * (c * lc_sign);
        }
        if (r.is_zero()) break;  // squarefree input should not get here
        chain.seq.push_back((-r).primitive_part());
    }
    return chain;
}

namespace {

int sign_at_bound(const IntPolynomial& p, const SturmBound& b) {
    if (p.is_zero()) return 0;
    switch (b.kind) {
        case SturmBound::Kind::finite:
            return p.sign_at(b.value);
        case SturmBound::Kind::plus_inf:
            return sgn(p.leading());
        case SturmBound::Kind::minus_inf: {
            int s = sgn(p.leading());
            return (p.degree() % 2 == 0) ? s : -s;
        }
    }
    return 0;
}

}  // namespace

long SturmChain::variations(const SturmBound& b) const {
    long v = 0;
    int prev = 0;
    for (const IntPolynomial& p : seq) {
        int s = sign_at_bound(p, b);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

long sturm_count(const IntPolynomial& p, const SturmBound& a, const SturmBound& b) {
    if (p.is_zero()) throw input_error("ZeroPolynomial", "root counting needs a nonzero polynomial");
    if (p.degree() == 0) return 0;
    SturmChain chain = SturmChain::build(p);
    if (chain.seq.front().degree() == 0) return 0;
    return chain.variations(a) - chain.variations(b);
}

}  // namespace hyperlat
