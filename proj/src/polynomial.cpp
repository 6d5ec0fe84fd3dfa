#include "gma/polynomial.hpp"

#include <algorithm>

namespace gma {

MultiPoly MultiPoly::constant(ContextPtr ctx, BigRational c) {
    MultiPoly p(std::move(ctx));
    if (c != 0)
        p.terms_.emplace(Monomial(p.ctx_->size(), 0), std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(ContextPtr ctx, std::size_t index) {
    MultiPoly p(std::move(ctx));
    Monomial m(p.ctx_->size(), 0);
    m.at(index) = 1;
    p.terms_.emplace(std::move(m), BigRational(1));
    return p;
}

MultiPoly MultiPoly::term(ContextPtr ctx, Monomial m, BigRational c) {
    MultiPoly p(std::move(ctx));
    if (m.size() != p.ctx_->size())
        throw context_error("monomial length does not match context");
    if (c != 0)
        p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty())
        return true;
    if (terms_.size() > 1)
        return false;
    const Monomial& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
}

bool MultiPoly::is_one() const { return is_constant() && constant_value() == 1; }

BigRational MultiPoly::constant_value() const {
    if (terms_.empty())
        return BigRational(0);
    if (!is_constant())
        throw arithmetic_error("polynomial is not constant");
    return terms_.begin()->second;
}

const Monomial& MultiPoly::leading_monomial() const {
    if (terms_.empty())
        throw arithmetic_error("zero polynomial has no leading term");
    return terms_.begin()->first;
}

const BigRational& MultiPoly::leading_coeff() const {
    if (terms_.empty())
        throw arithmetic_error("zero polynomial has no leading term");
    return terms_.begin()->second;
}

void MultiPoly::add_term(const Monomial& m, const BigRational& c) {
    if (c == 0)
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(ctx_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    require_same_context(*this, o);
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    require_same_context(*this, o);
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    require_same_context(*this, o);
    MultiPoly r(ctx_);
    if (terms_.empty() || o.terms_.empty())
        return r;
    Monomial m(ctx_->size());
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const BigRational& c) const {
    MultiPoly r(ctx_);
    if (c == 0)
        return r;
    for (const auto& [m, k] : terms_)
        r.terms_.emplace(m, k * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly acc = constant(ctx_, BigRational(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u)
            acc = acc * base;
        base = (e >>= 1) ? base * base : base;
    }
    return acc;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return same_context(ctx_, o.ctx_) && terms_ == o.terms_;
}

unsigned MultiPoly::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, static_cast<unsigned>(m[var]));
    return d;
}

std::vector<unsigned> MultiPoly::max_degrees() const {
    std::vector<unsigned> d(ctx_->size(), 0);
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < d.size(); ++i)
            d[i] = std::max(d[i], static_cast<unsigned>(m[i]));
    return d;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    MultiPoly r(ctx_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0)
            continue;
        Monomial m2 = m;
        m2[var] -= 1;
        r.add_term(m2, c * BigRational(m[var]));
    }
    return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
    require_same_context(*this, divisor);
    if (divisor.is_zero())
        throw arithmetic_error("division by zero polynomial");
    MultiPoly q(ctx_);
    MultiPoly r = *this;
    const Monomial& dm = divisor.leading_monomial();
    const BigRational& dc = divisor.leading_coeff();
    Monomial qm(ctx_->size());
    while (!r.is_zero()) {
        const Monomial& rm = r.leading_monomial();
        for (std::size_t i = 0; i < qm.size(); ++i) {
            if (rm[i] < dm[i])
                return std::nullopt;
            qm[i] = rm[i] - dm[i];
        }
        BigRational qc = r.leading_coeff() / dc;
        MultiPoly t = term(ctx_, qm, qc);
        q.add_term(qm, qc);
        r = r - divisor * t;
    }
    return q;
}

MultiPoly MultiPoly::monic() const {
    if (is_zero())
        return *this;
    return scaled(BigRational(1) / leading_coeff());
}

std::vector<MultiPoly> MultiPoly::coeffs_in(std::size_t var) const {
    std::vector<MultiPoly> out(degree_in(var) + 1, MultiPoly::zero(ctx_));
    for (const auto& [m, c] : terms_) {
        Monomial m2 = m;
        std::uint32_t e = m2[var];
        m2[var] = 0;
        out[e].add_term(m2, c);
    }
    return out;
}

MultiPoly MultiPoly::from_coeffs_in(std::size_t var, ContextPtr ctx,
                                    const std::vector<MultiPoly>& coeffs) {
    MultiPoly r(std::move(ctx));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        for (const auto& [m, c] : coeffs[i].terms_) {
            Monomial m2 = m;
            m2[var] += static_cast<std::uint32_t>(i);
            r.add_term(m2, c);
        }
    }
    return r;
}

MultiPoly MultiPoly::lifted(const ContextPtr& bigger) const {
    if (same_context(ctx_, bigger))
        return *this;
    if (!is_prefix_context(ctx_, bigger))
        throw context_error("context is not a prefix of the target context");
    MultiPoly r(bigger);
    for (const auto& [m, c] : terms_) {
        Monomial m2 = m;
        m2.resize(bigger->size(), 0);
        r.terms_.emplace(std::move(m2), c);
    }
    return r;
}

MultiPoly MultiPoly::restricted(const ContextPtr& smaller) const {
    if (same_context(ctx_, smaller))
        return *this;
    if (!is_prefix_context(smaller, ctx_))
        throw context_error("target context is not a prefix of the source context");
    MultiPoly r(smaller);
    for (const auto& [m, c] : terms_) {
        for (std::size_t i = smaller->size(); i < m.size(); ++i)
            if (m[i] != 0)
                throw context_error("polynomial involves variables outside the target context");
        Monomial m2(m.begin(), m.begin() + static_cast<long>(smaller->size()));
        r.terms_.emplace(std::move(m2), c);
    }
    return r;
}

// ---------------------------------------------------------------------------
// GCD: subresultant polynomial remainder sequence with content extraction.
// The chain runs over integer-coefficient polynomials (denominators cleared
// up front), viewed as univariate in one main variable with polynomial
// coefficients; contents recurse into the remaining variables.
// ---------------------------------------------------------------------------

namespace {

// ---- modular coprimality certificate -------------------------------------
// gcd(p, q) is constant iff it has degree 0 in every shared variable. For one
// variable v: specialize the others at a point mod a word-size prime; when the
// specialized lc_v(p) stays nonzero, deg_v(gcd) <= deg of the univariate gcd
// image. A constant image therefore certifies deg_v(gcd) = 0 exactly. This
// short-circuits the subresultant chain in the (very common) coprime case.

constexpr std::uint64_t kPrimes[2] = {4294967291ull, 4294967279ull};

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_of_int(const BigInt& n, std::uint64_t p) {
    BigInt r = n % BigInt(p);
    if (r < 0)
        r += BigInt(p);
    return r.convert_to<std::uint64_t>();
}

bool mod_of_rat(const BigRational& q, std::uint64_t p, std::uint64_t& out) {
    std::uint64_t d = mod_of_int(denominator(q), p);
    if (d == 0)
        return false;
    out = mod_of_int(numerator(q), p) * mod_pow(d, p - 2, p) % p;
    return true;
}

// Univariate image of `poly` in variable v with the other variables fixed at
// `pts`; false when a coefficient denominator is not invertible mod p.
bool mod_specialize(const MultiPoly& poly, std::size_t v,
                    const std::vector<std::uint64_t>& pts, std::uint64_t p,
                    std::vector<std::uint64_t>& out) {
    std::vector<unsigned> dmax = poly.max_degrees();
    std::vector<std::vector<std::uint64_t>> pows(dmax.size());
    for (std::size_t i = 0; i < dmax.size(); ++i) {
        if (i == v)
            continue;
        pows[i].assign(dmax[i] + 1, 1);
        for (unsigned k = 1; k <= dmax[i]; ++k)
            pows[i][k] = pows[i][k - 1] * (pts[i] % p) % p;
    }
    out.assign(dmax[v] + 1, 0);
    for (const auto& [m, c] : poly.terms()) {
        std::uint64_t val;
        if (!mod_of_rat(c, p, val))
            return false;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != v && m[i] > 0)
                val = val * pows[i][m[i]] % p;
        out[m[v]] = (out[m[v]] + val) % p;
    }
    return true;
}

bool mod_gcd_is_constant(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b,
                         std::uint64_t p) {
    auto trim = [](std::vector<std::uint64_t>& f) {
        while (!f.empty() && f.back() == 0)
            f.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        std::uint64_t inv = mod_pow(b.back(), p - 2, p);
        while (a.size() >= b.size()) {
            std::uint64_t c = a.back() * inv % p;
            std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t sub = c * b[j] % p;
                a[shift + j] = (a[shift + j] + p - sub) % p;
            }
            trim(a);
            if (a.empty())
                break;
        }
        std::swap(a, b);
    }
    return a.size() <= 1;
}

bool certified_coprime(const MultiPoly& a, const MultiPoly& b) {
    static thread_local std::uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next_point = [&]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return (state % 1000003) + 1;
    };
    std::vector<unsigned> da = a.max_degrees();
    std::vector<unsigned> db = b.max_degrees();
    for (std::size_t prime_idx = 0; prime_idx < 2; ++prime_idx) {
        std::uint64_t p = kPrimes[prime_idx];
        bool prime_ok = true;
        for (std::size_t v = 0; v < da.size() && prime_ok; ++v) {
            if (da[v] == 0 || db[v] == 0)
                continue;  // gcd already has degree 0 in v
            bool var_done = false;
            for (int attempt = 0; attempt < 4 && !var_done; ++attempt) {
                std::vector<std::uint64_t> pts(da.size());
                for (auto& x : pts)
                    x = next_point();
                std::vector<std::uint64_t> ia, ib;
                if (!mod_specialize(a, v, pts, p, ia) || !mod_specialize(b, v, pts, p, ib)) {
                    prime_ok = false;  // denominator clash: try the other prime
                    break;
                }
                if (ia.empty() || ia.back() == 0)
                    continue;  // unlucky point killed lc_v(a); retry
                if (!mod_gcd_is_constant(ia, ib, p))
                    return false;  // may share a factor: no certificate
                var_done = true;
            }
            if (!var_done)
                return false;
        }
        if (prime_ok)
            return true;
    }
    return false;
}

// Clear denominators and remove integer content; leading coefficient > 0.
MultiPoly integer_primitive(const MultiPoly& p) {
    if (p.is_zero())
        return p;
    BigInt l(1);
    for (const auto& [m, c] : p.terms())
        l = int_lcm(l, denominator(c));
    BigInt g(0);
    for (const auto& [m, c] : p.terms())
        g = int_gcd(g, numerator(c) * (l / denominator(c)));
    MultiPoly r = p.scaled(make_rational(l, g));
    if (r.leading_coeff() < 0)
        r = -r;
    return r;
}

int uvec_deg(const std::vector<MultiPoly>& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (!a[static_cast<std::size_t>(i)].is_zero())
            return i;
    return -1;
}

// R := lc(B)^(deg A - deg B + 1) * A mod B, the pseudo-remainder.
std::vector<MultiPoly> pseudo_rem(std::vector<MultiPoly> r, const std::vector<MultiPoly>& b) {
    int db = uvec_deg(b);
    const MultiPoly& lb = b[static_cast<std::size_t>(db)];
    int dr = uvec_deg(r);
    int e = dr - db + 1;
    while (dr >= db) {
        MultiPoly lr = r[static_cast<std::size_t>(dr)];
        int shift = dr - db;
        for (int i = 0; i <= dr; ++i) {
            std::size_t ui = static_cast<std::size_t>(i);
            MultiPoly t = r[ui] * lb;
            if (i >= shift && i - shift <= db)
                t = t - b[static_cast<std::size_t>(i - shift)] * lr;
            r[ui] = std::move(t);
        }
        --e;
        r.erase(r.begin() + dr, r.end());  // leading entry cancelled exactly
        dr = uvec_deg(r);
    }
    if (e > 0) {
        MultiPoly scale = lb.pow(static_cast<unsigned>(e));
        for (auto& c : r)
            c = c * scale;
    }
    return r;
}

MultiPoly gcd_zz(const MultiPoly& a, const MultiPoly& b);

// gcd of all coefficients (the content of a univariate view).
MultiPoly uvec_content(const std::vector<MultiPoly>& a) {
    MultiPoly g = MultiPoly::zero(a.front().ctx());
    for (const auto& c : a) {
        if (c.is_zero())
            continue;
        g = gcd_zz(g, c);
        if (g.is_constant() && g.constant_value() == 1)
            break;
    }
    return g;
}

std::vector<MultiPoly> uvec_divide(std::vector<MultiPoly> a, const MultiPoly& d) {
    for (auto& c : a) {
        if (c.is_zero())
            continue;
        auto q = c.divide_exact(d);
        if (!q)
            throw inconsistency_error("inexact division in subresultant chain");
        c = std::move(*q);
    }
    return a;
}

// GCD over Z[x_1..x_n] including integer content, leading coefficient > 0.
// Inputs must have integer coefficients.
MultiPoly gcd_zz(const MultiPoly& a, const MultiPoly& b) {
    const ContextPtr& ctx = a.ctx();
    auto abs_norm = [](MultiPoly p) {
        if (!p.is_zero() && p.leading_coeff() < 0)
            p = -p;
        return p;
    };
    if (a.is_zero())
        return abs_norm(b);
    if (b.is_zero())
        return abs_norm(a);
    if (a.is_constant() || b.is_constant()) {
        BigInt g(0);
        const MultiPoly& other = a.is_constant() ? b : a;
        const MultiPoly& cst = a.is_constant() ? a : b;
        g = numerator(cst.constant_value());
        for (const auto& [m, c] : other.terms())
            g = int_gcd(g, numerator(c));
        return MultiPoly::constant(ctx, BigRational(boost::multiprecision::abs(g)));
    }

    std::size_t v = 0;
    while (a.degree_in(v) == 0 && b.degree_in(v) == 0)
        ++v;
    if (a.degree_in(v) == 0)
        return gcd_zz(a, uvec_content(b.coeffs_in(v)));
    if (b.degree_in(v) == 0)
        return gcd_zz(uvec_content(a.coeffs_in(v)), b);

    std::vector<MultiPoly> A = a.coeffs_in(v);
    std::vector<MultiPoly> B = b.coeffs_in(v);
    MultiPoly ca = uvec_content(A);
    MultiPoly cb = uvec_content(B);
    A = uvec_divide(std::move(A), ca);
    B = uvec_divide(std::move(B), cb);
    MultiPoly unit_part = gcd_zz(ca, cb);
    if (uvec_deg(A) < uvec_deg(B))
        std::swap(A, B);

    MultiPoly g = MultiPoly::constant(ctx, BigRational(1));
    MultiPoly h = g;
    MultiPoly pp_gcd = g;
    while (true) {
        int delta = uvec_deg(A) - uvec_deg(B);
        std::vector<MultiPoly> R = pseudo_rem(A, B);
        int dr = uvec_deg(R);
        if (dr < 0) {
            std::vector<MultiPoly> pp = uvec_divide(B, uvec_content(B));
            pp_gcd = MultiPoly::from_coeffs_in(v, ctx, pp);
            break;
        }
        if (dr == 0)
            break;  // primitive parts are coprime in v
        A = std::move(B);
        MultiPoly divisor = g * h.pow(static_cast<unsigned>(delta));
        B = uvec_divide(std::move(R), divisor);
        g = A[static_cast<std::size_t>(uvec_deg(A))];
        if (delta >= 1) {
            auto q = g.pow(static_cast<unsigned>(delta))
                         .divide_exact(h.pow(static_cast<unsigned>(delta - 1)));
            if (!q)
                throw inconsistency_error("inexact h update in subresultant chain");
            h = std::move(*q);
        }
    }
    return abs_norm(unit_part * pp_gcd);
}

} // namespace

MultiPoly MultiPoly::gcd(const MultiPoly& a, const MultiPoly& b) {
    require_same_context(a, b);
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();
    if (a.is_constant() || b.is_constant())
        return MultiPoly::constant(a.ctx(), BigRational(1));
    if (certified_coprime(a, b))
        return MultiPoly::constant(a.ctx(), BigRational(1));
    // one exact division is far cheaper than the remainder chain
    if (a.divide_exact(b))
        return b.monic();
    if (b.divide_exact(a))
        return a.monic();
    return gcd_zz(integer_primitive(a), integer_primitive(b)).monic();
}

// ---------------------------------------------------------------------------
// Canonical printing: terms in descending lex order, factors in declaration
// order. Output re-parses to the same value under the expression grammar.
// ---------------------------------------------------------------------------

std::string MultiPoly::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        BigRational mag = c;
        bool neg = c < 0;
        if (neg)
            mag = -mag;
        if (first) {
            if (neg)
                out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += ctx_->name(i);
            if (m[i] > 1)
                mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += to_string(mag) + "*" + mono;
        }
    }
    return out;
}

} // namespace gma
