#include "gma/ratfunc.hpp"

namespace gma {

namespace {

MultiPoly exact_div(const MultiPoly& p, const MultiPoly& d) {
    auto q = p.divide_exact(d);
    if (!q)
        throw inconsistency_error("inexact division during reduction");
    return std::move(*q);
}

} // namespace

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    require_same_context(num_, den_);
    if (den_.is_zero())
        throw arithmetic_error("division by zero");
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(num_.ctx(), BigRational(1));
        return;
    }
    if (!den_.is_constant()) {
        MultiPoly g = MultiPoly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    normalize_leading();
}

RatFunc::RatFunc(MultiPoly num)
    : num_(std::move(num)), den_(MultiPoly::constant(num_.ctx(), BigRational(1))) {}

RatFunc::RatFunc(MultiPoly num, MultiPoly den, reduced_tag)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero())
        den_ = MultiPoly::constant(num_.ctx(), BigRational(1));
    else
        normalize_leading();
}

void RatFunc::normalize_leading() {
    const BigRational& lc = den_.leading_coeff();
    if (lc != 1) {
        BigRational inv = BigRational(1) / lc;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFunc RatFunc::zero(ContextPtr ctx) { return RatFunc(MultiPoly::zero(std::move(ctx))); }

RatFunc RatFunc::one(ContextPtr ctx) {
    return RatFunc(MultiPoly::constant(std::move(ctx), BigRational(1)));
}

RatFunc RatFunc::constant(ContextPtr ctx, BigRational c) {
    return RatFunc(MultiPoly::constant(std::move(ctx), std::move(c)));
}

RatFunc RatFunc::variable(ContextPtr ctx, std::size_t index) {
    return RatFunc(MultiPoly::variable(std::move(ctx), index));
}

BigRational RatFunc::constant_value() const {
    if (!is_constant())
        throw arithmetic_error("value is not constant");
    return num_.constant_value();
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, reduced_tag{}); }

RatFunc RatFunc::operator+(const RatFunc& o) const {
    require_same_context(*this, o);
    if (is_zero())
        return o;
    if (o.is_zero())
        return *this;
    if (den_.is_one() && o.den_.is_one())
        return RatFunc(num_ + o.num_, den_, reduced_tag{});
    // gcd(n1 + n2*d1, d1) = gcd(n1, d1) = 1: already reduced
    if (o.den_.is_one())
        return RatFunc(num_ + o.num_ * den_, den_, reduced_tag{});
    if (den_.is_one())
        return RatFunc(num_ * o.den_ + o.num_, o.den_, reduced_tag{});
    if (den_ == o.den_) {
        MultiPoly t = num_ + o.num_;
        if (t.is_zero())
            return zero(ctx());
        return RatFunc(std::move(t), den_);
    }
    // gcd(n1*(d2/g) + n2*(d1/g), lcm(d1,d2)) = gcd(same, g), so one small
    // gcd finishes the reduction.
    MultiPoly g = MultiPoly::gcd(den_, o.den_);
    if (g.is_one()) {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_, reduced_tag{});
    }
    MultiPoly d1r = exact_div(den_, g);
    MultiPoly d2r = exact_div(o.den_, g);
    MultiPoly t = num_ * d2r + o.num_ * d1r;
    if (t.is_zero())
        return zero(ctx());
    MultiPoly h = MultiPoly::gcd(t, g);
    if (h.is_one())
        return RatFunc(std::move(t), den_ * d2r, reduced_tag{});
    return RatFunc(exact_div(t, h), exact_div(den_, h) * d2r, reduced_tag{});
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    require_same_context(*this, o);
    if (is_zero() || o.is_zero())
        return zero(ctx());
    MultiPoly n1 = num_, d2 = o.den_;
    if (!d2.is_one()) {
        MultiPoly g = MultiPoly::gcd(n1, d2);
        if (!g.is_one()) {
            n1 = exact_div(n1, g);
            d2 = exact_div(d2, g);
        }
    }
    MultiPoly n2 = o.num_, d1 = den_;
    if (!d1.is_one()) {
        MultiPoly g = MultiPoly::gcd(n2, d1);
        if (!g.is_one()) {
            n2 = exact_div(n2, g);
            d1 = exact_div(d1, g);
        }
    }
    return RatFunc(n1 * n2, d1 * d2, reduced_tag{});
}

RatFunc RatFunc::inverse() const {
    if (is_zero())
        throw arithmetic_error("division by zero");
    return RatFunc(den_, num_, reduced_tag{});
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::pow(long long e) const {
    if (e == 0)
        return one(ctx());
    if (is_zero()) {
        if (e < 0)
            throw arithmetic_error("zero raised to a negative power");
        return *this;
    }
    const RatFunc base = e < 0 ? inverse() : *this;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1
                                 : static_cast<unsigned long long>(e);
    // num and den are coprime, so powers of them are too.
    unsigned ue = static_cast<unsigned>(n);
    return RatFunc(base.num_.pow(ue), base.den_.pow(ue), reduced_tag{});
}

std::pair<MultiPoly, MultiPoly> RatFunc::eval_fraction(const RatFunc& f,
                                                       const std::vector<RatFunc>& images) {
    const ContextPtr& src = f.ctx();
    if (images.size() != src->size())
        throw context_error("substitution needs an image for every variable");
    const ContextPtr& dst = images.front().ctx();
    for (const auto& img : images)
        require_same_context(img.ctx(), dst);

    std::vector<unsigned> dmax = f.num().max_degrees();
    std::vector<unsigned> dden = f.den().max_degrees();
    for (std::size_t i = 0; i < dmax.size(); ++i)
        dmax[i] = std::max(dmax[i], dden[i]);

    // npow[i][k] = num(images[i])^k, dpow[i][k] = den(images[i])^k.
    std::vector<std::vector<MultiPoly>> npow(images.size()), dpow(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        npow[i].push_back(MultiPoly::constant(dst, BigRational(1)));
        dpow[i].push_back(MultiPoly::constant(dst, BigRational(1)));
        for (unsigned k = 1; k <= dmax[i]; ++k) {
            npow[i].push_back(npow[i].back() * images[i].num());
            dpow[i].push_back(dpow[i].back() * images[i].den());
        }
    }

    auto eval_poly = [&](const MultiPoly& p) {
        MultiPoly acc = MultiPoly::zero(dst);
        for (const auto& [m, c] : p.terms()) {
            MultiPoly t = MultiPoly::constant(dst, c);
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] > 0)
                    t = t * npow[i][m[i]];
                unsigned co = dmax[i] - m[i];
                if (co > 0)
                    t = t * dpow[i][co];
            }
            acc = acc + t;
        }
        return acc;
    };
    // The common factor prod_i den_i^dmax[i] cancels between the two.
    return {eval_poly(f.num()), eval_poly(f.den())};
}

RatFunc RatFunc::substitute(const std::vector<RatFunc>& images) const {
    auto [n, d] = eval_fraction(*this, images);
    if (d.is_zero())
        throw substitution_error("substituted denominator vanishes identically");
    return RatFunc(std::move(n), std::move(d));
}

RatFunc RatFunc::partial(std::size_t var) const {
    if (var >= ctx()->size())
        throw context_error("variable index out of range");
    if (den_.is_one())
        return RatFunc(num_.derivative(var), den_, reduced_tag{});
    // (n' d - n d')/d^2, deflating by g = gcd(d, d') to keep growth linear.
    MultiPoly dd = den_.derivative(var);
    if (dd.is_zero())
        return RatFunc(num_.derivative(var), den_);
    MultiPoly g = MultiPoly::gcd(den_, dd);
    if (g.is_one()) {
        return RatFunc(num_.derivative(var) * den_ - num_ * dd, den_ * den_);
    }
    MultiPoly dbar = exact_div(den_, g);
    MultiPoly w = num_.derivative(var) * dbar - num_ * exact_div(dd, g);
    return RatFunc(std::move(w), dbar * den_);
}

RatFunc RatFunc::lifted(const ContextPtr& bigger) const {
    return RatFunc(num_.lifted(bigger), den_.lifted(bigger), reduced_tag{});
}

RatFunc RatFunc::restricted(const ContextPtr& smaller) const {
    return RatFunc(num_.restricted(smaller), den_.restricted(smaller), reduced_tag{});
}

std::string RatFunc::str() const {
    if (den_.is_one())
        return num_.str();
    std::string n = num_.term_count() == 1 ? num_.str() : "(" + num_.str() + ")";
    bool den_bare = false;
    if (den_.term_count() == 1 && den_.leading_coeff() == 1) {
        // bare only for a power of a single variable, e.g. x or x^3
        const Monomial& m = den_.leading_monomial();
        int nonzero = 0;
        for (auto e : m)
            nonzero += e > 0 ? 1 : 0;
        den_bare = nonzero == 1;
    }
    std::string d = den_bare ? den_.str() : "(" + den_.str() + ")";
    return n + "/" + d;
}

} // namespace gma
