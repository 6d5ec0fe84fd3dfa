#include "gma/action.hpp"

#include <algorithm>

namespace gma {

namespace {

// Images substituting t -> 1 and fixing the generators; target is `base`.
std::vector<RatFunc> ev1_images(const ContextPtr& base) {
    std::vector<RatFunc> imgs;
    for (std::size_t j = 0; j < base->size(); ++j)
        imgs.push_back(RatFunc::variable(base, j));
    imgs.push_back(RatFunc::one(base));
    return imgs;
}

// Binomial row C(j, 0..j) as exact rationals.
std::vector<BigRational> binomial_row(unsigned j) {
    std::vector<BigRational> row(j + 1);
    BigInt c(1);
    for (unsigned k = 0; k <= j; ++k) {
        row[k] = BigRational(c);
        c = c * (j - k) / (k + 1);
    }
    return row;
}

} // namespace

ActionAxioms check_action_axioms(const ContextPtr& base, const std::vector<RatFunc>& images) {
    ActionAxioms out;
    if (images.size() != base->size())
        throw context_error("action needs exactly one image per generator");
    ContextPtr ext = extend_context(base, "t");
    for (const auto& img : images)
        require_same_context(img.ctx(), ext);

    // Identity: ev_1(image_i) = x_i, with a nonvanishing denominator at t=1.
    std::vector<RatFunc> at_one = ev1_images(base);
    for (std::size_t i = 0; i < images.size(); ++i) {
        auto [n, d] = RatFunc::eval_fraction(images[i], at_one);
        MultiPoly xi = MultiPoly::variable(base, i);
        if (d.is_zero() || n != xi * d) {
            out.failing_generator = base->name(i);
            return out;
        }
    }
    out.identity_ok = true;

    // Cocycle over Q(x_1..x_n, t1, t2): image_i(t -> t1*t2) versus
    // image_i(x_j -> image_j(t -> t2), t -> t1), compared exactly.
    ContextPtr ctx2 = extend_context(extend_context(base, "t1"), "t2");
    std::size_t n = base->size();
    RatFunc t1 = RatFunc::variable(ctx2, n);
    RatFunc t2 = RatFunc::variable(ctx2, n + 1);

    std::vector<RatFunc> lhs_sub;
    for (std::size_t j = 0; j < n; ++j)
        lhs_sub.push_back(RatFunc::variable(ctx2, j));
    lhs_sub.push_back(t1 * t2);

    std::vector<RatFunc> to_t2;
    for (std::size_t j = 0; j < n; ++j)
        to_t2.push_back(RatFunc::variable(ctx2, j));
    to_t2.push_back(t2);

    std::vector<RatFunc> rhs_sub;
    for (std::size_t j = 0; j < n; ++j)
        rhs_sub.push_back(images[j].substitute(to_t2));
    rhs_sub.push_back(t1);

    for (std::size_t i = 0; i < images.size(); ++i) {
        auto [ln, ld] = RatFunc::eval_fraction(images[i], lhs_sub);
        auto [rn, rd] = RatFunc::eval_fraction(images[i], rhs_sub);
        if (ln * rd != rn * ld) {
            out.failing_generator = base->name(i);
            return out;
        }
    }
    out.cocycle_ok = true;
    return out;
}

GmAction GmAction::make(ContextPtr base, std::vector<RatFunc> images) {
    ActionAxioms ax = check_action_axioms(base, images);
    if (!ax.identity_ok)
        throw malformed_action_error("identity axiom fails on generator '" +
                                     ax.failing_generator + "'");
    ContextPtr ext = extend_context(base, "t");
    return GmAction(std::move(base), std::move(ext), std::move(images), ax.cocycle_ok);
}

void GmAction::require_valid(const char* op) const {
    if (!cocycle_ok_)
        throw domain_error(std::string(op) + " requires an action satisfying the cocycle axiom");
}

RatFunc GmAction::pullback(const RatFunc& f) const {
    require_same_context(f.ctx(), base_);
    try {
        return f.substitute(images_);
    } catch (const substitution_error& e) {
        throw substitution_error(std::string("pullback outside the action domain: ") + e.what());
    }
}

TruncSeries GmAction::expand_at_one(const RatFunc& f, int order) const {
    if (order < 0)
        throw parameter_error("negative truncation order");
    require_same_context(f.ctx(), base_);
    std::size_t tv = t_index();

    // Rewrite a rational function of (x, t) as a (t-1)-series over K: both
    // parts become polynomials in u = t-1 by the binomial shift, then the
    // denominator is inverted as a series.
    auto expand_ratfunc = [&](const RatFunc& p) {
        auto shifted = [&](const MultiPoly& poly) {
            std::vector<MultiPoly> by_t = poly.coeffs_in(tv);
            std::vector<RatFunc> out(static_cast<std::size_t>(order) + 1,
                                     RatFunc::zero(base_));
            for (std::size_t j = 0; j < by_t.size(); ++j) {
                if (by_t[j].is_zero())
                    continue;
                RatFunc cj(by_t[j].restricted(base_));
                auto row = binomial_row(static_cast<unsigned>(j));
                for (std::size_t k = 0; k <= j && k <= static_cast<std::size_t>(order); ++k)
                    out[k] = out[k] + cj * RatFunc::constant(base_, row[k]);
            }
            return TruncSeries(SeriesVar::TMinusOne, std::move(out));
        };
        TruncSeries den = shifted(p.den());
        if (den.ev0().is_zero())
            throw valuation_error("denominator vanishes at t = 1 (ord_1 < 0)");
        return shifted(p.num()) * den.invert();
    };

    // Expand each generator image, then evaluate f coefficientwise on the
    // image series. The identity axiom makes every constant coefficient a
    // unit where needed: ev_1(image_i) = x_i, so a polynomial q evaluates to
    // a series with constant coefficient q(x) itself.
    std::vector<TruncSeries> image_series;
    image_series.reserve(images_.size());
    for (const auto& img : images_)
        image_series.push_back(expand_ratfunc(img));

    std::vector<unsigned> dmax = f.num().max_degrees();
    std::vector<unsigned> dden = f.den().max_degrees();
    for (std::size_t i = 0; i < dmax.size(); ++i)
        dmax[i] = std::max(dmax[i], dden[i]);
    std::vector<std::vector<TruncSeries>> pow;
    pow.reserve(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        std::vector<TruncSeries> p{TruncSeries::constant(SeriesVar::TMinusOne,
                                                         RatFunc::one(base_), order)};
        for (unsigned k = 1; k <= dmax[i]; ++k)
            p.push_back(p.back() * image_series[i]);
        pow.push_back(std::move(p));
    }
    auto eval_poly = [&](const MultiPoly& q) {
        TruncSeries acc = TruncSeries::zero(SeriesVar::TMinusOne, base_, order);
        for (const auto& [m, cf] : q.terms()) {
            TruncSeries t = TruncSeries::constant(SeriesVar::TMinusOne,
                                                  RatFunc::constant(base_, cf), order);
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i] > 0)
                    t = t * pow[i][m[i]];
            acc = acc + t;
        }
        return acc;
    };

    TruncSeries num = eval_poly(f.num());
    if (f.den().is_one())
        return num;
    TruncSeries den = eval_poly(f.den());
    if (den.ev0().is_zero())
        throw valuation_error("denominator vanishes at t = 1 (ord_1 < 0)");
    return num * den.invert();
}

Derivation GmAction::extract_derivation() const {
    std::vector<RatFunc> at_one = ev1_images(base_);
    std::vector<RatFunc> imgs;
    imgs.reserve(images_.size());
    for (const auto& img : images_)
        imgs.push_back(img.partial(t_index()).substitute(at_one));
    return Derivation(base_, std::move(imgs));
}

std::optional<long long> GmAction::weight_of(const RatFunc& f) const {
    if (f.is_zero())
        throw domain_error("weight of the zero element");
    RatFunc ratio = pullback(f) / f.lifted(ext_);
    // Exactly t^k: single monic terms on both sides, no base variables.
    const MultiPoly& n = ratio.num();
    const MultiPoly& d = ratio.den();
    if (n.term_count() != 1 || d.term_count() != 1)
        return std::nullopt;
    if (n.leading_coeff() != 1 || d.leading_coeff() != 1)
        return std::nullopt;
    const Monomial& nm = n.leading_monomial();
    const Monomial& dm = d.leading_monomial();
    for (std::size_t i = 0; i < t_index(); ++i)
        if (nm[i] != 0 || dm[i] != 0)
            return std::nullopt;
    return static_cast<long long>(nm[t_index()]) - static_cast<long long>(dm[t_index()]);
}

LaurentNormalForm GmAction::laurent_normal_form(const RatFunc& f) const {
    if (f.is_zero())
        throw domain_error("normal form of the zero element");
    RatFunc p = pullback(f);
    std::size_t tv = t_index();

    auto split = [&](const MultiPoly& poly) {
        std::vector<MultiPoly> by_t = poly.coeffs_in(tv);
        std::size_t low = 0;
        while (by_t[low].is_zero())
            ++low;
        std::vector<RatFunc> out;
        for (std::size_t j = low; j < by_t.size(); ++j)
            out.push_back(RatFunc(by_t[j].restricted(base_)));
        return std::make_pair(low, std::move(out));
    };

    auto [nlow, nc] = split(p.num());
    auto [dlow, dc] = split(p.den());
    RatFunc b0 = dc.front();
    LaurentNormalForm lnf;
    lnf.shift = static_cast<long long>(nlow) - static_cast<long long>(dlow);
    for (auto& a : nc)
        lnf.num_coeffs.push_back(a / b0);
    for (auto& b : dc)
        lnf.den_coeffs.push_back(b / b0);
    return lnf;
}

std::vector<std::pair<RatFunc, long long>>
GmAction::extract_semiinvariants(const RatFunc& f) const {
    LaurentNormalForm lnf = laurent_normal_form(f);
    std::vector<std::pair<RatFunc, long long>> out;
    for (std::size_t j = 0; j < lnf.num_coeffs.size(); ++j) {
        if (!lnf.num_coeffs[j].is_zero())
            out.emplace_back(lnf.num_coeffs[j], lnf.shift + static_cast<long long>(j));
    }
    for (std::size_t j = 1; j < lnf.den_coeffs.size(); ++j) {
        if (!lnf.den_coeffs[j].is_zero())
            out.emplace_back(lnf.den_coeffs[j], static_cast<long long>(j));
    }
    for (const auto& [g, w] : out) {
        auto check = weight_of(g);
        if (!check || *check != w)
            throw inconsistency_error(
                "normal-form coefficient fails weight verification; not a valid action");
    }
    return out;
}

BezoutPair extended_gcd(long long a, long long b) {
    // Iterative extended Euclid on (a, b); returns g = gcd(|a|, |b|) > 0.
    long long old_r = a, r = b;
    long long old_u = 1, u = 0;
    long long old_v = 0, v = 1;
    while (r != 0) {
        long long q = old_r / r;
        long long tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_u - q * u;
        old_u = u;
        u = tmp;
        tmp = old_v - q * v;
        old_v = v;
        v = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_u = -old_u;
        old_v = -old_v;
    }
    return {old_r, old_u, old_v};
}

SliceSearch GmAction::find_slice() const {
    require_valid("find_slice");
    std::vector<std::pair<RatFunc, long long>> semis;
    for (std::size_t i = 0; i < base_->size(); ++i) {
        auto part = extract_semiinvariants(RatFunc::variable(base_, i));
        for (auto& p : part)
            if (p.second != 0)
                semis.push_back(std::move(p));
    }

    SliceSearch out;
    if (semis.empty()) {
        out.lattice_gcd = 0;  // trivial action: every observed weight is 0
        return out;
    }

    RatFunc s = semis.front().first;
    long long w = semis.front().second;
    for (std::size_t i = 1; i < semis.size() && w != 1 && w != -1; ++i) {
        BezoutPair bz = extended_gcd(w, semis[i].second);
        if (bz.gcd == std::llabs(w))
            continue;  // no lattice refinement from this element
        s = s.pow(bz.u) * semis[i].first.pow(bz.v);
        w = bz.gcd;
    }
    if (w < 0) {
        s = s.inverse();
        w = -w;
    }
    auto verify = weight_of(s);
    if (!verify || *verify != w)
        throw inconsistency_error("slice candidate fails weight verification");
    out.lattice_gcd = w;
    if (w == 1)
        out.slice = std::move(s);
    else
        out.witness = std::move(s);
    return out;
}

bool GmAction::is_slice(const RatFunc& s) const {
    if (s.is_zero())
        throw domain_error("the zero element cannot be a slice");
    RatFunc t = RatFunc::variable(ext_, t_index());
    bool by_action = pullback(s) == t * s.lifted(ext_);
    bool by_derivation = extract_derivation().apply(s) == s;
    if (by_action != by_derivation)
        throw inconsistency_error("action and derivation slice checks disagree");
    return by_action;
}

std::string GmAction::str() const {
    std::string out = "action {";
    for (std::size_t i = 0; i < images_.size(); ++i)
        out += " " + base_->name(i) + " -> " + images_[i].str() + ";";
    return out + " }";
}

} // namespace gma
