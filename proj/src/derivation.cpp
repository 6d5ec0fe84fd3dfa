#include "gma/derivation.hpp"

namespace gma {

Derivation::Derivation(ContextPtr ctx, std::vector<RatFunc> images)
    : ctx_(std::move(ctx)), images_(std::move(images)) {
    if (images_.size() != ctx_->size())
        throw context_error("derivation needs exactly one image per generator");
    for (const auto& img : images_)
        require_same_context(img.ctx(), ctx_);
}

bool Derivation::is_zero() const {
    for (const auto& img : images_)
        if (!img.is_zero())
            return false;
    return true;
}

RatFunc Derivation::apply(const RatFunc& f) const {
    require_same_context(f.ctx(), ctx_);
    RatFunc acc = RatFunc::zero(ctx_);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i].is_zero())
            continue;
        RatFunc p = f.partial(i);
        if (p.is_zero())
            continue;
        acc = acc + p * images_[i];
    }
    return acc;
}

RatFunc Derivation::iterate(const RatFunc& f, unsigned i) const {
    RatFunc g = f;
    for (unsigned k = 0; k < i; ++k)
        g = apply(g);
    return g;
}

TruncSeries Derivation::exp_series(const RatFunc& f, int order) const {
    if (order < 0)
        throw parameter_error("negative truncation order");
    std::vector<RatFunc> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order) + 1);
    coeffs.push_back(f);
    RatFunc g = f;
    BigInt fact(1);
    for (int i = 1; i <= order; ++i) {
        g = apply(g);
        fact *= i;
        coeffs.push_back(g * RatFunc::constant(ctx_, make_rational(1, fact)));
    }
    return TruncSeries(SeriesVar::Z, std::move(coeffs));
}

std::optional<BigRational> Derivation::eigen_test(const RatFunc& f) const {
    if (f.is_zero())
        throw domain_error("eigen test of the zero element");
    RatFunc ratio = apply(f) / f;
    if (!ratio.is_constant())
        return std::nullopt;
    return ratio.constant_value();
}

std::string Derivation::str() const {
    std::string out = "der {";
    for (std::size_t i = 0; i < images_.size(); ++i)
        out += " " + ctx_->name(i) + " -> " + images_[i].str() + ";";
    return out + " }";
}

BirationalMap::BirationalMap(ContextPtr ctx, std::vector<RatFunc> forward,
                             std::vector<RatFunc> inverse)
    : ctx_(std::move(ctx)), forward_(std::move(forward)), inverse_(std::move(inverse)) {
    if (forward_.size() != ctx_->size() || inverse_.size() != ctx_->size())
        throw context_error("birational map needs one image per generator on both sides");
    for (std::size_t i = 0; i < ctx_->size(); ++i) {
        require_same_context(forward_[i].ctx(), ctx_);
        require_same_context(inverse_[i].ctx(), ctx_);
    }
    for (std::size_t i = 0; i < ctx_->size(); ++i) {
        RatFunc x = RatFunc::variable(ctx_, i);
        if (inverse_[i].substitute(forward_) != x || forward_[i].substitute(inverse_) != x)
            throw map_error("round trip is not the identity on generator '" + ctx_->name(i) +
                            "'");
    }
}

BirationalMap BirationalMap::identity(ContextPtr ctx) {
    std::vector<RatFunc> ids;
    for (std::size_t i = 0; i < ctx->size(); ++i)
        ids.push_back(RatFunc::variable(ctx, i));
    return BirationalMap(ctx, ids, ids);
}

std::string BirationalMap::str() const {
    std::string out = "map {";
    for (std::size_t i = 0; i < forward_.size(); ++i)
        out += " " + ctx_->name(i) + " -> " + forward_[i].str() + ";";
    out += " } inverse {";
    for (std::size_t i = 0; i < inverse_.size(); ++i)
        out += " " + ctx_->name(i) + " -> " + inverse_[i].str() + ";";
    return out + " }";
}

Derivation conjugate(const Derivation& d, const BirationalMap& m) {
    require_same_context(d.ctx(), m.ctx());
    std::vector<RatFunc> images;
    images.reserve(d.ctx()->size());
    for (std::size_t i = 0; i < d.ctx()->size(); ++i) {
        try {
            images.push_back(m.apply_forward(d.apply(m.inverse_images()[i])));
        } catch (const substitution_error& e) {
            throw substitution_error("conjugation failed on generator '" + d.ctx()->name(i) +
                                     "': " + e.what());
        }
    }
    return Derivation(d.ctx(), std::move(images));
}

} // namespace gma
