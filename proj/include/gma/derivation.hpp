#ifndef GMA_DERIVATION_HPP
#define GMA_DERIVATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "gma/series.hpp"

namespace gma {

// A derivation of K = Q(x_1,...,x_n), stored as its values on the generators
// and extended everywhere else by linearity and the Leibniz rule. Values are
// never cached; apply() recomputes from the generator images.
class Derivation {
public:
    Derivation(ContextPtr ctx, std::vector<RatFunc> images);

    const ContextPtr& ctx() const { return ctx_; }
    const std::vector<RatFunc>& images() const { return images_; }
    bool is_zero() const;

    // d(p/q) via the quotient rule with dp = sum_i (dp/dx_i) * images[i].
    RatFunc apply(const RatFunc& f) const;

    // d^i(f); d^0 is the identity.
    RatFunc iterate(const RatFunc& f, unsigned i) const;

    // exp(z d)(f) truncated: coefficients d^i(f)/i! for i = 0..order.
    TruncSeries exp_series(const RatFunc& f, int order) const;

    // lambda with d(f) = lambda f, if f is an eigenvector; f must be nonzero.
    // Any rational lambda is reported; integrality is the caller's concern.
    std::optional<BigRational> eigen_test(const RatFunc& f) const;

    bool is_invariant(const RatFunc& f) const { return apply(f).is_zero(); }

    bool operator==(const Derivation& o) const {
        return same_context(ctx_, o.ctx_) && images_ == o.images_;
    }
    bool operator!=(const Derivation& o) const { return !(*this == o); }

    std::string str() const;

private:
    ContextPtr ctx_;
    std::vector<RatFunc> images_;
};

// A birational automorphism given by generator images of the pullback and of
// its inverse. Both round trips are verified exactly at construction.
class BirationalMap {
public:
    BirationalMap(ContextPtr ctx, std::vector<RatFunc> forward, std::vector<RatFunc> inverse);

    const ContextPtr& ctx() const { return ctx_; }
    const std::vector<RatFunc>& forward_images() const { return forward_; }
    const std::vector<RatFunc>& inverse_images() const { return inverse_; }

    // f composed with the map: substitute the forward images.
    RatFunc apply_forward(const RatFunc& f) const { return f.substitute(forward_); }
    RatFunc apply_inverse(const RatFunc& f) const { return f.substitute(inverse_); }

    BirationalMap inverse() const { return BirationalMap(ctx_, inverse_, forward_); }

    static BirationalMap identity(ContextPtr ctx);

    std::string str() const;

private:
    ContextPtr ctx_;
    std::vector<RatFunc> forward_;
    std::vector<RatFunc> inverse_;
};

// The conjugated derivation phi* . d . (phi*)^{-1}, computed on each
// generator as: inverse image, apply d, substitute forward.
Derivation conjugate(const Derivation& d, const BirationalMap& m);

} // namespace gma

#endif
