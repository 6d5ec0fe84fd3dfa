#ifndef GMA_ACTION_HPP
#define GMA_ACTION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gma/derivation.hpp"

namespace gma {

// Unique representation t^shift * (sum a_i t^i) / (sum b_i t^i) of a pullback,
// with a_0 != 0, b_0 = 1 and the two t-polynomials coprime over K. The
// coefficients live over the base context.
struct LaurentNormalForm {
    long long shift = 0;
    std::vector<RatFunc> num_coeffs;
    std::vector<RatFunc> den_coeffs;
};

// Outcome of the slice search: slice is set iff lattice_gcd == 1; otherwise
// witness carries an element of weight lattice_gcd (when any nonzero weight
// was observed at all). lattice_gcd == 0 flags the trivial action.
struct SliceSearch {
    std::optional<RatFunc> slice;
    long long lattice_gcd = 0;
    std::optional<RatFunc> witness;
    bool found() const { return slice.has_value(); }
};

// Result of checking the two comorphism axioms on raw generator images.
struct ActionAxioms {
    bool identity_ok = false;
    bool cocycle_ok = false;
    std::string failing_generator;
    bool valid() const { return identity_ok && cocycle_ok; }
};

// Exact axiom checks on candidate images (over base ctx extended by t):
// identity: ev_1 of each image is the generator (requires the denominator to
// be nonzero at t = 1); cocycle: substituting t -> t1*t2 equals the staged
// substitution, as exact elements of Q(x_1..x_n, t1, t2). The cocycle is only
// checked when the identity holds.
ActionAxioms check_action_axioms(const ContextPtr& base, const std::vector<RatFunc>& images);

// A rational Gm-action given by its comorphism on generators, as exact
// rational functions of (x_1,...,x_n,t). The identity axiom is enforced at
// construction; the cocycle verdict is computed once and cached.
class GmAction {
public:
    static GmAction make(ContextPtr base, std::vector<RatFunc> images);

    const ContextPtr& base_ctx() const { return base_; }
    const ContextPtr& ext_ctx() const { return ext_; }
    std::size_t t_index() const { return base_->size(); }
    const std::vector<RatFunc>& images() const { return images_; }

    bool verify_identity() const { return true; }  // enforced by make()
    bool verify_cocycle() const { return cocycle_ok_; }
    bool is_valid() const { return cocycle_ok_; }

    // phi*(f): substitute the generator images into f.
    RatFunc pullback(const RatFunc& f) const;

    // Taylor expansion of pullback(f) in t-1 up to `order`. Throws
    // valuation_error when the denominator vanishes at t = 1 (ord_1 < 0).
    TruncSeries expand_at_one(const RatFunc& f, int order) const;

    // The infinitesimal generator D: f -> ev_1(d/dt phi*(f)), on generators.
    Derivation extract_derivation() const;

    // k with pullback(f) = t^k f exactly; f must be nonzero.
    std::optional<long long> weight_of(const RatFunc& f) const;

    LaurentNormalForm laurent_normal_form(const RatFunc& f) const;

    // The nonzero normal-form coefficients of pullback(f) with their weights:
    // (a_j, shift + j) and (b_j, j) for j >= 1; b_0 = 1 is omitted. Every pair
    // is re-verified through weight_of before being returned.
    std::vector<std::pair<RatFunc, long long>> extract_semiinvariants(const RatFunc& f) const;

    // Bezout combination of the generators' semi-invariants into a weight-1
    // element, or the gcd of the observed weight lattice. Requires a valid
    // action.
    SliceSearch find_slice() const;

    // pullback(s) == t*s, cross-checked against d(s) == s for the extracted
    // derivation; disagreement raises inconsistency_error.
    bool is_slice(const RatFunc& s) const;

    bool operator==(const GmAction& o) const {
        return same_context(base_, o.base_) && images_ == o.images_;
    }
    bool operator!=(const GmAction& o) const { return !(*this == o); }

    std::string str() const;

private:
    GmAction(ContextPtr base, ContextPtr ext, std::vector<RatFunc> images, bool cocycle_ok)
        : base_(std::move(base)), ext_(std::move(ext)), images_(std::move(images)),
          cocycle_ok_(cocycle_ok) {}

    void require_valid(const char* op) const;

    ContextPtr base_;
    ContextPtr ext_;
    std::vector<RatFunc> images_;
    bool cocycle_ok_;
};

// gcd > 0 and coefficients u, v with a*u + b*v = gcd(|a|, |b|).
struct BezoutPair {
    long long gcd;
    long long u;
    long long v;
};
BezoutPair extended_gcd(long long a, long long b);

} // namespace gma

#endif
