#ifndef GMA_RATFUNC_HPP
#define GMA_RATFUNC_HPP

#include <string>
#include <utility>
#include <vector>

#include "gma/polynomial.hpp"

namespace gma {

// Element of K = Q(x_1,...,x_n) in canonical reduced form:
// gcd(num, den) = 1, den != 0, den monic under lex order, zero is 0/1.
// Structural equality of canonical forms is value equality.
class RatFunc {
public:
    RatFunc(MultiPoly num, MultiPoly den);
    explicit RatFunc(MultiPoly num);

    static RatFunc zero(ContextPtr ctx);
    static RatFunc one(ContextPtr ctx);
    static RatFunc constant(ContextPtr ctx, BigRational c);
    static RatFunc variable(ContextPtr ctx, std::size_t index);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const ContextPtr& ctx() const { return num_.ctx(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    BigRational constant_value() const;

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc inverse() const;
    RatFunc pow(long long e) const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // Exact composition: image for every context variable, all images over a
    // common target context. Throws substitution_error when the substituted
    // denominator vanishes identically.
    RatFunc substitute(const std::vector<RatFunc>& images) const;

    // Unreduced substitution: returns (N, D) with f(images) = N/D exactly but
    // without gcd reduction. Cheap equality fuel for the axiom checks.
    static std::pair<MultiPoly, MultiPoly> eval_fraction(const RatFunc& f,
                                                         const std::vector<RatFunc>& images);

    RatFunc partial(std::size_t var) const;

    RatFunc lifted(const ContextPtr& bigger) const;
    RatFunc restricted(const ContextPtr& smaller) const;

    std::string str() const;

private:
    struct reduced_tag {};
    RatFunc(MultiPoly num, MultiPoly den, reduced_tag);
    void normalize_leading();

    MultiPoly num_;
    MultiPoly den_;
};

inline void require_same_context(const RatFunc& a, const RatFunc& b) {
    require_same_context(a.ctx(), b.ctx());
}

} // namespace gma

#endif
