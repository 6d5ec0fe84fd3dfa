#ifndef GMA_POLYNOMIAL_HPP
#define GMA_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gma/context.hpp"
#include "gma/rational.hpp"

namespace gma {

// Exponent vector, one entry per context variable.
using Monomial = std::vector<std::uint32_t>;

// Lexicographic order by variable declaration order, greatest first, so map
// iteration starts at the leading term.
struct MonomialLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i])
                return a[i] > b[i];
        }
        return false;
    }
};

// Sparse multivariate polynomial over Q with canonical term order.
// No zero coefficients are ever stored.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, BigRational, MonomialLexGreater>;

    static MultiPoly zero(ContextPtr ctx) { return MultiPoly(std::move(ctx)); }
    static MultiPoly constant(ContextPtr ctx, BigRational c);
    static MultiPoly variable(ContextPtr ctx, std::size_t index);
    static MultiPoly term(ContextPtr ctx, Monomial m, BigRational c);

    const ContextPtr& ctx() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    // Value of a constant polynomial (zero polynomial gives 0).
    BigRational constant_value() const;

    const Monomial& leading_monomial() const;
    const BigRational& leading_coeff() const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const BigRational& c) const;
    MultiPoly pow(unsigned e) const;

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    unsigned degree_in(std::size_t var) const;
    // Per-variable maximum exponent, one entry per context variable.
    std::vector<unsigned> max_degrees() const;

    MultiPoly derivative(std::size_t var) const;

    // Exact division; nullopt when not divisible.
    std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

    // GCD with content removed and leading coefficient 1 under lex order;
    // gcd(p, 0) is p normalized the same way. Subresultant PRS underneath.
    static MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

    // Monic under lex order (leading coefficient 1); zero stays zero.
    MultiPoly monic() const;

    // Coefficients of this polynomial viewed as univariate in `var`; index i
    // is the coefficient of var^i, with the var exponent zeroed out. Size is
    // degree_in(var) + 1 (a single zero for the zero polynomial).
    std::vector<MultiPoly> coeffs_in(std::size_t var) const;
    static MultiPoly from_coeffs_in(std::size_t var, ContextPtr ctx,
                                    const std::vector<MultiPoly>& coeffs);

    // Embed into a context that has this one as an initial segment.
    MultiPoly lifted(const ContextPtr& bigger) const;
    // Inverse of lifted; requires every exponent beyond `smaller` to be 0.
    MultiPoly restricted(const ContextPtr& smaller) const;

    std::string str() const;

private:
    explicit MultiPoly(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    void add_term(const Monomial& m, const BigRational& c);

    ContextPtr ctx_;
    TermMap terms_;
};

inline void require_same_context(const MultiPoly& a, const MultiPoly& b) {
    require_same_context(a.ctx(), b.ctx());
}

} // namespace gma

#endif
