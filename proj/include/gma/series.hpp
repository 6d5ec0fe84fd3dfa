#ifndef GMA_SERIES_HPP
#define GMA_SERIES_HPP

#include <string>
#include <vector>

#include "gma/ratfunc.hpp"

namespace gma {

// Tag of the formal variable: K[|z|] or K[|t-1|].
enum class SeriesVar { Z, TMinusOne };

inline const char* series_var_name(SeriesVar v) { return v == SeriesVar::Z ? "z" : "(t-1)"; }

// Truncated formal power series over K; coeffs[i] is the coefficient of the
// i-th power, order = coeffs.size() - 1. Arithmetic truncates to the common
// order of the operands.
class TruncSeries {
public:
    TruncSeries(SeriesVar var, std::vector<RatFunc> coeffs);

    static TruncSeries zero(SeriesVar var, ContextPtr ctx, int order);
    static TruncSeries constant(SeriesVar var, RatFunc c, int order);
    // The series variable itself (z or t-1) at a given order >= 1.
    static TruncSeries identity(SeriesVar var, ContextPtr ctx, int order);
    // log t = sum_{i>=1} (-1)^{i+1} (t-1)^i / i, tagged TMinusOne.
    static TruncSeries log_series(ContextPtr ctx, int order);
    // e^z - 1 = sum_{i>=1} z^i / i!, tagged Z.
    static TruncSeries expm1_series(ContextPtr ctx, int order);

    SeriesVar var() const { return var_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const RatFunc& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    const std::vector<RatFunc>& coeffs() const { return coeffs_; }
    const ContextPtr& ctx() const { return coeffs_.front().ctx(); }
    bool is_zero() const;

    TruncSeries operator-() const;
    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;

    // Multiplicative inverse; requires a unit constant coefficient.
    TruncSeries invert() const;

    // Substitute `inner` (zero constant coefficient) for this series'
    // variable. The result carries inner's tag.
    TruncSeries compose(const TruncSeries& inner) const;

    // Formal derivative; order drops by one.
    TruncSeries derivative() const;

    // Constant coefficient: ev_0 for Z-tagged series, ev_1 for TMinusOne.
    const RatFunc& ev0() const { return coeffs_.front(); }

    TruncSeries truncated(int order) const;

    bool operator==(const TruncSeries& o) const { return var_ == o.var_ && coeffs_ == o.coeffs_; }
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }

    std::string str() const;

private:
    SeriesVar var_;
    std::vector<RatFunc> coeffs_;
};

// The mutually inverse substitutions between K[|z|] and K[|t-1|]:
// sigma sends z to the logarithm series, sigma_inv sends t-1 to e^z - 1.
TruncSeries sigma(const TruncSeries& a);
TruncSeries sigma_inv(const TruncSeries& a);

} // namespace gma

#endif
