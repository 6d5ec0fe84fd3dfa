#include "gma/series.hpp"

#include <algorithm>

namespace gma {

TruncSeries::TruncSeries(SeriesVar var, std::vector<RatFunc> coeffs)
    : var_(var), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw parameter_error("series needs at least the constant coefficient");
    for (const auto& c : coeffs_)
        require_same_context(c.ctx(), coeffs_.front().ctx());
}

TruncSeries TruncSeries::zero(SeriesVar var, ContextPtr ctx, int order) {
    if (order < 0)
        throw parameter_error("negative truncation order");
    return TruncSeries(var, std::vector<RatFunc>(static_cast<std::size_t>(order) + 1,
                                                 RatFunc::zero(std::move(ctx))));
}

TruncSeries TruncSeries::constant(SeriesVar var, RatFunc c, int order) {
    TruncSeries s = zero(var, c.ctx(), order);
    s.coeffs_[0] = std::move(c);
    return s;
}

TruncSeries TruncSeries::identity(SeriesVar var, ContextPtr ctx, int order) {
    if (order < 1)
        throw parameter_error("series variable needs order >= 1");
    TruncSeries s = zero(var, std::move(ctx), order);
    s.coeffs_[1] = RatFunc::one(s.ctx());
    return s;
}

TruncSeries TruncSeries::log_series(ContextPtr ctx, int order) {
    TruncSeries s = zero(SeriesVar::TMinusOne, std::move(ctx), order);
    for (int i = 1; i <= order; ++i) {
        BigRational c = make_rational(i % 2 == 1 ? 1 : -1, i);
        s.coeffs_[static_cast<std::size_t>(i)] = RatFunc::constant(s.ctx(), c);
    }
    return s;
}

TruncSeries TruncSeries::expm1_series(ContextPtr ctx, int order) {
    TruncSeries s = zero(SeriesVar::Z, std::move(ctx), order);
    BigInt fact(1);
    for (int i = 1; i <= order; ++i) {
        fact *= i;
        s.coeffs_[static_cast<std::size_t>(i)] =
            RatFunc::constant(s.ctx(), make_rational(1, fact));
    }
    return s;
}

bool TruncSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const RatFunc& c) { return c.is_zero(); });
}

namespace {

void require_same_tag(const TruncSeries& a, const TruncSeries& b) {
    if (a.var() != b.var())
        throw context_error("series variable tags differ");
}

} // namespace

TruncSeries TruncSeries::operator-() const {
    std::vector<RatFunc> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_)
        c.push_back(-x);
    return TruncSeries(var_, std::move(c));
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    require_same_tag(*this, o);
    std::size_t n = std::min(coeffs_.size(), o.coeffs_.size());
    std::vector<RatFunc> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        c.push_back(coeffs_[i] + o.coeffs_[i]);
    return TruncSeries(var_, std::move(c));
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    require_same_tag(*this, o);
    std::size_t n = std::min(coeffs_.size(), o.coeffs_.size());
    std::vector<RatFunc> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        c.push_back(coeffs_[i] - o.coeffs_[i]);
    return TruncSeries(var_, std::move(c));
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    require_same_tag(*this, o);
    require_same_context(ctx(), o.ctx());
    std::size_t n = std::min(coeffs_.size(), o.coeffs_.size());
    std::vector<RatFunc> c(n, RatFunc::zero(ctx()));
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (o.coeffs_[j].is_zero())
                continue;
            c[i + j] = c[i + j] + coeffs_[i] * o.coeffs_[j];
        }
    }
    return TruncSeries(var_, std::move(c));
}

TruncSeries TruncSeries::invert() const {
    if (coeffs_[0].is_zero())
        throw not_a_unit_error("series has zero constant coefficient");
    std::vector<RatFunc> c(coeffs_.size(), RatFunc::zero(ctx()));
    RatFunc inv0 = coeffs_[0].inverse();
    c[0] = inv0;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        RatFunc s = RatFunc::zero(ctx());
        for (std::size_t j = 1; j <= k; ++j) {
            if (coeffs_[j].is_zero() || c[k - j].is_zero())
                continue;
            s = s + coeffs_[j] * c[k - j];
        }
        c[k] = -(s * inv0);
    }
    return TruncSeries(var_, std::move(c));
}

TruncSeries TruncSeries::compose(const TruncSeries& inner) const {
    require_same_context(ctx(), inner.ctx());
    if (!inner.coeffs_[0].is_zero())
        throw composition_error("inner series has a nonzero constant term");
    int n = std::min(order(), inner.order());
    // Horner over truncated series; inner has valuation >= 1 so only the
    // first n+1 outer coefficients can contribute.
    TruncSeries inner_t = inner.truncated(n);
    TruncSeries acc = TruncSeries::constant(inner.var_, coeffs_[static_cast<std::size_t>(n)], n);
    for (int i = n - 1; i >= 0; --i) {
        acc = acc * inner_t;
        acc.coeffs_[0] = acc.coeffs_[0] + coeffs_[static_cast<std::size_t>(i)];
    }
    return acc;
}

TruncSeries TruncSeries::derivative() const {
    if (order() == 0)
        throw empty_order_error("cannot differentiate an order-0 series");
    std::vector<RatFunc> c;
    c.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        c.push_back(coeffs_[i] * RatFunc::constant(ctx(), BigRational(i)));
    return TruncSeries(var_, std::move(c));
}

TruncSeries TruncSeries::truncated(int order) const {
    if (order < 0)
        throw parameter_error("negative truncation order");
    if (order >= this->order())
        return *this;
    std::vector<RatFunc> c(coeffs_.begin(), coeffs_.begin() + order + 1);
    return TruncSeries(var_, std::move(c));
}

std::string TruncSeries::str() const {
    const char* u = series_var_name(var_);
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        if (i == 0) {
            out += coeffs_[0].str();
            continue;
        }
        out += "(" + coeffs_[i].str() + ")*" + u;
        if (i > 1)
            out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

TruncSeries sigma(const TruncSeries& a) {
    if (a.var() != SeriesVar::Z)
        throw context_error("sigma expects a z-tagged series");
    return a.compose(TruncSeries::log_series(a.ctx(), a.order()));
}

TruncSeries sigma_inv(const TruncSeries& a) {
    if (a.var() != SeriesVar::TMinusOne)
        throw context_error("sigma_inv expects a (t-1)-tagged series");
    return a.compose(TruncSeries::expm1_series(a.ctx(), a.order()));
}

} // namespace gma
