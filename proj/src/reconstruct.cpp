#include "gma/reconstruct.hpp"

#include <algorithm>

namespace gma {

namespace {

// Dense univariate polynomial over K; empty vector is zero, degree = size-1.
using KPoly = std::vector<RatFunc>;

void trim(KPoly& p) {
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

int deg(const KPoly& p) { return static_cast<int>(p.size()) - 1; }

// Long division over the field K; returns (quotient, remainder).
std::pair<KPoly, KPoly> divmod(KPoly a, const KPoly& b, const ContextPtr& ctx) {
    KPoly q;
    if (deg(a) >= deg(b))
        q.assign(static_cast<std::size_t>(deg(a) - deg(b)) + 1, RatFunc::zero(ctx));
    const RatFunc lb_inv = b.back().inverse();
    while (deg(a) >= deg(b)) {
        int shift = deg(a) - deg(b);
        RatFunc c = a.back() * lb_inv;
        q[static_cast<std::size_t>(shift)] = c;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::size_t k = static_cast<std::size_t>(shift) + j;
            a[k] = a[k] - c * b[j];
        }
        a.pop_back();  // leading term cancelled exactly
        trim(a);
    }
    return {std::move(q), std::move(a)};
}

KPoly gcd_monic(KPoly a, KPoly b, const ContextPtr& ctx) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        KPoly r = divmod(a, b, ctx).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        RatFunc inv = a.back().inverse();
        for (auto& c : a)
            c = c * inv;
    }
    return a;
}

// Coefficient of u^m in q(u) * A(u).
RatFunc convolve_at(const KPoly& q, const std::vector<RatFunc>& a, int m,
                    const ContextPtr& ctx) {
    RatFunc s = RatFunc::zero(ctx);
    for (int j = 0; j <= deg(q) && j <= m; ++j) {
        if (q[static_cast<std::size_t>(j)].is_zero())
            continue;
        s = s + q[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(m - j)];
    }
    return s;
}

// Some solution of M z = rhs over K via Gauss-Jordan; free variables are set
// to zero. Returns false when the system is inconsistent.
bool solve_linear(std::vector<std::vector<RatFunc>> m, std::vector<RatFunc> rhs,
                  std::vector<RatFunc>& z, const ContextPtr& ctx) {
    const std::size_t rows = m.size();
    const std::size_t cols = z.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && m[pr][c].is_zero())
            ++pr;
        if (pr == rows)
            continue;  // free column
        std::swap(m[pr], m[r]);
        std::swap(rhs[pr], rhs[r]);
        RatFunc inv = m[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j)
            m[r][j] = m[r][j] * inv;
        rhs[r] = rhs[r] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero())
                continue;
            RatFunc f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = m[i][j] - f * m[r][j];
            rhs[i] = rhs[i] - f * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!rhs[i].is_zero())
            return false;
    for (auto& v : z)
        v = RatFunc::zero(ctx);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        z[pivot_col[i]] = rhs[i];
    return true;
}

} // namespace

std::optional<RatFunc> rational_reconstruct(const TruncSeries& a, int dmax_num, int dmax_den,
                                            const ContextPtr& ext) {
    if (a.var() != SeriesVar::TMinusOne)
        throw context_error("reconstruction expects a (t-1)-tagged series");
    if (dmax_num < 0 || dmax_den < 0 || dmax_num + dmax_den >= a.order())
        throw parameter_error("degree bounds must satisfy dmax_num + dmax_den < order");
    const ContextPtr& base = a.ctx();
    const int n = a.order();
    const std::vector<RatFunc>& coeff = a.coeffs();

    // The extended-Euclid stopping point on (u^{N+1}, sum a_i u^i) is, by the
    // uniqueness of the reduced matching fraction, the solution q*A = p
    // (mod u^{N+1}) with the smallest denominator degree. Solve the Hankel
    // system for that q directly, ascending in deg q; q is normalized by
    // q(0) = 1, which the q(1) != 0 requirement makes lossless.
    for (int k = 0; k <= dmax_den; ++k) {
        KPoly q(static_cast<std::size_t>(k) + 1, RatFunc::zero(base));
        q[0] = RatFunc::one(base);
        if (k > 0) {
            std::vector<std::vector<RatFunc>> m(static_cast<std::size_t>(k));
            std::vector<RatFunc> rhs(static_cast<std::size_t>(k), RatFunc::zero(base));
            for (int e = 0; e < k; ++e) {
                int row_m = dmax_num + 1 + e;  // coefficient of u^row_m must vanish
                auto& row = m[static_cast<std::size_t>(e)];
                row.assign(static_cast<std::size_t>(k), RatFunc::zero(base));
                for (int j = 1; j <= k; ++j) {
                    int idx = row_m - j;
                    if (idx >= 0 && idx <= n)
                        row[static_cast<std::size_t>(j - 1)] = coeff[static_cast<std::size_t>(idx)];
                }
                rhs[static_cast<std::size_t>(e)] = -coeff[static_cast<std::size_t>(row_m)];
            }
            std::vector<RatFunc> z(static_cast<std::size_t>(k), RatFunc::zero(base));
            if (!solve_linear(std::move(m), std::move(rhs), z, base))
                continue;
            for (int j = 1; j <= k; ++j)
                q[static_cast<std::size_t>(j)] = z[static_cast<std::size_t>(j - 1)];
        }

        // Every coefficient of q*A beyond dmax_num must vanish up to order N:
        // this is exactly the re-expansion check for the candidate.
        bool ok = true;
        for (int mth = dmax_num + 1; mth <= n && ok; ++mth)
            ok = convolve_at(q, coeff, mth, base).is_zero();
        if (!ok)
            continue;

        KPoly p;
        for (int i = 0; i <= dmax_num && i <= n; ++i)
            p.push_back(convolve_at(q, coeff, i, base));
        trim(p);
        trim(q);
        KPoly g = gcd_monic(p, q, base);
        if (deg(g) > 0) {
            p = divmod(p, g, base).first;
            q = divmod(q, g, base).first;
        }
        if (q.front().is_zero())
            return std::nullopt;  // q(1) = 0 in t-coordinates

        // Assemble p(t-1)/q(t-1) over the extended context.
        RatFunc u = RatFunc(MultiPoly::variable(ext, ext->size() - 1)) - RatFunc::one(ext);
        auto horner = [&](const KPoly& f) {
            RatFunc acc = RatFunc::zero(ext);
            for (std::size_t i = f.size(); i-- > 0;)
                acc = acc * u + f[i].lifted(ext);
            return acc;
        };
        if (p.empty())
            return RatFunc::zero(ext);
        return horner(p) / horner(q);
    }
    return std::nullopt;
}

} // namespace gma
