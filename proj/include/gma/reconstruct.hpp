#ifndef GMA_RECONSTRUCT_HPP
#define GMA_RECONSTRUCT_HPP

#include <optional>

#include "gma/series.hpp"

namespace gma {

// Recover p(t)/q(t) with deg p <= dmax_num, deg q <= dmax_den and q(1) != 0
// from a truncated (t-1)-expansion, via the extended Euclidean algorithm on
// (u^{N+1}, sum a_i u^i) over K[u]. The candidate is accepted only if its
// re-expansion reproduces every input coefficient; nullopt means no candidate
// within the bounds survived (which is not a proof of non-rationality).
// The result lives over `ext` = base context extended by t.
std::optional<RatFunc> rational_reconstruct(const TruncSeries& a, int dmax_num, int dmax_den,
                                            const ContextPtr& ext);

} // namespace gma

#endif
