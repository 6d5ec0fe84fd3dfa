#include "gma/correspond.hpp"

namespace gma {

std::string Certificate::str() const {
    if (certified())
        return "SEMISIMPLE order=" + std::to_string(order_used) + " " + action().str();
    return "NOT_CERTIFIED order=" + std::to_string(order_used) +
           " generator=" + failing_generator();
}

namespace {

// t^k * x_i over the extended context, Laurent powers going to the denominator.
RatFunc monomial_image(const ContextPtr& ext, std::size_t i, long long k) {
    RatFunc xi(MultiPoly::variable(ext, i));
    RatFunc t(MultiPoly::variable(ext, ext->size() - 1));
    return xi * t.pow(k);
}

} // namespace

Certificate action_from_derivation(const Derivation& d, int order, int dmax) {
    if (dmax < 0 || order < 2 * dmax + 2)
        throw parameter_error("detection needs order >= 2*dmax + 2");
    const ContextPtr& base = d.ctx();
    ContextPtr ext = extend_context(base, "t");
    std::size_t n = base->size();

    std::vector<std::optional<long long>> weights(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto eig = d.eigen_test(RatFunc::variable(base, i));
        if (eig && is_integer(*eig))
            weights[i] = static_cast<long long>(numerator(*eig));
    }

    std::vector<RatFunc> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (weights[i]) {
            // Prop-2.8 fast route: phi*(x_i) = t^lambda * x_i.
            images.push_back(monomial_image(ext, i, *weights[i]));
            continue;
        }
        TruncSeries s = sigma(d.exp_series(RatFunc::variable(base, i), order));
        auto rec = rational_reconstruct(s, dmax, dmax, ext);
        if (!rec)
            return Certificate{order, Certificate::NotCertified{base->name(i)}};
        images.push_back(std::move(*rec));
    }

    // A reconstructed candidate becomes a certificate only after exact
    // verification of both axioms and of the extraction round trip.
    ActionAxioms ax = check_action_axioms(base, images);
    if (!ax.valid())
        return Certificate{order, Certificate::NotCertified{ax.failing_generator}};
    GmAction act = GmAction::make(base, std::move(images));
    Derivation back = act.extract_derivation();
    for (std::size_t i = 0; i < n; ++i)
        if (back.images()[i] != d.images()[i])
            return Certificate{order, Certificate::NotCertified{base->name(i)}};
    return Certificate{order, Certificate::Semisimple{std::move(act), std::move(weights)}};
}

bool round_trip_da(const Derivation& d, int order, int dmax) {
    Certificate cert = action_from_derivation(d, order, dmax);
    if (!cert.certified())
        return false;
    return cert.action().extract_derivation() == d;
}

bool round_trip_ad(const GmAction& a, int order, int dmax) {
    Certificate cert = action_from_derivation(a.extract_derivation(), order, dmax);
    return cert.certified() && cert.action() == a;
}

} // namespace gma
