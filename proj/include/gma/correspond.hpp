#ifndef GMA_CORRESPOND_HPP
#define GMA_CORRESPOND_HPP

#include <variant>

#include "gma/action.hpp"
#include "gma/reconstruct.hpp"

namespace gma {

// Outcome of semisimplicity detection. A Semisimple verdict is exact: the
// embedded action passed both axiom checks and extract_derivation gave back
// the input derivation, all verified symbolically. NotCertified is
// explicitly inconclusive; the truncation order limits what we can certify,
// never the trustworthiness of a positive answer.
struct Certificate {
    struct Semisimple {
        GmAction action;
        // eigen weight per generator when the generator itself is a
        // semi-invariant with integer weight
        std::vector<std::optional<long long>> generator_weights;
    };
    struct NotCertified {
        std::string generator;
    };

    int order_used;
    std::variant<Semisimple, NotCertified> verdict;

    bool certified() const { return std::holds_alternative<Semisimple>(verdict); }
    const GmAction& action() const { return std::get<Semisimple>(verdict).action; }
    const std::vector<std::optional<long long>>& generator_weights() const {
        return std::get<Semisimple>(verdict).generator_weights;
    }
    const std::string& failing_generator() const {
        return std::get<NotCertified>(verdict).generator;
    }

    // "SEMISIMPLE order=<N> action { ... }" or
    // "NOT_CERTIFIED order=<N> generator=<name>"
    std::string str() const;
};

// sigma(exp(z d)) on every generator, rational reconstruction with bounds
// (dmax, dmax), then exact verification of both comorphism axioms and of the
// extraction round trip. Generators that are eigenvectors with integer
// eigenvalue take the direct t^lambda * x route. Requires order >= 2*dmax+2.
Certificate action_from_derivation(const Derivation& d, int order = 16, int dmax = 7);

// extract_derivation of the certified action equals d, generator-wise.
bool round_trip_da(const Derivation& d, int order = 16, int dmax = 7);

// action_from_derivation(extract_derivation(a)) returns exactly a.
bool round_trip_ad(const GmAction& a, int order = 16, int dmax = 7);

} // namespace gma

#endif
