#ifndef GMA_ERRORS_HPP
#define GMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gma {

// Base class for everything this library throws.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mixing values that live over different variable contexts.
struct context_error : error {
    using error::error;
};

// Division by zero and friends.
struct arithmetic_error : error {
    using error::error;
};

// Substitution whose denominator vanishes identically.
struct substitution_error : error {
    using error::error;
};

// Series inversion of a non-unit (zero constant coefficient).
struct not_a_unit_error : error {
    using error::error;
};

// Series composition with a non-vanishing inner constant term.
struct composition_error : error {
    using error::error;
};

// Formal derivative of an order-0 series.
struct empty_order_error : error {
    using error::error;
};

// Denominator vanishes at t = 1: ord_1 < 0, the comorphism is malformed.
struct valuation_error : error {
    using error::error;
};

// Identity axiom fails at construction of an action.
struct malformed_action_error : error {
    using error::error;
};

// An internally cross-checked pair of computations disagreed.
struct inconsistency_error : error {
    using error::error;
};

// Bad algorithm parameters (truncation order vs. degree bounds).
struct parameter_error : error {
    using error::error;
};

// Operation applied outside its stated domain (e.g. eigen test of 0).
struct domain_error : error {
    using error::error;
};

// Birational map whose round trip is not the identity.
struct map_error : error {
    using error::error;
};

// Session/expression syntax or name resolution failure; carries position.
struct parse_error : error {
    int line;
    int column;
    parse_error(const std::string& msg, int line_, int col_)
        : error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
          line(line_), column(col_) {}
};

} // namespace gma

#endif
