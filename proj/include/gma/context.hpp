#ifndef GMA_CONTEXT_HPP
#define GMA_CONTEXT_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gma/errors.hpp"

namespace gma {

// Ordered list of field generators x_1, ..., x_n. Declaration order fixes the
// lexicographic monomial order and the canonical printing order. Contexts are
// immutable and shared; values over different contexts never mix.
class VarContext {
public:
    explicit VarContext(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw context_error("duplicate variable '" + names_[i] + "'");
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name)
                return i;
        return std::nullopt;
    }

    bool operator==(const VarContext& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

inline ContextPtr make_context(std::vector<std::string> names) {
    return std::make_shared<VarContext>(std::move(names));
}

inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_context(const ContextPtr& a, const ContextPtr& b) {
    if (!same_context(a, b))
        throw context_error("mixed variable contexts");
}

// New context with one variable appended (e.g. adjoining t to x_1..x_n).
inline ContextPtr extend_context(const ContextPtr& ctx, const std::string& name) {
    std::vector<std::string> names = ctx->names();
    names.push_back(name);
    return make_context(std::move(names));
}

// True when `small` is an initial segment of `big`.
inline bool is_prefix_context(const ContextPtr& small, const ContextPtr& big) {
    if (small->size() > big->size())
        return false;
    for (std::size_t i = 0; i < small->size(); ++i)
        if (small->name(i) != big->name(i))
            return false;
    return true;
}

} // namespace gma

#endif
