#include "gma/parse.hpp"

namespace gma {

namespace {

const Derivation& find_derivation(const Session& s, const std::string& name) {
    auto it = s.derivations.find(name);
    if (it == s.derivations.end())
        throw error("'" + name + "' is not a defined derivation");
    return it->second;
}

const std::vector<RatFunc>& find_action_images(const Session& s, const std::string& name) {
    auto it = s.action_images.find(name);
    if (it == s.action_images.end())
        throw error("'" + name + "' is not a defined action");
    return it->second;
}

const BirationalMap& find_map(const Session& s, const std::string& name) {
    auto it = s.maps.find(name);
    if (it == s.maps.end())
        throw error("'" + name + "' is not a defined map");
    return it->second;
}

const RatFunc& find_expr(const Session& s, const std::string& name) {
    auto it = s.exprs.find(name);
    if (it == s.exprs.end())
        throw error("'" + name + "' is not a defined expression");
    return it->second;
}

void require_args(const SessionCommand& c, std::size_t lo, std::size_t hi) {
    if (c.args.size() < lo || c.args.size() > hi)
        throw error("verb '" + c.verb + "' takes " +
                    (lo == hi ? std::to_string(lo)
                              : std::to_string(lo) + " to " + std::to_string(hi)) +
                    " argument(s)");
}

} // namespace

RunResult run_session(const Session& s) {
    const SessionCommand& c = s.command;
    std::string out;
    int code = 0;

    if (c.verb == "exp") {
        require_args(c, 1, 2);
        const Derivation& d = find_derivation(s, c.args[0]);
        auto emit = [&](const std::string& name, const RatFunc& f) {
            out += name + " -> " + sigma(d.exp_series(f, c.order)).str() + "\n";
        };
        if (c.args.size() == 2) {
            emit(c.args[1], find_expr(s, c.args[1]));
        } else {
            for (std::size_t i = 0; i < s.base->size(); ++i)
                emit(s.base->name(i), RatFunc::variable(s.base, i));
        }
    } else if (c.verb == "detect") {
        require_args(c, 1, 1);
        Certificate cert =
            action_from_derivation(find_derivation(s, c.args[0]), c.order, c.dmax);
        out += cert.str() + "\n";
        code = cert.certified() ? 0 : 2;
    } else if (c.verb == "extract") {
        require_args(c, 1, 1);
        GmAction a = GmAction::make(s.base, find_action_images(s, c.args[0]));
        out += a.extract_derivation().str() + "\n";
    } else if (c.verb == "slice") {
        require_args(c, 1, 1);
        GmAction a = GmAction::make(s.base, find_action_images(s, c.args[0]));
        SliceSearch r = a.find_slice();
        if (r.found())
            out += "SLICE " + r.slice->str() + "\n";
        else if (r.witness)
            out += "LATTICE_GCD " + std::to_string(r.lattice_gcd) + " WITNESS " +
                   r.witness->str() + "\n";
        else
            out += "LATTICE_GCD " + std::to_string(r.lattice_gcd) + "\n";
    } else if (c.verb == "conjugate") {
        require_args(c, 2, 2);
        const Derivation& d = find_derivation(s, c.args[0]);
        const BirationalMap& m = find_map(s, c.args[1]);
        out += conjugate(d, m).str() + "\n";
    } else if (c.verb == "verify") {
        require_args(c, 1, 1);
        ActionAxioms ax = check_action_axioms(s.base, find_action_images(s, c.args[0]));
        out += std::string("IDENTITY ") + (ax.identity_ok ? "true" : "false") + "\n";
        out += std::string("COCYCLE ") +
               (!ax.identity_ok ? "skipped" : ax.cocycle_ok ? "true" : "false") + "\n";
    } else if (c.verb == "weight") {
        require_args(c, 2, 2);
        GmAction a = GmAction::make(s.base, find_action_images(s, c.args[0]));
        auto w = a.weight_of(find_expr(s, c.args[1]));
        out += w ? "WEIGHT " + std::to_string(*w) + "\n" : std::string("NO_WEIGHT\n");
    } else if (c.verb == "isslice") {
        require_args(c, 2, 2);
        GmAction a = GmAction::make(s.base, find_action_images(s, c.args[0]));
        bool ok = a.is_slice(find_expr(s, c.args[1]));
        out += std::string("IS_SLICE ") + (ok ? "true" : "false") + "\n";
    } else {
        throw error("unknown verb '" + c.verb + "'");
    }
    return {code, std::move(out)};
}

RunResult run_session_text(const std::string& text) {
    return run_session(parse_session(text));
}

} // namespace gma
