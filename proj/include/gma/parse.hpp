#ifndef GMA_PARSE_HPP
#define GMA_PARSE_HPP

#include <map>
#include <string>
#include <vector>

#include "gma/correspond.hpp"

namespace gma {

// One parsed session file: a fixed variable context, named definitions, and
// a single command to run.
struct SessionCommand {
    std::string verb;
    std::vector<std::string> args;
    int order = 16;
    int dmax = 7;
};

struct Session {
    ContextPtr base;  // declared variables
    ContextPtr ext;   // base extended by t (action images live here)
    std::map<std::string, Derivation> derivations;
    std::map<std::string, std::vector<RatFunc>> action_images;  // raw, verified at use
    std::map<std::string, BirationalMap> maps;
    std::map<std::string, RatFunc> exprs;
    SessionCommand command;
};

// Expression in the shared grammar over a fixed context.
RatFunc parse_ratfunc(const std::string& text, const ContextPtr& ctx);

Session parse_session(const std::string& text);

struct RunResult {
    int exit_code;       // 0 definitive, 2 not certified
    std::string output;  // what goes to stdout, byte-deterministic
};

RunResult run_session(const Session& session);
RunResult run_session_text(const std::string& text);

} // namespace gma

#endif
