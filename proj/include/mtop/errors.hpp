#pragma once

#include <stdexcept>
#include <string>

namespace mtop {

enum class errc {
    unknown_element,
    count_exceeds_omega,
    universe_mismatch,
    not_within_ambient,
    not_a_function,
    not_submset,
    missing_second_operand,
    budget_exceeded,
    no_universe,
    unbound_identifier,
    type_error,
    syntax_error,
    bad_input,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::unknown_element: return "unknown_element";
        case errc::count_exceeds_omega: return "count_exceeds_omega";
        case errc::universe_mismatch: return "universe_mismatch";
        case errc::not_within_ambient: return "not_within_ambient";
        case errc::not_a_function: return "not_a_function";
        case errc::not_submset: return "not_submset";
        case errc::missing_second_operand: return "missing_second_operand";
        case errc::budget_exceeded: return "budget_exceeded";
        case errc::no_universe: return "no_universe";
        case errc::unbound_identifier: return "unbound_identifier";
        case errc::type_error: return "type_error";
        case errc::syntax_error: return "syntax_error";
        case errc::bad_input: return "bad_input";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

}  // namespace mtop
