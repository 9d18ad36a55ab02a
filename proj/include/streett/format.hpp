#pragma once

#include <string>
#include <variant>

#include "streett/automaton.hpp"
#include "streett/det_automaton.hpp"

namespace streett {

using ParsedAutomaton = std::variant<StreettNSA, DetAutomaton>;

// Accepts the native format (first keyword nsa/drta/dpta/dra) or the HOA v1
// subset (starts with "HOA:"). Throws parse_error / semantic_error /
// unsupported_feature_error.
ParsedAutomaton parse_automaton(const std::string& text);

// Canonical native text; the same value always emits identical bytes, and
// emit(parse(emit(a))) == emit(a).
std::string emit_automaton(const StreettNSA& nsa);
std::string emit_automaton(const DetAutomaton& aut);
std::string emit_automaton(const ParsedAutomaton& parsed);

} // namespace streett
