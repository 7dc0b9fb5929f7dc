#pragma once

/**
 * @file literals.hpp
 * @brief JSON literal syntax for sequences.
 *
 *   {"kind":"finite","entries":{"0":"1","3":"-2/3"}}
 *   {"kind":"geometric","j":"2"}
 *   {"kind":"recurrence","v":{"0":"-1","1":"-1","2":"1"},"initial":["0","1"]}
 *   {"kind":"constant","value":"5"}
 *   {"kind":"derived","base":<literal>,"shift":1,"poly":["0","1"]}
 *
 * Scalars are decimal-free rational strings.  to_literal() emits only the
 * finite / geometric / recurrence / derived forms, so every sequence the
 * library can build has a literal that parses back to the same sequence.
 */

#include "affwhit/seqspace.hpp"

#include "json.hpp"

#include <string>

namespace affwhit::literals {

using json = nlohmann::json;

seq::BiSequence parse_sequence(const json& j);
json to_literal(const seq::BiSequence& s);

seq::FinVector parse_finvector(const json& j);
json to_json(const seq::FinVector& v);

/// Short human-readable form, e.g. "a(2)", "finite{0:1}", "recurrence[v_0 - v_1; 5]".
std::string describe(const seq::BiSequence& s);

} // namespace affwhit::literals
