#pragma once

/**
 * @file config.hpp
 * @brief Run configurations for the command line tool and the bindings.
 *
 * A configuration is one JSON object:
 *
 *   {
 *     "algebra":    {"type": "A", "rank": 2, "levi": [2]},
 *     "lambda":     {"a1": <sequence literal>, "a1+a2": <sequence literal>},
 *     "theta":      "1",
 *     "mode":       "affine" | "loop-only",
 *     "cocycle":    "standard" | "literal",
 *     "truncation": {"D": 2, "E": 1, "J": 2},
 *     "sequences":  [<sequence literal>, ...],
 *     "check":      {"S": 2, "W": 10, "weighted": true}
 *   }
 *
 * "rank" counts simple roots, so sl(n) has rank n - 1.  Every key except
 * "algebra" is optional.  When "sequences" is absent, check-seq examines
 * the image of lambda.
 */

#include "affwhit/engine.hpp"
#include "affwhit/literals.hpp"

#include <optional>
#include <string>
#include <vector>

namespace affwhit::config {

using literals::json;

struct SequenceCheck {
    seq::Index shift_bound = 2;
    seq::Index coord_window = 10;
    bool weighted = true;
};

struct RunConfig {
    int rank = 1;
    std::set<int> levi;
    /// Canonical root label -> Lambda value.
    std::map<std::string, seq::BiSequence> lambda;
    Scalar theta = 0;
    engine::Mode mode = engine::Mode::affine;
    affine::Cocycle cocycle = affine::Cocycle::standard;
    engine::Truncation truncation{2, 2, 3};
    std::optional<std::vector<seq::BiSequence>> sequences;
    SequenceCheck check;
};

RunConfig parse_config(const json& j);
RunConfig load_config(const std::string& path);
json to_json(const RunConfig& c);

/// Structural equality via the canonical JSON form.
bool equivalent(const RunConfig& a, const RunConfig& b);

const std::vector<std::string>& preset_names();
RunConfig preset(const std::string& name);

roots::RootDatum make_datum(const RunConfig& c);
/// Resolves root labels against the datum; every root of Phi^0_n must have
/// a value and no other root may.
engine::WhittakerSpec make_spec(const RunConfig& c);

/// The sequences check-seq examines: "sequences" if given, else lambda's image.
std::vector<seq::BiSequence> sequences_to_check(const RunConfig& c);

} // namespace affwhit::config
