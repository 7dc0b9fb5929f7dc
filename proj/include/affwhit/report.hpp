#pragma once

/**
 * @file report.hpp
 * @brief JSON reports and text summaries for each command.
 *
 * Reports are built from ordered containers only, so the same configuration
 * always yields the same bytes.  Wall time is the one nondeterministic
 * quantity; it is attached separately by add_timing() when asked for.
 */

#include "affwhit/config.hpp"

#include <string>

namespace affwhit::report {

using literals::json;

json describe(const config::RunConfig& c);
std::string describe_text(const config::RunConfig& c);

json check_sequences(const config::RunConfig& c);
std::string check_sequences_text(const json& report);

struct WhittakerRun {
    json report;
    std::size_t dimension;
};

WhittakerRun whittaker(const config::RunConfig& c);
std::string whittaker_text(const json& report);

/// Both configurations must describe the same algebra, mode and cocycle.
/// The truncation is taken from `a`.
WhittakerRun tensor(const config::RunConfig& a, const config::RunConfig& b);
std::string tensor_text(const json& report);

/// One bracket of two generator literals, e.g. "X[a1]@t^2" and "X[-a1]@t^-2".
json bracket(const config::RunConfig& c, const std::string& x, const std::string& y);

void add_timing(json& report, double seconds);

} // namespace affwhit::report
