#pragma once

#include <string>

#include <json.hpp>

#include "extremal/energy.hpp"
#include "extremal/lemniscate.hpp"
#include "extremal/solvers.hpp"

namespace extremal {

using Json = nlohmann::ordered_json;

/// Renders JSON with every floating-point value at 17 significant digits and
/// non-finite values as null; identical inputs give byte-identical text.
std::string dump_json(const Json &value);

/// Formats a double with 17 significant digits (the CSV and JSON number format).
std::string format_real(double x);

Json log_disc_json(const LogDiscriminant &disc);
Json to_json(const ExtremalSolution &solution);
Json to_json(const DiskResult &disk);
Json to_json(const ChargeConfig &config);

/// Inverse of to_json(ExtremalSolution); polynomials are rebuilt from the stored roots.
ExtremalSolution solution_from_json(const Json &value);
ExtremalSolution solution_from_json(const std::string &text);

} // namespace extremal
