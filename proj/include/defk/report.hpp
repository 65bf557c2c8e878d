#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "defk/configuration.hpp"
#include "defk/enumerate.hpp"
#include "defk/sieve.hpp"

namespace defk {

using Json = nlohmann::ordered_json;

// Machine-readable reports behind the CLI subcommands. Arbitrary-precision
// values are rendered as decimal strings; everything else as native JSON.
Json check_report(const std::string& input, const Configuration& config);
Json det_report(const std::string& input, const Configuration& config);
Json decompose_report(const std::string& input, const Configuration& config);
Json verdict_json(const ParameterVerdict& verdict);
Json sieve_report(const std::vector<ParameterVerdict>& rows);
Json enumerate_report(int v, int r, const std::vector<Configuration>& classes);
Json error_json(const Error& error);

}  // namespace defk
