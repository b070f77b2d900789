#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "conal/metrics.hpp"
#include "conal/norms.hpp"

namespace conal {

/// System JSON: {"a": [[...]], "b": [[...]], "c": [[...]], "d": [[...]]}.
nlohmann::json state_space_to_json(const StateSpace& sys);
StateSpace state_space_from_json(const nlohmann::json& j);

/// Scalar spectrum JSON: {"num": [c_{-d}..c_d], "den": [...]}.
nlohmann::json scalar_spectrum_to_json(const ScalarRationalSpectrum& phi);
ScalarRationalSpectrum scalar_spectrum_from_json(const nlohmann::json& j);

/// CSV: header row, then per line theta followed by row-major re/im entries.
std::string sampled_spectrum_to_csv(const SampledSpectrum& phi);
SampledSpectrum sampled_spectrum_from_csv(const std::string& csv);

nlohmann::json distance_result_to_json(const DistanceResult& r);
nlohmann::json norm_result_to_json(const NormResult& r);

/// Dispatch on the file content: a CSV file (".csv" or a header row) parses
/// as samples; JSON with "a" parses as a state-space factor, with "num" as a
/// scalar spectrum.
SpectrumInput read_spectrum_file(const std::string& path);
void write_spectrum_file(const std::string& path, const SpectrumInput& phi);

}  // namespace conal
