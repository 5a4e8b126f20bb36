#pragma once

#include <string>
#include <vector>

#include "psylow/counting.hpp"
#include "psylow/verify.hpp"

namespace psylow {

// Canonical JSON: keys sorted, big counts as decimal strings, no floats.
// Parsing the emitted text and re-serializing reproduces it byte for byte.
std::string count_report_json(const CountReport& r);
std::string verdict_json(const Verdict& v);
std::string verdicts_json(const std::vector<Verdict>& vs);

}  // namespace psylow
