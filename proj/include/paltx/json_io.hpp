#pragma once

#include "paltx/mapping.hpp"
#include "paltx/metrics.hpp"
#include "paltx/palette.hpp"

#include <filesystem>
#include <string>

namespace paltx {

/// [{"L":..,"a":..,"b":..,"count":..}, ...]
std::string palette_to_json(const Palette& palette);

/// [{"source":{L,a,b},"target":{L,a,b},"provenance":..,"count":..,"reference":..}, ...]
std::string mapping_to_json(const PeakMapping& mapping, const Palette& source);

/// {"consistency_l":..,"consistency_rgb":..,"fading_a":..,"fading_b":..}
std::string metrics_to_json(const MetricsReport& report);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace paltx
