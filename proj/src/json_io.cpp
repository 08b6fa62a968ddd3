#include "paltx/json_io.hpp"

#include "paltx/error.hpp"

#include <json.hpp>

#include <fstream>

namespace paltx {

namespace {

nlohmann::json lab_json(const Lab& c) { return {{"L", c.l}, {"a", c.a}, {"b", c.b}}; }

}  // namespace

std::string palette_to_json(const Palette& palette) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : palette.entries) {
        nlohmann::json item = lab_json(e.color);
        item["count"] = e.pixel_count;
        out.push_back(std::move(item));
    }
    return out.dump(2);
}

std::string mapping_to_json(const PeakMapping& mapping, const Palette& source) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < mapping.size(); ++i) {
        const MappedEntry& m = mapping.entries[i];
        nlohmann::json item{
            {"index", i},
            {"source", lab_json(source.entries[i].color)},
            {"target", lab_json(m.target)},
            {"provenance", std::string(to_string(m.provenance))},
            {"count", source.entries[i].pixel_count},
        };
        item["reference"] = m.reference ? nlohmann::json(*m.reference) : nlohmann::json(nullptr);
        out.push_back(std::move(item));
    }
    return out.dump(2);
}

std::string metrics_to_json(const MetricsReport& report) {
    const nlohmann::ordered_json out{
        {"consistency_l", report.consistency_l},
        {"consistency_rgb", report.consistency_rgb},
        {"fading_a", report.fading_a},
        {"fading_b", report.fading_b},
    };
    return out.dump(2);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << text << '\n';
    if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace paltx
