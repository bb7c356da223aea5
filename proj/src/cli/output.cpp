#include "output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "deltabox/cli.hpp"

namespace deltabox::cli {

namespace {

std::string printf_number(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

void emit(const Json& j, std::ostringstream& os, int depth) {
    const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
    const std::string inner(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                os << "{}";
                return;
            }
            os << "{\n";
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) os << ",\n";
                first = false;
                os << inner << Json(key).dump() << ": ";
                emit(value, os, depth + 1);
            }
            os << "\n" << pad << "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                os << "[]";
                return;
            }
            // Arrays of scalars stay on one line.
            const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) {
                return !e.is_object() && !e.is_array();
            });
            if (flat) {
                os << "[";
                for (std::size_t i = 0; i < j.size(); ++i) {
                    if (i) os << ", ";
                    emit(j[i], os, depth + 1);
                }
                os << "]";
                return;
            }
            os << "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) os << ",\n";
                os << inner;
                emit(j[i], os, depth + 1);
            }
            os << "\n" << pad << "]";
            return;
        }
        case Json::value_t::number_float:
            os << json_number(j.get<double>());
            return;
        default:
            os << j.dump();
            return;
    }
}

}  // namespace

std::string csv_number(double v) {
    if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
    return printf_number("%.12g", v == 0.0 ? 0.0 : v);
}

std::string json_number(double v) {
    if (!std::isfinite(v)) return "null";
    return printf_number("%.17g", v == 0.0 ? 0.0 : v);
}

std::string dump_json(const Json& j) {
    std::ostringstream os;
    emit(j, os, 0);
    os << "\n";
    return os.str();
}

Json config_json(const SystemConfig& c) {
    Json j;
    j["hbar"] = c.hbar();
    j["mass"] = c.mass();
    j["a"] = c.box_length();
    j["lambda"] = c.lambda();
    j["p"] = c.fraction();
    j["coupling_g"] = c.coupling();
    j["delta_position"] = c.delta_position();
    return j;
}

Json tool_json() {
    Json j;
    j["name"] = "deltabox";
    j["version"] = version();
    return j;
}

Json envelope(const std::string& command, const SystemConfig& config, Json settings,
              Json payload) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["tool"] = tool_json();
    j["command"] = command;
    j["config"] = config_json(config);
    j["settings"] = std::move(settings);
    j["payload"] = std::move(payload);
    return j;
}

std::string csv_preamble(const std::string& command, const SystemConfig& config,
                         const Json& settings) {
    std::ostringstream os;
    os << "# deltabox " << version() << " " << command << " schema " << kSchemaVersion << "\n";
    os << "# config";
    const Json cfg = config_json(config);
    for (const auto& [key, value] : cfg.items())
        os << " " << key << "=" << json_number(value.get<double>());
    os << "\n";
    if (!settings.empty()) {
        os << "# settings";
        for (const auto& [key, value] : settings.items()) {
            os << " " << key << "=";
            if (value.is_number_float())
                os << json_number(value.get<double>());
            else if (value.is_array()) {
                for (std::size_t i = 0; i < value.size(); ++i)
                    os << (i ? ";" : "") << value[i].dump();
            } else
                os << value.dump();
        }
        os << "\n";
    }
    return os.str();
}

std::string csv_row(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += cells[i];
    }
    line += '\n';
    return line;
}

}  // namespace deltabox::cli
