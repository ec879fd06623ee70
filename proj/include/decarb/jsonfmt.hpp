#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

namespace decarb {

// Serializes with keys sorted (nlohmann objects are ordered maps) and every
// double printed as %.10g, so repeated runs emit identical bytes. Non-finite
// doubles become null.
std::string dump_json(const nlohmann::json& doc);

std::string format_double(double v);  // %.10g

void write_text_file(const std::filesystem::path& path, std::string_view text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace decarb
