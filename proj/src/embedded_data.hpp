#pragma once

#include <string_view>
#include <vector>

// Data files compiled into the library (see cmake/EmbedData.cmake).
namespace palatum::embedded {

std::string_view default_palate_json();
std::vector<std::string_view> preset_jsons();

}  // namespace palatum::embedded
