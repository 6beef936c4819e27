#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace camtax {

std::string read_text_file(const std::filesystem::path& path);

// Write via temp file + rename so readers never observe a partial file.
void write_text_file_atomic(const std::filesystem::path& path, std::string_view content);

void append_line(const std::filesystem::path& path, std::string_view line);

bool is_valid_utf8(std::string_view bytes);

std::string to_lower_ascii(std::string_view s);

bool contains_ci(std::string_view haystack, std::string_view needle);

} // namespace camtax
