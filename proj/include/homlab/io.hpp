#pragma once

#include "homlab/object.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace homlab {

// Text formats.
//   .grf   line 1 "graph <n>", then one "u v" per edge (0-indexed, "v v" is
//          a loop). Blank lines and '#' comments are ignored.
//   .cay   line 1 "group <n>", then n rows of n whitespace-separated indices.
// Malformed input throws FormatError with the offending line number.

Graph read_graph(std::istream& in);
FiniteGroup read_group(std::istream& in);
/// Dispatches on the header keyword.
Object read_object(std::istream& in);
Object read_object_file(const std::filesystem::path& path);

void write_graph(std::ostream& out, const Graph& g);
void write_group(std::ostream& out, const FiniteGroup& g);
void write_object(std::ostream& out, const Object& o);
std::string to_text(const Object& o);

}  // namespace homlab
