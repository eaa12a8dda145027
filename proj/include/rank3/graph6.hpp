#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rank3/bigraph.hpp"

namespace rank3 {

// graph6 lines for connection graphs. Vertices 0..c-1 are the coatoms and
// c..c+r-1 the connectors, so that files interoperate with genbg output.
// Class sizes travel out of band, in the file name.

// Standard short-form graph6 (n <= 62), newline-terminated.
// Throws Graph6Error(unsupported_size) if c + r > 62.
std::string graph6_encode(const BicoloredGraph& g);

// Accepts an optional trailing newline and ">>graph6<<" header.
// Throws Graph6Error: malformed bytes, n != c + r, or an edge inside a class.
BicoloredGraph graph6_decode(std::string_view line, int coatoms, int connectors);

// "conn_c{c}_r{r}.g6"
std::string graph6_filename(int coatoms, int connectors);

// Parses a name produced by graph6_filename(); false if it does not match.
bool parse_graph6_filename(std::string_view name, int& coatoms, int& connectors);

void write_graph6_file(const std::filesystem::path& path, std::span<const BicoloredGraph> graphs);

std::vector<BicoloredGraph> read_graph6_file(const std::filesystem::path& path, int coatoms,
                                             int connectors);

// Reads every conn_c{c}_r{r}.g6 file in `dir`, ascending r. Throws
// InputError if the directory holds files for another coatom count or none
// for c.
std::vector<BicoloredGraph> read_graph6_directory(const std::filesystem::path& dir, int coatoms);

}  // namespace rank3
