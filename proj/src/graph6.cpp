#include "rank3/graph6.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>

#include "rank3/errors.hpp"

namespace rank3 {

namespace {

constexpr int kShortFormLimit = 62;

// Bit index of edge {i, j}, i < j, in the graph6 upper-triangle order
// (column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...).
std::size_t edge_bit(int i, int j) {
  return static_cast<std::size_t>(j) * (j - 1) / 2 + static_cast<std::size_t>(i);
}

}  // namespace

std::string graph6_encode(const BicoloredGraph& g) {
  const int c = g.coatom_count();
  const int n = c + g.connector_count();
  if (n > kShortFormLimit) {
    throw Graph6Error(Graph6Error::Kind::unsupported_size,
                      "graph6: " + std::to_string(n) + " vertices exceed the short form");
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<bool> adj(bits, false);
  for (int j = 0; j < g.connector_count(); ++j) {
    for (int v = 0; v < c; ++v) {
      if (g.adjacent(v, j)) adj[edge_bit(v, c + j)] = true;
    }
  }
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  for (std::size_t k = 0; k < bits; k += 6) {
    int byte = 0;
    for (std::size_t b = 0; b < 6; ++b) {
      byte <<= 1;
      if (k + b < bits && adj[k + b]) byte |= 1;
    }
    out.push_back(static_cast<char>(byte + 63));
  }
  out.push_back('\n');
  return out;
}

BicoloredGraph graph6_decode(std::string_view line, int coatoms, int connectors) {
  using Kind = Graph6Error::Kind;
  constexpr std::string_view header = ">>graph6<<";
  if (line.starts_with(header)) line.remove_prefix(header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw Graph6Error(Kind::malformed, "graph6: empty line");

  for (char ch : line) {
    if (ch < 63 || ch > 126) throw Graph6Error(Kind::malformed, "graph6: byte out of range");
  }

  std::size_t pos = 0;
  long n = 0;
  if (line[0] != 126) {
    n = line[0] - 63;
    pos = 1;
  } else if (line.size() >= 4 && line[1] != 126) {
    n = (static_cast<long>(line[1] - 63) << 12) | (static_cast<long>(line[2] - 63) << 6) |
        static_cast<long>(line[3] - 63);
    pos = 4;
  } else {
    throw Graph6Error(Kind::malformed, "graph6: unsupported size header");
  }

  if (n != static_cast<long>(coatoms) + connectors) {
    throw Graph6Error(Kind::size_mismatch, "graph6: header gives " + std::to_string(n) +
                                               " vertices, expected " +
                                               std::to_string(coatoms + connectors));
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (line.size() - pos != (bits + 5) / 6) {
    throw Graph6Error(Kind::malformed, "graph6: payload length does not match the header");
  }

  auto bit = [&](std::size_t k) {
    const int byte = line[pos + k / 6] - 63;
    return ((byte >> (5 - k % 6)) & 1) != 0;
  };
  for (std::size_t k = bits; k < (bits + 5) / 6 * 6; ++k) {
    if (bit(k)) throw Graph6Error(Kind::malformed, "graph6: nonzero padding bits");
  }

  if (coatoms < 0 || coatoms > kMaxCoatoms) {
    throw Graph6Error(Kind::unsupported_size, "graph6: too many coatoms");
  }
  std::vector<SubsetMask> neighborhoods(connectors, 0);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (!bit(edge_bit(i, j))) continue;
      const bool i_coatom = i < coatoms;
      const bool j_coatom = j < coatoms;
      if (i_coatom == j_coatom) {
        throw Graph6Error(Kind::class_violation,
                          "graph6: edge " + std::to_string(i) + "-" + std::to_string(j) +
                              " joins two vertices of the same class");
      }
      neighborhoods[j - coatoms] |= SubsetMask{1} << i;
    }
  }
  return BicoloredGraph(coatoms, std::move(neighborhoods));
}

std::string graph6_filename(int coatoms, int connectors) {
  return "conn_c" + std::to_string(coatoms) + "_r" + std::to_string(connectors) + ".g6";
}

bool parse_graph6_filename(std::string_view name, int& coatoms, int& connectors) {
  auto number = [](std::string_view& s, int& out) {
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc() || ptr == s.data()) return false;
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    return true;
  };
  if (!name.starts_with("conn_c")) return false;
  name.remove_prefix(6);
  if (!number(name, coatoms) || !name.starts_with("_r")) return false;
  name.remove_prefix(2);
  if (!number(name, connectors)) return false;
  return name == ".g6";
}

void write_graph6_file(const std::filesystem::path& path, std::span<const BicoloredGraph> graphs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path.string() + " for writing");
  for (const auto& g : graphs) out << graph6_encode(g);
  if (!out) throw InputError("error writing " + path.string());
}

std::vector<BicoloredGraph> read_graph6_file(const std::filesystem::path& path, int coatoms,
                                             int connectors) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::vector<BicoloredGraph> graphs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    try {
      graphs.push_back(graph6_decode(line, coatoms, connectors));
    } catch (const Graph6Error& e) {
      throw Graph6Error(e.kind(), path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return graphs;
}

std::vector<BicoloredGraph> read_graph6_directory(const std::filesystem::path& dir, int coatoms) {
  if (!std::filesystem::is_directory(dir)) {
    throw InputError(dir.string() + " is not a directory");
  }
  std::map<int, std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    int c = 0;
    int r = 0;
    if (!parse_graph6_filename(entry.path().filename().string(), c, r)) continue;
    if (c != coatoms) {
      throw InputError("mixed coatom counts: " + entry.path().string() + " has c = " +
                       std::to_string(c) + ", expected " + std::to_string(coatoms));
    }
    files[r] = entry.path();
  }
  if (files.empty()) {
    throw InputError("no conn_c" + std::to_string(coatoms) + "_r*.g6 files in " + dir.string());
  }
  std::vector<BicoloredGraph> graphs;
  for (const auto& [r, path] : files) {
    auto part = read_graph6_file(path, coatoms, r);
    graphs.insert(graphs.end(), std::make_move_iterator(part.begin()),
                  std::make_move_iterator(part.end()));
  }
  return graphs;
}

}  // namespace rank3
