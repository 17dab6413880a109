#include "srgb/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace srgb {

namespace {

constexpr std::size_t kGraph6Limit = 63;

std::string strip_comment(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  return line;
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  long long n = -1;
  while (n < 0 && std::getline(in, line)) {
    ++lineno;
    line = strip_comment(line);
    if (blank(line)) continue;
    std::istringstream ss(line);
    if (!(ss >> n) || n < 0) throw DomainError("edge list: bad vertex count on line " + std::to_string(lineno));
  }
  if (n < 0) throw DomainError("edge list: missing vertex count");
  Graph g(static_cast<std::size_t>(n));
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_comment(line);
    if (blank(line)) continue;
    std::istringstream ss(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(ss >> u >> v) || (ss >> extra) || u < 0 || v < 0 || u >= n || v >= n)
      throw DomainError("edge list: bad edge on line " + std::to_string(lineno));
    if (u == v) throw DomainError("edge list: loop on line " + std::to_string(lineno));
    g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  }
  return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw DomainError("graph6: empty input");
  for (char ch : text)
    if (ch < 63 || ch > 126) throw DomainError("graph6: byte outside 63..126");
  std::size_t n = static_cast<std::size_t>(text[0] - 63);
  if (n >= kGraph6Limit) throw DomainError("graph6: only n < 63 is supported");
  std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::size_t bytes = (bits + 5) / 6;
  if (text.size() != 1 + bytes)
    throw DomainError("graph6: expected " + std::to_string(1 + bytes) + " bytes, got " +
                      std::to_string(text.size()));
  Graph g(n);
  std::size_t k = 0;
  // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k) {
      int chunk = text[1 + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  return g;
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n >= kGraph6Limit) throw DomainError("graph6: only n < 63 is supported");
  std::string out(1, static_cast<char>(63 + n));
  int chunk = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string content = buffer.str();

  std::istringstream lines(content);
  std::string first;
  while (std::getline(lines, first) && blank(strip_comment(first))) {
  }
  std::istringstream tokens(first);
  std::string token, extra;
  tokens >> token;
  bool integer = !token.empty() && std::all_of(token.begin(), token.end(), [](unsigned char c) {
    return std::isdigit(c);
  });
  if (!integer && !(tokens >> extra)) return parse_graph6(token);
  std::istringstream again(content);
  return read_edge_list(again);
}

}  // namespace srgb
