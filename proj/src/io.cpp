#include "homlab/io.hpp"

#include "homlab/errors.hpp"

#include <fstream>
#include <sstream>

namespace homlab {

namespace {

// Yields non-empty, comment-stripped lines with their 1-based numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++number_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
      line = raw;
      return true;
    }
    return false;
  }
  std::size_t number() const { return number_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError("line " + std::to_string(number_) + ": " + what);
  }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

std::size_t parse_header(LineReader& r, const std::string& line, const std::string& keyword) {
  std::istringstream ss(line);
  std::string word;
  long long n = -1;
  std::string extra;
  if (!(ss >> word) || word != keyword || !(ss >> n) || n < 0 || (ss >> extra)) {
    r.fail("expected header '" + keyword + " <n>'");
  }
  return static_cast<std::size_t>(n);
}

Graph parse_graph_body(LineReader& r, std::size_t n) {
  std::vector<Edge> edges;
  std::string line;
  while (r.next(line)) {
    std::istringstream ss(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(ss >> u >> v) || (ss >> extra)) r.fail("expected an edge 'u v'");
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      r.fail("edge endpoint out of range 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    edges.push_back({static_cast<Index>(u), static_cast<Index>(v)});
  }
  return Graph::from_edges(n, edges);
}

FiniteGroup parse_group_body(LineReader& r, std::size_t n) {
  std::vector<std::vector<Index>> table;
  std::string line;
  while (r.next(line)) {
    if (table.size() == n) r.fail("more than " + std::to_string(n) + " table rows");
    std::istringstream ss(line);
    std::vector<Index> row;
    long long x;
    while (ss >> x) {
      if (x < 0 || static_cast<std::size_t>(x) >= n) r.fail("table entry out of range");
      row.push_back(static_cast<Index>(x));
    }
    if (!ss.eof()) r.fail("non-numeric table entry");
    if (row.size() != n) r.fail("expected " + std::to_string(n) + " entries in the row");
    table.push_back(std::move(row));
  }
  if (table.size() != n) r.fail("expected " + std::to_string(n) + " table rows");
  return FiniteGroup::from_table(table);
}

}  // namespace

Graph read_graph(std::istream& in) {
  LineReader r(in);
  std::string line;
  if (!r.next(line)) r.fail("empty input");
  return parse_graph_body(r, parse_header(r, line, "graph"));
}

FiniteGroup read_group(std::istream& in) {
  LineReader r(in);
  std::string line;
  if (!r.next(line)) r.fail("empty input");
  return parse_group_body(r, parse_header(r, line, "group"));
}

Object read_object(std::istream& in) {
  LineReader r(in);
  std::string line;
  if (!r.next(line)) r.fail("empty input");
  std::istringstream ss(line);
  std::string word;
  ss >> word;
  if (word == "graph") return parse_graph_body(r, parse_header(r, line, "graph"));
  if (word == "group") return parse_group_body(r, parse_header(r, line, "group"));
  r.fail("unknown header '" + word + "', expected 'graph' or 'group'");
}

Object read_object_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return read_object(in);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "graph " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_group(std::ostream& out, const FiniteGroup& g) {
  const std::size_t n = g.order();
  out << "group " << n << '\n';
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) out << (j ? " " : "") << g.mul(i, j);
    out << '\n';
  }
}

void write_object(std::ostream& out, const Object& o) {
  if (const auto* g = std::get_if<Graph>(&o)) {
    write_graph(out, *g);
  } else {
    write_group(out, std::get<FiniteGroup>(o));
  }
}

std::string to_text(const Object& o) {
  std::ostringstream out;
  write_object(out, o);
  return out.str();
}

}  // namespace homlab
