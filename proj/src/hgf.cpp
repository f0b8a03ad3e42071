#include "hyperspec/hgf.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hyperspec/error.hpp"

namespace hyperspec {

namespace {

bool is_blank_or_comment(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

std::vector<long> parse_ints(const std::string& line, int line_no) {
  std::istringstream ss(line);
  std::vector<long> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": bad integer '" + tok + "'");
    }
    out.push_back(value);
  }
  return out;
}

}  // namespace

Hypergraph read_hgf(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long k = 0, n = 0, m = 0;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    auto values = parse_ints(line, line_no);
    if (!have_header) {
      if (values.size() != 3) {
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": header must be 'k n m'");
      }
      k = values[0];
      n = values[1];
      m = values[2];
      if (k < 2 || n < 1 || m < 0) {
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": invalid header values");
      }
      have_header = true;
      continue;
    }
    if (static_cast<long>(edges.size()) == m) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": more than " +
                                        std::to_string(m) + " edge lines");
    }
    Edge e(values.begin(), values.end());
    Edge distinct = e;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (static_cast<long>(distinct.size()) != k || static_cast<long>(e.size()) != k) {
      throw Error(Errc::NonUniformEdge, "line " + std::to_string(line_no) + ": expected " +
                                            std::to_string(k) + " distinct vertices, got " +
                                            std::to_string(e.size()));
    }
    for (long v : values) {
      if (v < 0 || v >= n) {
        throw Error(Errc::VertexOutOfRange,
                    "line " + std::to_string(line_no) + ": vertex " + std::to_string(v));
      }
    }
    if (std::find(edges.begin(), edges.end(), distinct) != edges.end()) {
      throw Error(Errc::DuplicateEdge, "line " + std::to_string(line_no));
    }
    edges.push_back(std::move(distinct));
  }
  if (!have_header) throw Error(Errc::ParseError, "missing header line");
  if (static_cast<long>(edges.size()) != m) {
    throw Error(Errc::ParseError, "expected " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
  }
  return Hypergraph(static_cast<int>(k), static_cast<int>(n), std::move(edges));
}

Hypergraph read_hgf_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  return read_hgf(in);
}

Hypergraph parse_hgf(const std::string& text) {
  std::istringstream in(text);
  return read_hgf(in);
}

void write_hgf(std::ostream& out, const Hypergraph& g) {
  std::vector<Edge> edges = g.edges();
  std::sort(edges.begin(), edges.end());
  out << g.uniformity() << ' ' << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : edges) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out << ' ';
      out << e[i];
    }
    out << '\n';
  }
}

std::string to_hgf(const Hypergraph& g) {
  std::ostringstream out;
  write_hgf(out, g);
  return out.str();
}

}  // namespace hyperspec
