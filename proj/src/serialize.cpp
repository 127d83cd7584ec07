#include "dagforge/serialize.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dagforge {

OutputFormat parse_format(std::string_view name) {
  if (name == "edgelist") return OutputFormat::edgelist;
  if (name == "matrix") return OutputFormat::matrix;
  if (name == "dot") return OutputFormat::dot;
  if (name == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown format: " + std::string(name));
}

std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::edgelist: return "edgelist";
    case OutputFormat::matrix: return "matrix";
    case OutputFormat::dot: return "dot";
    case OutputFormat::json: return "json";
  }
  return "?";
}

void write_dag(std::ostream& os, const Dag& d, OutputFormat f) {
  switch (f) {
    case OutputFormat::edgelist: {
      os << "# n=" << d.n() << "\n";
      for (auto [u, v] : d.edges()) os << u + 1 << " " << v + 1 << "\n";
      os << "\n";
      break;
    }
    case OutputFormat::matrix: {
      for (int u = 0; u < d.n(); ++u) {
        for (int v = 0; v < d.n(); ++v) os << (d.edge(u, v) ? '1' : '0');
        os << "\n";
      }
      os << "\n";
      break;
    }
    case OutputFormat::dot: {
      os << "digraph {\n";
      for (int v = 0; v < d.n(); ++v) os << "  " << v + 1 << ";\n";
      for (auto [u, v] : d.edges()) os << "  " << u + 1 << " -> " << v + 1 << ";\n";
      os << "}\n\n";
      break;
    }
    case OutputFormat::json: {
      nlohmann::json j;
      j["n"] = d.n();
      j["edges"] = nlohmann::json::array();
      for (auto [u, v] : d.edges()) j["edges"].push_back({u + 1, v + 1});
      os << j.dump() << "\n\n";
      break;
    }
  }
}

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw std::runtime_error("malformed DAG stream: " + what);
}

// next non-blank line; false at EOF
bool next_content_line(std::istream& is, std::string& line) {
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

void check_vertex(int x, int n, const std::string& where) {
  if (x < 1 || x > n) malformed("vertex out of range in " + where);
}

}  // namespace

bool DagReader::next(Dag& out) {
  std::string line;
  switch (format_) {
    case OutputFormat::edgelist: {
      if (!next_content_line(is_, line)) return false;
      int n = 0;
      if (sscanf(line.c_str(), "# n=%d", &n) != 1 || n < 1) malformed("expected '# n=<N>' header");
      out = Dag(n);
      while (std::getline(is_, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) break;  // record end
        int u, v;
        if (sscanf(line.c_str(), "%d %d", &u, &v) != 2) malformed("expected 'u v' edge line");
        check_vertex(u, n, "edgelist");
        check_vertex(v, n, "edgelist");
        out.set_edge(u - 1, v - 1);
      }
      return true;
    }
    case OutputFormat::matrix: {
      if (!next_content_line(is_, line)) return false;
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      int n = static_cast<int>(line.size());
      out = Dag(n);
      for (int u = 0; u < n; ++u) {
        if (u > 0) {
          if (!std::getline(is_, line)) malformed("truncated matrix");
          while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
          if (static_cast<int>(line.size()) != n) malformed("ragged matrix row");
        }
        for (int v = 0; v < n; ++v) {
          if (line[v] == '1')
            out.set_edge(u, v);
          else if (line[v] != '0')
            malformed("matrix entries must be 0/1");
        }
      }
      return true;
    }
    case OutputFormat::dot: {
      if (!next_content_line(is_, line)) return false;
      if (line.find("digraph") == std::string::npos) malformed("expected 'digraph {'");
      int n = 0;
      std::vector<std::pair<int, int>> edges;
      for (;;) {
        if (!std::getline(is_, line)) malformed("unterminated digraph block");
        if (line.find('}') != std::string::npos) break;
        int u, v;
        if (sscanf(line.c_str(), " %d -> %d ;", &u, &v) == 2) {
          edges.emplace_back(u, v);
          n = std::max({n, u, v});
        } else if (sscanf(line.c_str(), " %d ;", &u) == 1) {
          n = std::max(n, u);
        } else if (line.find_first_not_of(" \t\r") != std::string::npos) {
          malformed("unrecognized dot line");
        }
      }
      if (n < 1) malformed("empty digraph block");
      out = Dag(n);
      for (auto [u, v] : edges) {
        check_vertex(u, n, "dot");
        check_vertex(v, n, "dot");
        out.set_edge(u - 1, v - 1);
      }
      return true;
    }
    case OutputFormat::json: {
      if (!next_content_line(is_, line)) return false;
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(line);
      } catch (const nlohmann::json::exception& e) {
        malformed(e.what());
      }
      if (!j.contains("n") || !j["n"].is_number_integer()) malformed("json record needs 'n'");
      int n = j["n"].get<int>();
      if (n < 1) malformed("json 'n' must be >= 1");
      out = Dag(n);
      for (const auto& e : j.value("edges", nlohmann::json::array())) {
        if (!e.is_array() || e.size() != 2) malformed("json edge must be [u, v]");
        int u = e[0].get<int>(), v = e[1].get<int>();
        check_vertex(u, n, "json");
        check_vertex(v, n, "json");
        out.set_edge(u - 1, v - 1);
      }
      return true;
    }
  }
  return false;
}

}  // namespace dagforge
