#include "labelana/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace labelana {

namespace {

bool valid_token(std::string_view t) {
  if (t.empty()) return false;
  for (char c : t) {
    if (c == ':' || static_cast<unsigned char>(c) > 126 || c <= ' ') return false;
  }
  return true;
}

}  // namespace

Graph Graph::build(std::string name, const std::vector<std::string>& vertices,
                   const std::vector<RawEdge>& edges, const Config& config) {
  Graph g;
  g.name_ = std::move(name);

  if (vertices.empty()) throw ValidationError("graph has no vertices");
  if (static_cast<int>(vertices.size()) > config.max_vertices) {
    throw ResourceError("vertex count " + std::to_string(vertices.size()) +
                        " exceeds cap " + std::to_string(config.max_vertices));
  }
  if (static_cast<int>(edges.size()) > config.max_edges) {
    throw ResourceError("edge count " + std::to_string(edges.size()) +
                        " exceeds cap " + std::to_string(config.max_edges));
  }

  std::map<std::string, VertexId, std::less<>> vid;
  for (const auto& v : vertices) {
    if (!valid_token(v)) throw ParseError("invalid vertex identifier '" + v + "'");
    if (!vid.emplace(v, static_cast<VertexId>(g.vertex_names_.size())).second) {
      throw ValidationError("duplicate vertex '" + v + "'");
    }
    g.vertex_names_.push_back(v);
  }
  g.all_ = (g.vertex_names_.size() == 64) ? ~VertexMask{0}
                                          : (VertexMask{1} << g.vertex_names_.size()) - 1;

  std::map<std::string, LetterId, std::less<>> lid;
  std::set<std::tuple<VertexId, VertexId, LetterId>> seen;
  for (const auto& e : edges) {
    auto s = vid.find(e.src);
    auto d = vid.find(e.dst);
    if (s == vid.end()) throw ParseError("edge references unknown vertex '" + e.src + "'");
    if (d == vid.end()) throw ParseError("edge references unknown vertex '" + e.dst + "'");
    if (!valid_token(e.label)) throw ParseError("invalid edge label '" + e.label + "'");
    auto [it, fresh] = lid.emplace(e.label, static_cast<LetterId>(g.letter_names_.size()));
    if (fresh) g.letter_names_.push_back(e.label);
    Edge edge{s->second, d->second, it->second};
    if (!seen.emplace(edge.src, edge.dst, edge.label).second) {
      throw ValidationError("duplicate edge " + e.src + " " + e.dst + " : " + e.label);
    }
    g.edges_.push_back(edge);
  }

  const size_t n = g.vertex_names_.size();
  g.succ_.assign(g.letter_names_.size() * n, 0);
  std::vector<char> has_out(n, 0);
  for (const Edge& e : g.edges_) {
    g.succ_[static_cast<size_t>(e.label) * n + e.src] |= bit(e.dst);
    g.omega0_ |= bit(e.dst);
    has_out[e.src] = 1;
  }
  for (size_t v = 0; v < n; ++v) {
    if (!has_out[v]) {
      throw ValidationError("sink vertex '" + g.vertex_names_[v] + "' (no outgoing edge)");
    }
  }
  return g;
}

std::optional<VertexId> Graph::vertex_id(std::string_view name) const {
  for (size_t i = 0; i < vertex_names_.size(); ++i) {
    if (vertex_names_[i] == name) return static_cast<VertexId>(i);
  }
  return std::nullopt;
}

std::optional<LetterId> Graph::letter_id(std::string_view name) const {
  for (size_t i = 0; i < letter_names_.size(); ++i) {
    if (letter_names_[i] == name) return static_cast<LetterId>(i);
  }
  return std::nullopt;
}

std::vector<VertexId> Graph::sources() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_count(); ++v) {
    if (!(omega0_ & bit(v))) out.push_back(v);
  }
  return out;
}

std::string Graph::format_vertex_set(VertexMask m) const {
  std::string out = "{";
  bool first = true;
  VertexMask rest = m;
  while (rest) {
    VertexId v = static_cast<VertexId>(std::countr_zero(rest));
    rest &= rest - 1;
    if (!first) out += ",";
    out += vertex_names_[v];
    first = false;
  }
  out += "}";
  return out;
}

std::string Graph::format_word(const Word& w) const {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ".";
    out += letter_names_[w[i]];
  }
  return out;
}

std::string Graph::to_lgr() const {
  std::ostringstream os;
  if (!name_.empty()) os << "graph " << name_ << "\n";
  os << "vertex";
  for (const auto& v : vertex_names_) os << " " << v;
  os << "\n";
  for (const Edge& e : edges_) {
    os << "edge " << vertex_names_[e.src] << " " << vertex_names_[e.dst] << " : "
       << letter_names_[e.label] << "\n";
  }
  return os.str();
}

Graph parse_lgr(std::string_view text, const Config& config) {
  std::string name;
  bool named = false;
  std::vector<std::string> vertices;
  std::vector<Graph::RawEdge> edges;

  size_t pos = 0;
  int lineno = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    if (pos > text.size() + 1) break;

    if (size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }

    // ':' is a separator; split it out as its own token.
    std::vector<std::string> tok;
    std::string cur;
    for (char c : line) {
      if (c == ' ' || c == '\t' || c == '\r') {
        if (!cur.empty()) tok.push_back(std::move(cur)), cur.clear();
      } else if (c == ':') {
        if (!cur.empty()) tok.push_back(std::move(cur)), cur.clear();
        tok.push_back(":");
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) tok.push_back(std::move(cur));
    if (tok.empty()) continue;

    auto fail = [&](const std::string& why) -> void {
      throw ParseError("line " + std::to_string(lineno) + ": " + why);
    };

    if (tok[0] == "graph") {
      if (tok.size() != 2) fail("expected 'graph NAME'");
      if (named) fail("duplicate 'graph' directive");
      name = tok[1];
      named = true;
    } else if (tok[0] == "vertex") {
      if (tok.size() < 2) fail("expected 'vertex ID [ID ...]'");
      for (size_t i = 1; i < tok.size(); ++i) {
        if (tok[i] == ":") fail("':' is not a valid vertex identifier");
        vertices.push_back(tok[i]);
      }
    } else if (tok[0] == "edge") {
      if (tok.size() != 5 || tok[3] != ":") fail("expected 'edge SRC DST : LABEL'");
      edges.push_back({tok[1], tok[2], tok[4]});
    } else {
      fail("unknown directive '" + tok[0] + "'");
    }
  }
  return Graph::build(std::move(name), vertices, edges, config);
}

Graph parse_graph_json(const std::string& text, const Config& config) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    std::string name = j.value("name", std::string{});
    std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
    std::vector<Graph::RawEdge> edges;
    for (const auto& e : j.at("edges")) {
      edges.push_back({e.at("src").get<std::string>(), e.at("dst").get<std::string>(),
                       e.at("label").get<std::string>()});
    }
    return Graph::build(std::move(name), vertices, edges, config);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph JSON schema mismatch: ") + e.what());
  }
}

Graph parse_graph_file(const std::string& path, const Config& config) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    return parse_graph_json(buf.str(), config);
  }
  return parse_lgr(buf.str(), config);
}

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace labelana
