#include "vaxnet/graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

namespace vaxnet {

Graph Graph::from_edges(std::span<const Edge> edges,
                        std::optional<std::size_t> n) {
  std::size_t count = n.value_or(0);
  if (!n) {
    for (const Edge& e : edges)
      count = std::max<std::size_t>(count, std::max(e.u, e.v) + std::size_t{1});
  }
  std::vector<std::int64_t> labels(count);
  std::iota(labels.begin(), labels.end(), std::int64_t{0});
  return from_edges(edges, count, std::move(labels));
}

Graph Graph::from_edges(std::span<const Edge> edges, std::size_t n,
                        std::vector<std::int64_t> labels) {
  if (labels.size() != n)
    throw InvalidArgument("label count does not match node count");
  Graph g;
  g.labels_ = std::move(labels);
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n)
      throw InvalidArgument("edge endpoint out of range");
    if (e.u == e.v) continue;
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  std::vector<NodeId> raw(g.offsets_.back());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    if (e.u == e.v) continue;
    raw[cursor[e.u]++] = e.v;
    raw[cursor[e.v]++] = e.u;
  }

  // Sort and deduplicate each list, then compact.
  std::vector<std::size_t> offsets(n + 1, 0);
  std::size_t out = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto first = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    auto unique_end = std::unique(first, last);
    for (auto it = first; it != unique_end; ++it) raw[out++] = *it;
    offsets[v + 1] = out;
  }
  raw.resize(out);
  raw.shrink_to_fit();
  g.offsets_ = std::move(offsets);
  g.targets_ = std::move(raw);
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const noexcept {
  if (u >= num_nodes() || v >= num_nodes()) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (NodeId u = 0; u < num_nodes(); ++u)
    for (NodeId v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> out(num_nodes());
  for (NodeId v = 0; v < num_nodes(); ++v) out[v] = degree(v);
  return out;
}

std::uint64_t Graph::fingerprint() const noexcept {
  std::uint64_t h = mix64(num_nodes());
  for (std::size_t o : offsets_) h = mix64(h ^ o);
  for (NodeId t : targets_) h = mix64(h ^ t);
  return h;
}

Graph delete_nodes(const Graph& g, std::span<const NodeId> victims) {
  const std::size_t n = g.num_nodes();
  std::vector<char> removed(n, 0);
  for (NodeId v : victims) {
    if (v >= n) throw InvalidArgument("victim index out of range");
    removed[v] = 1;
  }
  constexpr NodeId kGone = ~NodeId{0};
  std::vector<NodeId> remap(n, kGone);
  std::vector<std::int64_t> labels;
  labels.reserve(n);
  NodeId next = 0;
  for (NodeId v = 0; v < n; ++v) {
    if (removed[v]) continue;
    remap[v] = next++;
    labels.push_back(g.label(v));
  }
  std::vector<Edge> kept;
  kept.reserve(g.num_edges());
  for (NodeId u = 0; u < n; ++u) {
    if (removed[u]) continue;
    for (NodeId v : g.neighbors(u))
      if (u < v && !removed[v]) kept.push_back({remap[u], remap[v]});
  }
  return Graph::from_edges(kept, next, std::move(labels));
}

DegreeStats degree_stats(const Graph& g) {
  const std::size_t n = g.num_nodes();
  if (n == 0) throw EmptyGraph("degree_stats on a graph with no nodes");
  DegreeStats s;
  s.min = g.degree(0);
  for (NodeId v = 0; v < n; ++v) {
    s.max = std::max(s.max, g.degree(v));
    s.min = std::min(s.min, g.degree(v));
  }
  s.avg = 2.0 * static_cast<double>(g.num_edges()) / static_cast<double>(n);
  return s;
}

Graph read_edge_list(std::istream& in, std::optional<std::size_t> n) {
  std::vector<Edge> edges;
  std::optional<std::size_t> header_n;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      // "# nodes N ..." written by write_edge_list carries the node count.
      std::istringstream comment(line.substr(first + 1));
      std::string key;
      std::size_t count = 0;
      if (comment >> key >> count && key == "nodes") header_n = count;
      continue;
    }
    std::istringstream fields(line);
    long long u = -1, v = -1;
    if (!(fields >> u >> v) || u < 0 || v < 0)
      throw FormatError("malformed edge-list line " + std::to_string(line_no),
                        line_no);
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
  }
  if (!n && header_n) {
    for (const Edge& e : edges)
      if (std::max(e.u, e.v) >= *header_n)
        throw FormatError("edge endpoint exceeds declared node count", line_no);
    n = header_n;
  }
  return Graph::from_edges(edges, n);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# nodes " << g.num_nodes() << " edges " << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace vaxnet
