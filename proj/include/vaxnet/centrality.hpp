#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

#include "vaxnet/graph.hpp"

namespace vaxnet {

enum class Metric { Degree, DegreeNormalized, Closeness, Betweenness, Eigenvector };

std::string_view to_string(Metric m) noexcept;
// Accepts full names and the short codes DC, DCN, CC, BC, EC.
Metric parse_metric(std::string_view name);

struct CentralityScores {
  Metric metric = Metric::Degree;
  std::vector<double> values;
  std::uint64_t graph_fingerprint = 0;
};

CentralityScores degree_centrality(const Graph& g, bool normalized = false);

// Wasserman-Faust closeness: (r/sum d) * (r/(n-1)) over the r nodes reachable
// from v. Equals (n-1)/sum d on connected graphs; isolated nodes score 0.
CentralityScores closeness_centrality(const Graph& g,
                                      Execution exec = Execution::Parallel);

// Brandes accumulation, each unordered pair counted once. The normalized
// variant divides by (n-1)(n-2)/2.
CentralityScores betweenness_centrality(const Graph& g, bool normalized = false,
                                        Execution exec = Execution::Parallel);

// Perron vector of A from power iteration on A + I, L2-normalized and
// non-negative. Throws NonConvergence if successive iterates still differ by
// more than `tol` (max-abs) after `max_iter` steps, EmptyGraph without edges.
CentralityScores eigenvector_centrality(const Graph& g, double tol = 1e-10,
                                        std::size_t max_iter = 10000,
                                        Execution exec = Execution::Parallel);

CentralityScores compute_centrality(const Graph& g, Metric metric,
                                    Execution exec = Execution::Parallel);

// The k highest-scoring nodes, best first; ties go to the lower index.
std::vector<NodeId> top_k(const CentralityScores& scores, std::size_t k);

// Full ranking (top_k with k = n).
std::vector<NodeId> ranking(const CentralityScores& scores);

// CSV with header node_id,score,rank (rank 1 = highest).
void write_scores_csv(std::ostream& out, const Graph& g,
                      const CentralityScores& scores);

}  // namespace vaxnet
