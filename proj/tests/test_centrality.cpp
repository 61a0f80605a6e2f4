#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "vaxnet/centrality.hpp"
#include "vaxnet/graphgen.hpp"

using namespace vaxnet;

namespace {

std::vector<double> vals(const CentralityScores& s) { return s.values; }

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

Graph from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> e;
  std::size_t bit = 0;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1) e.push_back({u, v});
  return Graph::from_edges(e, n);
}

// Checks every metric against the oracles; eigenvector only when the Perron
// vector is unique and well separated.
void check_against_oracles(const Graph& g) {
  CHECK(max_abs_diff(vals(betweenness_centrality(g)), oracle::brute_betweenness(g)) < 1e-8);
  CHECK(max_abs_diff(vals(betweenness_centrality(g, false, Execution::Serial)),
                     oracle::brute_betweenness(g)) < 1e-8);
  if (g.num_nodes() >= 2)
    CHECK(max_abs_diff(vals(closeness_centrality(g)), oracle::brute_closeness(g)) < 1e-8);
  auto deg = degree_centrality(g);
  for (NodeId v = 0; v < g.num_nodes(); ++v) CHECK(deg.values[v] == g.degree(v));

  if (g.num_edges() == 0) return;
  const auto eig = oracle::jacobi_eigen(oracle::dense_adjacency(g));
  const std::size_t n = g.num_nodes();
  if (n >= 2 && eig.values[n - 1] - eig.values[n - 2] < 1e-2) return;
  const auto ec = eigenvector_centrality(g);
  CHECK(max_abs_diff(ec.values, oracle::dense_perron_vector(g)) < 1e-6);
}

}  // namespace

TEST_CASE("degree centrality examples") {
  CHECK(vals(degree_centrality(oracle::path(3))) == std::vector<double>{1, 2, 1});
  for (double x : degree_centrality(oracle::complete(4), true).values) CHECK(x == 1.0);
  const auto star = degree_centrality(oracle::star(4));
  CHECK(star.values[0] == 4.0);
  for (NodeId v = 1; v < 5; ++v) CHECK(star.values[v] == 1.0);
  for (double x : degree_centrality(oracle::star(4), true).values) {
    CHECK(x >= 0.0);
    CHECK(x <= 1.0);
  }
}

TEST_CASE("closeness centrality examples") {
  CHECK(closeness_centrality(oracle::path(3)).values[1] == doctest::Approx(1.0));
  for (double x : closeness_centrality(oracle::complete(6)).values)
    CHECK(x == doctest::Approx(1.0));
  const Graph two_edges = Graph::from_edges(std::vector<Edge>{{0, 1}, {2, 3}});
  for (double x : closeness_centrality(two_edges).values)
    CHECK(x == doctest::Approx(1.0 / 3.0));
  const Graph isolated = Graph::from_edges(std::vector<Edge>{{0, 1}}, 3);
  CHECK(closeness_centrality(isolated).values[2] == 0.0);
}

TEST_CASE("betweenness centrality examples") {
  CHECK(betweenness_centrality(oracle::path(3)).values[1] == doctest::Approx(1.0));
  for (double x : betweenness_centrality(oracle::complete(4)).values) CHECK(x == 0.0);
  // Brute-force geodesic enumeration gives node 1 of P4 a score of 2.
  const auto brute = oracle::brute_betweenness(oracle::path(4));
  CHECK(brute[1] == doctest::Approx(2.0));
  const auto p4 = betweenness_centrality(oracle::path(4));
  CHECK(p4.values[1] == doctest::Approx(brute[1]));
  CHECK(p4.values[2] == doctest::Approx(2.0));
  CHECK(p4.values[0] == 0.0);
  const auto norm = betweenness_centrality(oracle::path(4), true);
  CHECK(norm.values[1] == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("eigenvector centrality examples") {
  for (double x : eigenvector_centrality(oracle::complete(5)).values)
    CHECK(x == doctest::Approx(1.0 / std::sqrt(5.0)));

  // Star with 4 leaves: hub = lambda * leaf = 2 * leaf.
  const Graph star = oracle::star(4);
  const auto dense = oracle::dense_perron_vector(star);
  CHECK(dense[0] / dense[1] == doctest::Approx(2.0).epsilon(1e-10));
  const auto ec = eigenvector_centrality(star);
  CHECK(ec.values[0] / ec.values[1] == doctest::Approx(2.0).epsilon(1e-8));

  for (double x : eigenvector_centrality(oracle::cycle(4)).values)
    CHECK(x == doctest::Approx(0.5).epsilon(1e-9));

  CHECK_THROWS_AS(eigenvector_centrality(Graph::from_edges(std::vector<Edge>{}, 3)),
                  EmptyGraph);
  try {
    eigenvector_centrality(oracle::path(30), 1e-14, 2);
    FAIL("expected NonConvergence");
  } catch (const NonConvergence& e) {
    CHECK(e.iterations() == 2);
    CHECK(e.residual() > 1e-14);
  }
}

TEST_CASE("eigenvector scores satisfy Ax = lambda x and are unit non-negative") {
  const Graph g = gen_barabasi_albert(300, 3, 2);
  const auto ec = eigenvector_centrality(g);
  double norm = 0.0;
  for (double x : ec.values) {
    CHECK(x >= 0.0);
    norm += x * x;
  }
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
  std::vector<double> ax(g.num_nodes(), 0.0);
  double lambda = 0.0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    for (NodeId w : g.neighbors(v)) ax[v] += ec.values[w];
    lambda += ec.values[v] * ax[v];
  }
  double worst = 0.0;
  for (NodeId v = 0; v < g.num_nodes(); ++v)
    worst = std::max(worst, std::abs(ax[v] - lambda * ec.values[v]));
  CHECK(worst < 1e-6);
}

TEST_CASE("all graphs with n <= 6 agree with the oracles") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::uint64_t pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
      check_against_oracles(from_mask(n, mask));
  }
}

TEST_CASE("random graphs with 7 <= n <= 10 agree with the oracles") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 7 + rng() % 4;
    const double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    check_against_oracles(oracle::random_graph(n, p, rng()));
  }
}

TEST_CASE("scores are equivariant under relabeling") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + rng() % 18;
    const Graph g = oracle::random_graph(n, 0.35, rng());
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), NodeId{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = oracle::relabel(g, perm);
    for (Metric m : {Metric::Degree, Metric::Closeness, Metric::Betweenness}) {
      const auto a = compute_centrality(g, m).values;
      const auto b = compute_centrality(h, m).values;
      for (NodeId v = 0; v < n; ++v) CHECK(b[perm[v]] == doctest::Approx(a[v]).epsilon(1e-10));
    }
  }
}

TEST_CASE("serial and parallel kernels agree") {
  const Graph g = gen_barabasi_albert(400, 4, 9);
  const auto bs = betweenness_centrality(g, false, Execution::Serial).values;
  const auto bp = betweenness_centrality(g, false, Execution::Parallel).values;
  for (std::size_t v = 0; v < bs.size(); ++v)
    CHECK(std::abs(bs[v] - bp[v]) <= 1e-12 * std::max(1.0, bs[v]));
  CHECK(closeness_centrality(g, Execution::Serial).values ==
        closeness_centrality(g, Execution::Parallel).values);
  CHECK(eigenvector_centrality(g, 1e-10, 10000, Execution::Serial).values ==
        eigenvector_centrality(g, 1e-10, 10000, Execution::Parallel).values);
}

TEST_CASE("top_k selection and tie rule") {
  CHECK(top_k(degree_centrality(oracle::star(4)), 1) == std::vector<NodeId>{0});
  CentralityScores flat;
  flat.values.assign(6, 2.5);
  CHECK(top_k(flat, 3) == std::vector<NodeId>{0, 1, 2});
  auto p4 = top_k(betweenness_centrality(oracle::path(4)), 2);
  std::sort(p4.begin(), p4.end());
  CHECK(p4 == std::vector<NodeId>{1, 2});
  CHECK(top_k(flat, 0).empty());
  CHECK_THROWS_AS(top_k(flat, 7), InvalidArgument);
}

TEST_CASE("top_k is invariant under positive affine maps of the scores") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> level(0, 5);
  for (int trial = 0; trial < 100; ++trial) {
    CentralityScores s;
    const std::size_t n = 1 + rng() % 30;
    for (std::size_t i = 0; i < n; ++i) s.values.push_back(level(rng));
    CentralityScores t = s;
    const double a = 0.5 + static_cast<double>(rng() % 100), b = -7.25;
    for (double& x : t.values) x = a * x + b;
    const std::size_t k = rng() % (n + 1);
    CHECK(top_k(s, k) == top_k(t, k));
  }
}

TEST_CASE("scores CSV") {
  std::ostringstream out;
  write_scores_csv(out, oracle::star(2), degree_centrality(oracle::star(2)));
  CHECK(out.str() == "node_id,score,rank\n0,2,1\n1,1,2\n2,1,3\n");
}

TEST_CASE("metric names round trip") {
  for (Metric m : {Metric::Degree, Metric::DegreeNormalized, Metric::Closeness,
                   Metric::Betweenness, Metric::Eigenvector})
    CHECK(parse_metric(to_string(m)) == m);
  CHECK(parse_metric("BC") == Metric::Betweenness);
  CHECK_THROWS_AS(parse_metric("pagerank"), InvalidArgument);
}
