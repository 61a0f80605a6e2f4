#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "vaxnet/graph.hpp"

namespace vaxnet {

enum class Family {
  GnpFast,
  ErdosRenyi,
  DuplicationDivergence,
  BarabasiAlbert,
  RandomGeometric,
};

std::string_view to_string(Family f) noexcept;
Family parse_family(std::string_view name);

// What a duplication step does when none of the copied edges survive.
enum class DuplicateRule {
  KeepIsolated,  // keep the duplicate as an isolated node
  Resample,      // discard it and draw again until one edge survives
};

struct GenSpec {
  Family family = Family::ErdosRenyi;
  std::size_t n = 1000;
  double p = 0.4;            // Gnp / ErdosRenyi / DuplicationDivergence
  std::size_t m = 50;        // BarabasiAlbert
  double radius = 0.0;       // RandomGeometric; <= 0 selects the default
  std::size_t dimension = 2; // RandomGeometric
  DuplicateRule duplicate_rule = DuplicateRule::Resample;
  std::uint64_t seed = 0;

  // Radius giving an expected interior degree of `target_degree`.
  static double default_radius(std::size_t n, double target_degree = 100.0);

  // Throws InvalidArgument when parameters are outside the family's domain.
  void validate() const;
};

Graph generate(const GenSpec& spec);

// Geometric-jump sampler: visits only the selected pairs.
Graph gen_gnp(std::size_t n, double p, std::uint64_t seed);
// One Bernoulli trial per unordered pair.
Graph gen_erdos_renyi(std::size_t n, double p, std::uint64_t seed);
Graph gen_duplication_divergence(
    std::size_t n, double p, std::uint64_t seed,
    DuplicateRule rule = DuplicateRule::Resample);
// Linear preferential attachment. The first m nodes start isolated and the
// first arrival links to all of them, so |E| = m (n - m).
Graph gen_barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed);
Graph gen_random_geometric(std::size_t n, double radius, std::uint64_t seed,
                           std::size_t dimension = 2);

struct ShuffleStats {
  std::size_t attempted = 0;
  std::size_t accepted = 0;
};

// Double-edge swaps (a-b, c-d) -> (a-d, c-b) that keep the graph simple.
// Performs `n_swaps` successful swaps (0 selects 10 |E|) or gives up after
// 100 attempts per requested swap, which only happens when the degree
// sequence has few realizations.
Graph degree_preserving_shuffle(const Graph& g, std::size_t n_swaps,
                                std::uint64_t seed,
                                ShuffleStats* stats = nullptr);

}  // namespace vaxnet
