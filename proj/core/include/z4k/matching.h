#ifndef Z4K_MATCHING_H
#define Z4K_MATCHING_H

#include <cstdint>
#include <utility>
#include <vector>

namespace z4k {

/// Complete graph with symmetric non-negative integer weights.
class WeightedGraph {
 public:
  explicit WeightedGraph(int num_nodes = 0);

  int num_nodes() const { return n_; }
  int64_t weight(int i, int j) const { return w_[static_cast<size_t>(i) * n_ + j]; }
  void set_weight(int i, int j, int64_t w);

 private:
  int n_;
  std::vector<int64_t> w_;
};

struct Matching {
  std::vector<std::pair<int, int>> pairs;  // each (i, j) with i < j, sorted by i
  int64_t total_weight = 0;
};

struct WeightedEdge {
  int u;
  int v;
  int64_t w;
};

/// General maximum-weight matching (Edmonds blossom, O(n^3)). Returns mate[v]
/// or -1. With max_cardinality, returns a maximum-weight matching among the
/// maximum-cardinality ones.
std::vector<int> max_weight_matching(int num_nodes, const std::vector<WeightedEdge> &edges,
                                     bool max_cardinality);

/// Exact minimum-weight perfect matching on a complete graph.
Matching mwpm(const WeightedGraph &g);

/// Exact minimum-weight perfect matching on a sparse graph; throws if no
/// perfect matching exists.
Matching mwpm_sparse(int num_nodes, const std::vector<WeightedEdge> &edges);

/// Exhaustive oracle for up to 12 nodes. Ties go to the lexicographically
/// smallest matching in pair order.
Matching brute_force_mwpm(const WeightedGraph &g);

/// Number of perfect matchings visited by brute_force_mwpm, i.e. (n-1)!!.
uint64_t count_perfect_matchings(int num_nodes);

}  // namespace z4k

#endif
