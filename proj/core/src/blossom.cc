// Weighted general matching with blossoms and dual variables, following the
// classic O(n^3) primal-dual formulation (Galil's exposition of Edmonds'
// algorithm). All weights are integral and pre-doubled so that duals stay
// integral.

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <limits>
#include <stdexcept>
#include <string>

#include "z4k/matching.h"

namespace z4k {

WeightedGraph::WeightedGraph(int num_nodes)
    : n_(num_nodes), w_(static_cast<size_t>(num_nodes) * num_nodes, 0) {
  if (num_nodes < 0) throw std::invalid_argument("negative node count");
}

void WeightedGraph::set_weight(int i, int j, int64_t w) {
  if (w < 0) throw std::invalid_argument("negative weights are not supported");
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("node out of range");
  w_[static_cast<size_t>(i) * n_ + j] = w;
  w_[static_cast<size_t>(j) * n_ + i] = w;
}

namespace {

class Blossom {
 public:
  Blossom(int n, const std::vector<WeightedEdge> &edges, bool maxcard)
      : n_(n), edges_(edges), maxcard_(maxcard) {}

  std::vector<int> run();

 private:
  int64_t slack(int k) const {
    const auto &e = edges_[k];
    return dual_[e.u] + dual_[e.v] - 2 * e.w;
  }
  int endpoint(int p) const { return p & 1 ? edges_[p >> 1].v : edges_[p >> 1].u; }

  template <class F>
  void for_leaves(int b, F &&f) {
    if (b < n_) {
      f(b);
      return;
    }
    for (int t : childs_[b]) for_leaves(t, f);
  }

  void assign_label(int w, int t, int p);
  int scan_blossom(int v, int w);
  void add_blossom(int base, int k);
  void expand_blossom(int b, bool endstage);
  void augment_blossom(int b, int v);
  void augment_matching(int k);

  int n_;
  const std::vector<WeightedEdge> &edges_;
  bool maxcard_;

  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_, label_, labelend_, inblossom_, parent_, base_, bestedge_;
  std::vector<std::vector<int>> childs_, endps_, bestedges_;
  std::vector<bool> has_bestedges_;
  std::vector<int> unused_;
  std::vector<int64_t> dual_;
  std::vector<char> allow_;
  std::vector<int> queue_;
};

void Blossom::assign_label(int w, int t, int p) {
  int b = inblossom_[w];
  label_[w] = label_[b] = t;
  labelend_[w] = labelend_[b] = p;
  bestedge_[w] = bestedge_[b] = -1;
  if (t == 1) {
    for_leaves(b, [&](int v) { queue_.push_back(v); });
  } else if (t == 2) {
    int base = base_[b];
    assign_label(endpoint(mate_[base]), 1, mate_[base] ^ 1);
  }
}

int Blossom::scan_blossom(int v, int w) {
  std::vector<int> path;
  int base = -1;
  while (v != -1 || w != -1) {
    int b = inblossom_[v];
    if (label_[b] & 4) {
      base = base_[b];
      break;
    }
    path.push_back(b);
    label_[b] = 5;
    if (labelend_[b] == -1) {
      v = -1;
    } else {
      v = endpoint(labelend_[b]);
      b = inblossom_[v];
      v = endpoint(labelend_[b]);
    }
    if (w != -1) std::swap(v, w);
  }
  for (int b : path) label_[b] = 1;
  return base;
}

void Blossom::add_blossom(int base, int k) {
  int v = edges_[k].u, w = edges_[k].v;
  int bb = inblossom_[base], bv = inblossom_[v], bw = inblossom_[w];
  int b = unused_.back();
  unused_.pop_back();
  base_[b] = base;
  parent_[b] = -1;
  parent_[bb] = b;
  auto &path = childs_[b];
  auto &endps = endps_[b];
  path.clear();
  endps.clear();
  while (bv != bb) {
    parent_[bv] = b;
    path.push_back(bv);
    endps.push_back(labelend_[bv]);
    v = endpoint(labelend_[bv]);
    bv = inblossom_[v];
  }
  path.push_back(bb);
  std::reverse(path.begin(), path.end());
  std::reverse(endps.begin(), endps.end());
  endps.push_back(2 * k);
  while (bw != bb) {
    parent_[bw] = b;
    path.push_back(bw);
    endps.push_back(labelend_[bw] ^ 1);
    w = endpoint(labelend_[bw]);
    bw = inblossom_[w];
  }
  label_[b] = 1;
  labelend_[b] = labelend_[bb];
  dual_[b] = 0;
  for_leaves(b, [&](int x) {
    if (label_[inblossom_[x]] == 2) queue_.push_back(x);
    inblossom_[x] = b;
  });
  std::vector<int> bestedgeto(2 * n_, -1);
  auto consider = [&](int kk) {
    int i = edges_[kk].u, j = edges_[kk].v;
    if (inblossom_[j] == b) std::swap(i, j);
    int bj = inblossom_[j];
    if (bj != b && label_[bj] == 1 && (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj]))) {
      bestedgeto[bj] = kk;
    }
  };
  for (int sub : path) {
    if (!has_bestedges_[sub]) {
      for_leaves(sub, [&](int x) {
        for (int p : neighbend_[x]) consider(p >> 1);
      });
    } else {
      for (int kk : bestedges_[sub]) consider(kk);
    }
    bestedges_[sub].clear();
    has_bestedges_[sub] = false;
    bestedge_[sub] = -1;
  }
  auto &be = bestedges_[b];
  be.clear();
  for (int kk : bestedgeto) {
    if (kk != -1) be.push_back(kk);
  }
  has_bestedges_[b] = true;
  bestedge_[b] = -1;
  for (int kk : be) {
    if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b])) bestedge_[b] = kk;
  }
}

void Blossom::expand_blossom(int b, bool endstage) {
  // Copy: recursive calls may recycle b's child list.
  std::vector<int> children = childs_[b];
  for (int s : children) {
    parent_[s] = -1;
    if (s < n_) {
      inblossom_[s] = s;
    } else if (endstage && dual_[s] == 0) {
      expand_blossom(s, endstage);
    } else {
      for_leaves(s, [&](int v) { inblossom_[v] = s; });
    }
  }
  if (!endstage && label_[b] == 2) {
    const auto &ch = childs_[b];
    const auto &ep = endps_[b];
    const int len = static_cast<int>(ch.size());
    auto at = [len](int j) { return ((j % len) + len) % len; };
    int entrychild = inblossom_[endpoint(labelend_[b] ^ 1)];
    int j = static_cast<int>(std::find(ch.begin(), ch.end(), entrychild) - ch.begin());
    int jstep, endptrick;
    if (j & 1) {
      j -= len;
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    int p = labelend_[b];
    while (j != 0) {
      label_[endpoint(p ^ 1)] = 0;
      label_[endpoint(ep[at(j - endptrick)] ^ endptrick ^ 1)] = 0;
      assign_label(endpoint(p ^ 1), 2, p);
      allow_[ep[at(j - endptrick)] >> 1] = 1;
      j += jstep;
      p = ep[at(j - endptrick)] ^ endptrick;
      allow_[p >> 1] = 1;
      j += jstep;
    }
    int bv = ch[at(j)];
    label_[endpoint(p ^ 1)] = label_[bv] = 2;
    labelend_[endpoint(p ^ 1)] = labelend_[bv] = p;
    bestedge_[bv] = -1;
    j += jstep;
    while (ch[at(j)] != entrychild) {
      bv = ch[at(j)];
      if (label_[bv] == 1) {
        j += jstep;
        continue;
      }
      int found = -1;
      for_leaves(bv, [&](int v) {
        if (found == -1 && label_[v] != 0) found = v;
      });
      if (found != -1) {
        label_[found] = 0;
        label_[endpoint(mate_[base_[bv]])] = 0;
        assign_label(found, 2, labelend_[found]);
      }
      j += jstep;
    }
  }
  label_[b] = labelend_[b] = -1;
  childs_[b].clear();
  endps_[b].clear();
  base_[b] = -1;
  bestedges_[b].clear();
  has_bestedges_[b] = false;
  bestedge_[b] = -1;
  unused_.push_back(b);
}

void Blossom::augment_blossom(int b, int v) {
  int t = v;
  while (parent_[t] != b) t = parent_[t];
  if (t >= n_) augment_blossom(t, v);
  auto &ch = childs_[b];
  auto &ep = endps_[b];
  const int len = static_cast<int>(ch.size());
  auto at = [len](int j) { return ((j % len) + len) % len; };
  int i = static_cast<int>(std::find(ch.begin(), ch.end(), t) - ch.begin());
  int j = i, jstep, endptrick;
  if (i & 1) {
    j -= len;
    jstep = 1;
    endptrick = 0;
  } else {
    jstep = -1;
    endptrick = 1;
  }
  while (j != 0) {
    j += jstep;
    t = ch[at(j)];
    int p = ep[at(j - endptrick)] ^ endptrick;
    if (t >= n_) augment_blossom(t, endpoint(p));
    j += jstep;
    t = ch[at(j)];
    if (t >= n_) augment_blossom(t, endpoint(p ^ 1));
    mate_[endpoint(p)] = p ^ 1;
    mate_[endpoint(p ^ 1)] = p;
  }
  std::rotate(ch.begin(), ch.begin() + i, ch.end());
  std::rotate(ep.begin(), ep.begin() + i, ep.end());
  base_[b] = base_[ch[0]];
}

void Blossom::augment_matching(int k) {
  const int v = edges_[k].u, w = edges_[k].v;
  const int starts[2][2] = {{v, 2 * k + 1}, {w, 2 * k}};
  for (const auto &sp : starts) {
    int s = sp[0], p = sp[1];
    while (true) {
      int bs = inblossom_[s];
      if (bs >= n_) augment_blossom(bs, s);
      mate_[s] = p;
      if (labelend_[bs] == -1) break;
      int t = endpoint(labelend_[bs]);
      int bt = inblossom_[t];
      s = endpoint(labelend_[bt]);
      int j = endpoint(labelend_[bt] ^ 1);
      if (bt >= n_) augment_blossom(bt, j);
      mate_[j] = labelend_[bt];
      p = labelend_[bt] ^ 1;
    }
  }
}

std::vector<int> Blossom::run() {
  const int n = n_;
  const int m = static_cast<int>(edges_.size());
  if (m == 0) return std::vector<int>(n, -1);
  int64_t maxweight = 0;
  for (const auto &e : edges_) {
    if (e.u == e.v || e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw std::invalid_argument("bad edge in matching input");
    }
    maxweight = std::max(maxweight, e.w);
  }
  neighbend_.assign(n, {});
  for (int k = 0; k < m; ++k) {
    neighbend_[edges_[k].u].push_back(2 * k + 1);
    neighbend_[edges_[k].v].push_back(2 * k);
  }
  mate_.assign(n, -1);
  label_.assign(2 * n, 0);
  labelend_.assign(2 * n, -1);
  inblossom_.resize(n);
  for (int v = 0; v < n; ++v) inblossom_[v] = v;
  parent_.assign(2 * n, -1);
  childs_.assign(2 * n, {});
  endps_.assign(2 * n, {});
  base_.assign(2 * n, -1);
  for (int v = 0; v < n; ++v) base_[v] = v;
  bestedge_.assign(2 * n, -1);
  bestedges_.assign(2 * n, {});
  has_bestedges_.assign(2 * n, false);
  unused_.clear();
  for (int b = 2 * n - 1; b >= n; --b) unused_.push_back(b);
  // unused_ is used as a stack; keep the original pop order (highest first).
  std::reverse(unused_.begin(), unused_.end());
  dual_.assign(2 * n, 0);
  for (int v = 0; v < n; ++v) dual_[v] = maxweight;
  allow_.assign(m, 0);

  for (int stage = 0; stage < n; ++stage) {
    std::fill(label_.begin(), label_.end(), 0);
    std::fill(bestedge_.begin(), bestedge_.end(), -1);
    for (int b = n; b < 2 * n; ++b) {
      bestedges_[b].clear();
      has_bestedges_[b] = false;
    }
    std::fill(allow_.begin(), allow_.end(), 0);
    queue_.clear();
    for (int v = 0; v < n; ++v) {
      if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);
    }
    bool augmented = false;
    while (true) {
      while (!queue_.empty() && !augmented) {
        int v = queue_.back();
        queue_.pop_back();
        for (int p : neighbend_[v]) {
          int k = p >> 1;
          int w = endpoint(p);
          if (inblossom_[v] == inblossom_[w]) continue;
          int64_t kslack = 0;
          if (!allow_[k]) {
            kslack = slack(k);
            if (kslack <= 0) allow_[k] = 1;
          }
          if (allow_[k]) {
            if (label_[inblossom_[w]] == 0) {
              assign_label(w, 2, p ^ 1);
            } else if (label_[inblossom_[w]] == 1) {
              int base = scan_blossom(v, w);
              if (base >= 0) {
                add_blossom(base, k);
              } else {
                augment_matching(k);
                augmented = true;
                break;
              }
            } else if (label_[w] == 0) {
              label_[w] = 2;
              labelend_[w] = p ^ 1;
            }
          } else if (label_[inblossom_[w]] == 1) {
            int b = inblossom_[v];
            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) bestedge_[b] = k;
          } else if (label_[w] == 0) {
            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) bestedge_[w] = k;
          }
        }
      }
      if (augmented) break;

      int deltatype = -1, deltaedge = -1, deltablossom = -1;
      int64_t delta = 0;
      if (!maxcard_) {
        deltatype = 1;
        delta = *std::min_element(dual_.begin(), dual_.begin() + n);
      }
      for (int v = 0; v < n; ++v) {
        if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
          int64_t d = slack(bestedge_[v]);
          if (deltatype == -1 || d < delta) {
            delta = d;
            deltatype = 2;
            deltaedge = bestedge_[v];
          }
        }
      }
      for (int b = 0; b < 2 * n; ++b) {
        if (parent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
          int64_t d = slack(bestedge_[b]) / 2;
          if (deltatype == -1 || d < delta) {
            delta = d;
            deltatype = 3;
            deltaedge = bestedge_[b];
          }
        }
      }
      for (int b = n; b < 2 * n; ++b) {
        if (base_[b] >= 0 && parent_[b] == -1 && label_[b] == 2 &&
            (deltatype == -1 || dual_[b] < delta)) {
          delta = dual_[b];
          deltatype = 4;
          deltablossom = b;
        }
      }
      if (deltatype == -1) {
        deltatype = 1;
        delta = std::max<int64_t>(0, *std::min_element(dual_.begin(), dual_.begin() + n));
      }
      for (int v = 0; v < n; ++v) {
        int l = label_[inblossom_[v]];
        if (l == 1) {
          dual_[v] -= delta;
        } else if (l == 2) {
          dual_[v] += delta;
        }
      }
      for (int b = n; b < 2 * n; ++b) {
        if (base_[b] >= 0 && parent_[b] == -1) {
          if (label_[b] == 1) {
            dual_[b] += delta;
          } else if (label_[b] == 2) {
            dual_[b] -= delta;
          }
        }
      }
      if (deltatype == 1) break;
      if (deltatype == 2) {
        allow_[deltaedge] = 1;
        int i = edges_[deltaedge].u, j = edges_[deltaedge].v;
        if (label_[inblossom_[i]] == 0) std::swap(i, j);
        queue_.push_back(i);
      } else if (deltatype == 3) {
        allow_[deltaedge] = 1;
        queue_.push_back(edges_[deltaedge].u);
      } else {
        expand_blossom(deltablossom, false);
      }
    }
    if (!augmented) break;
    for (int b = n; b < 2 * n; ++b) {
      if (parent_[b] == -1 && base_[b] >= 0 && label_[b] == 1 && dual_[b] == 0) {
        expand_blossom(b, true);
      }
    }
  }
  std::vector<int> out(n, -1);
  for (int v = 0; v < n; ++v) {
    if (mate_[v] >= 0) out[v] = endpoint(mate_[v]);
  }
  return out;
}

Matching to_matching(const std::vector<int> &mate, int n,
                     const std::function<int64_t(int, int)> &weight) {
  Matching m;
  for (int v = 0; v < n; ++v) {
    if (mate[v] < 0) throw std::runtime_error("no perfect matching exists");
    if (v < mate[v]) {
      m.pairs.emplace_back(v, mate[v]);
      m.total_weight += weight(v, mate[v]);
    }
  }
  return m;
}

}  // namespace

std::vector<int> max_weight_matching(int num_nodes, const std::vector<WeightedEdge> &edges,
                                     bool max_cardinality) {
  std::vector<WeightedEdge> doubled = edges;
  for (auto &e : doubled) {
    if (e.w < 0) throw std::invalid_argument("negative weights are not supported");
    e.w *= 2;
  }
  return Blossom(num_nodes, doubled, max_cardinality).run();
}

Matching mwpm(const WeightedGraph &g) {
  const int n = g.num_nodes();
  if (n % 2) throw std::invalid_argument("perfect matching needs an even node count, got " + std::to_string(n));
  if (n == 0) return {};
  int64_t cap = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) cap = std::max(cap, g.weight(i, j));
  cap += 1;
  std::vector<WeightedEdge> edges;
  edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, 2 * (cap - g.weight(i, j))});
  auto mate = Blossom(n, edges, true).run();
  return to_matching(mate, n, [&](int i, int j) { return g.weight(i, j); });
}

Matching mwpm_sparse(int num_nodes, const std::vector<WeightedEdge> &edges) {
  if (num_nodes % 2) throw std::invalid_argument("perfect matching needs an even node count");
  if (num_nodes == 0) return {};
  int64_t cap = 0;
  std::unordered_map<int64_t, int64_t> pair_weight;
  for (const auto &e : edges) {
    if (e.w < 0) throw std::invalid_argument("negative weights are not supported");
    cap = std::max(cap, e.w);
    int64_t key = static_cast<int64_t>(std::min(e.u, e.v)) * num_nodes + std::max(e.u, e.v);
    auto it = pair_weight.find(key);
    if (it == pair_weight.end() || e.w < it->second) pair_weight[key] = e.w;
  }
  cap += 1;
  std::vector<WeightedEdge> tr;
  tr.reserve(edges.size());
  for (const auto &e : edges) tr.push_back({e.u, e.v, 2 * (cap - e.w)});
  auto mate = Blossom(num_nodes, tr, true).run();
  return to_matching(mate, num_nodes, [&](int i, int j) {
    return pair_weight.at(static_cast<int64_t>(i) * num_nodes + j);
  });
}

uint64_t count_perfect_matchings(int num_nodes) {
  if (num_nodes % 2) return 0;
  uint64_t c = 1;
  for (int k = num_nodes - 1; k > 1; k -= 2) c *= k;
  return c;
}

Matching brute_force_mwpm(const WeightedGraph &g) {
  const int n = g.num_nodes();
  if (n % 2) throw std::invalid_argument("perfect matching needs an even node count");
  if (n > 12) throw std::invalid_argument("brute force limited to 12 nodes");
  Matching best;
  best.total_weight = std::numeric_limits<int64_t>::max();
  std::vector<std::pair<int, int>> cur;
  std::vector<char> used(n, 0);
  // Lexicographic enumeration: always pair the lowest unused node first, with
  // partners in increasing order. Strict improvement keeps the first optimum.
  std::function<void(int64_t)> rec = [&](int64_t acc) {
    int i = 0;
    while (i < n && used[i]) ++i;
    if (i == n) {
      if (acc < best.total_weight) {
        best.total_weight = acc;
        best.pairs = cur;
      }
      return;
    }
    used[i] = 1;
    for (int j = i + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = 1;
      cur.emplace_back(i, j);
      rec(acc + g.weight(i, j));
      cur.pop_back();
      used[j] = 0;
    }
    used[i] = 0;
  };
  rec(0);
  if (n == 0) best.total_weight = 0;
  return best;
}

}  // namespace z4k
