#include "z4k/distance.h"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "z4k/code_analysis.h"
#include "z4k/z4_linalg.h"

namespace z4k {

namespace {

// Labels are packed one nibble per basis logical; digits stay in 0..3.
constexpr uint32_t kDigitMask = 0x333333;
uint32_t label_add(uint32_t a, uint32_t b) { return (a + b) & kDigitMask; }
uint32_t label_neg(uint32_t a) { return (0x444444 - a) & kDigitMask; }

uint32_t pack_labels(const std::vector<int> &l) {
  uint32_t v = 0;
  for (size_t k = 0; k < l.size(); ++k) v |= static_cast<uint32_t>(mod4(l[k])) << (4 * k);
  return v;
}

struct Walker {
  int n = 0;
  std::array<int, 2> c{0, 0};
  std::array<uint8_t, 2> x{0, 0};

  uint64_t code() const {
    uint64_t v = static_cast<uint64_t>(n);
    v |= static_cast<uint64_t>(c[0] & 0xffff) << 2;
    v |= static_cast<uint64_t>(x[0]) << 18;
    v |= static_cast<uint64_t>(c[1] & 0xffff) << 20;
    v |= static_cast<uint64_t>(x[1]) << 36;
    return v;
  }
};

uint64_t state_key(const Walker &w, uint32_t label) { return (w.code() << 24) | label; }
uint64_t walker_of(uint64_t key) { return key >> 24; }
uint32_t label_of(uint64_t key) { return static_cast<uint32_t>(key & 0xffffff); }

struct Effect {
  int n = 0;
  std::array<std::pair<int, uint8_t>, 4> e{};
  uint32_t label = 0;
};

struct Move {
  int q;
  uint8_t a, b;
};

struct Node {
  uint64_t parent;
  Move move;
  int depth;
};

class WalkerSearch {
 public:
  explicit WalkerSearch(const KagomeCode &code)
      : code_(code), C_(static_cast<int>(code.checks().size())) {
    const int n = code.num_qudits();
    incident_.assign(n, {});
    check_qudits_.assign(C_, {});
    for (int c = 0; c < C_; ++c) {
      for (const auto &op : code.checks()[c].word) {
        if (!code.active(op.q)) continue;
        incident_[op.q].push_back({c, op.a, op.b});
        check_qudits_[c].push_back(op.q);
      }
    }
    effects_.assign(n, {});
    for (int q = 0; q < n; ++q) {
      if (!code.active(q)) continue;
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
          Effect &ef = effects_[q][a * 4 + b];
          for (const auto &inc : incident_[q]) {
            int d = mod4(inc.a * b - inc.b * a);
            if (d) ef.e[ef.n++] = {inc.c, static_cast<uint8_t>(d)};
          }
          std::vector<int> l;
          for (const auto &lg : code.logicals()) l.push_back(lg.op.z(q) * b - lg.op.x(q) * a);
          ef.label = pack_labels(l);
        }
      }
    }
    for (int c = 0; c < C_; ++c) {
      for (int q : check_qudits_[c]) {
        for (const auto &inc : incident_[q]) {
          if (inc.c != c) adjacent_.insert(pair_key(c, inc.c));
        }
      }
    }
  }

  bool apply(const Walker &w, const Effect &ef, Walker &out) const {
    std::array<std::pair<int, int>, 6> acc;
    int m = 0;
    auto add = [&](int c, int x) {
      for (int k = 0; k < m; ++k) {
        if (acc[k].first == c) {
          acc[k].second = mod4(acc[k].second + x);
          return;
        }
      }
      acc[m++] = {c, mod4(x)};
    };
    for (int k = 0; k < w.n; ++k) add(w.c[k], w.x[k]);
    for (int k = 0; k < ef.n; ++k) add(ef.e[k].first, ef.e[k].second);
    out = Walker{};
    for (int k = 0; k < m; ++k) {
      if (!acc[k].second) continue;
      if (out.n == 2) return false;
      out.c[out.n] = acc[k].first;
      out.x[out.n] = static_cast<uint8_t>(acc[k].second);
      ++out.n;
    }
    if (out.n == 2) {
      if (out.c[0] > out.c[1]) {
        std::swap(out.c[0], out.c[1]);
        std::swap(out.x[0], out.x[1]);
      }
      if (!adjacent_.count(pair_key(out.c[0], out.c[1]))) return false;
    }
    return true;
  }

  // Breadth-first search from `start` up to `max_depth` moves.
  std::unordered_map<uint64_t, Node> explore(const Walker &start, int max_depth,
                                             const std::function<bool(uint64_t, int)> &on_visit) {
    std::unordered_map<uint64_t, Node> seen;
    uint64_t k0 = state_key(start, 0);
    seen[k0] = {k0, {-1, 0, 0}, 0};
    std::vector<uint64_t> frontier{k0}, next;
    if (on_visit(k0, 0)) return seen;
    for (int depth = 1; depth <= max_depth && !frontier.empty(); ++depth) {
      next.clear();
      for (uint64_t key : frontier) {
        Walker w = decode(walker_of(key));
        uint32_t label = label_of(key);
        auto visit_qudit = [&](int q) -> bool {
          for (int op = 1; op < 16; ++op) {
            const Effect &ef = effects_[q][op];
            Walker nw;
            if (!apply(w, ef, nw)) continue;
            uint64_t nk = state_key(nw, label_add(label, ef.label));
            if (seen.count(nk)) continue;
            seen[nk] = {key, {q, static_cast<uint8_t>(op / 4), static_cast<uint8_t>(op % 4)}, depth};
            next.push_back(nk);
            if (on_visit(nk, depth)) return true;
          }
          return false;
        };
        if (w.n == 0) {
          for (int q = 0; q < code_.num_qudits(); ++q) {
            if (code_.active(q) && visit_qudit(q)) return seen;
          }
        } else {
          std::vector<int> qs;
          for (int k = 0; k < w.n; ++k) {
            for (int q : check_qudits_[w.c[k]]) qs.push_back(q);
          }
          std::sort(qs.begin(), qs.end());
          qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
          for (int q : qs) {
            if (visit_qudit(q)) return seen;
          }
        }
      }
      std::swap(frontier, next);
      states_ += static_cast<long>(frontier.size());
    }
    return seen;
  }

  static Walker decode(uint64_t v) {
    Walker w;
    w.n = static_cast<int>(v & 3);
    w.c[0] = static_cast<int>((v >> 2) & 0xffff);
    w.x[0] = static_cast<uint8_t>((v >> 18) & 3);
    w.c[1] = static_cast<int>((v >> 20) & 0xffff);
    w.x[1] = static_cast<uint8_t>((v >> 36) & 3);
    return w;
  }

  static std::vector<Move> path_to(const std::unordered_map<uint64_t, Node> &seen, uint64_t key) {
    std::vector<Move> moves;
    while (true) {
      const Node &nd = seen.at(key);
      if (nd.move.q < 0) break;
      moves.push_back(nd.move);
      key = nd.parent;
    }
    std::reverse(moves.begin(), moves.end());
    return moves;
  }

  int num_checks() const { return C_; }
  const std::vector<int> &check_qudits(int c) const { return check_qudits_[c]; }
  long states() const { return states_; }

 private:
  struct Incidence {
    int c;
    int a, b;
  };
  static uint64_t pair_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<uint64_t>(a) << 32) | static_cast<uint32_t>(b);
  }

  const KagomeCode &code_;
  int C_;
  std::vector<std::vector<Incidence>> incident_;
  std::vector<std::vector<int>> check_qudits_;
  std::vector<std::array<Effect, 16>> effects_;
  std::unordered_set<uint64_t> adjacent_;
  long states_ = 0;
};

bool verify_candidate(const KagomeCode &code, const PhasedPauli &op, const std::vector<int> &labels) {
  for (const auto &c : code.checks()) {
    if (commutation_exponent(c.word, op)) return false;
  }
  for (size_t q = 0; q < op.size(); ++q) {
    if (!code.active(static_cast<int>(q)) && (op.z(q) | op.x(q))) return false;
  }
  auto l = logical_labels(code, op);
  for (size_t k = 0; k < l.size(); ++k) {
    if (l[k] != mod4(labels[k])) return false;
  }
  return true;
}

PhasedPauli build_operator(size_t n, const std::vector<Move> &forward, const std::vector<Move> &backward) {
  PhasedPauli p(n);
  for (const auto &m : forward) p.apply_right(m.q, m.a, m.b);
  for (const auto &m : backward) p.apply_right(m.q, mod4(-m.a), mod4(-m.b));
  p.set_phase_exp(0);
  return p;
}

}  // namespace

DistanceResult class_distance(const KagomeCode &code, const std::vector<int> &labels,
                              const std::optional<PhasedPauli> &seed) {
  if (labels.size() != code.logicals().size()) throw std::invalid_argument("label vector size");
  if (std::all_of(labels.begin(), labels.end(), [](int v) { return mod4(v) == 0; })) {
    throw std::invalid_argument("trivial class has no distance");
  }
  const uint32_t target = pack_labels(labels);
  const size_t n = code.num_qudits();
  DistanceResult best;
  auto offer = [&](const PhasedPauli &op) {
    if (!verify_candidate(code, op, labels)) return;
    int w = static_cast<int>(op.weight());
    if (best.weight < 0 || w < best.weight) {
      best.weight = w;
      best.witness = op;
    }
  };
  if (seed) offer(*seed);
  if (best.weight < 0) {
    // Any representative gives a finite bound.
    std::vector<PhasedPauli> basis;
    for (const auto &l : code.logicals()) basis.push_back(l.op);
    auto rep = solve_centralizer(code, basis, labels);
    if (!rep) throw std::runtime_error("label vector is not realised by any operator");
    offer(*rep);
  }

  WalkerSearch search(code);

  // Open walks between charge-free configurations.
  {
    int limit = best.weight - 1;
    uint64_t hit = 0;
    bool found = false;
    auto seen = search.explore(Walker{}, limit, [&](uint64_t key, int depth) {
      if (depth > 0 && walker_of(key) == 0 && label_of(key) == target) {
        hit = key;
        found = true;
        return true;
      }
      return false;
    });
    if (found) offer(build_operator(n, WalkerSearch::path_to(seen, hit), {}));
  }

  // Closed walks through anchors touching a conjugate logical.
  int pick = -1;
  size_t pick_weight = 0;
  for (size_t k = 0; k < labels.size(); ++k) {
    if (!mod4(labels[k])) continue;
    size_t w = code.logicals()[k].op.weight();
    if (pick < 0 || w < pick_weight) {
      pick = static_cast<int>(k);
      pick_weight = w;
    }
  }
  std::vector<int> anchors;
  {
    const auto &B = code.logicals()[pick].op;
    std::vector<char> mark(search.num_checks(), 0);
    for (int c = 0; c < search.num_checks(); ++c) {
      for (int q : search.check_qudits(c)) {
        if (B.z(q) | B.x(q)) mark[c] = 1;
      }
    }
    for (int c = 0; c < search.num_checks(); ++c) {
      if (mark[c]) anchors.push_back(c);
    }
  }
  const uint32_t neg_target = label_neg(target);
  for (int c : anchors) {
    for (uint8_t x : {uint8_t(1), uint8_t(2)}) {
      if (best.weight <= 2) break;
      Walker w0;
      w0.n = 1;
      w0.c[0] = c;
      w0.x[0] = x;
      int half = best.weight / 2;  // cycles shorter than best split into halves <= half
      auto seen = search.explore(w0, half, [](uint64_t, int) { return false; });
      int best_len = best.weight;
      uint64_t k1 = 0, k2 = 0;
      bool negated = false;
      for (const auto &[key, node] : seen) {
        uint64_t wc = walker_of(key);
        uint32_t l1 = label_of(key);
        for (int sgn = 0; sgn < 2; ++sgn) {
          uint32_t l2 = label_add(l1, sgn ? target : neg_target);
          auto it = seen.find((wc << 24) | l2);
          if (it == seen.end()) continue;
          int len = node.depth + it->second.depth;
          if (len < best_len) {
            best_len = len;
            k1 = key;
            k2 = it->first;
            negated = sgn == 1;
          }
        }
      }
      if (best_len < best.weight) {
        PhasedPauli op = build_operator(n, WalkerSearch::path_to(seen, k1), {});
        PhasedPauli back = build_operator(n, WalkerSearch::path_to(seen, k2), {});
        op *= back.dagger();
        op.set_phase_exp(0);
        if (negated) op = op.dagger();
        op.set_phase_exp(0);
        offer(op);
      }
    }
  }
  best.states_visited = search.states();
  return best;
}

DistanceResult code_distance(const KagomeCode &code, const std::string &logical_name) {
  const PhasedPauli &target = code.logical(logical_name);
  return class_distance(code, logical_labels(code, target), target);
}

DistanceResult brute_force_distance(const KagomeCode &code, const std::string &logical_name,
                                    int max_weight) {
  const PhasedPauli &target = code.logical(logical_name);
  const auto labels = logical_labels(code, target);
  const int n = code.num_qudits();
  const auto &checks = code.checks();
  std::vector<std::vector<int>> checks_of(n);
  for (int c = 0; c < static_cast<int>(checks.size()); ++c) {
    for (const auto &op : checks[c].word) {
      if (code.active(op.q)) checks_of[op.q].push_back(c);
    }
  }
  std::vector<std::vector<int>> nbr(n);
  for (int q = 0; q < n; ++q) {
    if (!code.active(q)) continue;
    for (int c : checks_of[q]) {
      for (const auto &op : checks[c].word) {
        if (op.q != q && code.active(op.q)) nbr[q].push_back(op.q);
      }
    }
    std::sort(nbr[q].begin(), nbr[q].end());
    nbr[q].erase(std::unique(nbr[q].begin(), nbr[q].end()), nbr[q].end());
  }
  std::vector<char> in_conj(n, 0);
  for (size_t k = 0; k < labels.size(); ++k) {
    if (!labels[k]) continue;
    for (size_t q : code.logicals()[k].op.support()) in_conj[q] = 1;
  }

  DistanceResult result;
  std::vector<int> sub;
  std::vector<int> position(n, -1);

  auto test = [&]() -> bool {
    bool touches = false;
    for (int q : sub) touches |= in_conj[q] != 0;
    if (!touches) return false;
    const int w = static_cast<int>(sub.size());
    for (int k = 0; k < w; ++k) position[sub[k]] = k;
    std::vector<int> cs;
    for (int q : sub) cs.insert(cs.end(), checks_of[q].begin(), checks_of[q].end());
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    Z4Matrix m(0, 0);
    std::vector<uint8_t> rhs;
    auto row_of = [&](const SparseWord &word) {
      std::vector<uint8_t> row(2 * w, 0);
      for (const auto &op : word) {
        int k = position[op.q];
        if (k < 0) continue;
        row[k] = static_cast<uint8_t>(mod4(-op.b));
        row[w + k] = op.a;
      }
      return row;
    };
    for (int c : cs) {
      m.append_row(row_of(checks[c].word));
      rhs.push_back(0);
    }
    for (size_t k = 0; k < labels.size(); ++k) {
      m.append_row(row_of(to_sparse(code.logicals()[k].op)));
      rhs.push_back(static_cast<uint8_t>(labels[k]));
    }
    auto sol = solve_z4(std::move(m), std::move(rhs));
    for (int q : sub) position[q] = -1;
    if (!sol) return false;
    PhasedPauli op(n);
    for (int k = 0; k < w; ++k) op.set(sub[k], (*sol)[k], (*sol)[w + k]);
    result.weight = static_cast<int>(op.weight());
    result.witness = op;
    return true;
  };

  // Connected induced subgraphs enumerated once each, rooted at their minimum vertex.
  std::function<bool(std::vector<int>, int, int)> extend = [&](std::vector<int> ext, int root,
                                                               int size) -> bool {
    if (static_cast<int>(sub.size()) == size) {
      ++result.states_visited;
      return test();
    }
    while (!ext.empty()) {
      int w = ext.back();
      ext.pop_back();
      std::vector<int> next = ext;
      for (int u : nbr[w]) {
        if (u <= root) continue;
        if (std::find(sub.begin(), sub.end(), u) != sub.end()) continue;
        if (std::find(next.begin(), next.end(), u) != next.end()) continue;
        bool near_sub = false;
        for (int s : sub) {
          if (std::binary_search(nbr[s].begin(), nbr[s].end(), u)) {
            near_sub = true;
            break;
          }
        }
        if (!near_sub) next.push_back(u);
      }
      sub.push_back(w);
      bool hit = extend(next, root, size);
      sub.pop_back();
      if (hit) return true;
    }
    return false;
  };

  for (int size = 1; size <= max_weight; ++size) {
    for (int v = 0; v < n; ++v) {
      if (!code.active(v)) continue;
      std::vector<int> ext;
      for (int u : nbr[v]) {
        if (u > v) ext.push_back(u);
      }
      sub = {v};
      if (extend(ext, v, size)) return result;
    }
  }
  result.weight = -1;
  result.witness.reset();
  return result;
}

}  // namespace z4k
