#include "z4k/decoder.h"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "z4k/matching.h"

namespace z4k {

int SyndromeConfig::total_charge() const {
  int s = 0;
  for (auto c : charges) s += c;
  return s & 3;
}

SyndromeConfig syndrome_from_charges(std::vector<uint8_t> charges) {
  SyndromeConfig s;
  s.charges = std::move(charges);
  for (size_t c = 0; c < s.charges.size(); ++c) {
    int k = s.charges[c] & 3;
    if (k & 1) s.odd.push_back({static_cast<int>(c), k});
    else if (k) s.even.push_back({static_cast<int>(c), k});
  }
  return s;
}

SyndromeConfig extract_syndrome(const KagomeCode &code, const PhasedPauli &frame) {
  std::vector<uint8_t> ch;
  ch.reserve(code.checks().size());
  for (const auto &c : code.checks()) ch.push_back(static_cast<uint8_t>(commutation_exponent(c.word, frame)));
  return syndrome_from_charges(std::move(ch));
}

DistanceTable::DistanceTable(const KagomeCode &code) : n_(static_cast<int>(code.checks().size())) {
  for (const auto &c : code.checks()) {
    species_.push_back(c.kind == CheckKind::Hexagon ? 0 : c.kind == CheckKind::Triangle ? 1 : 2);
  }
  Incidence inc = check_incidence(code);
  std::map<std::tuple<int, int, int>, int> seen;
  for (int g = 0; g < 2; ++g) adj_[g].assign(n_, {});

  for (int q = 0; q < code.num_qudits(); ++q) {
    if (!code.active(q)) continue;
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        if (!(a | b)) continue;
        std::map<int, int> d;
        for (const auto &h : inc.hits(q)) d[h.word] += Incidence::delta(h, a, b);
        std::vector<std::pair<int, int>> nz;
        for (auto [c, v] : d)
          if (v & 3) nz.push_back({c, v & 3});
        if (nz.size() != 2) continue;
        auto [u, du] = nz[0];
        int v = nz[1].first;
        if (((du + nz[1].second) & 3) != 0) throw std::logic_error("hop does not conserve charge");
        int g = (du & 1) ? kOdd : kEven;
        if (g == kOdd && du != 1) continue;  // the du = 1 power covers this hop
        auto key = std::make_tuple(g, u, v);
        if (seen.count(key)) continue;
        seen[key] = static_cast<int>(hops_.size());
        adj_[g][u].push_back({v, static_cast<int>(hops_.size())});
        adj_[g][v].push_back({u, static_cast<int>(hops_.size())});
        hops_.push_back({u, v, q, static_cast<uint8_t>(a), static_cast<uint8_t>(b), static_cast<uint8_t>(du)});
      }
    }
  }
  for (int g = 0; g < 2; ++g) {
    for (auto &nb : adj_[g]) std::sort(nb.begin(), nb.end());
    dist_[g].assign(static_cast<size_t>(n_) * n_, kUnreachable);
    parent_[g].assign(static_cast<size_t>(n_) * n_, -1);
    comp_[g].assign(n_, -1);
    std::vector<int> queue(n_);
    for (int s = 0; s < n_; ++s) {
      uint16_t *dist = dist_[g].data() + static_cast<size_t>(s) * n_;
      int32_t *par = parent_[g].data() + static_cast<size_t>(s) * n_;
      size_t head = 0, tail = 0;
      queue[tail++] = s;
      dist[s] = 0;
      while (head < tail) {
        int x = queue[head++];
        for (auto [y, h] : adj_[g][x]) {
          if (dist[y] != kUnreachable) continue;
          dist[y] = static_cast<uint16_t>(dist[x] + 1);
          par[y] = h;
          queue[tail++] = y;
        }
      }
      if (comp_[g][s] < 0) {
        for (size_t i = 0; i < tail; ++i) comp_[g][queue[i]] = s;
      }
    }
  }
}

std::vector<int> DistanceTable::witness(int u, int v, Graph g) const {
  if (distance(u, v, g) < 0) throw std::invalid_argument("checks are not connected");
  std::vector<int> path;
  const int32_t *par = parent_[g].data() + static_cast<size_t>(u) * n_;
  for (int x = v; x != u;) {
    const Hop &h = hops_[par[x]];
    path.push_back(par[x]);
    x = h.u == x ? h.v : h.u;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

int DistanceTable::crossing_parity(int u, int v, Graph g) const {
  int last = species_[u] == 2 ? -1 : species_[u];
  int flips = 0;
  int x = u;
  for (int h : witness(u, v, g)) {
    x = hops_[h].u == x ? hops_[h].v : hops_[h].u;
    if (species_[x] == 2) continue;
    if (last >= 0 && species_[x] != last) ++flips;
    last = species_[x];
  }
  return flips & 1;
}

DistanceTable build_distance_table(const KagomeCode &code, const SyndromeConfig &) {
  return DistanceTable(code);
}

Decoder::Decoder(const KagomeCode &code)
    : code_(&code), table_(code), checks_(check_incidence(code)), logicals_(logical_incidence(code)) {}

std::vector<uint8_t> Decoder::charges_of(const SparseWord &w) const {
  std::vector<uint8_t> ch(checks_.num_words(), 0);
  for (const auto &op : w)
    for (const auto &h : checks_.hits(op.q)) ch[h.word] = (ch[h.word] + Incidence::delta(h, op.a, op.b)) & 3;
  return ch;
}

std::vector<uint8_t> Decoder::labels_of(const SparseWord &w) const {
  std::vector<uint8_t> lab(logicals_.num_words(), 0);
  for (const auto &op : w)
    for (const auto &h : logicals_.hits(op.q)) lab[h.word] = (lab[h.word] + Incidence::delta(h, op.a, op.b)) & 3;
  return lab;
}

namespace {

struct Mover {
  const DistanceTable &table;
  std::vector<uint8_t> &charges;
  std::vector<uint8_t> &za;  // accumulated correction per qudit
  std::vector<uint8_t> &xb;
  std::vector<int> &touched;
  int moves = 0;

  // Moves `carried` from `from` across hop h; returns the node reached.
  int move(int h_index, int from, int carried) {
    const Hop &h = table.hops()[h_index];
    int d_from = h.u == from ? h.du : (4 - h.du) & 3;
    int k;
    if (d_from & 1) k = (-carried * d_from) & 3;
    else {
      if (carried != 2) throw std::logic_error("even hop cannot move an odd charge");
      k = 1;
    }
    int q = h.q;
    if (!za[q] && !xb[q]) touched.push_back(q);
    za[q] = (za[q] + k * h.a) & 3;
    xb[q] = (xb[q] + k * h.b) & 3;
    charges[h.u] = (charges[h.u] + k * h.du) & 3;
    charges[h.v] = (charges[h.v] - k * h.du) & 3;
    ++moves;
    return h.u == from ? h.v : h.u;
  }
};

// Minimum-weight pairing of `nodes`, done independently per connected component.
std::vector<std::pair<int, int>> pair_up(const DistanceTable &t, const std::vector<int> &nodes,
                                         DistanceTable::Graph g) {
  std::map<int, std::vector<int>> by_comp;
  for (int c : nodes) by_comp[t.component(c, g)].push_back(c);
  std::vector<std::pair<int, int>> out;
  for (auto &[comp, group] : by_comp) {
    if (group.size() % 2) throw std::logic_error("odd anyon population in a connected component");
    const int n = static_cast<int>(group.size());
    if (n == 2) {
      out.push_back({group[0], group[1]});
      continue;
    }
    WeightedGraph wg(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) wg.set_weight(i, j, t.distance(group[i], group[j], g));
    for (auto [i, j] : mwpm(wg).pairs) out.push_back({group[i], group[j]});
  }
  return out;
}

}  // namespace

DecodeResult Decoder::decode(const SyndromeConfig &syndrome) const {
  DecodeResult res;
  if (syndrome.empty()) {
    res.labels.assign(logicals_.num_words(), 0);
    return res;
  }
  if (syndrome.charges.size() != checks_.num_words()) throw std::invalid_argument("syndrome size mismatch");
  const int nq = code_->num_qudits();
  std::vector<uint8_t> charges = syndrome.charges;
  std::vector<uint8_t> za(nq, 0), xb(nq, 0);
  std::vector<int> touched;
  Mover mover{table_, charges, za, xb, touched};

  // Round 1.
  std::vector<int> odd_nodes;
  for (const auto &a : syndrome.odd) odd_nodes.push_back(a.check);
  for (auto [u, v] : pair_up(table_, odd_nodes, DistanceTable::kOdd)) {
    auto path = table_.witness(u, v, DistanceTable::kOdd);
    const size_t mid = path.size() / 2;
    int cu = syndrome.charges[u], cv = syndrome.charges[v];
    int x = u;
    for (size_t i = 0; i < mid; ++i) x = mover.move(path[i], x, cu);
    int y = v;
    for (size_t i = path.size(); i-- > mid;) y = mover.move(path[i], y, cv);
    ++res.odd_pairs;
  }

  // Round 2.
  std::vector<int> even_nodes;
  for (size_t c = 0; c < charges.size(); ++c) {
    if (charges[c] & 1) throw std::logic_error("odd charge left after the first round");
    if (charges[c]) even_nodes.push_back(static_cast<int>(c));
  }
  for (auto [u, v] : pair_up(table_, even_nodes, DistanceTable::kEven)) {
    int x = u;
    for (int h : table_.witness(u, v, DistanceTable::kEven)) x = mover.move(h, x, 2);
    ++res.even_pairs;
  }

  std::sort(touched.begin(), touched.end());
  for (int q : touched)
    if (za[q] | xb[q]) res.correction.push_back({q, za[q], xb[q]});
  res.moves = mover.moves;

  // Re-extract: the correction alone must carry the negated syndrome.
  auto ch = charges_of(res.correction);
  for (size_t c = 0; c < ch.size(); ++c) {
    if (((ch[c] + syndrome.charges[c]) & 3) != 0) throw std::logic_error("decoder correction does not annihilate the syndrome");
  }
  res.labels = labels_of(res.correction);
  return res;
}

PhasedPauli decode(const KagomeCode &code, const SyndromeConfig &syndrome) {
  Decoder d(code);
  return to_pauli(d.decode(syndrome).correction, code.num_qudits());
}

bool Verdict::failed(const std::string &name) const {
  for (size_t k = 0; k < names.size(); ++k)
    if (names[k] == name) return residual[k] != 0;
  throw std::out_of_range("unknown logical " + name);
}

bool Verdict::any_failed() const {
  return std::any_of(residual.begin(), residual.end(), [](uint8_t r) { return r != 0; });
}

Verdict logical_verdict(const KagomeCode &code, const PhasedPauli &frame, const PhasedPauli &correction) {
  PhasedPauli total = frame * correction;
  for (const auto &c : code.checks()) {
    if (commutation_exponent(c.word, total)) throw std::invalid_argument("frame times correction has a nonzero syndrome");
  }
  Verdict v;
  for (const auto &l : code.logicals()) {
    v.names.push_back(l.name);
    v.residual.push_back(static_cast<uint8_t>(commutation_exponent(l.op, total)));
  }
  return v;
}

}  // namespace z4k
