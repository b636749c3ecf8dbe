#include "z4k/clifford.h"

#include <cmath>
#include <deque>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "z4k/dense.h"

namespace z4k {

CliffordTableau::CliffordTableau(int n) : n_(n) {
  for (int i = 0; i < n; ++i) {
    z_.push_back(PhasedPauli::single(n, i, 1, 0));
    x_.push_back(PhasedPauli::single(n, i, 0, 1));
  }
}

PhasedPauli CliffordTableau::conjugate(const PhasedPauli &p) const {
  if (static_cast<int>(p.size()) != n_) throw std::invalid_argument("register size mismatch");
  PhasedPauli out(n_);
  out.set_phase_exp(p.phase_exp());
  for (int i = 0; i < n_; ++i) {
    if (p.z(i)) out *= z_[i].pow(p.z(i));
    if (p.x(i)) out *= x_[i].pow(p.x(i));
  }
  return out;
}

namespace {

PhasedPauli embed(const PhasedPauli &local, const std::vector<int> &qudits, int n) {
  PhasedPauli out(n);
  for (size_t l = 0; l < qudits.size(); ++l) out.set(qudits[l], local.z(l), local.x(l));
  out.set_phase_exp(local.phase_exp());
  return out;
}

}  // namespace

CliffordTableau CliffordTableau::then(const CliffordTableau &gate, const std::vector<int> &qudits) const {
  if (static_cast<int>(qudits.size()) != gate.n()) throw std::invalid_argument("gate arity mismatch");
  CliffordTableau g(n_);
  for (size_t l = 0; l < qudits.size(); ++l) {
    g.z_[qudits[l]] = embed(gate.z_[l], qudits, n_);
    g.x_[qudits[l]] = embed(gate.x_[l], qudits, n_);
  }
  return then(g);
}

CliffordTableau CliffordTableau::then(const CliffordTableau &next) const {
  CliffordTableau out(n_);
  for (int i = 0; i < n_; ++i) {
    out.z_[i] = next.conjugate(z_[i]);
    out.x_[i] = next.conjugate(x_[i]);
  }
  return out;
}

std::vector<std::vector<int>> CliffordTableau::matrix() const {
  std::vector<std::vector<int>> m(2 * n_, std::vector<int>(2 * n_, 0));
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      m[2 * k][2 * i] = z_[i].z(k);
      m[2 * k + 1][2 * i] = z_[i].x(k);
      m[2 * k][2 * i + 1] = x_[i].z(k);
      m[2 * k + 1][2 * i + 1] = x_[i].x(k);
    }
  }
  return m;
}

namespace {

bool in_x_orbit(const PhasedPauli &p) {
  int odd = 0, pp = 0;
  for (size_t q = 0; q < p.size(); ++q) {
    odd |= (p.z(q) | p.x(q)) & 1;
    pp += p.z(q) * p.x(q);
  }
  return odd && ((p.phase_exp() - pp) & 1) == 0;
}

}  // namespace

std::string CliffordTableau::validate() const {
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(z_[i].size()) != n_ || static_cast<int>(x_[i].size()) != n_) return "image size mismatch";
    for (int j = 0; j < n_; ++j) {
      if (commutation_exponent(z_[i], x_[j]) != (i == j ? 1 : 0))
        return "images of Z" + std::to_string(i) + " and X" + std::to_string(j) + " have the wrong commutator";
      if (commutation_exponent(z_[i], z_[j]) || commutation_exponent(x_[i], x_[j]))
        return "images of like generators do not commute";
    }
    if (!in_x_orbit(z_[i]) || !in_x_orbit(x_[i])) return "image of qudit " + std::to_string(i) + " outside the orbit of X";
  }
  return "";
}

Eigen::MatrixXcd gate_unitary(const std::string &name) {
  auto omega = [](int k) { return eighth_root(2 * k); };
  if (name == "S") {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
    for (int j = 0; j < 4; ++j) m(j, j) = eighth_root(j * j);
    return m;
  }
  if (name == "T") {
    const cplx s = eighth_root(1);
    Eigen::MatrixXcd m(4, 4);
    m << s, 1, -s, 1, 1, s, 1, -s, -s, 1, s, 1, 1, -s, 1, s;
    return 0.5 * m;
  }
  if (name == "Z") return qudit_matrix(1, 0);
  if (name == "X") return qudit_matrix(0, 1);
  if (name == "H") {
    Eigen::MatrixXcd m(4, 4);
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) m(j, k) = 0.5 * omega(j * k);
    return m;
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(16, 16);
  if (name == "C_Z") {
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) m(4 * j + k, 4 * j + k) = omega(j * k);
    return m;
  }
  if (name == "C_X") {
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) m(4 * j + ((k + j) & 3), 4 * j + k) = 1;
    return m;
  }
  if (name == "SWAP") {
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) m(4 * k + j, 4 * j + k) = 1;
    return m;
  }
  throw std::invalid_argument("unknown gate " + name);
}

CliffordTableau tableau_from_unitary(const Eigen::MatrixXcd &u, int n) {
  if (n < 1 || n > 2) throw std::invalid_argument("tableau_from_unitary supports one or two qudits");
  const int dim = 1 << (2 * n);
  if (u.rows() != dim || u.cols() != dim) throw std::invalid_argument("unitary dimension mismatch");
  auto identify = [&](const Eigen::MatrixXcd &m) {
    for (int w = 0; w < (1 << (4 * n)); ++w) {
      PhasedPauli p(n);
      for (int q = 0; q < n; ++q) p.set(q, (w >> (4 * q)) & 3, (w >> (4 * q + 2)) & 3);
      cplx c = (dense_matrix(p).adjoint() * m).trace() / static_cast<double>(dim);
      if (std::abs(std::abs(c) - 1.0) > 1e-9) continue;
      double k = std::arg(c) / (std::numbers::pi / 4);
      long kr = std::lround(k);
      if (std::abs(k - kr) > 1e-9) break;
      p.set_phase_exp(static_cast<int>(kr));
      return p;
    }
    throw std::invalid_argument("unitary is not Clifford");
  };
  CliffordTableau t(n);
  for (int i = 0; i < n; ++i) {
    t.set_image_z(i, identify(u * dense_matrix(PhasedPauli::single(n, i, 1, 0)) * u.adjoint()));
    t.set_image_x(i, identify(u * dense_matrix(PhasedPauli::single(n, i, 0, 1)) * u.adjoint()));
  }
  return t;
}

CliffordTableau gate_tableau(const std::string &name) {
  static std::mutex mu;
  static std::map<std::string, CliffordTableau> cache;
  if (name.rfind("C_st:", 0) == 0) {
    int s = 0, t = 0;
    if (std::sscanf(name.c_str() + 5, "%d,%d", &s, &t) != 2) throw std::invalid_argument("bad C_st spec " + name);
    return controlled_st_tableau(s, t);
  }
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  const bool two = name == "C_Z" || name == "C_X" || name == "SWAP";
  CliffordTableau t = tableau_from_unitary(gate_unitary(name), two ? 2 : 1);
  cache.emplace(name, t);
  return t;
}

CliffordTableau controlled_st_tableau(int s, int t) {
  CliffordTableau out(2);
  for (int k = 0; k < (t & 3); ++k) out = out.then(gate_tableau("C_Z"), {0, 1});
  for (int k = 0; k < (s & 3); ++k) out = out.then(gate_tableau("C_X"), {0, 1});
  for (int k = 0; k < ((s * t) & 7); ++k) out = out.then(gate_tableau("S"), {0});
  return out;
}

namespace {

const CliffordTableau &generator_tableau(GateKind k) {
  static const CliffordTableau s = gate_tableau("S"), t = gate_tableau("T"), z = gate_tableau("Z"),
                               cz = gate_tableau("C_Z");
  switch (k) {
    case GateKind::S:
      return s;
    case GateKind::T:
      return t;
    case GateKind::Z:
      return z;
    case GateKind::CZ:
      return cz;
  }
  throw std::logic_error("bad gate kind");
}

CliffordTableau apply_gate(const CliffordTableau &t, const Gate &g) {
  if (g.kind == GateKind::CZ) {
    if (g.q < 0 || g.q + 1 >= t.n()) throw std::out_of_range("C_Z outside register");
    return t.then(generator_tableau(g.kind), {g.q, g.q + 1});
  }
  if (g.q < 0 || g.q >= t.n()) throw std::out_of_range("gate outside register");
  return t.then(generator_tableau(g.kind), {g.q});
}

}  // namespace

CliffordTableau evaluate(const GateWord &word, int n) {
  CliffordTableau t(n);
  for (const auto &g : word) t = apply_gate(t, g);
  return t;
}

std::string to_string(const GateWord &word) {
  std::string out;
  for (const auto &g : word) {
    if (!out.empty()) out += ' ';
    switch (g.kind) {
      case GateKind::S:
        out += "S" + std::to_string(g.q);
        break;
      case GateKind::T:
        out += "T" + std::to_string(g.q);
        break;
      case GateKind::Z:
        out += "Z" + std::to_string(g.q);
        break;
      case GateKind::CZ:
        out += "CZ" + std::to_string(g.q) + "," + std::to_string(g.q + 1);
        break;
    }
  }
  return out;
}

GateWord inverse(const GateWord &word) {
  GateWord out;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int reps = (it->kind == GateKind::S || it->kind == GateKind::T) ? 7 : 3;
    for (int k = 0; k < reps; ++k) out.push_back(*it);
  }
  return out;
}

Mat2 single_qudit_matrix(const CliffordTableau &t) {
  if (t.n() != 1) throw std::invalid_argument("single-qudit tableau expected");
  return {t.image_z(0).z(0), t.image_x(0).z(0), t.image_z(0).x(0), t.image_x(0).x(0)};
}

Mat2 display_matrix(const Mat2 &m) {
  auto signed4 = [](int v) { return v == 3 ? -1 : v; };
  return {signed4(m[2]), signed4(m[3]), signed4(m[0]), signed4(m[1])};
}

Mat2 mat2_mul(const Mat2 &a, const Mat2 &b) {
  return {(a[0] * b[0] + a[1] * b[2]) & 3, (a[0] * b[1] + a[1] * b[3]) & 3, (a[2] * b[0] + a[3] * b[2]) & 3,
          (a[2] * b[1] + a[3] * b[3]) & 3};
}

int mat2_det(const Mat2 &m) { return (m[0] * m[3] - m[1] * m[2]) & 3; }

std::vector<Mat2> enumerate_sl2z4() {
  std::vector<Mat2> out;
  for (int v = 0; v < 256; ++v) {
    Mat2 m{v & 3, (v >> 2) & 3, (v >> 4) & 3, (v >> 6) & 3};
    if (mat2_det(m) == 1) out.push_back(m);
  }
  return out;
}

std::map<Mat2, std::string> word_search() {
  static const std::map<Mat2, std::string> words = [] {
    const Mat2 ms = single_qudit_matrix(gate_tableau("S"));
    const Mat2 mt = single_qudit_matrix(gate_tableau("T"));
    std::map<Mat2, std::string> seen;
    std::deque<Mat2> queue;
    const Mat2 id{1, 0, 0, 1};
    seen[id] = "";
    queue.push_back(id);
    while (!queue.empty()) {
      Mat2 m = queue.front();
      queue.pop_front();
      for (auto [g, name] : {std::pair{ms, "S"}, std::pair{mt, "T"}}) {
        Mat2 next = mat2_mul(g, m);
        if (seen.count(next)) continue;
        seen[next] = seen[m] + name;
        queue.push_back(next);
      }
    }
    return seen;
  }();
  return words;
}

GateWord single_qudit_word(const Mat2 &m, int q) {
  static const std::map<Mat2, std::string> words = word_search();
  auto it = words.find({m[0] & 3, m[1] & 3, m[2] & 3, m[3] & 3});
  if (it == words.end()) throw std::invalid_argument("matrix is not in SL(2, Z4)");
  GateWord w;
  for (char c : it->second) w.push_back({c == 'S' ? GateKind::S : GateKind::T, q});
  return w;
}

CliffordTableau random_tableau(int n, int depth, std::mt19937_64 &rng) {
  static const char *kSingle[] = {"S", "T", "Z", "X", "H"};
  static const char *kPair[] = {"C_Z", "C_X", "SWAP"};
  CliffordTableau t(n);
  for (int k = 0; k < depth; ++k) {
    if (n > 1 && rng() % 3 == 0) {
      int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % (n - 1));
      if (b >= a) ++b;
      t = t.then(gate_tableau(kPair[rng() % 3]), {a, b});
    } else {
      t = t.then(gate_tableau(kSingle[rng() % 5]), {static_cast<int>(rng() % n)});
    }
  }
  return t;
}

PauliOrbit classify_pauli_orbit(const PhasedPauli &p) {
  bool any = false, odd = false;
  int pp = 0;
  for (size_t q = 0; q < p.size(); ++q) {
    any |= (p.z(q) | p.x(q)) != 0;
    odd |= ((p.z(q) | p.x(q)) & 1) != 0;
    pp += p.z(q) * p.x(q);
  }
  if (!any) return PauliOrbit::Identity;
  if (!odd) return PauliOrbit::Even;
  // (w^{k/2} W)^4 = (-1)^(k + sum a_i b_i)
  return ((p.phase_exp() + pp) & 1) ? PauliOrbit::OddOdd : PauliOrbit::Mixed;
}

std::string to_string(PauliOrbit o) {
  switch (o) {
    case PauliOrbit::Identity:
      return "identity";
    case PauliOrbit::Even:
      return "even";
    case PauliOrbit::OddOdd:
      return "odd-odd";
    case PauliOrbit::Mixed:
      return "mixed";
  }
  return "?";
}

}  // namespace z4k
