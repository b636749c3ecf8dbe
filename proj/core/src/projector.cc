#include "z4k/projector.h"

#include <cmath>
#include <stdexcept>

namespace z4k {

PauliSum::PauliSum(const PhasedPauli &term) { add(term); }

void PauliSum::add(const PhasedPauli &term, const Cyclo8 &coeff) {
  PhasedPauli key = term;
  key.set_phase_exp(0);
  Cyclo8 c = coeff.rotated(term.phase_exp());
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(std::move(key), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PauliSum PauliSum::operator*(const PauliSum &rhs) const {
  PauliSum out;
  for (const auto &[w1, c1] : terms_) {
    for (const auto &[w2, c2] : rhs.terms_) {
      out.add(w1 * w2, c1 * c2);
    }
  }
  return out;
}

Cyclo8 PauliSum::coefficient(const PhasedPauli &word) const {
  PhasedPauli key = word;
  key.set_phase_exp(0);
  auto it = terms_.find(key);
  return it == terms_.end() ? Cyclo8() : it->second.rotated(-word.phase_exp());
}

PauliSum scaled_projector(const PhasedPauli &a, int k) {
  if (!a.pow(4).is_identity()) {
    throw std::invalid_argument("projector operator must satisfy A^4 = 1: " + a.sparse_str());
  }
  PauliSum s;
  PhasedPauli am(a.size());
  for (int m = 0; m < 4; ++m) {
    s.add(am, Cyclo8::root(-2 * k * m));
    am *= a;
  }
  return s;
}

std::vector<SectorPhase> projector_sandwich(const std::vector<std::pair<PhasedPauli, int>> &seq,
                                            const PhasedPauli &gamma) {
  if (seq.empty()) throw std::invalid_argument("empty projector sequence");
  const PhasedPauli &first = seq.front().first;
  const PhasedPauli &last = seq.back().first;
  if (commutation_exponent(gamma, first) != 0 || commutation_exponent(gamma, last) != 0) {
    throw std::invalid_argument("reference operator does not commute with the boundary projectors");
  }
  PauliSum o(PhasedPauli(gamma.size()));
  for (const auto &[a, k] : seq) o = o * scaled_projector(a, k);
  PauliSum boundary = scaled_projector(last, seq.back().second);

  std::vector<SectorPhase> out;
  const double scale_o = std::pow(4.0, -static_cast<double>(seq.size()) - 1);
  const double scale_t = std::pow(4.0, -2.0);
  for (int g = 0; g < 4; ++g) {
    PauliSum pg = scaled_projector(gamma, g);
    PauliSum og = o * pg;
    PauliSum tg = boundary * pg;
    SectorPhase sp;
    sp.g = g;
    if (og.is_zero() || tg.is_zero()) {
      sp.annihilated = true;
      out.push_back(sp);
      continue;
    }
    // Pick a pivot word of the target and check og = lambda * tg termwise.
    const auto &[pivot, tpiv] = *tg.terms().begin();
    Cyclo8 opiv = og.coefficient(pivot);
    if (opiv.is_zero() || og.num_terms() != tg.num_terms()) {
      throw std::runtime_error("sector " + std::to_string(g) + " is not proportional to the boundary projector");
    }
    for (const auto &[w, tc] : tg.terms()) {
      if (og.coefficient(w) * tpiv != opiv * tc) {
        throw std::runtime_error("sector " + std::to_string(g) + " is not proportional to the boundary projector");
      }
    }
    auto ph = ratio_phase(opiv, tpiv);
    if (!ph) throw std::runtime_error("sector factor is not an eighth root of unity times a positive real");
    sp.phase_exp = *ph;
    sp.magnitude = std::abs(opiv.to_complex()) * scale_o / (std::abs(tpiv.to_complex()) * scale_t);
    out.push_back(sp);
  }
  return out;
}

}  // namespace z4k
