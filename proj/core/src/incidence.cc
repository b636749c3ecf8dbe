#include "z4k/incidence.h"

namespace z4k {

Incidence::Incidence(size_t num_qudits, const std::vector<SparseWord> &words)
    : num_words_(words.size()), offset_(num_qudits + 1, 0) {
  for (const auto &w : words)
    for (const auto &op : w) ++offset_[op.q + 1];
  for (size_t q = 0; q < num_qudits; ++q) offset_[q + 1] += offset_[q];
  hits_.resize(offset_[num_qudits]);
  std::vector<uint32_t> fill(offset_.begin(), offset_.end() - 1);
  for (size_t k = 0; k < words.size(); ++k) {
    for (const auto &op : words[k]) hits_[fill[op.q]++] = {static_cast<int>(k), op.a, op.b};
  }
}

Incidence check_incidence(const KagomeCode &code) {
  std::vector<SparseWord> words;
  for (const auto &c : code.checks()) words.push_back(c.word);
  return Incidence(code.num_qudits(), words);
}

Incidence logical_incidence(const KagomeCode &code) {
  std::vector<SparseWord> words;
  for (const auto &l : code.logicals()) words.push_back(to_sparse(l.op));
  return Incidence(code.num_qudits(), words);
}

std::vector<int> active_qudits(const KagomeCode &code) {
  std::vector<int> out;
  for (int q = 0; q < code.num_qudits(); ++q)
    if (code.active(q)) out.push_back(q);
  return out;
}

}  // namespace z4k
