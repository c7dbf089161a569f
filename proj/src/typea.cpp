#include "braidlab/typea.hpp"

#include <algorithm>
#include <numeric>

#include "braidlab/errors.hpp"

namespace braidlab {

std::vector<uint8_t> one_line_of(const WeylGroup& W, int elem) {
  if (W.roots().type() != CartanType::A)
    throw domain_error("one_line_of: root system is not of type A");
  const int n = W.rank() + 1;
  std::vector<uint8_t> p(n);
  std::iota(p.begin(), p.end(), uint8_t{0});
  // Build the one-line vector letter by letter; appending s swaps the
  // entries at positions s, s+1 (right multiplication).
  for (uint8_t s : W.word(elem)) std::swap(p[s], p[s + 1]);
  return p;
}

int element_of_one_line(const WeylGroup& W, const std::vector<uint8_t>& p) {
  if (W.roots().type() != CartanType::A)
    throw domain_error("element_of_one_line: root system is not of type A");
  const int n = W.rank() + 1;
  if (static_cast<int>(p.size()) != n)
    throw domain_error("element_of_one_line: size mismatch");
  // Bubble-sort p back to the identity, recording the swaps.
  std::vector<uint8_t> q = p;
  std::vector<uint8_t> word;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (q[i] > q[i + 1]) {
        std::swap(q[i], q[i + 1]);
        word.push_back(uint8_t(i));
        changed = true;
      }
    }
  }
  // id = p * s_a * s_b * ..., so p is the recorded word reversed.
  std::reverse(word.begin(), word.end());
  return W.from_word(word);
}

std::vector<int> cycle_type(const std::vector<uint8_t>& p) {
  const int n = static_cast<int>(p.size());
  std::vector<bool> seen(n, false);
  std::vector<int> cyc;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    cyc.push_back(len);
  }
  std::sort(cyc.rbegin(), cyc.rend());
  return cyc;
}

int cycle_count(const std::vector<uint8_t>& p) {
  return static_cast<int>(cycle_type(p).size());
}

}  // namespace braidlab
