#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "braidlab/root_system.hpp"

namespace braidlab {

/// Diagram automorphism: a permutation of the simple roots preserving
/// the Cartan matrix.
struct Twist {
  std::string name;              // "id", "flip", "rot3", ...
  std::vector<int> simple_perm;  // image of each simple index
  int order = 1;

  bool is_identity() const;
};

Twist identity_twist(const RootSystem& rs);
Twist flip_twist(const RootSystem& rs);      // type A diagram reversal
Twist triality_twist(const RootSystem& rs);  // D4 outer-node 3-cycle
Twist make_twist(const RootSystem& rs, std::vector<int> perm, std::string name);
Twist twist_by_name(const RootSystem& rs, const std::string& name);
Twist twist_power(const RootSystem& rs, const Twist& t, int e);
Twist inverse_twist(const RootSystem& rs, const Twist& t);

/// Full element table of a finite Weyl group.
///
/// Elements are identified by dense ids, ordered by (length, shortlex
/// canonical word); id 0 is the identity.  An element acts on root
/// indices of the underlying RootSystem; the word s1 s2 applies s2
/// first ((a.b)(x) = a(b(x))).
class WeylGroup {
 public:
  explicit WeylGroup(RootSystem rs);

  const RootSystem& roots() const { return rs_; }
  int rank() const { return rs_.rank(); }
  int size() const { return int(words_.size()); }

  int identity() const { return 0; }
  int generator(int s) const { return gen_id_[s]; }

  int multiply(int a, int b) const;
  int inverse(int a) const { return inv_[a]; }
  int length(int a) const { return len_[a]; }
  const std::vector<uint8_t>& word(int a) const { return words_[a]; }
  std::string word_string(int a) const;

  int act_root(int a, int root_idx) const { return perm_at(a, root_idx); }
  int from_word(std::span<const uint8_t> letters) const;
  int from_word(const std::vector<int>& letters) const;

  uint32_t left_descents(int a) const { return ldesc_[a]; }
  uint32_t right_descents(int a) const { return rdesc_[a]; }

  // Positive-root indices alpha with a^{-1}(alpha) negative.
  std::vector<int> inversion_set(int a) const;

  int longest_element(uint32_t I_mask) const;
  int longest_element() const { return longest_element((1u << rank()) - 1); }

  bool in_parabolic(int a, uint32_t I_mask) const;
  bool is_min_rep(uint32_t I_mask, int w, uint32_t J_mask) const;
  int min_double_coset_rep(uint32_t I_mask, int w, uint32_t J_mask) const;

  int element_order(int a) const;

  // Root-index permutation induced by a twist.
  std::vector<int> twist_root_perm(const Twist& t) const;
  // delta as a group automorphism on element ids.
  int apply_twist(const Twist& t, int a) const;

 private:
  int perm_at(int a, int i) const { return perms_[size_t(a) * nroots_ + i]; }
  int lookup(const std::vector<uint16_t>& perm) const;

  RootSystem rs_;
  int nroots_ = 0;
  std::vector<uint16_t> perms_;  // flattened |W| x nroots_
  std::vector<std::vector<uint8_t>> words_;
  std::vector<int> len_;
  std::vector<int> inv_;
  std::vector<uint32_t> ldesc_, rdesc_;
  std::vector<int> rmul_;  // id * generator table, |W| x rank
  std::vector<int> gen_id_;
  std::map<std::vector<uint16_t>, int> index_;
};

/// delta-conjugacy class of W: closed under x -> delta(x) m x^{-1}.
struct TwistedClass {
  int id = 0;
  Twist twist;
  std::vector<int> members;  // sorted by element id (= length, shortlex)
  bool is_elliptic = false;
  int min_length = 0;

  int representative() const { return members.front(); }
};

std::vector<TwistedClass> twisted_conjugacy_classes(const WeylGroup& W, const Twist& t);

// Order of delta*w in the twisted group <delta> x| W.
int twisted_element_order(const WeylGroup& W, const Twist& t, int w);

}  // namespace braidlab
