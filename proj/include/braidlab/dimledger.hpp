#pragma once

#include <memory>
#include <string>
#include <vector>

#include "braidlab/goodrep.hpp"
#include "braidlab/weyl.hpp"

namespace braidlab {

// Partition of n, parts weakly decreasing.
using Partition = std::vector<int>;

std::vector<Partition> partitions_of(int n);
Partition conjugate_partition(const Partition& lam);
std::string partition_string(const Partition& lam);

// Dimension of the conjugation orbit of a unipotent element of GL_n
// with Jordan type lam: n^2 - sum of squared parts of the conjugate.
int unipotent_class_dim(int n, const Partition& lam);

struct DimensionRecord {
  int class_id = 0;
  Partition lambda;         // cycle type of the class, = paired Jordan type
  int w = 0;                // canonical certified representative
  int length = 0;           // l(w)
  int num_fixed_roots = 0;  // |R^w|
  int torus_dim = 0;        // dim T^w = number of cycles
  int orbit_dim = 0;        // dim O_lambda
  bool identity_holds = false;
};

/// Per-class dimension bookkeeping for GL_n: pairs each conjugacy class
/// of W(A_{n-1}) = S_n with the unipotent class of the same partition
/// and checks dim O + l(w) + |R^w| = n^2 - dim T^w on a certified
/// representative.
class DimLedger {
 public:
  explicit DimLedger(int n, int d_max = 0);

  int n() const { return n_; }
  const WeylGroup& weyl() const { return *W_; }
  const std::vector<DimensionRecord>& records() const { return records_; }

  bool all_identities_hold() const;
  // Each partition of n is the cycle type of exactly one class.
  bool pairing_unique() const;

  std::string to_csv() const;

 private:
  int n_;
  std::unique_ptr<WeylGroup> W_;
  std::vector<DimensionRecord> records_;
};

}  // namespace braidlab
