#pragma once

#include <utility>
#include <vector>

#include "quantakit/common.hpp"
#include "quantakit/errors.hpp"

namespace quantakit {

/// A finite complete lattice with precomputed join/meet tables.
/// Elements are addressed by index; names are only for I/O and reports.
class FiniteLattice {
 public:
  /// Builds a lattice from generating order pairs. The reflexive-transitive
  /// closure is taken first; antisymmetry and existence of all binary
  /// lubs/glbs are then checked. Finite + binary bounds imply completeness.
  static FiniteLattice from_order(std::vector<Name> elements,
                                  const std::vector<std::pair<Name, Name>>& leq_pairs);

  /// Chain 0 < 1 < ... < n-1 with the given names.
  static FiniteLattice chain(std::vector<Name> elements);

  int size() const { return static_cast<int>(elements_.size()); }
  const Name& name(int i) const { return elements_[i]; }
  const std::vector<Name>& elements() const { return elements_; }
  int index_of(const Name& n) const;         // throws UnknownName
  int find(const Name& n) const;             // -1 when absent

  bool leq(int a, int b) const { return leq_[a][b]; }
  int join(int a, int b) const { return join_tab_[a][b]; }
  int meet(int a, int b) const { return meet_tab_[a][b]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  int join_of(const std::vector<int>& xs) const;
  int meet_of(const std::vector<int>& xs) const;

  bool operator==(const FiniteLattice& o) const {
    return elements_ == o.elements_ && leq_ == o.leq_;
  }

 private:
  std::vector<Name> elements_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<int>> join_tab_;
  std::vector<std::vector<int>> meet_tab_;
  int bottom_ = 0;
  int top_ = 0;
};

}  // namespace quantakit
