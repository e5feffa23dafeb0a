#include "quantakit/lattice.hpp"

#include <algorithm>
#include <set>

namespace quantakit {

const char* to_string(ErrKind k) {
  switch (k) {
    case ErrKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrKind::NotALattice: return "NotALattice";
    case ErrKind::ObjectMismatch: return "ObjectMismatch";
    case ErrKind::BoundaryMismatch: return "BoundaryMismatch";
    case ErrKind::NotASquare: return "NotASquare";
    case ErrKind::NotContinuous: return "NotContinuous";
    case ErrKind::FamilyInvalid: return "FamilyInvalid";
    case ErrKind::SizeGuardExceeded: return "SizeGuardExceeded";
    case ErrKind::UnknownName: return "UnknownName";
    case ErrKind::ParseError: return "ParseError";
    case ErrKind::ValidationError: return "ValidationError";
    case ErrKind::UnresolvedReference: return "UnresolvedReference";
    case ErrKind::CharacterizationMismatch: return "CharacterizationMismatch";
    case ErrKind::ContinuityFailure: return "ContinuityFailure";
    case ErrKind::Internal: return "Internal";
  }
  return "Error";
}

int FiniteLattice::index_of(const Name& n) const {
  int i = find(n);
  if (i < 0) throw Error(ErrKind::UnknownName, "lattice element '" + n + "'");
  return i;
}

int FiniteLattice::find(const Name& n) const {
  for (int i = 0; i < size(); ++i)
    if (elements_[i] == n) return i;
  return -1;
}

int FiniteLattice::join_of(const std::vector<int>& xs) const {
  int acc = bottom_;
  for (int x : xs) acc = join_tab_[acc][x];
  return acc;
}

int FiniteLattice::meet_of(const std::vector<int>& xs) const {
  int acc = top_;
  for (int x : xs) acc = meet_tab_[acc][x];
  return acc;
}

FiniteLattice FiniteLattice::from_order(std::vector<Name> elements,
                                        const std::vector<std::pair<Name, Name>>& leq_pairs) {
  if (elements.empty())
    throw Error(ErrKind::NotALattice, "a complete lattice is nonempty");
  {
    std::set<Name> seen;
    for (const auto& e : elements)
      if (!seen.insert(e).second)
        throw Error(ErrKind::ParseError, "duplicate lattice element '" + e + "'");
  }

  FiniteLattice L;
  L.elements_ = std::move(elements);
  const int n = L.size();
  L.leq_.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) L.leq_[i][i] = true;
  for (const auto& [a, b] : leq_pairs) L.leq_[L.index_of(a)][L.index_of(b)] = true;

  // reflexive-transitive closure
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (L.leq_[i][k])
        for (int j = 0; j < n; ++j)
          if (L.leq_[k][j]) L.leq_[i][j] = true;

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (L.leq_[i][j] && L.leq_[j][i])
        throw Error(ErrKind::NotAPartialOrder,
                    "cycle between '" + L.elements_[i] + "' and '" + L.elements_[j] + "'");

  L.join_tab_.assign(n, std::vector<int>(n, -1));
  L.meet_tab_.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int lub = -1, glb = -1;
      for (int c = 0; c < n; ++c) {
        if (L.leq_[a][c] && L.leq_[b][c] && (lub < 0 || L.leq_[c][lub])) lub = c;
        if (L.leq_[c][a] && L.leq_[c][b] && (glb < 0 || L.leq_[glb][c])) glb = c;
      }
      // a candidate found by the scan is least/greatest only if it is
      // comparable with every other bound; verify
      if (lub >= 0)
        for (int c = 0; c < n; ++c)
          if (L.leq_[a][c] && L.leq_[b][c] && !L.leq_[lub][c]) lub = -1;
      if (glb >= 0)
        for (int c = 0; c < n; ++c)
          if (L.leq_[c][a] && L.leq_[c][b] && !L.leq_[c][glb]) glb = -1;
      if (lub < 0)
        throw Error(ErrKind::NotALattice, "no least upper bound for ('" + L.elements_[a] +
                                              "','" + L.elements_[b] + "')");
      if (glb < 0)
        throw Error(ErrKind::NotALattice, "no greatest lower bound for ('" + L.elements_[a] +
                                              "','" + L.elements_[b] + "')");
      L.join_tab_[a][b] = lub;
      L.meet_tab_[a][b] = glb;
    }
  }

  // fold to the global bounds; they exist in any finite lattice
  int bot = 0, top = 0;
  for (int i = 1; i < n; ++i) {
    bot = L.meet_tab_[bot][i];
    top = L.join_tab_[top][i];
  }
  L.bottom_ = bot;
  L.top_ = top;
  return L;
}

FiniteLattice FiniteLattice::chain(std::vector<Name> elements) {
  std::vector<std::pair<Name, Name>> pairs;
  for (size_t i = 0; i + 1 < elements.size(); ++i) pairs.emplace_back(elements[i], elements[i + 1]);
  return from_order(std::move(elements), pairs);
}

}  // namespace quantakit
