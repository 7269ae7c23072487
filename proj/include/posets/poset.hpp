#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "posets/bitset.hpp"
#include "posets/errors.hpp"

namespace posets {

// Vertex name: non-empty, printable, no whitespace. Comparison between
// vertices of one poset goes by canonical position, never by string value.
using Label = std::string;

bool is_valid_label(const Label& l);

struct CoverPair {
  Label lower;
  Label upper;
  friend bool operator==(const CoverPair&, const CoverPair&) = default;
};

// Finite poset: vertices in a fixed canonical order (first appearance in the
// input) plus the full order relation, reflexive pairs included. Immutable
// after construction.
class Poset {
public:
  Poset() = default;  // the empty poset

  // Reflexive-transitive closure of `pairs` (a pair (a,b) declares a <= b;
  // (a,a) just declares the vertex). Canonical vertex order: first appearance
  // scanning pairs left to right, then extra_vertices. Throws CycleError when
  // the closure is not antisymmetric.
  static Poset from_pairs(std::span<const std::pair<Label, Label>> pairs,
                          std::span<const Label> extra_vertices = {});

  // Same closure, but with the vertex sequence given explicitly. Every label
  // in `pairs` must occur in `vertices`.
  static Poset from_relation(std::vector<Label> vertices,
                             std::span<const std::pair<Label, Label>> pairs);

  // Adopts an already reflexive-transitive-antisymmetric relation, one Bitset
  // row per vertex (row[v].test(w) iff v <= w). Reflexivity and antisymmetry
  // are always verified, transitivity only in debug builds.
  static Poset from_closed_relation(std::vector<Label> vertices,
                                    std::vector<Bitset> rows);

  int size() const { return static_cast<int>(labels_.size()); }
  bool empty() const { return labels_.empty(); }

  const std::vector<Label>& elements() const { return labels_; }
  const Label& label(int v) const { return labels_[v]; }
  std::optional<int> find(const Label& l) const;
  int index_of(const Label& l) const;  // throws std::out_of_range

  bool leq(int a, int b) const { return up_[a].test(b); }
  bool leq(const Label& a, const Label& b) const;
  bool strictly_less(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  const Bitset& up_set(int v) const { return up_[v]; }  // {w : v <= w}
  Bitset down_set(int v) const;                         // {w : w <= v}
  std::vector<Bitset> down_sets() const;

  // Full relation, sorted by (canonical index of first, of second).
  std::vector<std::pair<Label, Label>> relation() const;
  std::size_t relation_size() const;

  // Transitive reduction minus reflexive pairs, canonically sorted.
  std::vector<CoverPair> covering() const;
  std::vector<std::pair<int, int>> covering_indices() const;

  std::vector<int> minimal_indices() const;
  std::vector<int> maximal_indices() const;

  // Longest-chain height per vertex (minimal elements at 1); empty for the
  // empty poset.
  std::vector<int> heights() const;
  int height() const;  // longest chain overall, 0 when empty

  bool is_chain() const;
  // Every principal down-set is a chain.
  bool is_forest() const;

  friend bool operator==(const Poset&, const Poset&) = default;

private:
  std::vector<Label> labels_;
  std::vector<Bitset> up_;  // up_[v] = {w : v <= w}, closed, reflexive
};

// Generators. chain/antichain label vertices "1".."n"; boolean_algebra labels
// subsets as bitstrings ("-" for the one element of boolean_algebra(0)).
Poset chain(int n);
Poset antichain(int n);
Poset boolean_algebra(int n);

// Bottom "r", top "t", and i pairwise-incomparable middle elements "a","b",...
Poset m_poset(int i);

// Order-isomorphism test; backtracking over degree/height-refined vertex
// classes.
bool are_isomorphic(const Poset& p, const Poset& q);

}  // namespace posets
