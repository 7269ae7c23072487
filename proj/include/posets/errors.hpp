#pragma once

#include <stdexcept>
#include <string>

namespace posets {

// Antisymmetry violation: the closure of the input relation contains a
// cycle through distinct elements.
class CycleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An operation restricted to forests was given a poset with a non-chain
// principal down-set.
class NotAForestError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A set partition whose block digraph is cyclic was used where a regular
// partition is required.
class NotRegularError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A partition family failed the lattice axioms (missing bottom/top or a
// pair without meet/join).
class NotALatticeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An enumeration was refused because the search space exceeds the
// configured size guard.
class GuardExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed poset text input.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace posets
