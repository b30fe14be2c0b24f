#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "i2g/molgraph.hpp"

namespace i2g {

// Errors carry the byte offset of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownToken : public ParseError {
 public:
  using ParseError::ParseError;
};

class UnbalancedRingClosure : public ParseError {
 public:
  using ParseError::ParseError;
};

class UnsupportedFeature : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Extended-SMILES dialect: standard atoms, brackets, bond symbols -=#:,
// branches, ring closures (digits and %nn), '.' separators. Brackets carry
// either an element with optional charge ([N+], [O-2]) or a verbatim
// superatom / pseudoatom token ([CF3], [t-Bu], [R1]). No stereo, no
// hydrogen counts, no isotopes.
MolGraph parse_smiles(const std::string& s);

// Serialization under an explicit node priority order (must be a permutation
// of 0..n-1; lower value = emitted earlier within its component). Exposed
// mainly so canonicalization and its tests can share it.
std::string write_smiles(const MolGraph& g, const std::vector<int>& priorities);

// Canonical string together with the emission position of every node (the
// permutation reported by canonical_ranks).
std::pair<std::string, std::vector<int>> canonical_serialization(const MolGraph& g);

// Deterministic, permutation-invariant serialization; round-trips through
// parse_smiles to an isomorphic graph.
std::string to_canonical_smiles(const MolGraph& g);

}  // namespace i2g
