#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "i2g/molgraph.hpp"

namespace i2g {

class LengthMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Fingerprint {
  std::vector<std::uint64_t> words;
  int nbits = 0;
  int radius = 0;

  bool test(int bit) const { return (words[bit >> 6] >> (bit & 63)) & 1; }
  void set(int bit) { words[bit >> 6] |= std::uint64_t{1} << (bit & 63); }
  int popcount() const;

  bool operator==(const Fingerprint& o) const {
    return nbits == o.nbits && words == o.words;
  }
};

// Initial atom invariant used by both the fingerprint and its test oracle:
// hash of (label, charge, degree).
std::uint64_t atom_invariant(const MolGraph& g, int i);

// Circular (Morgan-style) environment hashes up to `radius`, folded mod
// nbits. nbits must be a positive power of two.
Fingerprint morgan_fingerprint(const MolGraph& g, int radius = 2, int nbits = 2048);

// |a AND b| / |a OR b|; 1.0 when both are empty.
double tanimoto(const Fingerprint& a, const Fingerprint& b);

}  // namespace i2g
