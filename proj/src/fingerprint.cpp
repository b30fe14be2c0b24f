#include "i2g/fingerprint.hpp"

#include <algorithm>
#include <bit>

#include "i2g/hash.hpp"

namespace i2g {

int Fingerprint::popcount() const {
  int n = 0;
  for (auto w : words) n += std::popcount(w);
  return n;
}

std::uint64_t atom_invariant(const MolGraph& g, int i) {
  std::uint64_t h = hash_string(g.atom(i).label);
  h = hash_combine(h, static_cast<std::uint64_t>(g.atom(i).charge + 16));
  h = hash_combine(h, static_cast<std::uint64_t>(g.degree(i)));
  return h;
}

Fingerprint morgan_fingerprint(const MolGraph& g, int radius, int nbits) {
  if (radius < 0) throw LengthMismatch("radius must be >= 0");
  if (nbits <= 0 || (nbits & (nbits - 1)) != 0)
    throw LengthMismatch("nbits must be a positive power of two");

  Fingerprint fp;
  fp.nbits = nbits;
  fp.radius = radius;
  fp.words.assign((nbits + 63) / 64, 0);

  const int n = g.num_atoms();
  const auto& adj = g.adjacency();
  std::vector<std::uint64_t> inv(n);
  for (int i = 0; i < n; ++i) inv[i] = atom_invariant(g, i);

  for (int r = 0; r <= radius; ++r) {
    for (int i = 0; i < n; ++i)
      fp.set(static_cast<int>(inv[i] & static_cast<std::uint64_t>(nbits - 1)));
    if (r == radius) break;
    std::vector<std::uint64_t> next(n);
    for (int i = 0; i < n; ++i) {
      std::vector<std::pair<int, std::uint64_t>> nb;
      nb.reserve(adj[i].size());
      for (auto [j, t] : adj[i]) nb.push_back({bond_order_code(t), inv[j]});
      std::sort(nb.begin(), nb.end());
      std::uint64_t h = inv[i];
      for (auto& [bond, code] : nb) {
        h = hash_combine(h, static_cast<std::uint64_t>(bond));
        h = hash_combine(h, code);
      }
      next[i] = h;
    }
    inv = std::move(next);
  }
  return fp;
}

double tanimoto(const Fingerprint& a, const Fingerprint& b) {
  if (a.nbits != b.nbits) throw LengthMismatch("fingerprint length mismatch");
  int inter = 0, uni = 0;
  for (std::size_t i = 0; i < a.words.size(); ++i) {
    inter += std::popcount(a.words[i] & b.words[i]);
    uni += std::popcount(a.words[i] | b.words[i]);
  }
  if (uni == 0) return 1.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace i2g
