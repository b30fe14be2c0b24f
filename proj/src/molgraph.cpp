#include "i2g/molgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <tuple>

#include "i2g/rng.hpp"
#include "i2g/smiles.hpp"

namespace i2g {

bool MolGraph::connected() const {
  if (num_atoms() <= 1) return true;
  return static_cast<int>(components().front().size()) == num_atoms();
}

std::vector<std::vector<int>> MolGraph::components() const {
  const auto& adj = adjacency();
  std::vector<std::vector<int>> out;
  std::vector<char> seen(nodes_.size(), 0);
  for (int s = 0; s < num_atoms(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (auto [w, t] : adj[v]) {
        (void)t;
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

MolGraph MolGraph::permuted(const std::vector<int>& order) const {
  if (static_cast<int>(order.size()) != num_atoms())
    throw GraphError("permutation size mismatch");
  std::vector<int> inverse(order.size());
  for (int i = 0; i < num_atoms(); ++i) inverse[order[i]] = i;
  MolGraph out;
  for (int i = 0; i < num_atoms(); ++i) out.add_atom(nodes_[order[i]]);
  for (const auto& e : edges_) out.add_bond(inverse[e.u], inverse[e.v], e.type);
  return out;
}

namespace {

// One round of neighborhood refinement: the new code of a node is determined
// by its old code and the sorted multiset of (bond type, neighbor code)
// pairs. Codes are re-densified so they stay small integers.
std::vector<int> refine_codes(const MolGraph& g, std::vector<int> codes) {
  const auto& adj = g.adjacency();
  const int n = g.num_atoms();
  int count = 0;
  {
    std::vector<int> sorted = codes;
    std::sort(sorted.begin(), sorted.end());
    count = static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }
  while (true) {
    using Sig = std::pair<int, std::vector<std::pair<int, int>>>;
    std::vector<Sig> sigs(n);
    for (int i = 0; i < n; ++i) {
      std::vector<std::pair<int, int>> nb;
      nb.reserve(adj[i].size());
      for (auto [j, t] : adj[i]) nb.push_back({bond_order_code(t), codes[j]});
      std::sort(nb.begin(), nb.end());
      sigs[i] = {codes[i], std::move(nb)};
    }
    std::map<Sig, int> dense;
    for (const auto& s : sigs) dense.emplace(s, 0);
    int next = 0;
    for (auto& [sig, code] : dense) code = next++;
    if (next == count) break;  // 1-WL fixpoint
    count = next;
    for (int i = 0; i < n; ++i) codes[i] = dense[sigs[i]];
    if (count == n) break;
  }
  return codes;
}

std::vector<int> initial_codes(const MolGraph& g) {
  const int n = g.num_atoms();
  using Key = std::tuple<std::string, int, int>;
  std::vector<Key> keys(n);
  for (int i = 0; i < n; ++i)
    keys[i] = {g.atom(i).label, g.atom(i).charge, g.degree(i)};
  std::map<Key, int> dense;
  for (const auto& k : keys) dense.emplace(k, 0);
  int next = 0;
  for (auto& [k, code] : dense) code = next++;
  std::vector<int> codes(n);
  for (int i = 0; i < n; ++i) codes[i] = dense[keys[i]];
  return codes;
}

std::vector<int> ranks_from_codes(const std::vector<int>& codes) {
  // codes are distinct here; rank = position in sorted order.
  const int n = static_cast<int>(codes.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return codes[a] < codes[b]; });
  std::vector<int> ranks(n);
  for (int r = 0; r < n; ++r) ranks[idx[r]] = r;
  return ranks;
}

bool all_distinct(const std::vector<int>& codes, int n) {
  std::vector<int> sorted = codes;
  std::sort(sorted.begin(), sorted.end());
  return std::unique(sorted.begin(), sorted.end()) - sorted.begin() == n;
}

// Individualization-refinement. When refinement leaves ties, every member of
// the smallest tied class is tried in turn; the candidate whose fully
// resolved ranking serializes to the lexicographically smallest string wins.
// Automorphic candidates produce identical strings, so the choice is
// permutation invariant.
std::vector<int> break_ties(const MolGraph& g, const std::vector<int>& codes) {
  const int n = g.num_atoms();
  if (all_distinct(codes, n)) return ranks_from_codes(codes);

  int target_code = -1;
  {
    std::vector<int> count(n + 1, 0);
    for (int c : codes) count[c]++;
    for (int c = 0; c <= n; ++c)
      if (count[c] > 1) { target_code = c; break; }
  }

  std::string best_str;
  std::vector<int> best_ranks;
  for (int v = 0; v < n; ++v) {
    if (codes[v] != target_code) continue;
    std::vector<int> split(n);
    for (int i = 0; i < n; ++i) split[i] = 2 * codes[i] + 1;
    split[v] = 2 * codes[v];  // pull v ahead of its class
    std::vector<int> ranks = break_ties(g, refine_codes(g, split));
    std::string s = write_smiles(g, ranks);
    if (best_str.empty() || s < best_str) {
      best_str = std::move(s);
      best_ranks = std::move(ranks);
    }
  }
  return best_ranks;
}

}  // namespace

std::vector<int> canonical_priorities(const MolGraph& g) {
  if (g.num_atoms() == 0) return {};
  return break_ties(g, refine_codes(g, initial_codes(g)));
}

std::vector<int> canonical_ranks(const MolGraph& g) {
  return canonical_serialization(g).second;
}

bool graphs_equal(const MolGraph& a, const MolGraph& b) {
  if (a.num_atoms() != b.num_atoms() || a.num_bonds() != b.num_bonds()) return false;
  return to_canonical_smiles(a) == to_canonical_smiles(b);
}

MolGraph substitute_superatoms(const MolGraph& g, std::uint64_t rng_seed, double prob,
                               const std::vector<std::string>& lexicon) {
  if (lexicon.empty()) throw GraphError("superatom lexicon is empty");
  if (prob < 0.0 || prob > 1.0) throw GraphError("probability outside [0,1]");
  Rng rng(rng_seed);
  MolGraph out = g;
  for (int i = 0; i < g.num_atoms(); ++i) {
    // Two draws per candidate regardless of outcome keep the stream layout
    // fixed, so replacement decisions are independent across nodes.
    if (g.atom(i).label != "C" || g.degree(i) != 1) continue;
    double u = rng.uniform();
    std::uint64_t pick = rng.below(lexicon.size());
    if (u < prob) out.atom(i).label = lexicon[pick];
  }
  return out;
}

}  // namespace i2g
