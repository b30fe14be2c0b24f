#include "i2g/smiles.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <tuple>

namespace i2g {

namespace {

constexpr std::array<std::string_view, 10> kOrganicSubset = {
    "B", "C", "N", "O", "P", "S", "F", "Cl", "Br", "I"};

bool in_organic_subset(const std::string& label) {
  return std::find(kOrganicSubset.begin(), kOrganicSubset.end(), label) !=
         kOrganicSubset.end();
}

const std::set<std::string_view>& element_symbols() {
  static const std::set<std::string_view> kSymbols = {
      "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne", "Na", "Mg",
      "Al", "Si", "P",  "S",  "Cl", "Ar", "K",  "Ca", "Sc", "Ti", "V",  "Cr",
      "Mn", "Fe", "Co", "Ni", "Cu", "Zn", "Ga", "Ge", "As", "Se", "Br", "Kr",
      "Rb", "Sr", "Y",  "Zr", "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag", "Cd",
      "In", "Sn", "Sb", "Te", "I",  "Xe", "Cs", "Ba", "La", "Ce", "Pr", "Nd",
      "Pm", "Sm", "Eu", "Gd", "Tb", "Dy", "Ho", "Er", "Tm", "Yb", "Lu", "Hf",
      "Ta", "W",  "Re", "Os", "Ir", "Pt", "Au", "Hg", "Tl", "Pb", "Bi", "Po",
      "At", "Rn", "Fr", "Ra", "Ac", "Th", "Pa", "U",  "Np", "Pu", "Am", "Cm",
      "Bk", "Cf", "Es", "Fm", "Md", "No", "Lr", "Rf", "Db", "Sg", "Bh", "Hs",
      "Mt", "Ds", "Rg", "Cn", "Nh", "Fl", "Mc", "Lv", "Ts", "Og"};
  return kSymbols;
}

char bond_symbol(BondType t) {
  switch (t) {
    case BondType::Single: return '-';
    case BondType::Double: return '=';
    case BondType::Triple: return '#';
    case BondType::Aromatic: return ':';
  }
  return '-';
}

void append_bond(std::string& out, BondType t) {
  if (t != BondType::Single) out.push_back(bond_symbol(t));
}

void append_ring_digit(std::string& out, int digit) {
  if (digit < 10) {
    out.push_back(static_cast<char>('0' + digit));
  } else {
    out.push_back('%');
    out.push_back(static_cast<char>('0' + digit / 10));
    out.push_back(static_cast<char>('0' + digit % 10));
  }
}

std::string atom_token(const AtomNode& a) {
  if (a.charge == 0 && in_organic_subset(a.label)) return a.label;
  std::string t = "[" + a.label;
  if (a.charge != 0) {
    t.push_back(a.charge > 0 ? '+' : '-');
    int mag = std::abs(a.charge);
    if (mag > 1) t += std::to_string(mag);
  }
  t.push_back(']');
  return t;
}

struct EdgeKey {
  int a, b;
  EdgeKey(int u, int v) : a(std::min(u, v)), b(std::max(u, v)) {}
  bool operator<(const EdgeKey& o) const { return std::tie(a, b) < std::tie(o.a, o.b); }
};

// Serializes one connected component rooted at the minimum-rank node. Ring
// bonds (DFS back edges) get closure numbers; the bond symbol of a non-single
// ring bond is written before the number at both occurrences.
class ComponentWriter {
 public:
  ComponentWriter(const MolGraph& g, const std::vector<int>& ranks)
      : g_(g), ranks_(ranks) {}

  std::string run(int root) {
    find_ring_bonds(root);
    out_.clear();
    order_.clear();
    emit(root, -1);
    return out_;
  }

  const std::vector<int>& emission_order() const { return order_; }

 private:
  std::vector<std::pair<int, BondType>> sorted_neighbors(int v) const {
    auto nb = g_.adjacency()[v];
    std::sort(nb.begin(), nb.end(), [&](const auto& x, const auto& y) {
      return ranks_[x.first] < ranks_[y.first];
    });
    return nb;
  }

  void find_ring_bonds(int root) {
    std::vector<char> seen(g_.num_atoms(), 0);
    std::vector<std::pair<int, int>> stack{{root, -1}};
    while (!stack.empty()) {
      auto [v, parent] = stack.back();
      stack.pop_back();
      if (seen[v]) continue;
      seen[v] = 1;
      auto nb = sorted_neighbors(v);
      // push in reverse so lowest-rank neighbor is visited first
      for (auto it = nb.rbegin(); it != nb.rend(); ++it) {
        auto [w, t] = *it;
        if (w == parent) continue;
        if (seen[w]) {
          ring_bonds_.insert({EdgeKey(v, w), t});
        } else {
          stack.push_back({w, v});
        }
      }
    }
  }

  void emit(int v, int parent) {
    out_ += atom_token(g_.atom(v));
    order_.push_back(v);
    visited_.insert(v);

    // Ring closures at v: already-open ones first (by number), then fresh
    // openings by the rank of the far endpoint.
    std::vector<std::pair<int, std::pair<int, BondType>>> closings;
    std::vector<std::pair<int, BondType>> openings;
    for (auto [w, t] : sorted_neighbors(v)) {
      auto it = ring_bonds_.find(EdgeKey(v, w));
      if (it == ring_bonds_.end()) continue;
      auto num = ring_numbers_.find(EdgeKey(v, w));
      if (num != ring_numbers_.end())
        closings.push_back({num->second, {w, t}});
      else
        openings.push_back({w, t});
    }
    std::sort(closings.begin(), closings.end());
    for (auto& [num, wt] : closings) {
      append_bond(out_, wt.second);
      append_ring_digit(out_, num);
    }
    for (auto& [w, t] : openings) {
      int num = next_ring_number_++;
      ring_numbers_[EdgeKey(v, w)] = num;
      append_bond(out_, t);
      append_ring_digit(out_, num);
    }

    std::vector<std::pair<int, BondType>> children;
    for (auto [w, t] : sorted_neighbors(v)) {
      if (w == parent || visited_.count(w)) continue;
      if (ring_bonds_.count(EdgeKey(v, w))) continue;
      children.push_back({w, t});
    }
    for (std::size_t c = 0; c < children.size(); ++c) {
      auto [w, t] = children[c];
      bool last = (c + 1 == children.size());
      if (!last) out_.push_back('(');
      append_bond(out_, t);
      emit(w, v);
      if (!last) out_.push_back(')');
    }
  }

  const MolGraph& g_;
  const std::vector<int>& ranks_;
  std::map<EdgeKey, BondType> ring_bonds_;
  std::map<EdgeKey, int> ring_numbers_;
  std::set<int> visited_;
  int next_ring_number_ = 1;
  std::string out_;
  std::vector<int> order_;
};

std::vector<std::pair<std::string, std::vector<int>>> write_components(
    const MolGraph& g, const std::vector<int>& priorities) {
  std::vector<std::pair<std::string, std::vector<int>>> parts;
  for (const auto& comp : g.components()) {
    int root = comp.front();
    for (int v : comp)
      if (priorities[v] < priorities[root]) root = v;
    ComponentWriter writer(g, priorities);
    std::string text = writer.run(root);
    parts.push_back({std::move(text), writer.emission_order()});
  }
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return parts;
}

}  // namespace

std::string write_smiles(const MolGraph& g, const std::vector<int>& priorities) {
  if (g.num_atoms() == 0) return "";
  if (static_cast<int>(priorities.size()) != g.num_atoms())
    throw GraphError("priority vector size mismatch");
  auto parts = write_components(g, priorities);
  std::string out = parts.front().first;
  for (std::size_t i = 1; i < parts.size(); ++i) out += "." + parts[i].first;
  return out;
}

std::pair<std::string, std::vector<int>> canonical_serialization(const MolGraph& g) {
  if (g.num_atoms() == 0) return {"", {}};
  auto parts = write_components(g, canonical_priorities(g));
  std::string out;
  std::vector<int> ranks(g.num_atoms(), -1);
  int pos = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ".";
    out += parts[i].first;
    for (int v : parts[i].second) ranks[v] = pos++;
  }
  return {std::move(out), std::move(ranks)};
}

std::string to_canonical_smiles(const MolGraph& g) {
  return canonical_serialization(g).first;
}

namespace {

struct RingOpen {
  int atom;
  std::optional<BondType> bond;
  std::size_t offset;
};

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  MolGraph run() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) break;  // trailing text
      if (c == '(') {
        if (prev_ < 0) throw ParseError("branch before any atom", pos_);
        if (pending_) throw ParseError("bond before branch open", pos_);
        if (expect_atom_) throw ParseError("expected atom", pos_);
        stack_.push_back(prev_);
        expect_atom_ = true;  // '(' must be followed by [bond] atom
        ++pos_;
      } else if (c == ')') {
        if (stack_.empty()) throw ParseError("unmatched ')'", pos_);
        if (pending_ || expect_atom_) throw ParseError("dangling bond", pos_);
        prev_ = stack_.back();
        stack_.pop_back();
        ++pos_;
      } else if (c == '-' || c == '=' || c == '#' || c == ':') {
        if (pending_) throw ParseError("two bond symbols in a row", pos_);
        if (prev_ < 0) throw ParseError("bond before any atom", pos_);
        pending_ = parse_bond(c);
        ++pos_;
      } else if (c == '.') {
        if (pending_ || expect_atom_) throw ParseError("dangling bond", pos_);
        if (prev_ < 0) throw ParseError("empty component", pos_);
        if (!stack_.empty()) throw ParseError("'.' inside branch", pos_);
        prev_ = -1;
        ++pos_;
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '%') {
        ring_closure();
      } else if (c == '/' || c == '\\' || c == '@') {
        throw UnsupportedFeature("stereo markers are not supported");
      } else if (c == '[' || std::isupper(static_cast<unsigned char>(c))) {
        atom();
      } else {
        throw UnknownToken(std::string("unexpected character '") + c + "'", pos_);
      }
    }
    if (pending_ || expect_atom_) throw ParseError("dangling bond at end", pos_);
    if (!stack_.empty()) throw ParseError("unclosed branch", pos_);
    if (!rings_.empty())
      throw UnbalancedRingClosure("unclosed ring bond", rings_.begin()->second.offset);
    if (g_.num_atoms() == 0) throw ParseError("empty input", 0);
    return std::move(g_);
  }

 private:
  static BondType parse_bond(char c) {
    switch (c) {
      case '=': return BondType::Double;
      case '#': return BondType::Triple;
      case ':': return BondType::Aromatic;
      default: return BondType::Single;
    }
  }

  void connect(int from, int to, std::optional<BondType> b, std::size_t at) {
    if (from == to) throw ParseError("bond to self", at);
    if (g_.has_bond(from, to)) throw ParseError("duplicate bond", at);
    g_.add_bond(from, to, b.value_or(BondType::Single));
  }

  void ring_closure() {
    std::size_t at = pos_;
    if (prev_ < 0) throw ParseError("ring closure before any atom", at);
    if (expect_atom_) throw ParseError("expected atom", at);
    int num = 0;
    if (s_[pos_] == '%') {
      if (pos_ + 2 >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])) ||
          !std::isdigit(static_cast<unsigned char>(s_[pos_ + 2])))
        throw ParseError("bad %nn ring closure", at);
      num = (s_[pos_ + 1] - '0') * 10 + (s_[pos_ + 2] - '0');
      pos_ += 3;
    } else {
      num = s_[pos_] - '0';
      ++pos_;
    }
    auto it = rings_.find(num);
    if (it == rings_.end()) {
      rings_[num] = RingOpen{prev_, pending_, at};
    } else {
      RingOpen open = it->second;
      rings_.erase(it);
      if (open.bond && pending_ && *open.bond != *pending_)
        throw ParseError("ring closure bond mismatch", at);
      std::optional<BondType> b = open.bond ? open.bond : pending_;
      connect(open.atom, prev_, b, at);
    }
    pending_.reset();
  }

  void atom() {
    std::size_t at = pos_;
    AtomNode node;
    if (s_[pos_] == '[') {
      auto close = s_.find(']', pos_);
      if (close == std::string::npos) throw ParseError("unterminated bracket", at);
      std::string body = s_.substr(pos_ + 1, close - pos_ - 1);
      if (body.empty()) throw ParseError("empty bracket atom", at);
      for (char c : body)
        if (std::isspace(static_cast<unsigned char>(c)) || c == '[')
          throw ParseError("bad bracket atom", at);
      node = interpret_bracket(body, at);
      pos_ = close + 1;
    } else {
      // bare organic-subset atom, two-letter symbols first
      if (pos_ + 1 < s_.size()) {
        std::string two = s_.substr(pos_, 2);
        if (two == "Cl" || two == "Br") {
          node.label = two;
          pos_ += 2;
        }
      }
      if (node.label.empty()) {
        std::string one(1, s_[pos_]);
        if (!in_organic_subset(one))
          throw UnknownToken("atom symbol '" + one + "' needs brackets", at);
        node.label = one;
        ++pos_;
      }
    }
    int idx = g_.add_atom(node);
    if (prev_ >= 0) connect(prev_, idx, pending_, at);
    pending_.reset();
    prev_ = idx;
    expect_atom_ = false;
  }

  // Bracket body: an element symbol with optional charge suffix, otherwise
  // the whole body verbatim as a superatom / pseudoatom label. A charge is
  // only recognized when the remainder after a known element symbol is a
  // well-formed charge string, so tokens like NO2 or t-Bu stay verbatim.
  AtomNode interpret_bracket(const std::string& body, std::size_t at) {
    for (std::size_t el_len : {2u, 1u}) {
      if (body.size() < el_len) continue;
      std::string sym = body.substr(0, el_len);
      if (!element_symbols().count(sym)) continue;
      std::string rest = body.substr(el_len);
      if (rest.empty()) return AtomNode{sym, 0, std::nullopt};
      if (auto charge = parse_charge(rest)) return AtomNode{sym, *charge, std::nullopt};
    }
    (void)at;
    return AtomNode{body, 0, std::nullopt};
  }

  static std::optional<int> parse_charge(const std::string& s) {
    if (s.empty() || (s[0] != '+' && s[0] != '-')) return std::nullopt;
    int sign = s[0] == '+' ? 1 : -1;
    if (s.size() == 1) return sign;
    if (s == "++") return 2;
    if (s == "--") return -2;
    int mag = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
      mag = mag * 10 + (s[i] - '0');
      if (mag > 15) return std::nullopt;
    }
    return sign * mag;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  MolGraph g_;
  int prev_ = -1;
  bool expect_atom_ = false;
  std::optional<BondType> pending_;
  std::vector<int> stack_;
  std::map<int, RingOpen> rings_;
};

}  // namespace

MolGraph parse_smiles(const std::string& s) {
  return Parser(s).run();
}

}  // namespace i2g
