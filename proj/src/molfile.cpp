#include "i2g/molfile.hpp"

#include <istream>
#include <sstream>

#include "i2g/smiles.hpp"

namespace i2g {

namespace {

int field_int(const std::string& line, std::size_t pos, std::size_t len) {
  if (pos >= line.size()) throw UnsupportedFeature("truncated molfile line");
  std::string f = line.substr(pos, len);
  try {
    return std::stoi(f);
  } catch (const std::exception&) {
    throw UnsupportedFeature("bad integer field in molfile: '" + f + "'");
  }
}

double field_double(const std::string& line, std::size_t pos, std::size_t len) {
  if (pos >= line.size()) throw UnsupportedFeature("truncated molfile line");
  return std::stod(line.substr(pos, len));
}

std::string trimmed(std::string s) {
  auto issp = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && issp(s.front())) s.erase(s.begin());
  while (!s.empty() && issp(s.back())) s.pop_back();
  return s;
}

int charge_from_ccc(int spec) {
  // V2000 atom-block charge column: 0..7, 4 = doublet radical (treated as 0)
  switch (spec) {
    case 1: return 3;
    case 2: return 2;
    case 3: return 1;
    case 5: return -1;
    case 6: return -2;
    case 7: return -3;
    default: return 0;
  }
}

}  // namespace

MolGraph read_molfile(std::istream& in) {
  std::string line;
  // header: name, program, comment
  for (int i = 0; i < 3; ++i)
    if (!std::getline(in, line)) throw UnsupportedFeature("truncated molfile header");
  if (!std::getline(in, line)) throw UnsupportedFeature("missing counts line");

  int n_atoms = field_int(line, 0, 3);
  int n_bonds = field_int(line, 3, 3);

  MolGraph g;
  std::vector<Eigen::Vector2d> raw(n_atoms);
  for (int i = 0; i < n_atoms; ++i) {
    if (!std::getline(in, line)) throw UnsupportedFeature("truncated atom block");
    double x = field_double(line, 0, 10);
    double y = field_double(line, 10, 10);
    std::string sym = line.size() >= 34 ? trimmed(line.substr(31, 3)) : trimmed(line.substr(30));
    if (sym.empty()) throw UnsupportedFeature("empty atom symbol");
    int charge = line.size() >= 39 ? charge_from_ccc(field_int(line, 36, 3)) : 0;
    g.add_atom(AtomNode{sym, charge, std::nullopt});
    raw[i] = {x, -y};  // molfile y is up, image convention is down
  }
  for (int i = 0; i < n_bonds; ++i) {
    if (!std::getline(in, line)) throw UnsupportedFeature("truncated bond block");
    int u = field_int(line, 0, 3) - 1;
    int v = field_int(line, 3, 3) - 1;
    int t = field_int(line, 6, 3);
    BondType type;
    switch (t) {
      case 1: type = BondType::Single; break;
      case 2: type = BondType::Double; break;
      case 3: type = BondType::Triple; break;
      case 4: type = BondType::Aromatic; break;
      default: throw UnsupportedFeature("bond type " + std::to_string(t));
    }
    g.add_bond(u, v, type);
  }

  // Normalize drawing coordinates into [0,1]^2, preserving aspect ratio.
  if (n_atoms > 0) {
    Eigen::Vector2d lo = raw[0], hi = raw[0];
    for (const auto& p : raw) {
      lo = lo.cwiseMin(p);
      hi = hi.cwiseMax(p);
    }
    double extent = std::max((hi - lo).maxCoeff(), 0.0);
    for (int i = 0; i < n_atoms; ++i) {
      Eigen::Vector2d c = extent > 0 ? ((raw[i] - lo) / extent).eval()
                                     : Eigen::Vector2d(0.5, 0.5);
      g.atom(i).coord = c.cwiseMin(1.0).cwiseMax(0.0);
    }
  }
  return g;
}

MolGraph read_molfile_string(const std::string& text) {
  std::istringstream in(text);
  return read_molfile(in);
}

std::vector<MolGraph> read_sdf(std::istream& in) {
  std::vector<MolGraph> out;
  std::string record;
  std::string line;
  auto flush = [&]() {
    if (trimmed(record).empty()) return;
    std::istringstream rec(record);
    out.push_back(read_molfile(rec));
    record.clear();
  };
  while (std::getline(in, line)) {
    if (trimmed(line) == "$$$$") {
      flush();
    } else {
      record += line;
      record += '\n';
    }
  }
  flush();
  return out;
}

}  // namespace i2g
