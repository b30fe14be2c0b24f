#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "i2g/molgraph.hpp"

namespace i2g {

// Molfile / SDF V2000 ingestion. Only the atom block (element symbol, x, y)
// and bond block (endpoints, type 1/2/3/4) are read; the y axis is flipped
// to image convention (y down) and coordinates are normalized to [0,1]^2
// when the drawing has nonzero extent.
MolGraph read_molfile(std::istream& in);
MolGraph read_molfile_string(const std::string& text);

// All records of an SDF stream ($$$$-separated molfiles).
std::vector<MolGraph> read_sdf(std::istream& in);

}  // namespace i2g
