#ifndef MORSEKIT_CATALOG_HPP
#define MORSEKIT_CATALOG_HPP

#include <string>
#include <vector>

#include "morsekit/complex.hpp"

namespace mtk {

// Named test complexes. Accepted names:
//   point, full_simplex_<d>, path_<n>, cycle_<n>,
//   dunce_hat, rp2_6, torus_7, bing_house
// Throws InputError on an unknown name.
SimplicialComplex catalog(const std::string& name);

// The fixed (non-parametric) catalog names plus representative
// parametric instances, for listings.
std::vector<std::string> catalogNames();

}  // namespace mtk

#endif
