#include "morsekit/morse_function.hpp"

namespace mtk {

std::optional<MorseViolation> morseViolation(const SimplicialComplex& k,
                                             const CellFunction& f) {
  if (static_cast<int>(f.size()) != k.cellCount())
    throw InputError("function is not defined on every cell");
  for (CellId c = 0; c < k.cellCount(); ++c) {
    MorseViolation v;
    v.cell = c;
    for (const auto& nu : k.faces(c))
      if (f[nu.cell] >= f[c]) v.exceptionalFaces.push_back(nu.cell);
    for (const auto& tau : k.cofaces(c))
      if (f[tau.cell] <= f[c]) v.exceptionalCofaces.push_back(tau.cell);
    const std::size_t total =
        v.exceptionalFaces.size() + v.exceptionalCofaces.size();
    if (total > 1) return v;
  }
  return std::nullopt;
}

bool isMorseFunction(const SimplicialComplex& k, const CellFunction& f) {
  return !morseViolation(k, f).has_value();
}

DiscreteVectorField gradientFieldOf(const SimplicialComplex& k,
                                    const CellFunction& f) {
  if (auto v = morseViolation(k, f))
    throw InputError("not a combinatorial Morse function; violation at '" +
                     k.cellName(v->cell) + "'");
  std::vector<std::pair<CellId, CellId>> pairs;
  for (CellId c = 0; c < k.cellCount(); ++c)
    for (const auto& tau : k.cofaces(c))
      if (f[c] >= f[tau.cell]) pairs.push_back({c, tau.cell});
  return validateField(k, pairs);
}

bool equivalent(const SimplicialComplex& k, const CellFunction& f,
                const CellFunction& g) {
  // Route 1: strict-comparison profile on immediate incidences.
  bool profileEqual = true;
  for (CellId c = 0; c < k.cellCount() && profileEqual; ++c)
    for (const auto& tau : k.cofaces(c))
      if ((f[c] < f[tau.cell]) != (g[c] < g[tau.cell])) {
        profileEqual = false;
        break;
      }
  // Route 2: gradient field equality.
  const bool fieldEqual =
      gradientFieldOf(k, f).pairs == gradientFieldOf(k, g).pairs;
  if (profileEqual != fieldEqual)
    throw InternalError("equivalence routes disagree");
  return profileEqual;
}

}  // namespace mtk
