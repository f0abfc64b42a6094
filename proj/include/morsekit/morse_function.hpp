#ifndef MORSEKIT_MORSE_FUNCTION_HPP
#define MORSEKIT_MORSE_FUNCTION_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "morsekit/complex.hpp"
#include "morsekit/field.hpp"

namespace mtk {

// Cell functions take exact rational values; strict comparisons are the
// only thing the theory reads off them.
using Rational = boost::multiprecision::cpp_rational;

// Value per cell, indexed by CellId.
using CellFunction = std::vector<Rational>;

// The cell at which the combinatorial Morse condition fails, with its
// exceptional incidences.
struct MorseViolation {
  CellId cell;
  std::vector<CellId> exceptionalFaces;    // faces nu with f(nu) >= f(cell)
  std::vector<CellId> exceptionalCofaces;  // cofaces tau with f(tau) <= f(cell)
};

// Empty result means f is a combinatorial Morse function. Throws
// InputError if f is not defined on every cell.
std::optional<MorseViolation> morseViolation(const SimplicialComplex& k,
                                             const CellFunction& f);
bool isMorseFunction(const SimplicialComplex& k, const CellFunction& f);

// Pairs every immediate incidence sigma < tau with f(sigma) >= f(tau).
// Throws InputError if f is not Morse; re-validates the result.
DiscreteVectorField gradientFieldOf(const SimplicialComplex& k,
                                    const CellFunction& f);

// Same strict-comparison profile on all immediate incidences. Computed
// both as the profile equality and as gradient-field equality; the two
// routes must agree.
bool equivalent(const SimplicialComplex& k, const CellFunction& f,
                const CellFunction& g);

}  // namespace mtk

#endif
