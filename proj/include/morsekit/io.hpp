#ifndef MORSEKIT_IO_HPP
#define MORSEKIT_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "morsekit/complex.hpp"
#include "morsekit/morse_function.hpp"

namespace mtk {

// `.cplx`: one maximal simplex per line, whitespace-separated vertex
// labels; `#` comments and blank lines ignored.
SimplicialComplex parseCplx(const std::string& text);
std::string writeCplx(const SimplicialComplex& k);

// `.field`: one matched pair per line, `a b -> a b c`.
std::vector<std::pair<CellId, CellId>> parseFieldPairs(
    const SimplicialComplex& k, const std::string& text);
std::string writeFieldPairs(const SimplicialComplex& k,
                            const std::vector<std::pair<CellId, CellId>>& pairs);

// `.mf`: one line per cell, `a b c : p` or `a b c : p/q`.
CellFunction parseMf(const SimplicialComplex& k, const std::string& text);
std::string writeMf(const SimplicialComplex& k, const CellFunction& f);

// JSON export of a complex: cells grouped by dimension, sorted.
std::string complexToJson(const SimplicialComplex& k);

}  // namespace mtk

#endif
