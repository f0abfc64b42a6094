#include "morsekit/io.hpp"

#include <algorithm>
#include <cctype>
#include <nlohmann/json.hpp>
#include <sstream>

namespace mtk {

namespace {

std::vector<std::string> splitWs(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

bool skippable(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void fail(int lineNo, const std::string& what) {
  throw InputError("line " + std::to_string(lineNo) + ": " + what);
}

CellId requireCell(const SimplicialComplex& k, std::vector<std::string> verts,
                   int lineNo) {
  std::sort(verts.begin(), verts.end());
  const CellId c = k.findCell(verts);
  if (c == -1) {
    std::string name;
    for (const auto& v : verts) name += (name.empty() ? "" : " ") + v;
    fail(lineNo, "no such cell '" + name + "'");
  }
  return c;
}

}  // namespace

SimplicialComplex parseCplx(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<std::string>> facets;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (skippable(line)) continue;
    auto toks = splitWs(line);
    auto sorted = toks;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(lineNo, "repeated vertex in simplex '" + line + "'");
    facets.push_back(std::move(toks));
  }
  if (facets.empty()) throw InputError("no maximal simplices in input");
  try {
    return SimplicialComplex::fromMaximal(facets);
  } catch (const InputError& e) {
    throw InputError(std::string("invalid complex: ") + e.what());
  }
}

std::string writeCplx(const SimplicialComplex& k) {
  std::string out;
  for (CellId m : k.maximalCells()) {
    out += k.cellName(m);
    out += '\n';
  }
  return out;
}

std::vector<std::pair<CellId, CellId>> parseFieldPairs(
    const SimplicialComplex& k, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<CellId, CellId>> pairs;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (skippable(line)) continue;
    const auto arrow = line.find("->");
    if (arrow == std::string::npos) fail(lineNo, "expected 'lower -> upper'");
    auto lo = splitWs(line.substr(0, arrow));
    auto hi = splitWs(line.substr(arrow + 2));
    if (lo.empty() || hi.empty()) fail(lineNo, "expected 'lower -> upper'");
    const CellId lower = requireCell(k, lo, lineNo);
    const CellId upper = requireCell(k, hi, lineNo);
    const auto fs = k.faces(upper);
    if (std::none_of(fs.begin(), fs.end(),
                     [&](const auto& f) { return f.cell == lower; }))
      fail(lineNo, "'" + k.cellName(lower) + "' is not an immediate face of '" +
                       k.cellName(upper) + "'");
    pairs.push_back({lower, upper});
  }
  return pairs;
}

std::string writeFieldPairs(
    const SimplicialComplex& k,
    const std::vector<std::pair<CellId, CellId>>& pairs) {
  auto sorted = pairs;
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (const auto& [lo, hi] : sorted)
    out += k.cellName(lo) + " -> " + k.cellName(hi) + "\n";
  return out;
}

CellFunction parseMf(const SimplicialComplex& k, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  CellFunction f(k.cellCount());
  std::vector<char> seen(k.cellCount(), 0);
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (skippable(line)) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) fail(lineNo, "expected 'cell : value'");
    auto verts = splitWs(line.substr(0, colon));
    if (verts.empty()) fail(lineNo, "missing cell");
    const CellId c = requireCell(k, verts, lineNo);
    auto valueToks = splitWs(line.substr(colon + 1));
    if (valueToks.size() != 1) fail(lineNo, "expected a single rational value");
    try {
      f[c] = Rational(valueToks[0]);
    } catch (const std::exception&) {
      fail(lineNo, "malformed rational '" + valueToks[0] + "'");
    }
    seen[c] = 1;
  }
  for (CellId c = 0; c < k.cellCount(); ++c)
    if (!seen[c])
      throw InputError("missing value for cell '" + k.cellName(c) + "'");
  return f;
}

std::string writeMf(const SimplicialComplex& k, const CellFunction& f) {
  std::string out;
  for (CellId c = 0; c < k.cellCount(); ++c) {
    out += k.cellName(c) + " : " + f[c].str() + "\n";
  }
  return out;
}

std::string complexToJson(const SimplicialComplex& k) {
  nlohmann::json cells = nlohmann::json::object();
  for (int d = 0; d <= k.dim(); ++d) {
    nlohmann::json arr = nlohmann::json::array();
    for (CellId c : k.cellsOfDim(d)) arr.push_back(k.vertices(c));
    cells[std::to_string(d)] = std::move(arr);
  }
  nlohmann::json j{{"cells", std::move(cells)},
                   {"f_vector", k.fVector()},
                   {"euler", k.eulerCharacteristic()},
                   {"dimension", k.dim()}};
  return j.dump();
}

}  // namespace mtk
