#include "morsekit/catalog.hpp"

#include <cstdio>

#include "catalog_data.hpp"  // generated from data/*.cplx
#include "morsekit/io.hpp"

namespace mtk {

namespace {

int parseSuffix(const std::string& name, const std::string& prefix, int lo,
                int hi) {
  const std::string s = name.substr(prefix.size());
  if (s.empty() || s.size() > 3) throw InputError("unknown catalog name '" + name + "'");
  for (char ch : s)
    if (ch < '0' || ch > '9')
      throw InputError("unknown catalog name '" + name + "'");
  const int v = std::stoi(s);
  if (v < lo || v > hi)
    throw InputError("catalog parameter out of range in '" + name + "'");
  return v;
}

std::string padded(int i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "v%03d", i);
  return buf;
}

}  // namespace

SimplicialComplex catalog(const std::string& name) {
  if (name == "point")
    return SimplicialComplex::fromMaximal({{"a"}});
  if (name == "dunce_hat") return parseCplx(catalog_data::dunce_hat);
  if (name == "rp2_6") return parseCplx(catalog_data::rp2_6);
  if (name == "torus_7") return parseCplx(catalog_data::torus_7);
  if (name == "bing_house") return parseCplx(catalog_data::bing_house);
  if (name.rfind("full_simplex_", 0) == 0) {
    const int d = parseSuffix(name, "full_simplex_", 0, 20);
    std::vector<std::string> facet;
    for (int i = 0; i <= d; ++i) facet.push_back(std::string(1, char('a' + i)));
    return SimplicialComplex::fromMaximal({facet});
  }
  if (name.rfind("path_", 0) == 0) {
    const int n = parseSuffix(name, "path_", 1, 999);
    std::vector<std::vector<std::string>> facets;
    if (n == 1) facets.push_back({padded(1)});
    for (int i = 1; i < n; ++i) facets.push_back({padded(i), padded(i + 1)});
    return SimplicialComplex::fromMaximal(facets);
  }
  if (name.rfind("cycle_", 0) == 0) {
    const int n = parseSuffix(name, "cycle_", 3, 999);
    std::vector<std::vector<std::string>> facets;
    for (int i = 1; i <= n; ++i)
      facets.push_back({padded(i), padded(i % n + 1)});
    return SimplicialComplex::fromMaximal(facets);
  }
  throw InputError("unknown catalog name '" + name + "'");
}

std::vector<std::string> catalogNames() {
  return {"point",     "full_simplex_1", "full_simplex_2", "full_simplex_3",
          "path_3",    "path_5",         "path_10",        "cycle_3",
          "cycle_4",   "cycle_5",        "dunce_hat",      "rp2_6",
          "torus_7",   "bing_house"};
}

}  // namespace mtk
