#include "morsekit.h"

#include <cstdlib>
#include <cstring>
#include <nlohmann/json.hpp>
#include <string>

#include "morsekit/analysis.hpp"
#include "morsekit/catalog.hpp"
#include "morsekit/complex.hpp"
#include "morsekit/field.hpp"
#include "morsekit/homology.hpp"
#include "morsekit/io.hpp"
#include "morsekit/normalize.hpp"
#include "morsekit/search.hpp"

using nlohmann::json;

struct mk_complex {
  mtk::SimplicialComplex k;
};
struct mk_field {
  const mk_complex* host;
  mtk::DiscreteVectorField v;
};

namespace {

char* dupString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void setError(char** errmsg, const std::string& msg) {
  if (errmsg) *errmsg = dupString(msg);
}

// runs the body, translating exceptions to status codes
template <typename Fn>
mk_status guarded(char** errmsg, Fn&& body) {
  try {
    return body();
  } catch (const mtk::InputError& e) {
    setError(errmsg, e.what());
    return MK_INPUT_ERROR;
  } catch (const mtk::InternalError& e) {
    setError(errmsg, std::string("internal: ") + e.what());
    return MK_INTERNAL;
  } catch (const std::exception& e) {
    setError(errmsg, e.what());
    return MK_INTERNAL;
  }
}

json pairsToJson(const mtk::SimplicialComplex& k,
                 const std::vector<std::pair<mtk::CellId, mtk::CellId>>& pairs) {
  json arr = json::array();
  for (const auto& [lo, hi] : pairs)
    arr.push_back({k.cellName(lo), k.cellName(hi)});
  return arr;
}

}  // namespace

extern "C" {

const char* mk_version(void) { return "morsekit 1.0.0"; }

void mk_string_free(char* s) { std::free(s); }
void mk_complex_free(mk_complex* k) { delete k; }
void mk_field_free(mk_field* f) { delete f; }

mk_status mk_complex_from_text(const char* text, mk_complex** out,
                               char** errmsg) {
  return guarded(errmsg, [&]() -> mk_status {
    *out = new mk_complex{mtk::parseCplx(text)};
    return MK_OK;
  });
}

mk_status mk_complex_from_catalog(const char* name, mk_complex** out,
                                  char** errmsg) {
  return guarded(errmsg, [&]() -> mk_status {
    *out = new mk_complex{mtk::catalog(name)};
    return MK_OK;
  });
}

mk_status mk_complex_to_text(const mk_complex* k, char** out) {
  return guarded(nullptr, [&]() -> mk_status {
    *out = dupString(mtk::writeCplx(k->k));
    return MK_OK;
  });
}

mk_status mk_complex_to_json(const mk_complex* k, char** out) {
  return guarded(nullptr, [&]() -> mk_status {
    *out = dupString(mtk::complexToJson(k->k));
    return MK_OK;
  });
}

mk_status mk_complex_info_json(const mk_complex* k, char** out) {
  return guarded(nullptr, [&]() -> mk_status {
    json j{{"f_vector", k->k.fVector()},
           {"euler", k->k.eulerCharacteristic()},
           {"dimension", k->k.dim()},
           {"cells", k->k.cellCount()},
           {"connected", k->k.connected()}};
    *out = dupString(j.dump());
    return MK_OK;
  });
}

mk_status mk_complex_subdivide(const mk_complex* k, mk_complex** out,
                               char** errmsg) {
  return guarded(errmsg, [&]() -> mk_status {
    *out = new mk_complex{k->k.barycentricSubdivision()};
    return MK_OK;
  });
}

mk_status mk_catalog_names(char** out) {
  return guarded(nullptr, [&]() -> mk_status {
    std::string s;
    for (const auto& n : mtk::catalogNames()) s += n + "\n";
    *out = dupString(s);
    return MK_OK;
  });
}

mk_status mk_field_from_text(const mk_complex* k, const char* text,
                             mk_field** out, char** errmsg) {
  return guarded(errmsg, [&]() -> mk_status {
    const auto pairs = mtk::parseFieldPairs(k->k, text);
    *out = new mk_field{k, mtk::validateField(k->k, pairs)};
    return MK_OK;
  });
}

mk_status mk_field_to_text(const mk_field* f, char** out) {
  return guarded(nullptr, [&]() -> mk_status {
    *out = dupString(mtk::writeFieldPairs(f->host->k, f->v.pairs));
    return MK_OK;
  });
}

mk_status mk_homology_json(const mk_complex* k, char** json_out,
                           char** errmsg) {
  return guarded(errmsg, [&]() -> mk_status {
    const auto p = mtk::homology(k->k);
    json torsion = json::array();
    for (const auto& t : p.torsion) {
      json dims = json::array();
      for (const auto& d : t) dims.push_back(d.str());
      torsion.push_back(std::move(dims));
    }
    json j{{"betti", p.bettiReduced},
           {"torsion", std::move(torsion)},
           {"euler", p.euler},
           {"acyclic", p.acyclic}};
    *json_out = dupString(j.dump());
    return MK_OK;
  });
}

mk_status mk_normalize_json(const mk_complex* k, const mk_field* f,
                            char** mf_text, char** json_out, char** errmsg) {
  return guarded(errmsg, [&]() -> mk_status {
    const auto h = mtk::normalize(f->v);
    const auto n = mtk::nkf(f->v);
    mtk::CellFunction values(k->k.cellCount());
    for (mtk::CellId c = 0; c < k->k.cellCount(); ++c)
      values[c] = h.values[c];
    if (mf_text) *mf_text = dupString(mtk::writeMf(k->k, values));
    json contributions = json::array();
    for (const auto& [cell, value] : n.criticalContributions)
      contributions.push_back({k->k.cellName(cell), value});
    json j{{"nkf", n.value},
           {"critical_contributions", std::move(contributions)}};
    if (json_out) *json_out = dupString(j.dump());
    return MK_OK;
  });
}

mk_status mk_nkf_json(const mk_complex* k, const mk_field* f, char** json_out,
                      char** errmsg) {
  return mk_normalize_json(k, f, nullptr, json_out, errmsg);
}

mk_status mk_collapse_json(const mk_complex* k, uint64_t budget,
                           char** json_out, char** errmsg) {
  return guarded(errmsg, [&]() -> mk_status {
    const auto r = mtk::isCollapsible(k->k, budget);
    json j{{"collapsible", r.collapsible},
           {"sequence", pairsToJson(k->k, r.sequence)},
           {"obstruction", r.obstruction},
           {"exact", r.exact},
           {"nodes", r.stats.nodes}};
    *json_out = dupString(j.dump());
    if (!r.exact) return MK_BUDGET;
    return r.collapsible ? MK_OK : MK_OBSTRUCTION;
  });
}

mk_status mk_optimal_json(const mk_complex* k, uint64_t budget,
                          char** json_out, char** errmsg) {
  return guarded(errmsg, [&]() -> mk_status {
    const auto r = mtk::minCriticalCells(k->k, budget);
    json witnesses = json::array();
    for (std::size_t i = 0; i < r.witnesses.size() && i < 8; ++i)
      witnesses.push_back(pairsToJson(k->k, r.witnesses[i]));
    json j{{"critical_vector", r.criticalVector},
           {"total", r.total},
           {"exact", r.exact},
           {"witness_count", r.witnessCount},
           {"witnesses", std::move(witnesses)},
           {"nodes", r.stats.nodes}};
    *json_out = dupString(j.dump());
    return r.exact ? MK_OK : MK_BUDGET;
  });
}

mk_status mk_nk_json(const mk_complex* k, uint64_t budget, int jobs,
                     char** json_out, char** errmsg) {
  return guarded(errmsg, [&]() -> mk_status {
    const auto r = mtk::nk(k->k, budget, jobs);
    json j{{"value", r.value},
           {"exact", r.exact},
           {"critical_vector", r.criticalVector},
           {"witness", pairsToJson(k->k, r.witness)},
           {"fields_enumerated", r.fieldsEnumerated},
           {"nodes", r.stats.nodes}};
    *json_out = dupString(j.dump());
    return r.exact ? MK_OK : MK_BUDGET;
  });
}

mk_status mk_plprobe_json(const mk_complex* k, int depth, uint64_t budget,
                          int jobs, char** json_out, char** errmsg) {
  return guarded(errmsg, [&]() -> mk_status {
    const auto r = mtk::plProbe(k->k, depth, budget, jobs);
    json per = json::array();
    for (int j2 = 0; j2 < static_cast<int>(r.perDepth.size()); ++j2)
      per.push_back({{"depth", j2},
                     {"value", r.perDepth[j2].value},
                     {"exact", r.perDepth[j2].exact}});
    json j{{"per_depth", std::move(per)},
           {"best", r.best},
           {"best_depth", r.bestDepth},
           {"exact", r.exact},
           {"note", "upper bound on the subdivision-minimal invariant; "
                    "barycentric subdivisions only"}};
    *json_out = dupString(j.dump());
    return r.exact ? MK_OK : MK_BUDGET;
  });
}

mk_status mk_morse_complex_json(const mk_complex* k, const mk_field* f,
                                char** json_out, char** errmsg) {
  return guarded(errmsg, [&]() -> mk_status {
    const auto m = mtk::morseBoundary(f->v);
    json basis = json::array();
    for (const auto& cells : m.basis) {
      json dim = json::array();
      for (mtk::CellId c : cells) dim.push_back(k->k.cellName(c));
      basis.push_back(std::move(dim));
    }
    json boundary = json::array();
    boundary.push_back(nullptr);
    for (int q = 1; q <= k->k.dim(); ++q) {
      const auto& mat = m.boundary[q];
      json rows = json::array();
      for (int r = 0; r < mat.rows; ++r) {
        json row = json::array();
        for (int c = 0; c < mat.cols; ++c) row.push_back(mat.at(r, c).str());
        rows.push_back(std::move(row));
      }
      boundary.push_back(std::move(rows));
    }
    json j{{"basis", std::move(basis)},
           {"boundary", std::move(boundary)},
           {"homology_matches", mtk::morseHomologyCheck(f->v)}};
    *json_out = dupString(j.dump());
    return MK_OK;
  });
}

mk_status mk_hall_json(const mk_complex* k, const mk_field* f,
                       char** json_out, char** errmsg) {
  return guarded(errmsg, [&]() -> mk_status {
    const auto g = mtk::criticalIncidenceGraph(f->v);
    const auto cert = mtk::hallMatching(g);
    json matching = json::array();
    for (const auto& [a, b] : cert.matching)
      matching.push_back({k->k.cellName(g.sideA[a]), k->k.cellName(g.sideB[b])});
    json violator = json::array();
    for (int b : cert.violator) violator.push_back(k->k.cellName(g.sideB[b]));
    json neighborhood = json::array();
    for (int a : cert.neighborhood)
      neighborhood.push_back(k->k.cellName(g.sideA[a]));
    json edges = json::array();
    for (const auto& [a, b] : g.edges)
      edges.push_back({k->k.cellName(g.sideA[a]), k->k.cellName(g.sideB[b])});
    json j{{"critical_edges", g.sideA.size()},
           {"critical_triangles", g.sideB.size()},
           {"edges", std::move(edges)},
           {"complete", cert.complete},
           {"matching", std::move(matching)},
           {"violator", std::move(violator)},
           {"neighborhood", std::move(neighborhood)}};
    *json_out = dupString(j.dump());
    return cert.complete ? MK_OK : MK_OBSTRUCTION;
  });
}

mk_status mk_certify_json(const mk_complex* k, const mk_field* f,
                          char** json_out, char** errmsg) {
  return guarded(errmsg, [&]() -> mk_status {
    const auto cert = mtk::theoremGapCertificate(f->v);
    json j;
    switch (cert.status) {
      case mtk::GapCertificate::Status::NoObstruction:
        j = {{"status", "no_obstruction"},
             {"note", "single critical cell: the complex is collapsible"}};
        *json_out = dupString(j.dump());
        return MK_OBSTRUCTION;
      case mtk::GapCertificate::Status::HallViolation: {
        json violator = json::array();
        const auto g = mtk::criticalIncidenceGraph(f->v);
        for (int b : cert.hall.violator)
          violator.push_back(k->k.cellName(g.sideB[b]));
        j = {{"status", "hall_violation"}, {"violator", std::move(violator)}};
        *json_out = dupString(j.dump());
        return MK_OBSTRUCTION;
      }
      case mtk::GapCertificate::Status::Certified:
        break;
    }
    json pairs = json::array();
    for (const auto& p : cert.pairs)
      pairs.push_back({{"edge", k->k.cellName(p.edge)},
                       {"triangle", k->k.cellName(p.triangle)},
                       {"h_edge", p.hEdge},
                       {"h_triangle", p.hTriangle}});
    j = {{"status", "certified"},
         {"pairs", std::move(pairs)},
         {"nkf", cert.nkfValue}};
    *json_out = dupString(j.dump());
    return MK_OK;
  });
}

mk_status mk_export_dot(const mk_complex* k, const mk_field* f, char** dot,
                        char** errmsg) {
  return guarded(errmsg, [&]() -> mk_status {
    const auto& complex = k->k;
    const auto& v = f->v;
    const auto h = mtk::normalize(v);
    std::string out = "digraph gradient_field {\n";
    for (mtk::CellId c = 0; c < complex.cellCount(); ++c) {
      out += "  \"" + complex.cellName(c) + "\" [label=\"" +
             complex.cellName(c) + ":" + std::to_string(h.values[c]) + "\"";
      if (v.isCritical(c)) out += " peripheries=2";
      out += "];\n";
    }
    for (mtk::CellId c = 0; c < complex.cellCount(); ++c) {
      for (const auto& face : complex.faces(c)) {
        if (v.pairUp[face.cell] == c) {
          out += "  \"" + complex.cellName(c) + "\" -> \"" +
                 complex.cellName(face.cell) + "\" [style=bold];\n";
        } else {
          out += "  \"" + complex.cellName(face.cell) + "\" -> \"" +
                 complex.cellName(c) + "\";\n";
        }
      }
    }
    out += "}\n";
    *dot = dupString(out);
    return MK_OK;
  });
}

}  // extern "C"
