// morse: command-line front end over the morsekit C API.
//
// stdout carries exactly one machine-readable payload per invocation
// (a JSON report, or raw .cplx/.dot text for subdivide/export-dot);
// wall time and diagnostics go to stderr so repeated runs are
// byte-identical.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "morsekit.h"
#include "nlohmann/json.hpp"

using nlohmann::json;

namespace {

struct Freed {
  char* s = nullptr;
  ~Freed() { mk_string_free(s); }
};

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(MK_INPUT_ERROR);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// FNV-1a, 64-bit, over the raw input bytes
std::string digest(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", (unsigned long long)h);
  return buf;
}

[[noreturn]] void fail(mk_status st, char* errmsg) {
  Freed owner{errmsg};
  std::cerr << "error: " << (errmsg ? errmsg : "unspecified") << "\n";
  std::exit(st == MK_INPUT_ERROR ? 2 : static_cast<int>(st));
}

struct Inputs {
  std::string complexPath;   // or empty when --catalog used
  std::string catalogName;
  std::string fieldPath;
  std::string rawBytes;      // everything the digest covers
  mk_complex* k = nullptr;
  mk_field* f = nullptr;
};

Inputs load(const std::string& complexPath, const std::string& catalogName,
            const std::string& fieldPath) {
  Inputs in;
  in.complexPath = complexPath;
  in.catalogName = catalogName;
  in.fieldPath = fieldPath;
  char* err = nullptr;
  mk_status st;
  if (!catalogName.empty()) {
    in.rawBytes = "catalog:" + catalogName;
    st = mk_complex_from_catalog(catalogName.c_str(), &in.k, &err);
  } else {
    in.rawBytes = readFile(complexPath);
    st = mk_complex_from_text(in.rawBytes.c_str(), &in.k, &err);
  }
  if (st != MK_OK) fail(st, err);
  if (!fieldPath.empty()) {
    std::string ftext = readFile(fieldPath);
    in.rawBytes += "\n--field--\n" + ftext;
    st = mk_field_from_text(in.k, ftext.c_str(), &in.f, &err);
    if (st != MK_OK) fail(st, err);
  }
  return in;
}

// assemble and print the report; returns the process exit code
int report(const std::string& command, const Inputs& in, mk_status st,
           const char* resultJson, json extra = json::object()) {
  json r{{"command", command},
         {"input_digest", digest(in.rawBytes)},
         {"status", static_cast<int>(st)},
         {"result", resultJson ? json::parse(resultJson) : json(nullptr)}};
  for (auto& [k, v] : extra.items()) r[k] = v;
  std::cout << r.dump(2) << "\n";
  return static_cast<int>(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete Morse theory toolkit: fields, normalization, "
               "the alternating-sum invariant, collapsibility certificates"};
  app.require_subcommand(1);

  std::uint64_t budget = 2000000000;
  if (const char* env = std::getenv("MORSE_BUDGET"))
    budget = std::strtoull(env, nullptr, 10);

  std::string complexPath, catalogName, fieldPath, outPath;
  int jobs = 1, depth = 1;

  auto addComplexArgs = [&](CLI::App* sub, bool needsField) {
    sub->add_option("complex", complexPath, ".cplx file (maximal simplices)");
    sub->add_option("--catalog", catalogName, "use a named catalog complex");
    if (needsField)
      sub->add_option("field", fieldPath, ".field file (matched pairs)")
          ->required();
    return sub;
  };

  auto* cInfo = addComplexArgs(app.add_subcommand("info", "f-vector, Euler characteristic, connectivity"), false);
  auto* cHomology = addComplexArgs(app.add_subcommand("homology", "reduced integer homology via Smith normal form"), false);
  auto* cNormalize = addComplexArgs(app.add_subcommand("normalize", "least Morse function of a field, and its alternating sum"), true);
  cNormalize->add_option("-o,--output", outPath, "write the .mf here");
  auto* cNkf = addComplexArgs(app.add_subcommand("nkf", "alternating sum of the normalization of one field"), true);
  auto* cOptimal = addComplexArgs(app.add_subcommand("optimal", "minimum critical-cell count over all gradient fields"), false);
  auto* cNk = addComplexArgs(app.add_subcommand("nk", "least |alternating sum| over optimal gradient fields"), false);
  auto* cCollapse = addComplexArgs(app.add_subcommand("collapse", "free-face collapsibility with a full collapse sequence"), false);
  auto* cCertify = addComplexArgs(app.add_subcommand("certify", "gap certificate: matching with h(edge) < h(triangle) summing to the invariant"), true);
  auto* cMorse = addComplexArgs(app.add_subcommand("morse-complex", "critical-cell chain complex with gradient-path boundary"), true);
  auto* cHall = addComplexArgs(app.add_subcommand("hall", "bipartite critical incidence graph and matching certificate"), true);
  auto* cPlprobe = addComplexArgs(app.add_subcommand("plprobe", "invariant upper bounds across barycentric subdivisions"), false);
  cPlprobe->add_option("--depth", depth, "subdivision depth (0..2)");
  auto* cSubdivide = addComplexArgs(app.add_subcommand("subdivide", "barycentric subdivision, emitted as .cplx"), false);
  auto* cDot = addComplexArgs(app.add_subcommand("export-dot", "gradient field as a DOT digraph with h labels"), true);
  auto* cCatalog = app.add_subcommand("catalog", "list built-in complexes");

  for (auto* sub : {cOptimal, cNk, cCollapse, cPlprobe})
    sub->add_option("--budget", budget, "search node budget");
  for (auto* sub : {cNk, cPlprobe})
    sub->add_option("--jobs", jobs, "evaluation threads (output independent)");

  CLI11_PARSE(app, argc, argv);

  const auto t0 = std::chrono::steady_clock::now();
  int exitCode = 0;

  if (cCatalog->parsed()) {
    Freed names;
    mk_catalog_names(&names.s);
    json r{{"command", "catalog"}, {"names", json::array()}};
    std::istringstream ss(names.s);
    for (std::string line; std::getline(ss, line);)
      if (!line.empty()) r["names"].push_back(line);
    std::cout << r.dump(2) << "\n";
    return 0;
  }

  if (complexPath.empty() && catalogName.empty()) {
    std::cerr << "error: give a .cplx file or --catalog NAME\n";
    return 2;
  }
  Inputs in = load(complexPath, catalogName, fieldPath);

  char* err = nullptr;
  Freed out, mf;
  mk_status st = MK_OK;

  if (cInfo->parsed()) {
    st = mk_complex_info_json(in.k, &out.s);
    exitCode = report("info", in, st, out.s);
  } else if (cHomology->parsed()) {
    st = mk_homology_json(in.k, &out.s, &err);
    if (st != MK_OK && !out.s) fail(st, err);
    exitCode = report("homology", in, st, out.s);
  } else if (cNormalize->parsed()) {
    st = mk_normalize_json(in.k, in.f, &mf.s, &out.s, &err);
    if (st != MK_OK) fail(st, err);
    if (!outPath.empty()) {
      std::ofstream o(outPath, std::ios::binary);
      o << mf.s;
    }
    exitCode = report("normalize", in, st, out.s, {{"mf", mf.s}});
  } else if (cNkf->parsed()) {
    st = mk_nkf_json(in.k, in.f, &out.s, &err);
    if (st != MK_OK) fail(st, err);
    exitCode = report("nkf", in, st, out.s);
  } else if (cOptimal->parsed()) {
    st = mk_optimal_json(in.k, budget, &out.s, &err);
    if (!out.s) fail(st, err);
    exitCode = report("optimal", in, st, out.s);
  } else if (cNk->parsed()) {
    st = mk_nk_json(in.k, budget, jobs, &out.s, &err);
    if (!out.s) fail(st, err);
    exitCode = report("nk", in, st, out.s);
  } else if (cCollapse->parsed()) {
    st = mk_collapse_json(in.k, budget, &out.s, &err);
    if (!out.s) fail(st, err);
    exitCode = report("collapse", in, st, out.s);
  } else if (cCertify->parsed()) {
    st = mk_certify_json(in.k, in.f, &out.s, &err);
    if (!out.s) fail(st, err);
    exitCode = report("certify", in, st, out.s);
  } else if (cMorse->parsed()) {
    st = mk_morse_complex_json(in.k, in.f, &out.s, &err);
    if (st != MK_OK) fail(st, err);
    exitCode = report("morse-complex", in, st, out.s);
  } else if (cHall->parsed()) {
    st = mk_hall_json(in.k, in.f, &out.s, &err);
    if (!out.s) fail(st, err);
    exitCode = report("hall", in, st, out.s);
  } else if (cPlprobe->parsed()) {
    st = mk_plprobe_json(in.k, depth, budget, jobs, &out.s, &err);
    if (!out.s) fail(st, err);
    exitCode = report("plprobe", in, st, out.s);
  } else if (cSubdivide->parsed()) {
    mk_complex* sd = nullptr;
    st = mk_complex_subdivide(in.k, &sd, &err);
    if (st != MK_OK) fail(st, err);
    st = mk_complex_to_text(sd, &out.s);
    mk_complex_free(sd);
    std::cout << out.s;
    exitCode = 0;
  } else if (cDot->parsed()) {
    st = mk_export_dot(in.k, in.f, &out.s, &err);
    if (st != MK_OK) fail(st, err);
    std::cout << out.s;
    exitCode = 0;
  }

  const auto dt = std::chrono::duration<double>(
      std::chrono::steady_clock::now() - t0);
  std::cerr << "wall_time_s " << dt.count() << "\n";

  mk_field_free(in.f);
  mk_complex_free(in.k);
  return exitCode;
}
