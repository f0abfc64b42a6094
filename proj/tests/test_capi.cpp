#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "morsekit.h"
#include "nlohmann/json.hpp"

using nlohmann::json;

namespace {

struct Owned {
  char* s = nullptr;
  ~Owned() { mk_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

mk_complex* mustCatalog(const char* name) {
  mk_complex* k = nullptr;
  char* err = nullptr;
  REQUIRE(mk_complex_from_catalog(name, &k, &err) == MK_OK);
  return k;
}

}  // namespace

TEST_CASE("version string") {
  CHECK(std::strlen(mk_version()) > 0);
}

TEST_CASE("complex construction and errors") {
  mk_complex* k = nullptr;
  char* err = nullptr;
  CHECK(mk_complex_from_text("a b\nb c\n", &k, &err) == MK_OK);
  Owned info;
  CHECK(mk_complex_info_json(k, &info.s) == MK_OK);
  const auto j = json::parse(info.str());
  CHECK(j["f_vector"] == json({3, 2}));
  CHECK(j["connected"] == true);
  mk_complex_free(k);

  k = nullptr;
  CHECK(mk_complex_from_text("a a\n", &k, &err) == MK_INPUT_ERROR);
  REQUIRE(err != nullptr);
  CHECK(std::string(err).find("line 1") != std::string::npos);
  mk_string_free(err);

  err = nullptr;
  CHECK(mk_complex_from_catalog("nope", &k, &err) == MK_INPUT_ERROR);
  mk_string_free(err);
}

TEST_CASE("text round trip through the C boundary") {
  mk_complex* k = mustCatalog("torus_7");
  Owned text;
  REQUIRE(mk_complex_to_text(k, &text.s) == MK_OK);
  mk_complex* again = nullptr;
  char* err = nullptr;
  REQUIRE(mk_complex_from_text(text.s, &again, &err) == MK_OK);
  Owned t2;
  REQUIRE(mk_complex_to_text(again, &t2.s) == MK_OK);
  CHECK(text.str() == t2.str());
  mk_complex_free(again);
  mk_complex_free(k);
}

TEST_CASE("homology and collapse status codes") {
  mk_complex* dunce = mustCatalog("dunce_hat");
  Owned h;
  char* err = nullptr;
  CHECK(mk_homology_json(dunce, &h.s, &err) == MK_OK);
  CHECK(json::parse(h.str())["acyclic"] == true);

  Owned c;
  CHECK(mk_collapse_json(dunce, 1000000, &c.s, &err) == MK_OBSTRUCTION);
  const auto cj = json::parse(c.str());
  CHECK(cj["collapsible"] == false);
  CHECK(cj["exact"] == true);
  mk_complex_free(dunce);

  mk_complex* tri = mustCatalog("full_simplex_2");
  Owned c2;
  CHECK(mk_collapse_json(tri, 1000000, &c2.s, &err) == MK_OK);
  CHECK(json::parse(c2.str())["sequence"].size() == 3);
  mk_complex_free(tri);
}

TEST_CASE("budget truncation surfaces as MK_BUDGET") {
  mk_complex* dunce = mustCatalog("dunce_hat");
  Owned out;
  char* err = nullptr;
  const mk_status st = mk_nk_json(dunce, 2000, 1, &out.s, &err);
  CHECK(st == MK_BUDGET);
  CHECK(json::parse(out.str())["exact"] == false);
  mk_complex_free(dunce);
}

TEST_CASE("field pipeline: normalize, nkf, certify, dot") {
  mk_complex* k = nullptr;
  char* err = nullptr;
  REQUIRE(mk_complex_from_text("a b\n", &k, &err) == MK_OK);
  mk_field* f = nullptr;
  REQUIRE(mk_field_from_text(k, "a -> a b\n", &f, &err) == MK_OK);

  Owned mf, nj;
  CHECK(mk_normalize_json(k, f, &mf.s, &nj.s, &err) == MK_OK);
  CHECK(json::parse(nj.str())["nkf"] == 0);
  CHECK(mf.str().find("b : 0") != std::string::npos);

  Owned dot;
  CHECK(mk_export_dot(k, f, &dot.s, &err) == MK_OK);
  CHECK(dot.str().find("\"b\" [label=\"b:0\" peripheries=2]") !=
        std::string::npos);
  CHECK(dot.str().find("\"a b\" -> \"a\" [style=bold]") != std::string::npos);

  Owned cert;
  CHECK(mk_certify_json(k, f, &cert.s, &err) == MK_OBSTRUCTION);
  CHECK(json::parse(cert.str())["status"] == "no_obstruction");

  mk_field_free(f);
  mk_complex_free(k);

  // invalid field text
  mk_complex* c3 = mustCatalog("cycle_3");
  mk_field* bad = nullptr;
  CHECK(mk_field_from_text(c3,
                           "v001 -> v001 v002\nv002 -> v002 v003\n"
                           "v003 -> v001 v003\n",
                           &bad, &err) == MK_INPUT_ERROR);
  REQUIRE(err != nullptr);
  mk_string_free(err);
  mk_complex_free(c3);
}

TEST_CASE("torus dot export matches the expected shape") {
  mk_complex* k = mustCatalog("torus_7");
  Owned opt;
  char* err = nullptr;
  REQUIRE(mk_optimal_json(k, 10000000, &opt.s, &err) != MK_INPUT_ERROR);
  const auto oj = json::parse(opt.str());
  REQUIRE(oj["witnesses"].size() > 0);
  std::string fieldText;
  for (const auto& p : oj["witnesses"][0])
    fieldText += p[0].get<std::string>() + " -> " + p[1].get<std::string>() +
                 "\n";
  mk_field* f = nullptr;
  REQUIRE(mk_field_from_text(k, fieldText.c_str(), &f, &err) == MK_OK);
  Owned dot;
  REQUIRE(mk_export_dot(k, f, &dot.s, &err) == MK_OK);
  // 42 cells, 4 critical (doubled border)
  std::size_t nodes = 0, doubled = 0, pos = 0;
  const std::string d = dot.str();
  while ((pos = d.find("[label=", pos)) != std::string::npos) {
    ++nodes;
    ++pos;
  }
  pos = 0;
  while ((pos = d.find("peripheries=2", pos)) != std::string::npos) {
    ++doubled;
    ++pos;
  }
  CHECK(nodes == 42);
  CHECK(doubled == 4);
  mk_field_free(f);
  mk_complex_free(k);
}

TEST_CASE("subdivide and catalog names") {
  mk_complex* k = mustCatalog("full_simplex_2");
  mk_complex* sd = nullptr;
  char* err = nullptr;
  REQUIRE(mk_complex_subdivide(k, &sd, &err) == MK_OK);
  Owned info;
  CHECK(mk_complex_info_json(sd, &info.s) == MK_OK);
  CHECK(json::parse(info.str())["f_vector"] == json({7, 12, 6}));
  mk_complex_free(sd);
  mk_complex_free(k);

  Owned names;
  CHECK(mk_catalog_names(&names.s) == MK_OK);
  CHECK(names.str().find("dunce_hat") != std::string::npos);
}
