#include <catch2/catch_amalgamated.hpp>

#include "foldlift/rootsys.hpp"

using namespace foldlift;

TEST_CASE("catalog originals have the advertised diagrams") {
  RootDatum a4 = catalog_original("A4H2");
  CHECK(a4.rank == 4);
  CHECK(a4.gram.at(0, 0) == QElem(1));
  CHECK(a4.gram.at(0, 1) == qfrac(-1, 2));
  CHECK(a4.gram.at(0, 2) == QElem(0));

  RootDatum e8 = catalog_original("E8H4");
  CHECK(e8.rank == 8);
  // edges {12,23,34,45,56,67,58}
  CHECK(e8.gram.at(4, 7) == qfrac(-1, 2));
  CHECK(e8.gram.at(3, 7) == QElem(0));

  RootDatum a3 = catalog_original("A3C2");
  CHECK(a3.rank == 3);
  CHECK(a3.gram.at(0, 2) == QElem(0));

  CHECK_THROWS_AS(catalog_original("Z9"), error);
}

TEST_CASE("reflection formula") {
  RootDatum a2 = type_a_datum(2);
  RootVector a1 = a2.simple_root(1), al2 = a2.simple_root(2);
  CHECK(reflect(a2, a1, a1) == -a1);
  // s1(alpha2) = alpha1 + alpha2
  RootVector img = reflect(a2, a1, al2);
  CHECK(img == a1 + al2);
  // orthogonal vectors are fixed
  RootDatum a3 = type_a_datum(3);
  CHECK(reflect(a3, a3.simple_root(1), a3.simple_root(3)) == a3.simple_root(3));
}

TEST_CASE("positive root counts") {
  CHECK(type_a_datum(2).positive.size() == 3);
  CHECK(type_a_datum(3).positive.size() == 6);
  CHECK(type_a_datum(4).positive.size() == 10);
  CHECK(catalog_original("D4B3").positive.size() == 12);
  CHECK(catalog_original("D6H3").positive.size() == 30);
  CHECK(catalog_original("E6F4").positive.size() == 36);
  CHECK(catalog_original("E8H4").positive.size() == 120);
}

TEST_CASE("root set is stable under simple reflections") {
  for (const char* id : {"A4H2", "D4B3", "A3C2"}) {
    RootDatum d = catalog_original(id);
    for (const auto& r : d.positive)
      for (int i = 1; i <= d.rank; ++i) CHECK(d.is_root(d.simple_reflection(i) * r.coords));
  }
}

TEST_CASE("cached reflection matrices match the bilinear-form formula") {
  RootDatum d = catalog_original("D4B3");
  for (const auto& r : d.positive) {
    for (int j = 1; j <= d.rank; ++j) {
      RootVector x = d.simple_root(j);
      CHECK(r.reflection * x == reflect(d, r.coords, x));
    }
  }
}

TEST_CASE("reflections are isometries of the form") {
  RootDatum d = catalog_original("A4H2");
  for (int i = 1; i <= d.rank; ++i) {
    const Mat& s = d.simple_reflection(i);
    for (int j = 1; j <= d.rank; ++j)
      for (int k = j; k <= d.rank; ++k) {
        RootVector x = d.simple_root(j), y = d.simple_root(k);
        CHECK(d.form(s * x, s * y) == d.form(x, y));
      }
  }
}

TEST_CASE("simply-laced Cartan numbers") {
  RootDatum d = catalog_original("E6F4");
  // 2<ai,aj>/<ai,ai> is -1 on edges, 0 otherwise
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j) {
      if (i == j) continue;
      QElem c = QElem(2) * d.gram.at(i, j);
      CHECK((c == QElem(0) || c == QElem(-1)));
    }
  CHECK(d.coxeter_m(1, 2) == 2);  // E6 labelling: 1 adjacent to 3 only
  CHECK(d.coxeter_m(1, 3) == 3);
}

TEST_CASE("isotropic reflection is rejected") {
  RootDatum d = type_a_datum(2);
  RootVector zero(2);
  CHECK_THROWS_AS(reflect(d, zero, d.simple_root(1)), error);
}
