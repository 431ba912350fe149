#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dowker/weights.hpp"
#include "fixtures.hpp"

using namespace dowker;

namespace {

Simplex by_labels(const SimplicialComplex& k, const std::vector<std::string>& labels) {
  std::vector<Vertex> vs;
  for (const std::string& l : labels) vs.push_back(k.vertex_id(l));
  return Simplex(vs);
}

}  // namespace

TEST_CASE("total weight of the 4x6 example") {
  WeightFunction t = total_weight(fx::r2());
  const SimplicialComplex& k = t.complex();
  CHECK(t.kind() == WeightKind::total);
  CHECK(t.at(by_labels(k, {"a"})) == 3);
  CHECK(t.at(by_labels(k, {"b"})) == 2);
  CHECK(t.at(by_labels(k, {"c"})) == 4);
  CHECK(t.at(by_labels(k, {"d"})) == 2);
  CHECK(t.at(by_labels(k, {"a", "b"})) == 1);
  CHECK(t.at(by_labels(k, {"a", "c"})) == 2);
  CHECK(t.at(by_labels(k, {"a", "d"})) == 1);
  CHECK(t.at(by_labels(k, {"b", "c"})) == 1);
  CHECK(t.at(by_labels(k, {"c", "d"})) == 1);
  CHECK(t.at(by_labels(k, {"a", "c", "d"})) == 1);
  CHECK(t.at(Simplex{}) == 6);
  CHECK_THROWS_AS(t.at(by_labels(k, {"b", "d"})), std::out_of_range);
}

TEST_CASE("differential weight of the 4x6 example") {
  WeightFunction d = differential_weight(fx::r2());
  const SimplicialComplex& k = d.complex();
  CHECK(d.kind() == WeightKind::differential);
  CHECK(d.at(by_labels(k, {"a", "c", "d"})) == 1);
  CHECK(d.at(by_labels(k, {"a", "b"})) == 1);
  CHECK(d.at(by_labels(k, {"a", "c"})) == 1);
  CHECK(d.at(by_labels(k, {"b", "c"})) == 1);
  CHECK(d.at(by_labels(k, {"c"})) == 1);
  CHECK(d.at(by_labels(k, {"d"})) == 1);
  CHECK(d.at(by_labels(k, {"a"})) == 0);
  CHECK(d.at(by_labels(k, {"b"})) == 0);
  CHECK(d.at(by_labels(k, {"a", "d"})) == 0);
  CHECK(d.at(by_labels(k, {"c", "d"})) == 0);
  CHECK(d.at(Simplex{}) == 0);
  CHECK(d.sum() == 6);
}

TEST_CASE("weights on the 4x20 example differ but describe the same complex") {
  WeightFunction t = total_weight(fx::r1_wide());
  CHECK(t.complex() == total_weight(fx::r2()).complex());
  const SimplicialComplex& k = t.complex();
  CHECK(t.at(by_labels(k, {"a", "c", "d"})) == 4);
  CHECK(t.at(by_labels(k, {"a"})) == 11);
  CHECK(t.at(Simplex{}) == 20);
  CHECK(differential_weight(fx::r1_wide()).sum() == 20);
}

TEST_CASE("differential sums to the column count") {
  std::mt19937 rng(921);
  for (int i = 0; i < 60; ++i) {
    Relation r = fx::random_relation(rng, 6, 8);
    CHECK(differential_weight(r).sum() == r.col_count());
  }
}

TEST_CASE("total is the downward accumulation of differential") {
  std::mt19937 rng(922);
  for (int i = 0; i < 40; ++i) {
    Relation r = fx::random_relation(rng, 6, 8);
    WeightFunction t = total_weight(r), d = differential_weight(r);
    const SimplicialComplex& k = t.complex();
    for (const Simplex& s : k.simplices()) {
      long long acc = 0;
      for (const Simplex& u : k.simplices())
        if (s.subset_of(u)) acc += d.at(u);
      CHECK(t.at(s) == acc);
    }
    CHECK(t.at(Simplex{}) == d.sum());
  }
}

TEST_CASE("total weights are filtrations; the constructor enforces the kind") {
  std::mt19937 rng(923);
  for (int i = 0; i < 30; ++i)
    CHECK(is_filtration(total_weight(fx::random_relation(rng, 6, 8))));

  SimplicialComplex k =
      SimplicialComplex::generated_by({"a", "b"}, {Simplex({0, 1})});
  std::map<Simplex, long long> up = {{Simplex({0}), 1},
                                     {Simplex({1}), 1},
                                     {Simplex({0, 1}), 2},
                                     {Simplex{}, 2}};
  CHECK_THROWS_AS(WeightFunction(k, up, WeightKind::total), std::invalid_argument);
  WeightFunction w(k, up, WeightKind::unchecked);  // same data, no order claim
  CHECK_FALSE(is_filtration(w));
  // the empty simplex participates in the order check
  std::map<Simplex, long long> tiny_empty = {{Simplex({0}), 1},
                                             {Simplex({1}), 1},
                                             {Simplex({0, 1}), 1},
                                             {Simplex{}, 0}};
  CHECK_FALSE(is_filtration(WeightFunction(k, tiny_empty, WeightKind::unchecked)));
}

TEST_CASE("weight construction rejects bad domains") {
  SimplicialComplex k = SimplicialComplex::generated_by({"a", "b"}, {Simplex({0, 1})});
  std::map<Simplex, long long> good = {{Simplex({0}), 1},
                                       {Simplex({1}), 1},
                                       {Simplex({0, 1}), 1},
                                       {Simplex{}, 1}};
  CHECK_NOTHROW(WeightFunction(k, good, WeightKind::total));

  std::map<Simplex, long long> m = good;
  m.erase(Simplex{});
  CHECK_THROWS_AS(WeightFunction(k, m, WeightKind::unchecked), std::invalid_argument);
  m = good;
  m.erase(Simplex({1}));
  CHECK_THROWS_AS(WeightFunction(k, m, WeightKind::unchecked), std::invalid_argument);
  m = good;
  m[Simplex({0})] = -1;
  CHECK_THROWS_AS(WeightFunction(k, m, WeightKind::unchecked), std::invalid_argument);
  m = good;
  m[Simplex({9})] = 1;
  CHECK_THROWS_AS(WeightFunction(k, m, WeightKind::unchecked), std::invalid_argument);
}

TEST_CASE("differential reconstruction inverts up to a column bijection") {
  Relation r = fx::r2();
  Relation back = reconstruct_from_differential(dowker_complex(r), differential_weight(r));
  CHECK(same_up_to_column_bijection(r, back));
  CHECK(dowker_complex(back) == dowker_complex(r));

  std::mt19937 rng(924);
  for (int i = 0; i < 80; ++i) {
    Relation s = fx::random_relation(rng, 6, 8);
    Relation b = reconstruct_from_differential(dowker_complex(s), differential_weight(s));
    CHECK(same_up_to_column_bijection(s, b));
  }
}

TEST_CASE("zero columns come back as zero columns, in last position") {
  Relation r({"a", "b"}, {"1", "2", "3"}, {{1, 0, 0}, {1, 0, 1}});
  Relation back = reconstruct_from_differential(dowker_complex(r), differential_weight(r));
  CHECK(back.col_count() == 3);
  CHECK(back.col_support(2).empty());  // the d(empty) column trails
  CHECK(same_up_to_column_bijection(r, back));
}

TEST_CASE("total reconstruction matches the worked example") {
  Relation r = fx::r2();
  TotalReconstruction res = reconstruct_from_total(dowker_complex(r), total_weight(r));
  REQUIRE(std::holds_alternative<Relation>(res));
  const Relation& back = std::get<Relation>(res);
  CHECK(same_up_to_column_bijection(back, fx::peeled_r2()));
  CHECK(same_up_to_column_bijection(back, r));
}

TEST_CASE("total reconstruction round trips on random relations") {
  std::mt19937 rng(925);
  for (int i = 0; i < 80; ++i) {
    Relation s = fx::random_relation(rng, 6, 8);
    TotalReconstruction res = reconstruct_from_total(dowker_complex(s), total_weight(s));
    REQUIRE(std::holds_alternative<Relation>(res));
    CHECK(same_up_to_column_bijection(s, std::get<Relation>(res)));
  }
}

TEST_CASE("peeling is independent of the admissible-simplex choice") {
  std::mt19937 rng(926);
  auto last = [](const std::vector<Simplex>& v) { return v.size() - 1; };
  auto mid = [](const std::vector<Simplex>& v) { return v.size() / 2; };
  for (int i = 0; i < 25; ++i) {
    Relation s = fx::random_relation(rng, 5, 7);
    SimplicialComplex k = dowker_complex(s);
    WeightFunction t = total_weight(s);
    TotalReconstruction a = reconstruct_from_total(k, t);
    TotalReconstruction b = reconstruct_from_total(k, t, last);
    TotalReconstruction c = reconstruct_from_total(k, t, mid);
    REQUIRE(std::holds_alternative<Relation>(a));
    REQUIRE(std::holds_alternative<Relation>(b));
    REQUIRE(std::holds_alternative<Relation>(c));
    CHECK(same_up_to_column_bijection(std::get<Relation>(a), std::get<Relation>(b)));
    CHECK(same_up_to_column_bijection(std::get<Relation>(a), std::get<Relation>(c)));
  }
}

TEST_CASE("the constant-1 filtration on the two-edge path is not realizable") {
  SimplicialComplex k = SimplicialComplex::generated_by(
      {"a", "b", "c"}, {Simplex({0, 1}), Simplex({1, 2})});
  std::map<Simplex, long long> ones;
  for (const Simplex& s : k.simplices()) ones[s] = 1;
  ones[Simplex{}] = 1;
  WeightFunction t(k, ones, WeightKind::total);  // it *is* a filtration
  TotalReconstruction res = reconstruct_from_total(k, t);
  REQUIRE(std::holds_alternative<NotRealizable>(res));
  const NotRealizable& nr = std::get<NotRealizable>(res);
  CHECK(nr.offending == by_labels(k, {"b"}));
  CHECK(nr.snapshot.at(by_labels(k, {"b"})) == -1);
  // the failure happened while clearing [b,c], after [a,b] was consumed
  CHECK(nr.snapshot.at(by_labels(k, {"a", "b"})) == 0);
  CHECK(nr.snapshot.at(by_labels(k, {"b", "c"})) == 0);
  CHECK(nr.snapshot.at(by_labels(k, {"c"})) == 1);
}

TEST_CASE("reconstruction rejects weights from a different complex") {
  WeightFunction t = total_weight(fx::r2());
  SimplicialComplex other =
      SimplicialComplex::generated_by({"a", "b"}, {Simplex({0, 1})});
  CHECK_THROWS_AS(reconstruct_from_total(other, t), std::invalid_argument);
  CHECK_THROWS_AS(reconstruct_from_differential(other, differential_weight(fx::r2())),
                  std::invalid_argument);
}

TEST_CASE("weights are not functorial even when the induced maps agree") {
  // one source, two targets with identical Dowker complexes and identical
  // induced simplicial maps, but different weights
  Relation src({"x"}, {"y1"}, {{1}});
  Relation t1({"X"}, {"Y1"}, {{1}});
  Relation t2({"X"}, {"Y1", "Y2"}, {{1, 1}});
  RelMorphism m1 = make_morphism(src, t1, std::vector<int>{0}, std::vector<int>{0});
  RelMorphism m2 = make_morphism(src, t2, std::vector<int>{0}, std::vector<int>{0});
  SimplicialMap d1 = induced_simplicial_map(m1);
  SimplicialMap d2 = induced_simplicial_map(m2);
  CHECK(d1 == d2);  // nothing downstream of D distinguishes the targets
  WeightFunction w1 = total_weight(t1), w2 = total_weight(t2);
  CHECK(w1.at(Simplex({0})) == 1);
  CHECK(w2.at(Simplex({0})) == 2);  // but the weights do
}
