// Shared example relations and random generators used across the suites.
#ifndef TESTS_FIXTURES_HPP
#define TESTS_FIXTURES_HPP

#include <map>
#include <random>
#include <string>
#include <vector>

#include "dowker/relation.hpp"
#include "dowker/simplicial_complex.hpp"

namespace fx {

using dowker::Relation;

// 4x6 running example; its Dowker complex is generated by [a,c,d],[a,b],[b,c].
inline Relation r2() {
  return Relation({"a", "b", "c", "d"}, {"1", "2", "3", "4", "5", "6"},
                  {{1, 0, 1, 0, 0, 1},
                   {1, 1, 0, 0, 0, 0},
                   {0, 1, 1, 1, 0, 1},
                   {0, 0, 1, 0, 1, 0}});
}

// 4x20 relation with the same Dowker complex as r2 but different weights.
inline Relation r1_wide() {
  return Relation(
      {"a", "b", "c", "d"},
      {"1",  "2",  "3",  "4",  "5",  "6",  "7",  "8",  "9",  "10",
       "11", "12", "13", "14", "15", "16", "17", "18", "19", "20"},
      {{1, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1},
       {0, 1, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
       {0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1},
       {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 1, 1, 1, 1, 1, 1, 1}});
}

// 5x5 source of the morphism examples.
inline Relation r1() {
  return Relation({"a", "b", "c", "d", "e"}, {"1", "2", "3", "4", "5"},
                  {{1, 1, 0, 0, 0},
                   {1, 0, 1, 0, 0},
                   {0, 1, 1, 1, 1},
                   {0, 0, 1, 1, 0},
                   {0, 0, 0, 1, 1}});
}

// Targets of the morphism examples: (f,g) lands in big_target, (f,g') in
// small_target, and (f,g) is *not* a morphism into small_target.
inline Relation big_target() {  // 3x5
  return Relation({"A", "B", "C"}, {"1", "2", "3", "4", "5"},
                  {{1, 1, 0, 0, 0}, {1, 0, 1, 0, 0}, {0, 1, 1, 1, 1}});
}

inline Relation small_target() {  // 3x5, columns 4 and 5 empty
  return Relation({"A", "B", "C"}, {"1", "2", "3", "4", "5"},
                  {{1, 1, 0, 0, 0}, {1, 0, 1, 0, 0}, {0, 1, 1, 0, 0}});
}

inline Relation square_target() {  // 3x3 target of the redundancy example
  return Relation({"A", "B", "C"}, {"1", "2", "3"},
                  {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
}

inline std::map<std::string, std::string> f_collapse() {
  return {{"a", "A"}, {"b", "B"}, {"c", "C"}, {"d", "C"}, {"e", "C"}};
}

inline std::map<std::string, std::string> g_identity() {
  return {{"1", "1"}, {"2", "2"}, {"3", "3"}, {"4", "4"}, {"5", "5"}};
}

inline std::map<std::string, std::string> g_fold() {
  return {{"1", "1"}, {"2", "2"}, {"3", "3"}, {"4", "3"}, {"5", "3"}};
}

// Output of the total-weight peeling on r2, up to a column bijection.
inline Relation peeled_r2() {
  return Relation({"a", "b", "c", "d"}, {"1", "2", "3", "4", "5", "6"},
                  {{1, 0, 1, 1, 0, 0},
                   {1, 1, 0, 0, 0, 0},
                   {0, 1, 1, 1, 1, 0},
                   {0, 0, 1, 0, 0, 1}});
}

inline dowker::SimplicialComplex dowker_of_r2() {
  using dowker::Simplex;
  return dowker::SimplicialComplex::generated_by(
      {"a", "b", "c", "d"}, {Simplex({0, 2, 3}), Simplex({0, 1}), Simplex({1, 2})});
}

// --- random generators (all take an explicitly seeded engine) --------------

inline Relation random_relation(std::mt19937& rng, int max_x, int max_y) {
  std::uniform_int_distribution<int> dx(1, max_x), dy(1, max_y);
  int nx = dx(rng), ny = dy(rng);
  std::uniform_real_distribution<double> density(0.2, 0.8);
  std::bernoulli_distribution bit(density(rng));
  std::vector<std::vector<int>> m(nx, std::vector<int>(ny, 0));
  for (auto& row : m)
    for (int& e : row) e = bit(rng) ? 1 : 0;
  std::vector<std::string> xs, ys;
  for (int i = 0; i < nx; ++i) xs.push_back("x" + std::to_string(i + 1));
  for (int j = 0; j < ny; ++j) ys.push_back("y" + std::to_string(j + 1));
  return Relation(std::move(xs), std::move(ys), m);
}

// Random relation with no all-zero row or column.
inline Relation random_positive_relation(std::mt19937& rng, int max_x, int max_y) {
  Relation r = random_relation(rng, max_x, max_y);
  std::vector<std::vector<int>> m = r.matrix();
  int nx = r.row_count(), ny = r.col_count();
  std::uniform_int_distribution<int> px(0, nx - 1), py(0, ny - 1);
  for (int i = 0; i < nx; ++i) {
    bool any = false;
    for (int j = 0; j < ny; ++j) any = any || m[i][j];
    if (!any) m[i][py(rng)] = 1;
  }
  for (int j = 0; j < ny; ++j) {
    bool any = false;
    for (int i = 0; i < nx; ++i) any = any || m[i][j];
    if (!any) m[px(rng)][j] = 1;
  }
  return Relation(r.x_labels(), r.y_labels(), m);
}

// A random morphism out of src: picks arbitrary f and g into a fresh target
// whose relation is the pushforward of src plus optional extra pairs, so the
// pair (f,g) is a valid morphism by construction.
struct RandomMorphism {
  Relation target;
  std::vector<int> f, g;
};

inline RandomMorphism random_morphism_from(std::mt19937& rng, const Relation& src,
                                           int max_x, int max_y) {
  std::uniform_int_distribution<int> dx(1, max_x), dy(1, max_y);
  int nx = dx(rng), ny = dy(rng);
  std::uniform_int_distribution<int> fx_(0, nx - 1), fy(0, ny - 1);
  std::vector<int> f(src.row_count()), g(src.col_count());
  for (int& v : f) v = fx_(rng);
  for (int& v : g) v = fy(rng);
  std::vector<std::vector<int>> m(nx, std::vector<int>(ny, 0));
  for (int x = 0; x < src.row_count(); ++x)
    for (int y = 0; y < src.col_count(); ++y)
      if (src.at(x, y)) m[f[x]][g[y]] = 1;
  std::bernoulli_distribution extra(0.15);
  for (auto& row : m)
    for (int& e : row)
      if (!e && extra(rng)) e = 1;
  std::vector<std::string> xs, ys;
  for (int i = 0; i < nx; ++i) xs.push_back("u" + std::to_string(i + 1));
  for (int j = 0; j < ny; ++j) ys.push_back("v" + std::to_string(j + 1));
  return {Relation(std::move(xs), std::move(ys), m), std::move(f), std::move(g)};
}

}  // namespace fx

#endif  // TESTS_FIXTURES_HPP
