#include <doctest.h>

#include "fockcat/fock.hpp"

#include <random>

using namespace fockcat;

namespace {
Multipartition mp(const char* s) { return parse_multipartition(s); }
FockVector single(const Multipartition& m) {
  FockVector v;
  v.add(m, 1);
  return v;
}
}  // namespace

TEST_SUITE("fock") {

TEST_CASE("weights") {
  FockWeight w5;
  w5.add_fundamental(5, 1);
  CHECK(weight_of(mp("[[]]"), {{5}, {0}}) == w5);
  FockWeight w;
  w.add_fundamental(0, 1);
  w.add_root(0, -1);
  CHECK(weight_of(mp("[[1]]"), {{0}, {0}}) == w);
  FockWeight d;
  d.add_fundamental(0, -1);
  d.add_root(0, 1);
  CHECK(weight_of(mp("[[1]]"), {{0}, {1}}) == d);
  CHECK(d.str() == "-w0 + a0");
}

TEST_CASE("Chevalley actions on single slots") {
  SignedTypeFactor f{{0}, {0}};
  CHECK(f_action(1, mp("[[1]]"), f) == single(mp("[[2]]")));
  CHECK(f_action(-1, mp("[[1]]"), f) == single(mp("[[1,1]]")));
  CHECK(f_action(0, mp("[[1]]"), f).empty());
  CHECK(e_action(1, mp("[[2]]"), f) == single(mp("[[1]]")));
  CHECK(e_action(0, mp("[[]]"), f).empty());
  CHECK(e_action(0, mp("[[1]]"), f) == single(mp("[[]]")));
  SignedTypeFactor g{{2}, {1}};
  // Dual slot: f_i removes a box of content -(i - sigma), e_i adds one.
  CHECK(f_action(2, mp("[[1]]"), g) == single(mp("[[]]")));
  CHECK(e_action(1, mp("[[]]"), g).empty());
  CHECK(e_action(2, mp("[[]]"), g) == single(mp("[[1]]")));
}

TEST_CASE("weight shift law, exhaustive") {
  std::mt19937 rng(1);
  for (int arity : {1, 2}) {
    for (int k = 0; k < 6; ++k) {
      SignedTypeFactor f;
      for (int j = 0; j < arity; ++j) {
        f.sigma.push_back(static_cast<int>(rng() % 5) - 2);
        f.c.push_back(static_cast<int>(rng() % 2));
      }
      for (const auto& m : truncated_basis(f, 4)) {
        for (int i = -4; i <= 4; ++i) {
          FockWeight alpha;
          alpha.add_root(i, 1);
          const FockVector down = f_action(i, m, f), up = e_action(i, m, f);
          for (const auto& [t, c] : down.terms()) CHECK(weight_of(t, f) == weight_of(m, f) - alpha);
          for (const auto& [t, c] : up.terms())
            CHECK(weight_of(t, f) - weight_of(m, f) == alpha);
        }
      }
    }
  }
}

TEST_CASE("commutator relations, exhaustive on four boxes") {
  std::mt19937 rng(2);
  for (int arity : {1, 2}) {
    for (int k = 0; k < 6; ++k) {
      SignedTypeFactor f;
      for (int j = 0; j < arity; ++j) {
        f.sigma.push_back(static_cast<int>(rng() % 5) - 2);
        f.c.push_back(static_cast<int>(rng() % 2));
      }
      for (const auto& m : truncated_basis(f, 4)) {
        FockVector v = single(m);
        for (int i = -3; i <= 3; ++i)
          for (int j = -3; j <= 3; ++j) {
            FockVector lhs = e_action(i, f_action(j, v, f), f) - f_action(j, e_action(i, v, f), f);
            FockVector rhs;
            if (i == j) rhs.add(m, weight_of(m, f).pairing(i));
            CHECK(lhs == rhs);
          }
      }
    }
  }
}

TEST_CASE("the S-order is inverse dominance") {
  CHECK(s_order_leq(mp("[[],[]]"), mp("[[1],[1]]"), {{0, 0}, {0, 1}}));
  std::mt19937 rng(5);
  auto elems = multipartitions_up_to(2, 3);
  for (int k = 0; k < 10; ++k) {
    SignedTypeFactor f{{0, static_cast<int>(rng() % 5) - 2}, {static_cast<int>(rng() % 2), static_cast<int>(rng() % 2)}};
    for (const auto& a : elems)
      for (const auto& b : elems) CHECK(s_order_leq(a, b, f) == inv_dominance_leq(a, b, f));
  }
}

}
