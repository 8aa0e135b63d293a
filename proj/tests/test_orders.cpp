#include <doctest.h>

#include "fockcat/orders.hpp"

#include <algorithm>
#include <random>

using namespace fockcat;

namespace {

Multipartition mp(const char* s) { return parse_multipartition(s); }

// Direct transcription of the defining inequalities over a fixed window of b.
bool naive_leq(const Multipartition& l, const Multipartition& m, const SignedTypeFactor& f) {
  for (int N = 1; N <= f.arity(); ++N) {
    for (int b = -15; b <= 15; ++b) {
      int sl = 0, sm = 0;
      for (int i = 0; i < N; ++i) {
        int sign = f.c[i] ? -1 : 1;
        sl += sign * content_count(l[i], sign * (b - f.sigma[i]));
        sm += sign * content_count(m[i], sign * (b - f.sigma[i]));
      }
      if (sl > sm) return false;
      if (N == f.arity() && sl != sm) return false;
    }
  }
  return true;
}

std::vector<SignedTypeFactor> random_types(int arity, int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> sig(-2, 2), bit(0, 1);
  std::vector<SignedTypeFactor> out;
  for (int k = 0; k < count; ++k) {
    SignedTypeFactor f;
    for (int i = 0; i < arity; ++i) {
      f.sigma.push_back(i == 0 ? 0 : sig(rng));
      f.c.push_back(bit(rng));
    }
    out.push_back(f);
  }
  return out;
}

}  // namespace

TEST_SUITE("orders") {

TEST_CASE("worked comparisons") {
  SignedTypeFactor f01{{0, 0}, {0, 1}}, f00{{0, 0}, {0, 0}};
  CHECK(inv_dominance_leq(mp("[[1],[1]]"), mp("[[1],[1]]"), f01));
  CHECK(inv_dominance_leq(mp("[[],[]]"), mp("[[1],[1]]"), f01));
  CHECK_FALSE(inv_dominance_leq(mp("[[1],[]]"), mp("[[],[1]]"), f00));
  CHECK(inv_dominance_leq(mp("[[],[1]]"), mp("[[1],[]]"), f00));
  CHECK_THROWS_AS(inv_dominance_leq(mp("[[1]]"), mp("[[1],[]]"), f00), Error);
}

TEST_CASE("admissibility classification") {
  CHECK(classify_admissible({0, 0, 1}) == AdmissibilityVerdict{AdmissibleKind::Lower, 2});
  CHECK(classify_admissible({1, 0}) == AdmissibilityVerdict{AdmissibleKind::Upper, 1});
  CHECK(classify_admissible({0, 1, 0}).kind == AdmissibleKind::Inadmissible);
  CHECK(classify_admissible({1, 1}) == AdmissibilityVerdict{AdmissibleKind::Lower, 0});
  CHECK(classify_admissible({0, 0}) == AdmissibilityVerdict{AdmissibleKind::Lower, 2});
}

TEST_CASE("restricted sets") {
  SignedTypeFactor f{{0, 0}, {0, 1}};
  CHECK(in_restricted(mp("[[1],[1]]"), f, 1, 1));
  CHECK_FALSE(in_restricted(mp("[[2],[]]"), f, 1, 5));
  CHECK(in_restricted(mp("[[],[]]"), f, 0, 0));
  CHECK_THROWS_AS(in_restricted(mp("[[],[],[]]"), SignedTypeFactor{{0, 0, 0}, {0, 1, 0}}, 1, 1), Error);
}

TEST_CASE("down sets and intervals") {
  SignedTypeFactor f01{{0, 0}, {0, 1}}, f00{{0, 0}, {0, 0}};
  CHECK(down_set(mp("[[],[]]"), f01) == std::vector<Multipartition>{mp("[[],[]]")});
  CHECK(down_set(mp("[[1],[1]]"), f01) == std::vector<Multipartition>{mp("[[],[]]"), mp("[[1],[1]]")});
  CHECK(down_set(mp("[[1],[]]"), f00) == std::vector<Multipartition>{mp("[[],[1]]"), mp("[[1],[]]")});
  CHECK(interval(mp("[[1],[1]]"), mp("[[1],[1]]"), f01) == std::vector<Multipartition>{mp("[[1],[1]]")});
  CHECK(interval(mp("[[1],[1]]"), mp("[[],[]]"), f01) == std::vector<Multipartition>{mp("[[],[]]"), mp("[[1],[1]]")});
  CHECK(interval(mp("[[],[1]]"), mp("[[1],[]]"), f00).empty());
}

TEST_CASE("poset axioms, ideal property and finiteness, exhaustive") {
  for (int arity : {2, 3}) {
    auto elems = multipartitions_up_to(arity, arity == 2 ? 4 : 3);
    for (const auto& f : random_types(arity, 10, 11 + arity)) {
      const std::size_t n = elems.size();
      std::vector<char> rel(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rel[i * n + j] = inv_dominance_leq(elems[i], elems[j], f);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(rel[i * n + i]);
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j && rel[i * n + j]) CHECK_FALSE(rel[j * n + i]);
          if (!rel[i * n + j]) continue;
          for (std::size_t k = 0; k < n; ++k)
            if (rel[j * n + k]) CHECK(rel[i * n + k]);
        }
      }
      for (std::size_t i = 0; i < std::min<std::size_t>(n, 40); ++i)
        for (std::size_t j = 0; j < n; ++j) CHECK(rel[i * n + j] == naive_leq(elems[i], elems[j], f));
      auto v = classify_admissible(f.c);
      if (v.kind == AdmissibleKind::Inadmissible) continue;
      for (std::size_t i = 0; i < n; ++i) {
        for (int m1 = 0; m1 <= 2; ++m1)
          for (int m2 = 0; m2 <= 2; ++m2) {
            if (!in_restricted(elems[i], f, m1, m2)) continue;
            for (std::size_t j = 0; j < n; ++j) {
              bool related = v.kind == AdmissibleKind::Lower ? rel[j * n + i] : rel[i * n + j];
              if (related) CHECK(in_restricted(elems[j], f, m1, m2));
            }
          }
      }
    }
  }
}

TEST_CASE("down set agrees with brute force and is stable under bound inflation") {
  std::mt19937 rng(3);
  for (int arity : {2, 3}) {
    auto elems = multipartitions_up_to(arity, 3);
    auto big = multipartitions_up_to(arity, 5);
    for (const auto& f0 : random_types(arity, 10, 5 + arity)) {
      SignedTypeFactor f = f0;
      std::sort(f.c.begin(), f.c.end());  // lower admissible
      for (int k = 0; k < 5; ++k) {
        const auto& lam = elems[rng() % elems.size()];
        auto ds = down_set(lam, f);
        CHECK(ds == down_set(lam, f, 2));
        std::vector<Multipartition> brute;
        for (const auto& m : big)
          if (naive_leq(m, lam, f)) brute.push_back(m);
        std::sort(brute.begin(), brute.end());
        CHECK(ds == brute);
      }
      SignedTypeFactor g = f;
      std::reverse(g.c.begin(), g.c.end());  // upper admissible
      for (int k = 0; k < 5; ++k) {
        const auto& lam = elems[rng() % elems.size()];
        auto us = up_set(lam, g);
        CHECK(us == up_set(lam, g, 2));
        for (const auto& m : us) CHECK(naive_leq(lam, m, g));
      }
    }
  }
}

TEST_CASE("interval matches filtered enumeration") {
  std::mt19937 rng(9);
  auto elems = multipartitions_up_to(2, 4);
  for (const auto& f : random_types(2, 10, 21)) {
    for (int k = 0; k < 20; ++k) {
      const auto& a = elems[rng() % elems.size()];
      const auto& b = elems[rng() % elems.size()];
      auto iv = interval(a, b, f);
      std::vector<Multipartition> brute;
      for (const auto& m : multipartitions_up_to(2, 8))
        if (naive_leq(b, m, f) && naive_leq(m, a, f)) brute.push_back(m);
      std::sort(brute.begin(), brute.end());
      CHECK(iv == brute);
    }
  }
}

TEST_CASE("arity one with c=0 is discrete") {
  SignedTypeFactor f{{0}, {0}};
  auto elems = multipartitions_up_to(1, 5);
  for (const auto& a : elems)
    for (const auto& b : elems) CHECK(inv_dominance_leq(a, b, f) == (a == b));
}

TEST_CASE("interpolated dominance") {
  CHECK(interpolated_dominance_leq(mp("[[1],[],[],[]]"), mp("[[1],[],[],[]]")));
  CHECK(interpolated_dominance_leq(mp("[[],[],[1],[]]"), mp("[[1],[],[],[]]")));
  CHECK_FALSE(interpolated_dominance_leq(mp("[[1],[],[],[]]"), mp("[[],[],[1],[]]")));
  CHECK_THROWS_AS(interpolated_dominance_leq(mp("[[1]]"), mp("[[1]]")), Error);
  std::mt19937 rng(4);
  auto elems = multipartitions_up_to(4, 4);
  for (int k = 0; k < 400; ++k) {
    const auto& a = elems[rng() % elems.size()];
    const auto& b = elems[rng() % elems.size()];
    CHECK(interpolated_dominance_leq(a, b) == interpolated_dominance_leq(a, b, 5));
  }
}

}
