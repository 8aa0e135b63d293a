#include <doctest.h>

#include "fockcat/strata.hpp"

#include <random>

using namespace fockcat;

namespace {

ParameterPoint point(const char* t, const char* s) { return ParameterPoint::make(parse_expr_list(t), parse_expr_list(s)); }

// Random point whose s_i are integer shifts of partial sums of t, fresh symbols, or constants.
ParameterPoint random_point(std::mt19937& rng) {
  const int n = 1 + static_cast<int>(rng() % 3);
  std::vector<ParamExpr> t, s;
  for (int i = 1; i <= n; ++i) {
    if (rng() % 3 == 0)
      t.push_back(ParamExpr(Rational(static_cast<int>(rng() % 7) * 2 + 1, 2)));
    else
      t.push_back(ParamExpr::var("x" + std::to_string(i)));
  }
  auto T = [&](int i) {
    ParamExpr acc;
    for (int k = 1; k < i; ++k) acc += t[k - 1];
    return acc;
  };
  for (int i = 1; i <= n; ++i) {
    const int kind = static_cast<int>(rng() % 3);
    ParamExpr shift(static_cast<long>(rng() % 5) - 2);
    if (kind == 0)
      s.push_back(T(1 + static_cast<int>(rng() % (n + 1))) + shift);
    else if (kind == 1)
      s.push_back(ParamExpr::var("u" + std::to_string(i)) + shift);
    else
      s.push_back(shift);
  }
  return ParameterPoint::make(t, s);
}

}  // namespace

TEST_SUITE("strata") {

TEST_CASE("rank one") {
  auto sd = derive_stratum(point("x", "0"));
  CHECK(sd.gammas == std::vector<ParamExpr>{ParamExpr(0), -ParamExpr::var("x")});
  CHECK(sd.parts == std::vector<std::vector<int>>{{1}, {2}});
  CHECK(sd.factors[0] == SignedTypeFactor{{0}, {0}});
  CHECK(sd.factors[1] == SignedTypeFactor{{0}, {1}});
  CHECK(sd.admissible);
}

TEST_CASE("worked n=2 stratum") {
  auto sd = derive_stratum(point("x,y", "0,x"));
  CHECK(sd.gammas[3] == -ParamExpr::var("y"));
  CHECK(sd.parts == std::vector<std::vector<int>>{{1, 3}, {2}, {4}});
  CHECK(sd.factors[0] == SignedTypeFactor{{0, 0}, {0, 0}});
  CHECK(sd.admissible);
  CHECK(derive_stratum(point("x,y", "u,v")).parts.size() == 4);
  CHECK_FALSE(inadmissible_triple_check(point("x,y", "u,v")));
  // s = (0,0) is not generic: gamma_2 = gamma_3 = -x.
  auto zero = derive_stratum(point("x,y", "0,0"));
  CHECK(zero.parts == std::vector<std::vector<int>>{{1}, {2, 3}, {4}});
  CHECK(zero.factors[1] == SignedTypeFactor{{0, 0}, {1, 0}});
  CHECK(zero.verdicts[1].kind == AdmissibleKind::Upper);
}

TEST_CASE("integer ranks are rejected") {
  CHECK_THROWS_AS(derive_stratum(point("2,y", "0,0")), Error);
  try {
    derive_stratum(point("x,y-y+3", "0,0"));
    FAIL("expected IntegerRank");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IntegerRank);
  }
}

TEST_CASE("an inadmissible n=3 point") {
  // gamma_1 = gamma_4 and gamma_4 = gamma_5 + 1: indices 1 < 4 < 5 alternate parity.
  auto p = point("x,y,z", "0,x+y,x+y-1");
  auto sd = derive_stratum(p);
  CHECK_FALSE(sd.admissible);
  CHECK(inadmissible_triple_check(p));
}

TEST_CASE("two characterizations of admissibility agree on random points") {
  std::mt19937 rng(17);
  int inadmissible = 0;
  for (int k = 0; k < 400; ++k) {
    auto p = random_point(rng);
    auto sd = derive_stratum(p);
    CHECK(sd.admissible == !inadmissible_triple_check(p));
    inadmissible += !sd.admissible;
    // Equivalence classes and integral shifts.
    for (std::size_t l = 0; l < sd.parts.size(); ++l) {
      CHECK(sd.factors[l].sigma[0] == 0);
      for (std::size_t a = 0; a < sd.parts[l].size(); ++a) {
        int i = sd.parts[l][a];
        CHECK(sd.factors[l].c[a] == (i % 2 == 1 ? 0 : 1));
        CHECK(*expr_is_integer(sd.gammas[i - 1] - sd.gammas[sd.parts[l][0] - 1]) == sd.factors[l].sigma[a]);
      }
    }
    for (int i = 1; i <= sd.arity(); ++i)
      for (int j = 1; j <= sd.arity(); ++j)
        CHECK(expr_is_integer(sd.gammas[i - 1] - sd.gammas[j - 1]).has_value() ==
              (sd.locate(i).first == sd.locate(j).first));
  }
  CHECK(inadmissible > 0);
}

TEST_CASE("translation eigenvalues") {
  auto p = point("x", "0");
  auto ev = translation_eigenvalues(parse_multipartition("[[],[]]"), p);
  REQUIRE(ev.size() == 1);
  CHECK(ev[0].value == ParamExpr(0));
  ev = translation_eigenvalues(parse_multipartition("[[1],[]]"), p);
  REQUIRE(ev.size() == 2);
  CHECK(ev[0].value == ParamExpr(1));
  CHECK(ev[1].value == ParamExpr(-1));
  ev = translation_eigenvalues(parse_multipartition("[[],[1]]"), p);
  REQUIRE(ev.size() == 2);
  CHECK(ev[0].value == ParamExpr(0));
  CHECK(ev[1].value == -ParamExpr::var("x"));
}

TEST_CASE("eigenvalue classes follow the set partition") {
  std::mt19937 rng(23);
  for (int k = 0; k < 100; ++k) {
    auto p = random_point(rng);
    auto sd = derive_stratum(p);
    auto all = multipartitions_up_to(2 * p.n, 3);
    const auto& lam = all[rng() % all.size()];
    auto ev = translation_eigenvalues(lam, p);
    for (const auto& a : ev)
      for (const auto& b : ev)
        CHECK(expr_is_integer(a.value - b.value).has_value() == (sd.locate(a.index).first == sd.locate(b.index).first));
  }
}

}
