#include <set>
#include <vector>

#include "catch_amalgamated.hpp"
#include "proth/engine.hpp"
#include "proth/family.hpp"

using namespace proth;

namespace {

std::vector<long long> to_ll(const std::vector<BigInt>& xs) {
  std::vector<long long> out;
  for (const BigInt& x : xs) out.push_back(x.convert_to<long long>());
  return out;
}

CoefficientTuple tup(std::initializer_list<int> xs) {
  CoefficientTuple t;
  for (int x : xs) t.push_back(static_cast<std::uint8_t>(x));
  return t;
}

}  // namespace

TEST_CASE("proth_params") {
  SECTION("(3,3): r=1, closed form") {
    const auto p = proth_params(3, 3);
    REQUIRE(p.r == 1);
    REQUIRE(p.closed_form_available);
  }
  SECTION("(3,5): r=2, closed form") {
    const auto p = proth_params(3, 5);
    REQUIRE(p.r == 2);
    REQUIRE(p.closed_form_available);
  }
  SECTION("(4,7): r=2, no closed form") {
    const auto p = proth_params(4, 7);
    REQUIRE(p.r == 2);
    REQUIRE_FALSE(p.closed_form_available);
  }
  SECTION("validation errors") {
    REQUIRE_THROWS_AS(proth_params(3, 9), k_too_large_error);
    REQUIRE_THROWS_AS(proth_params(2, 3), n_too_small_error);
    REQUIRE_THROWS_AS(proth_params(4, 6), k_even_error);
    REQUIRE_THROWS_AS(proth_params(4, 1), k_is_one_error);
  }
}

TEST_CASE("generator formula") {
  const auto p = proth_params(3, 3);
  REQUIRE(generator(p, 0) == 25);
  REQUIRE(generator(p, 4) == 385);
  REQUIRE(generator(proth_params(3, 5), 5) == 1281);
  SECTION("doubling recurrence s_{i+1} = 2 s_i - 1") {
    for (const auto& q : {proth_params(3, 3), proth_params(5, 11),
                          proth_params(6, 21)})
      for (long i = 0; i <= q.n + q.r + 8; ++i)
        REQUIRE(generator(q, i + 1) == 2 * generator(q, i) - 1);
  }
}

TEST_CASE("minimal_generating_set and embedding_dimension") {
  REQUIRE(to_ll(minimal_generating_set(proth_params(3, 3)).s) ==
          std::vector<long long>{25, 49, 97, 193, 385});
  REQUIRE(to_ll(minimal_generating_set(proth_params(3, 5)).s) ==
          std::vector<long long>{41, 81, 161, 321, 641, 1281});
  REQUIRE(to_ll(minimal_generating_set(proth_params(4, 3)).s) ==
          std::vector<long long>{49, 97, 193, 385, 769, 1537});
  REQUIRE(embedding_dimension(proth_params(3, 3)) == 5);
  REQUIRE(embedding_dimension(proth_params(3, 5)) == 6);
  REQUIRE(embedding_dimension(proth_params(4, 3)) == 6);
}

TEST_CASE("rewrite constants and identities") {
  const auto p = proth_params(3, 3);
  const auto c = rewrite_constants(p);
  REQUIRE(c.alpha == 19);
  REQUIRE(c.beta == 6);
  SECTION("2 s_{n+r} - 1 = alpha s_0 + beta s_1") {
    REQUIRE(2 * generator(p, 4) - 1 == 769);
    REQUIRE(c.alpha * generator(p, 0) + c.beta * generator(p, 1) == 769);
  }
  SECTION("part 2 at i=1: s_1 + 2 s_4 = 2 s_0 + alpha s_0 + beta s_1") {
    REQUIRE(generator(p, 1) + 2 * generator(p, 4) == 819);
    REQUIRE(2 * generator(p, 0) + c.alpha * generator(p, 0) +
                c.beta * generator(p, 1) ==
            819);
  }
  SECTION("check_rewrite_identity examples") {
    REQUIRE(check_rewrite_identity(p, 1, 2));
    REQUIRE(check_rewrite_identity(p, 2, 4));
    REQUIRE_THROWS_AS(check_rewrite_identity(p, 0, 1),
                      index_out_of_range_error);
    REQUIRE_THROWS_AS(check_rewrite_identity(p, 2, 5),
                      index_out_of_range_error);
  }
  SECTION("all valid pairs, several parameter points") {
    for (const auto& q : {proth_params(3, 3), proth_params(4, 5),
                          proth_params(5, 9), proth_params(6, 23)})
      for (long i = 1; i <= q.n + q.r; ++i)
        for (long j = i; j <= q.n + q.r; ++j)
          REQUIRE(check_rewrite_identity(q, i, j));
  }
}

TEST_CASE("enumerate_P") {
  const auto p = proth_params(3, 3);
  const auto tuples = enumerate_P(p);
  SECTION("count is 2^{n+r+1} - 1") {
    REQUIRE(tuples.size() == 31);
  }
  SECTION("lexicographic order, no duplicates, all valid") {
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      REQUIRE(is_valid_tuple(tuples[i]));
      if (i > 0) REQUIRE(tuples[i - 1] < tuples[i]);
    }
  }
  SECTION("at most one 2 and only with zero prefix (index >= 2)") {
    for (const auto& t : tuples) {
      int twos = 0;
      for (auto a : t) twos += a == 2;
      REQUIRE(twos <= 1);
    }
  }
  SECTION("membership predicate") {
    REQUIRE_FALSE(is_valid_tuple(tup({0, 1, 2, 0})));
    REQUIRE(is_valid_tuple(tup({2, 0, 1, 1})));
  }
  SECTION("count on larger points") {
    REQUIRE(enumerate_P(proth_params(4, 5)).size() == (1u << 7) - 1);
    REQUIRE(enumerate_P(proth_params(5, 9)).size() == (1u << 9) - 1);
  }
}

TEST_CASE("forbidden_set") {
  const auto p = proth_params(3, 3);
  const auto F = forbidden_set(p);
  SECTION("cardinality 2^{n+r} - 2^n - 2") {
    REQUIRE(F.size() == 6);
    REQUIRE(forbidden_set(proth_params(4, 5)).size() == (1u << 6) - 16 - 2);
    REQUIRE(forbidden_set(proth_params(5, 9)).size() == (1u << 8) - 32 - 2);
  }
  SECTION("2 s_{n+r} is forbidden") {
    REQUIRE(F.contains(tup({0, 0, 0, 2})));
  }
  SECTION("s_n + s_{n+r} is excluded") {
    REQUIRE_FALSE(F.contains(tup({0, 0, 1, 1})));
    REQUIRE_FALSE(F.contains(tup({1, 0, 1, 1})));
    REQUIRE_FALSE(F.contains(tup({2, 0, 1, 1})));
  }
  SECTION("closed form gated on k = 2^r + 1") {
    REQUIRE_THROWS_AS(forbidden_set(proth_params(4, 7)),
                      closed_form_unavailable_error);
  }
  SECTION("F is a subset of P(r,n)") {
    for (const auto& t : F) REQUIRE(is_valid_tuple(t));
  }
}

TEST_CASE("apery_closed_form") {
  const auto p = proth_params(3, 3);
  const auto ap = apery_closed_form(p);
  SECTION("cardinality s_0, contains 0 and w(1)") {
    REQUIRE(ap.size() == 25);
    REQUIRE(ap.front() == 0);
    REQUIRE(std::find(ap.begin(), ap.end(), BigInt(676)) != ap.end());
  }
  SECTION("values distinct (tuple injectivity)") {
    std::set<BigInt> distinct(ap.begin(), ap.end());
    REQUIRE(distinct.size() == ap.size());
  }
  SECTION("residues mod s_0 are complete") {
    std::set<BigInt> res;
    for (const BigInt& v : ap) res.insert(v % 25);
    REQUIRE(res.size() == 25);
  }
  SECTION("every nonzero element has a member successor") {
    const auto S = GeneratorSet::from({25, 49, 97, 193, 385});
    for (const BigInt& v : ap)
      if (v != 0) REQUIRE(membership(S, Int(v.convert_to<long long>()) + 1));
  }
}

TEST_CASE("not-Apery exclusion identities") {
  // (a) s_{n+l} + s_{n+r} - s_0, (b) s_i + s_n + s_{n+r} - s_0,
  // (c) s_1 + s_i + s_n + s_{n+r} - s_0 are all members: each equals an
  // explicit nonnegative combination of s_0 and s_1.
  for (const auto& p : {proth_params(3, 3), proth_params(4, 5),
                        proth_params(6, 9)}) {
    const BigInt s0 = generator(p, 0), s1 = generator(p, 1);
    for (long l = 1; l <= p.r; ++l) {
      const BigInt lhs =
          generator(p, p.n + l) + generator(p, p.n + p.r) - s0;
      const BigInt c0 = (BigInt(1) << (p.n + p.r)) -
                        (BigInt(1) << (p.n + l)) + (BigInt(1) << (p.n + 1)) +
                        4;
      const BigInt c1 = (BigInt(1) << (p.n + l)) - (BigInt(1) << p.n) - 3;
      REQUIRE(c1 >= 0);
      REQUIRE(lhs == c0 * s0 + c1 * s1);
    }
    for (long i = 2; i <= p.n; ++i) {
      const BigInt base = generator(p, p.n) + generator(p, p.n + p.r) - s0;
      const BigInt c0 = BigInt(p.k) * (BigInt(1) << p.n) + 2 -
                        ((BigInt(1) << i) - 4);
      const BigInt c1 = (BigInt(1) << i) - 4;
      REQUIRE(generator(p, i) + base == c0 * s0 + c1 * s1);
      REQUIRE(s1 + generator(p, i) + base == c0 * s0 + (c1 + 1) * s1);
    }
  }
}

TEST_CASE("frobenius_closed_form") {
  REQUIRE(frobenius_closed_form(proth_params(3, 3)) == 651);
  REQUIRE(frobenius_closed_form(proth_params(3, 5)) == 1723);
  REQUIRE(frobenius_closed_form(proth_params(4, 3)) == 2451);
  REQUIRE_THROWS_AS(frobenius_closed_form(proth_params(4, 7)),
                    closed_form_unavailable_error);
}

TEST_CASE("pf_closed_form and type") {
  const auto p = proth_params(3, 3);
  REQUIRE(to_ll(pf_closed_form(p)) == std::vector<long long>{363, 555, 651});
  REQUIRE(type_closed_form(p) == 3);
  for (const auto& q : {proth_params(3, 3), proth_params(4, 5),
                        proth_params(5, 9), proth_params(7, 3)}) {
    const auto pf = pf_closed_form(q);
    REQUIRE(pf.size() == static_cast<std::size_t>(q.r + q.n - 1));
    REQUIRE(pf.back() == frobenius_closed_form(q));
  }
}

TEST_CASE("genus_lower_bound") {
  REQUIRE(genus_lower_bound(proth_params(3, 3)) == 326);
  REQUIRE(genus_lower_bound(proth_params(3, 5)) == 862);
  for (const auto& q : {proth_params(3, 3), proth_params(4, 5),
                        proth_params(6, 9), proth_params(9, 17)})
    REQUIRE(2 * genus_lower_bound(q) == frobenius_closed_form(q) + 1);
}

TEST_CASE("w12_closed_form") {
  const auto p = proth_params(3, 3);
  const auto [w1, w2] = w12_closed_form(p);
  REQUIRE(w1 == 676);
  REQUIRE(w2 == 627);
  for (const auto& q : {proth_params(3, 3), proth_params(5, 5),
                        proth_params(8, 9)}) {
    const auto [a, b] = w12_closed_form(q);
    const BigInt s0 = generator(q, 0);
    REQUIRE(a - b == generator(q, 1));
    REQUIRE(b - 2 == s0 * s0);
    REQUIRE(a - 1 == s0 * s0 + 2 * s0);
  }
}
