#pragma once

// Closed forms for the Proth numerical semigroup P_k(n), generated by
// {s_i = k*2^{n+i} + 1 : i in N} with k odd, 1 < k < 2^n and
// 2^r < k < 2^{r+1}. The minimal generating set is {s_0, ..., s_{n+r}}.
// The Apery set of P_{2^r+1}(n) with respect to s_0 is the value set of
// the coefficient tuples P(r,n) minus a forbidden set F; the Frobenius
// number, pseudo-Frobenius set, type and genus bound all follow from it.
//
// Everything here is arbitrary precision: the closed forms stay exact far
// beyond the scales the generic engine can verify.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "proth/errors.hpp"

namespace proth {

using BigInt = boost::multiprecision::cpp_int;

struct ProthParams {
  long n = 0;
  long k = 0;
  long r = 0;  // floor(log2 k), so 2^r < k < 2^{r+1}
  bool closed_form_available = false;  // k == 2^r + 1
};

inline ProthParams proth_params(long n, long k) {
  if (n <= 2) throw n_too_small_error();
  if (k == 1) throw k_is_one_error();
  if (k < 1 || k % 2 == 0)
    throw k_even_error("k must be odd and positive, got " +
                       std::to_string(k));
  if (n >= 63 || k >= (1LL << n))
    throw k_too_large_error("k must be below 2^n = 2^" + std::to_string(n) +
                            ", got " + std::to_string(k));
  ProthParams p;
  p.n = n;
  p.k = k;
  p.r = 0;
  while ((1L << (p.r + 1)) <= k) ++p.r;
  p.closed_form_available = (k == (1L << p.r) + 1);
  return p;
}

// s_i = k*2^{n+i} + 1. Defined for every i >= 0; indices above n+r are
// redundant as generators but still useful in identities.
inline BigInt generator(const ProthParams& p, long i) {
  if (i < 0) throw index_out_of_range_error("generator index must be >= 0");
  return BigInt(p.k) * (BigInt(1) << (p.n + i)) + 1;
}

struct ProthGenerators {
  ProthParams params;
  std::vector<BigInt> s;  // s_0, ..., s_{n+r}
};

inline ProthGenerators minimal_generating_set(const ProthParams& p) {
  ProthGenerators out{p, {}};
  for (long i = 0; i <= p.n + p.r; ++i) out.s.push_back(generator(p, i));
  return out;
}

inline long embedding_dimension(const ProthParams& p) { return p.n + p.r + 1; }

struct RewriteConstants {
  BigInt alpha;  // (k - 2^r) * 2^{n+1} + 3
  BigInt beta;   // (2^{r+1} - k) * 2^n - 2
};

inline RewriteConstants rewrite_constants(const ProthParams& p) {
  RewriteConstants c;
  c.alpha = (BigInt(p.k) - (BigInt(1) << p.r)) * (BigInt(1) << (p.n + 1)) + 3;
  c.beta = ((BigInt(1) << (p.r + 1)) - p.k) * (BigInt(1) << p.n) - 2;
  return c;
}

// The two rewrite identities behind the Apery-set argument:
//   j < n+r:  s_i + 2 s_j == 2 s_{i-1} + s_{j+1}
//   j = n+r:  s_i + 2 s_{n+r} == 2 s_{i-1} + alpha s_0 + beta s_1
// Valid for 0 < i <= j <= n+r.
inline bool check_rewrite_identity(const ProthParams& p, long i, long j) {
  if (i < 1 || i > j || j > p.n + p.r)
    throw index_out_of_range_error("require 0 < i <= j <= n+r, got i=" +
                                   std::to_string(i) +
                                   " j=" + std::to_string(j));
  const BigInt lhs = generator(p, i) + 2 * generator(p, j);
  if (j < p.n + p.r)
    return lhs == 2 * generator(p, i - 1) + generator(p, j + 1);
  const auto c = rewrite_constants(p);
  return lhs == 2 * generator(p, i - 1) + c.alpha * generator(p, 0) +
                    c.beta * generator(p, 1);
}

// Coefficient tuple (a_1, ..., a_{n+r}) over {0,1,2}; stored 0-based, so
// tuple[i] is the coefficient of s_{i+1}.
using CoefficientTuple = std::vector<std::uint8_t>;

// Membership test for P(r,n): a 2 at any position j >= 2 forces all
// earlier entries to 0.
inline bool is_valid_tuple(const CoefficientTuple& t) {
  for (std::size_t j = 1; j < t.size(); ++j) {
    if (t[j] != 2) continue;
    for (std::size_t i = 0; i < j; ++i)
      if (t[i] != 0) return false;
  }
  for (std::uint8_t a : t)
    if (a > 2) return false;
  return true;
}

inline BigInt tuple_value(const ProthParams& p, const CoefficientTuple& t) {
  BigInt v = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] != 0) v += BigInt(t[i]) * generator(p, static_cast<long>(i) + 1);
  return v;
}

// Yields every member of P(r,n) exactly once, in lexicographic order of
// (a_1, ..., a_{n+r}). Total count 2^{n+r+1} - 1.
inline void enumerate_P(const ProthParams& p,
                        const std::function<void(const CoefficientTuple&)>& f) {
  const std::size_t len = static_cast<std::size_t>(p.n + p.r);
  CoefficientTuple t(len, 0);
  // DFS with pruning: digit 2 is allowed at position idx only when no 2
  // has been placed yet and (idx == 0 or all earlier entries are 0).
  auto rec = [&](auto&& self, std::size_t idx, bool has2,
                 bool all_zero_before) -> void {
    if (idx == len) {
      f(t);
      return;
    }
    for (std::uint8_t d = 0; d <= 2; ++d) {
      if (d == 2 && (has2 || (idx > 0 && !all_zero_before))) continue;
      t[idx] = d;
      self(self, idx + 1, has2 || d == 2, all_zero_before && d == 0);
    }
    t[idx] = 0;
  };
  rec(rec, 0, false, true);
}

inline std::vector<CoefficientTuple> enumerate_P(const ProthParams& p) {
  std::vector<CoefficientTuple> out;
  enumerate_P(p, [&](const CoefficientTuple& t) { out.push_back(t); });
  return out;
}

namespace detail {

inline void require_closed_form(const ProthParams& p) {
  if (!p.closed_form_available)
    throw closed_form_unavailable_error(
        "closed forms are only available for k = 2^r + 1; got k = " +
        std::to_string(p.k));
}

}  // namespace detail

// The forbidden set F = F_1 u F_2, as tuples. F_1 collects tuples with
// a_{n+r} = 1 and a_{n+r-1} in {1,2}; F_2 collects the layers E_l
// (0 <= l <= r-2: a_{n+l} in {1,2}, zeros between n+l and n+r, a_{n+r}=1)
// together with the tuple of 2 s_{n+r}. The three sums s_1+s_n+s_{n+r},
// 2 s_1+s_n+s_{n+r} and s_n+s_{n+r} are excluded from the whole union:
// for r = 1 they fall in F_1 rather than in an E_l, and only the
// union-wide exclusion reproduces |F| = 2^{n+r} - 2^n - 2 for all r.
inline std::set<CoefficientTuple> forbidden_set(const ProthParams& p) {
  detail::require_closed_form(p);
  const std::size_t len = static_cast<std::size_t>(p.n + p.r);
  const std::size_t last = len - 1;             // a_{n+r}
  const std::size_t n1 = static_cast<std::size_t>(p.n) - 1;  // a_n

  std::set<CoefficientTuple> F;
  enumerate_P(p, [&](const CoefficientTuple& t) {
    if (t[last] != 1) return;
    bool in_f1 = (t[last - 1] == 1 || t[last - 1] == 2);
    bool in_el = false;
    for (long l = 0; !in_f1 && !in_el && l <= p.r - 2; ++l) {
      const std::size_t nl = n1 + static_cast<std::size_t>(l);  // a_{n+l}
      if (t[nl] != 1 && t[nl] != 2) continue;
      bool zeros_after = true;
      for (std::size_t i = nl + 1; i < last; ++i)
        if (t[i] != 0) zeros_after = false;
      in_el = zeros_after;
    }
    if (in_f1 || in_el) F.insert(t);
  });

  CoefficientTuple two_last(len, 0);
  two_last[last] = 2;
  F.insert(two_last);

  // Exclusions: s_1+s_n+s_{n+r}, 2s_1+s_n+s_{n+r}, s_n+s_{n+r}.
  for (std::uint8_t a1 : {std::uint8_t{0}, std::uint8_t{1}, std::uint8_t{2}}) {
    CoefficientTuple t(len, 0);
    t[0] = a1;
    t[n1] = 1;
    t[last] = 1;
    F.erase(t);
  }
  return F;
}

// Ap(P_{2^r+1}(n), s_0) as a sorted value list: {value(t) : t in P(r,n) \ F}.
inline std::vector<BigInt> apery_closed_form(const ProthParams& p) {
  detail::require_closed_form(p);
  const auto F = forbidden_set(p);
  std::vector<BigInt> out;
  enumerate_P(p, [&](const CoefficientTuple& t) {
    if (!F.contains(t)) out.push_back(tuple_value(p, t));
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline BigInt frobenius_closed_form(const ProthParams& p) {
  detail::require_closed_form(p);
  return 2 * generator(p, 1) + generator(p, p.n) + generator(p, p.n + p.r) -
         generator(p, 0);
}

// PF(P_{2^r+1}(n)) =
//   {2 s_i + s_{i+1} + ... + s_{n+r-1} - s_0 : 1 <= i <= r}
// u {2 s_j + s_{j+1} + ... + s_{n-1} + s_{n+r} - s_0 : 1 <= j <= n-2}
// u {2 s_1 + s_n + s_{n+r} - s_0};   type = r + n - 1.
inline std::vector<BigInt> pf_closed_form(const ProthParams& p) {
  detail::require_closed_form(p);
  const BigInt s0 = generator(p, 0);
  std::vector<BigInt> out;
  for (long i = 1; i <= p.r; ++i) {
    BigInt v = generator(p, i);  // doubles the s_i term
    for (long l = i; l <= p.n + p.r - 1; ++l) v += generator(p, l);
    out.push_back(v - s0);
  }
  for (long j = 1; j <= p.n - 2; ++j) {
    BigInt v = generator(p, j);
    for (long l = j; l <= p.n - 1; ++l) v += generator(p, l);
    v += generator(p, p.n + p.r);
    out.push_back(v - s0);
  }
  out.push_back(2 * generator(p, 1) + generator(p, p.n) +
                generator(p, p.n + p.r) - s0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline long type_closed_form(const ProthParams& p) {
  detail::require_closed_form(p);
  return p.r + p.n - 1;
}

// g(P_{2^r+1}(n)) >= k(2^{n+1} + 2^{2n-1} + 2^{2n+r-1} - 2^{n-1}) + 2,
// which equals (F+1)/2 exactly.
inline BigInt genus_lower_bound(const ProthParams& p) {
  detail::require_closed_form(p);
  const BigInt two = 2;
  return BigInt(p.k) * ((BigInt(1) << (p.n + 1)) + (BigInt(1) << (2 * p.n - 1)) +
                        (BigInt(1) << (2 * p.n + p.r - 1)) -
                        (BigInt(1) << (p.n - 1))) +
         two;
}

// (w(1), w(2)) = (2 s_1 + s_n + s_{n+r}, s_1 + s_n + s_{n+r});
// w(1) - w(2) = s_1, w(2) - 2 = s_0^2, w(1) - 1 = s_0^2 + 2 s_0.
inline std::pair<BigInt, BigInt> w12_closed_form(const ProthParams& p) {
  detail::require_closed_form(p);
  const BigInt tail = generator(p, p.n) + generator(p, p.n + p.r);
  return {2 * generator(p, 1) + tail, generator(p, 1) + tail};
}

}  // namespace proth
