#pragma once

// Generic numerical semigroup engine. Everything is computed exactly from a
// coprime generator list via the Apery table of the smallest generator:
// w(i) is the least element of S congruent to i modulo m, so
//   x in S  <=>  x >= w(x mod m),
//   F(S) = max w - m,  g(S) = sum (w(i) - i) / m.
//
// Arithmetic is checked 128-bit: overflow raises proth::overflow_error
// instead of wrapping.

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "proth/errors.hpp"

namespace proth {

using Int = boost::multiprecision::checked_int128_t;

namespace detail {

// Maps the std exceptions thrown by checked arithmetic onto library errors.
template <typename F>
auto checked(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::overflow_error& e) {
    throw overflow_error(e.what());
  } catch (const std::range_error& e) {
    throw overflow_error(e.what());
  }
}

}  // namespace detail

// Validated, canonicalized (sorted ascending, deduplicated) generator list
// with gcd 1.
class GeneratorSet {
 public:
  static GeneratorSet from(std::vector<Int> raw) {
    if (raw.empty()) throw empty_input_error();
    for (const Int& g : raw) {
      if (g < 1)
        throw std::invalid_argument("generators must be positive, got " +
                                    g.str());
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    Int d = 0;
    for (const Int& g : raw) d = boost::multiprecision::gcd(d, g);
    if (d != 1)
      throw not_coprime_error("gcd of generators is " + d.str() +
                              "; the generated monoid is not a numerical "
                              "semigroup");
    return GeneratorSet(std::move(raw));
  }

  static GeneratorSet from(std::initializer_list<long long> raw) {
    return from(std::vector<Int>(raw.begin(), raw.end()));
  }

  const std::vector<Int>& generators() const { return gens_; }
  const Int& smallest() const { return gens_.front(); }
  std::size_t size() const { return gens_.size(); }

  // True iff 1 is a generator, i.e. S = N.
  bool is_all_naturals() const { return gens_.front() == 1; }

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  explicit GeneratorSet(std::vector<Int> gens) : gens_(std::move(gens)) {}
  std::vector<Int> gens_;
};

struct AperyTable {
  Int modulus;
  std::vector<Int> w;  // w[i] = least element of S congruent to i mod modulus

  Int max() const { return *std::max_element(w.begin(), w.end()); }
};

struct WilfReport {
  Int lhs;    // F + 1
  Int rhs_e;  // e * nu
  Int rhs_t;  // (t + 1) * nu
  bool holds;
};

struct SemigroupSummary {
  Int frobenius;  // -1 when S = N
  Int genus;
  Int embedding_dimension;
  Int type;
  Int nu;  // |{s in S : s <= F}|
  std::vector<Int> pseudo_frobenius;
};

inline GeneratorSet validate_generators(std::vector<Int> raw) {
  return GeneratorSet::from(std::move(raw));
}

namespace detail {

// Round-robin label-correcting relaxation over residues mod m. Repeats
// full passes of w[(i+a) mod m] <- min(w[(i+a) mod m], w[i] + a) per
// generator a until a pass makes no change.
inline std::vector<Int> relax_residues(const std::vector<Int>& gens,
                                       const Int& m) {
  const auto mi = m.convert_to<std::size_t>();
  const Int unset = -1;
  std::vector<Int> w(mi, unset);
  w[0] = 0;
  std::vector<std::size_t> residue(gens.size());
  for (std::size_t a = 0; a < gens.size(); ++a)
    residue[a] = Int(gens[a] % m).convert_to<std::size_t>();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < mi; ++i) {
      if (w[i] < 0) continue;
      for (std::size_t a = 0; a < gens.size(); ++a) {
        std::size_t j = i + residue[a];
        if (j >= mi) j -= mi;
        Int cand = checked([&] { return Int(w[i] + gens[a]); });
        if (w[j] < 0 || cand < w[j]) {
          w[j] = cand;
          changed = true;
        }
      }
    }
  }
  return w;
}

}  // namespace detail

inline bool membership(const GeneratorSet& S, const Int& x);

inline AperyTable apery_table(const GeneratorSet& S, const Int& m) {
  if (m < 1 || !membership(S, m))
    throw modulus_not_in_semigroup_error(m.str() +
                                         " is not a nonzero element of S");
  return AperyTable{m, detail::relax_residues(S.generators(), m)};
}

// Table with respect to the smallest generator; the engine's workhorse.
inline AperyTable base_table(const GeneratorSet& S) {
  return AperyTable{S.smallest(),
                    detail::relax_residues(S.generators(), S.smallest())};
}

inline bool membership(const GeneratorSet& S, const Int& x) {
  if (x < 0) throw std::invalid_argument("membership requires x >= 0");
  if (x == 0 || S.is_all_naturals()) return true;
  const Int& m = S.smallest();
  const auto t = base_table(S);
  auto i = Int(x % m).convert_to<std::size_t>();
  return x >= t.w[i];
}

inline Int frobenius(const GeneratorSet& S) {
  if (S.is_all_naturals()) return -1;
  const auto t = base_table(S);
  return t.max() - t.modulus;
}

inline Int genus(const GeneratorSet& S) {
  const auto t = base_table(S);
  Int g = 0;
  for (std::size_t i = 0; i < t.w.size(); ++i) g += (t.w[i] - Int(i)) / t.modulus;
  return g;
}

inline std::vector<Int> gaps(const GeneratorSet& S) {
  const auto t = base_table(S);
  std::vector<Int> out;
  for (const Int& wi : t.w)
    for (Int x = wi - t.modulus; x > 0; x -= t.modulus) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

inline GeneratorSet minimal_generators(const GeneratorSet& S) {
  if (S.is_all_naturals()) return GeneratorSet::from(std::vector<Int>{1});
  const auto t = base_table(S);
  auto in_S = [&](const Int& x) {
    return x >= t.w[Int(x % t.modulus).convert_to<std::size_t>()];
  };
  // g is redundant iff g = a + b with a, b nonzero in S; then a can be
  // taken to be a generator.
  std::vector<Int> kept;
  for (const Int& g : S.generators()) {
    bool redundant = false;
    for (const Int& h : S.generators()) {
      if (h >= g) break;
      if (in_S(g - h)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(g);
  }
  return GeneratorSet::from(std::move(kept));
}

// Maximal Apery elements under a <=_S b <=> b - a in S, via
// w maximal iff w' - w is not in Ap(S,m) \ {0} for every w'.
inline std::vector<Int> pseudo_frobenius(const GeneratorSet& S) {
  if (S.is_all_naturals()) throw semigroup_is_all_naturals_error();
  const auto t = base_table(S);
  auto in_S = [&](const Int& x) {
    return x >= 0 && x >= t.w[Int(x % t.modulus).convert_to<std::size_t>()];
  };
  std::vector<Int> pf;
  for (const Int& w : t.w) {
    bool maximal = true;
    for (const Int& w2 : t.w) {
      if (w2 != w && in_S(w2 - w)) {
        maximal = false;
        break;
      }
    }
    if (maximal) pf.push_back(w - t.modulus);
  }
  std::sort(pf.begin(), pf.end());
  return pf;
}

inline SemigroupSummary summarize(const GeneratorSet& S) {
  SemigroupSummary out;
  out.embedding_dimension = Int(minimal_generators(S).size());
  if (S.is_all_naturals()) {
    out.frobenius = -1;
    out.genus = 0;
    out.nu = 0;
    out.pseudo_frobenius = {-1};
    out.type = 1;
    return out;
  }
  out.frobenius = frobenius(S);
  out.genus = genus(S);
  out.nu = out.frobenius + 1 - out.genus;
  out.pseudo_frobenius = pseudo_frobenius(S);
  out.type = Int(out.pseudo_frobenius.size());
  return out;
}

inline WilfReport wilf_check(const GeneratorSet& S) {
  if (S.is_all_naturals()) throw semigroup_is_all_naturals_error();
  const auto s = summarize(S);
  WilfReport rep;
  rep.lhs = s.frobenius + 1;
  rep.rhs_e = s.embedding_dimension * s.nu;
  rep.rhs_t = (s.type + 1) * s.nu;
  rep.holds = rep.lhs <= rep.rhs_e;
  return rep;
}

}  // namespace proth
