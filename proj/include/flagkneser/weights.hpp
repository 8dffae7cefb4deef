#pragma once

// Family weights and machine-checkable weight-bound certificates.
//
// For a family F of two-part flags (A,B) with |A| = a < b = |B|:
//   * the weight of a b-set B is the number of members whose outer part is B;
//   * the weight of an a-set A is the number of members whose inner part is A.
//
// The certifiers check counting bounds that every maximal (resp. independent)
// family must satisfy; each returns a structured certificate rather than a
// bare boolean so that violations carry witnesses.  The two-part bounds
// checked here need the outer parts to decide opposition by covering the
// ground set, i.e. 2b >= n; the a = 1, b = n-3 certifiers additionally need
// n >= 7 so that b > n/2.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagkneser/setcore.hpp"

namespace flagkneser {

struct CertificateFinding {
  std::string witness;
  long long bound = 0;
  long long observed = 0;
};

struct Certificate {
  std::string lemma;
  bool pass = true;
  long long configurations = 0;  // hypothesis instances actually checked
  std::vector<CertificateFinding> violations;
  std::string note;
};

struct WeightReport {
  int n = 0;
  FlagType type{std::vector<int>{1}};
  int cardinality = 0;
  long long max_possible = 0;
  std::map<Mask, long long> weights;         // nonzero entries only
  std::map<long long, long long> histogram;  // weight -> number of subsets
};

namespace detail {

inline void require_two_part(const FlagFamily& fam, const char* who) {
  if (fam.type().length() != 2) throw std::invalid_argument(std::string(who) + ": two-part type required");
}

inline void require_maximal(const FlagFamily& fam, const char* who) {
  if (!is_maximal_independent(fam))  // also throws when not independent
    throw std::invalid_argument(std::string(who) + ": family is not maximal independent");
}

/// Covering-decides-opposition regime for the outer parts.
inline void require_covering_pair(const FlagFamily& fam, const char* who) {
  require_two_part(fam, who);
  const int n = fam.n();
  const int a = fam.type().smallest();
  const int b = fam.type().largest();
  if (!(a + b < n && 2 * b >= n))
    throw std::invalid_argument(std::string(who) + ": requires a+b < n and 2b >= n");
}

inline void require_one_nminus3(const FlagFamily& fam, const char* who) {
  require_two_part(fam, who);
  const int n = fam.n();
  if (!(n >= 7 && fam.type().smallest() == 1 && fam.type().largest() == n - 3))
    throw std::invalid_argument(std::string(who) + ": requires type {1, n-3} with n >= 7");
}

inline std::map<Mask, long long> part_weights(const FlagFamily& fam, bool outer) {
  std::map<Mask, long long> w;
  for (const Flag& f : fam.flags()) ++w[outer ? f.largest_mask() : f.smallest_mask()];
  return w;
}

}  // namespace detail

/// Number of members whose outer part equals B.
inline long long weight_of_bset(const FlagFamily& fam, const ElementSet& b) {
  if (b.ground_size() != fam.n()) throw std::invalid_argument("weight_of_bset: ground sets differ");
  if (b.cardinality() != fam.type().largest()) throw std::invalid_argument("weight_of_bset: wrong cardinality");
  long long w = 0;
  for (const Flag& f : fam.flags()) w += (f.largest_mask() == b.mask());
  return w;
}

/// Number of members whose inner part equals A.
inline long long weight_of_aset(const FlagFamily& fam, const ElementSet& a) {
  if (a.ground_size() != fam.n()) throw std::invalid_argument("weight_of_aset: ground sets differ");
  if (a.cardinality() != fam.type().smallest()) throw std::invalid_argument("weight_of_aset: wrong cardinality");
  long long w = 0;
  for (const Flag& f : fam.flags()) w += (f.smallest_mask() == a.mask());
  return w;
}

/// Largest possible weight of a subset of the given cardinality, over any
/// family of this spec: inner binomial product through the rest of the chain.
inline long long max_possible_weight(int n, const FlagType& type, int cardinality) {
  if (cardinality == type.largest()) {
    long long m = 1;
    const auto& s = type.sizes();
    for (std::size_t i = s.size(); i-- > 1;) m *= static_cast<long long>(binomial(s[i], s[i - 1]));
    return m;
  }
  if (cardinality == type.smallest())
    return static_cast<long long>(binomial(n - type.smallest(), type.largest() - type.smallest()));
  throw std::invalid_argument("max_possible_weight: cardinality not in type");
}

inline WeightReport weight_report(const FlagFamily& fam, int cardinality) {
  WeightReport r;
  r.n = fam.n();
  r.type = fam.type();
  r.cardinality = cardinality;
  if (cardinality != r.type.smallest() && cardinality != r.type.largest())
    throw std::invalid_argument("weight_report: cardinality not in type");
  r.max_possible = max_possible_weight(r.n, r.type, cardinality);
  r.weights = detail::part_weights(fam, cardinality == r.type.largest());
  long long nonzero = 0;
  for (const auto& kv : r.weights) {
    ++r.histogram[kv.second];
    ++nonzero;
  }
  r.histogram[0] += static_cast<long long>(binomial(r.n, cardinality)) - nonzero;
  if (r.histogram[0] == 0) r.histogram.erase(0);
  return r;
}

/// For every b-set of a maximal independent two-part family, the weight is
/// either the maximum C(b,a) or at most C(b,a) - C(n-b,a).
inline Certificate certify_weight_dichotomy(const FlagFamily& fam) {
  detail::require_covering_pair(fam, "certify_weight_dichotomy");
  detail::require_maximal(fam, "certify_weight_dichotomy");
  const int n = fam.n();
  const int a = fam.type().smallest();
  const int b = fam.type().largest();
  const long long wmax = static_cast<long long>(binomial(b, a));
  const long long gap = static_cast<long long>(binomial(n - b, a));

  Certificate cert;
  cert.lemma = "bset-weight-dichotomy";
  auto weights = detail::part_weights(fam, true);
  for (Mask m : k_submasks(full_mask(n), b)) {
    ++cert.configurations;
    auto it = weights.find(m);
    long long w = (it == weights.end()) ? 0 : it->second;
    if (w != wmax && w > wmax - gap) {
      cert.pass = false;
      cert.violations.push_back({to_string(ElementSet(n, m)), wmax - gap, w});
    }
  }
  return cert;
}

/// Returns true iff every member (A',B') satisfies A'∩B ≠ ∅ or B∪B' ≠ [n];
/// for a maximal independent family this is equivalent to B having maximal
/// weight C(b,a) — the equivalence itself is asserted.
inline bool certify_full_weight_condition(const FlagFamily& fam, const ElementSet& b) {
  detail::require_covering_pair(fam, "certify_full_weight_condition");
  detail::require_maximal(fam, "certify_full_weight_condition");
  if (b.ground_size() != fam.n() || b.cardinality() != fam.type().largest())
    throw std::invalid_argument("certify_full_weight_condition: not a b-set of this family");
  const Mask full = full_mask(fam.n());
  bool condition = true;
  for (const Flag& f : fam.flags()) {
    if ((f.smallest_mask() & b.mask()) == 0 && (f.largest_mask() | b.mask()) == full) {
      condition = false;
      break;
    }
  }
  const long long wmax = static_cast<long long>(binomial(fam.type().largest(), fam.type().smallest()));
  if (condition != (weight_of_bset(fam, b) == wmax))
    throw std::logic_error("certify_full_weight_condition: equivalence with maximal weight failed");
  return condition;
}

/// Certificate form of the full-weight equivalence over all b-sets.
inline Certificate certify_full_weight_all(const FlagFamily& fam) {
  detail::require_covering_pair(fam, "certify_full_weight_all");
  detail::require_maximal(fam, "certify_full_weight_all");
  const int n = fam.n();
  const int a = fam.type().smallest();
  const int b = fam.type().largest();
  const long long wmax = static_cast<long long>(binomial(b, a));
  const Mask full = full_mask(n);

  Certificate cert;
  cert.lemma = "bset-full-weight-iff";
  auto weights = detail::part_weights(fam, true);
  for (Mask m : k_submasks(full, b)) {
    ++cert.configurations;
    bool condition = true;
    for (const Flag& f : fam.flags()) {
      if ((f.smallest_mask() & m) == 0 && (f.largest_mask() | m) == full) {
        condition = false;
        break;
      }
    }
    auto it = weights.find(m);
    long long w = (it == weights.end()) ? 0 : it->second;
    if (condition != (w == wmax)) {
      cert.pass = false;
      cert.violations.push_back({to_string(ElementSet(n, m)), condition ? wmax : -1, w});
    }
  }
  return cert;
}

/// a = 1, b = n-3, maximal family: a singleton A has the maximal weight
/// C(n-1,3) iff A lies in every member's outer part; when it does not, the
/// weight is at most C(n-1,3) - C(n-4,2).
inline Certificate certify_weight_A(const FlagFamily& fam, const ElementSet& a) {
  detail::require_one_nminus3(fam, "certify_weight_A");
  detail::require_maximal(fam, "certify_weight_A");
  if (a.ground_size() != fam.n() || a.cardinality() != 1)
    throw std::invalid_argument("certify_weight_A: singleton on the family's ground set required");
  const int n = fam.n();
  const long long wmax = static_cast<long long>(binomial(n - 1, 3));
  const long long gap = static_cast<long long>(binomial(n - 4, 2));

  Certificate cert;
  cert.lemma = "aset-weight-gap";
  cert.configurations = 1;
  bool contained_everywhere = true;
  for (const Flag& f : fam.flags()) {
    if ((f.largest_mask() & a.mask()) != a.mask()) {
      contained_everywhere = false;
      break;
    }
  }
  const long long w = weight_of_aset(fam, a);
  if ((w == wmax) != contained_everywhere) {
    cert.pass = false;
    cert.violations.push_back({to_string(a) + " (equivalence)", wmax, w});
  }
  if (w != wmax && w > wmax - gap) {
    cert.pass = false;
    cert.violations.push_back({to_string(a) + " (gap)", wmax - gap, w});
  }
  return cert;
}

/// certify_weight_A over all singletons.
inline Certificate certify_weight_A_all(const FlagFamily& fam) {
  Certificate cert;
  cert.lemma = "aset-weight-gap";
  for (int e = 1; e <= fam.n(); ++e) {
    Certificate one = certify_weight_A(fam, ElementSet::of(fam.n(), {e}));
    cert.configurations += one.configurations;
    if (!one.pass) {
      cert.pass = false;
      for (auto& v : one.violations) cert.violations.push_back(std::move(v));
    }
  }
  return cert;
}

/// Two counting bounds that every *independent* family of type {1, n-3}
/// must satisfy:
///  (1) members (A,B1), (A,B2) with B1 ≠ B2 whose outer parts miss exactly
///      two elements force every singleton inside those two elements to have
///      weight at most C(n-1,3) - (n-5)(n-4) + C(n-5,2);
///  (2) for two distinct outer parts of maximal weight n-3:
///      (a) singletons outside either part have weight at most
///          C(n-1,3) - C(n-3,3), and
///      (b) if the two parts miss exactly two elements, singletons inside
///          those two have weight at most C(n-1,3) - 2C(n-3,3) + C(n-4,3).
inline Certificate certify_technical_weights(const FlagFamily& fam) {
  detail::require_one_nminus3(fam, "certify_technical_weights");
  if (!is_independent(fam)) throw std::invalid_argument("certify_technical_weights: family is not independent");
  const int n = fam.n();
  const Mask full = full_mask(n);
  const long long base = static_cast<long long>(binomial(n - 1, 3));
  auto aw = detail::part_weights(fam, false);
  auto weight_of_singleton = [&](int e) -> long long {
    auto it = aw.find(Mask{1} << (e - 1));
    return (it == aw.end()) ? 0 : it->second;
  };

  Certificate cert;
  cert.lemma = "paired-flag-aset-bounds";

  // (1) pairs of members sharing the inner part.
  const long long bound1 = base - static_cast<long long>(n - 5) * (n - 4) + static_cast<long long>(binomial(n - 5, 2));
  const auto& fs = fam.flags();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      if (fs[i].smallest_mask() != fs[j].smallest_mask()) continue;
      if (fs[i].largest_mask() == fs[j].largest_mask()) continue;
      Mask outside = full & ~(fs[i].largest_mask() | fs[j].largest_mask());
      if (popcount(outside) != 2) continue;
      ++cert.configurations;
      for (Mask t = outside; t != 0; t &= t - 1) {
        int e = lowest_bit(t) + 1;
        long long w = weight_of_singleton(e);
        if (w > bound1) {
          cert.pass = false;
          cert.violations.push_back({"pair " + to_string(fs[i]) + " / " + to_string(fs[j]) + ", A={" +
                                         std::to_string(e) + "}",
                                     bound1, w});
        }
      }
    }
  }

  // (2) pairs of distinct maximal-weight outer parts.
  const long long wmax = n - 3;  // C(n-3, 1)
  const long long bound2a = base - static_cast<long long>(binomial(n - 3, 3));
  const long long bound2b = base - 2 * static_cast<long long>(binomial(n - 3, 3)) + static_cast<long long>(binomial(n - 4, 3));
  std::vector<Mask> maxed;
  for (const auto& kv : detail::part_weights(fam, true))
    if (kv.second == wmax) maxed.push_back(kv.first);
  if (maxed.size() >= 2) {
    for (Mask bm : maxed) {
      ++cert.configurations;
      for (Mask t = full & ~bm; t != 0; t &= t - 1) {
        int e = lowest_bit(t) + 1;
        long long w = weight_of_singleton(e);
        if (w > bound2a) {
          cert.pass = false;
          cert.violations.push_back({"max-weight " + to_string(ElementSet(n, bm)) + ", A={" +
                                         std::to_string(e) + "}",
                                     bound2a, w});
        }
      }
    }
    for (std::size_t i = 0; i < maxed.size(); ++i) {
      for (std::size_t j = i + 1; j < maxed.size(); ++j) {
        Mask outside = full & ~(maxed[i] | maxed[j]);
        if (popcount(outside) != 2) continue;
        ++cert.configurations;
        for (Mask t = outside; t != 0; t &= t - 1) {
          int e = lowest_bit(t) + 1;
          long long w = weight_of_singleton(e);
          if (w > bound2b) {
            cert.pass = false;
            cert.violations.push_back({"max-weight pair " + to_string(ElementSet(n, maxed[i])) + " / " +
                                           to_string(ElementSet(n, maxed[j])) + ", A={" + std::to_string(e) + "}",
                                       bound2b, w});
          }
        }
      }
    }
  }
  if (cert.configurations == 0) cert.note = "no hypothesis configuration present (vacuous pass)";
  return cert;
}

}  // namespace flagkneser
