#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "satake.hpp"

namespace lcalc {

struct Composition {
  std::vector<int> parts;  // non-negative; zeros allowed

  Composition() = default;
  explicit Composition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
      if (x < 0) throw std::invalid_argument("negative part");
  }
  long size() const {
    long s = 0;
    for (int x : parts) s += x;
    return s;
  }
};

struct Partition {
  std::vector<int> parts;  // weakly decreasing, all >= 1

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 1) throw std::invalid_argument("parts must be positive");
      if (i > 0 && parts[i - 1] < parts[i])
        throw std::invalid_argument("parts must be weakly decreasing");
    }
  }
  long size() const {
    long s = 0;
    for (int x : parts) s += x;
    return s;
  }
};

// Sorts descending and drops zeros.
inline Partition underlying_partition(const Composition& c) {
  std::vector<int> p;
  for (int x : c.parts)
    if (x > 0) p.push_back(x);
  std::sort(p.begin(), p.end(), std::greater<int>());
  return Partition(std::move(p));
}

enum class DomRel { Less, Equal, Greater, Incomparable };

inline std::string to_string(DomRel r) {
  switch (r) {
    case DomRel::Less: return "LESS";
    case DomRel::Equal: return "EQUAL";
    case DomRel::Greater: return "GREATER";
    default: return "INCOMPARABLE";
  }
}

// Dominance order by prefix sums; partitions of different sizes are
// incomparable by convention.
inline DomRel dominance_compare(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return DomRel::Incomparable;
  std::size_t len = std::max(a.parts.size(), b.parts.size());
  bool ge = true, le = true;
  long sa = 0, sb = 0;
  for (std::size_t i = 0; i < len; ++i) {
    sa += i < a.parts.size() ? a.parts[i] : 0;
    sb += i < b.parts.size() ? b.parts[i] : 0;
    if (sa < sb) ge = false;
    if (sa > sb) le = false;
  }
  if (ge && le) return DomRel::Equal;
  if (ge) return DomRel::Greater;
  if (le) return DomRel::Less;
  return DomRel::Incomparable;
}

inline bool greater_or_noncomparable(const Composition& lam,
                                     const Partition& mu) {
  DomRel r = dominance_compare(underlying_partition(lam), mu);
  return r == DomRel::Greater || r == DomRel::Incomparable;
}

// Parity rule for nilpotent orbits of classical groups: odd parts need even
// multiplicity for Sp, even parts need even multiplicity for SO.
inline bool valid_nilpotent_orbit(const GroupData& group, const Partition& lam) {
  if (group.kind == GroupKind::GL) return true;
  std::map<int, int> mult;
  for (int p : lam.parts) ++mult[p];
  for (const auto& [p, m] : mult) {
    bool odd_part = p % 2 != 0;
    if (group.kind == GroupKind::Sp && odd_part && m % 2 != 0) return false;
    if (group.kind == GroupKind::SO && !odd_part && m % 2 != 0) return false;
  }
  return true;
}

// The orbit ((2k-1)^c 1^c) underlying the doubling construction.
inline Partition doubling_orbit(const GroupData& group, int k, int c) {
  if (k < 1 || c < 1) throw std::invalid_argument("k and c must be positive");
  std::vector<int> parts;
  parts.insert(parts.end(), static_cast<std::size_t>(c), 2 * k - 1);
  parts.insert(parts.end(), static_cast<std::size_t>(c), 1);
  Partition orbit(std::move(parts));
  if (!valid_nilpotent_orbit(group, orbit))
    throw std::domain_error("orbit ((2k-1)^c 1^c) is not a nilpotent orbit of " +
                            to_string(group.kind) + " for these k, c");
  return orbit;
}

namespace detail {

using DimMemo = std::map<std::pair<int, std::vector<int>>, long long>;

inline long long dim_bound_rec(int k, int c, const std::vector<int>& lam,
                               DimMemo& memo) {
  if (k == 1) {
    for (int x : lam)
      if (x > 1) return 0;
    return 1;
  }
  auto key = std::make_pair(k, lam);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  // Peel one layer: lam = lam' + lam'' with lam'' in {0,1}^len and
  // sum(lam'') = c, summing the bound over all such decompositions.
  long long total = 0;
  std::vector<int> rest(lam);
  std::size_t len = lam.size();
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (left == 0) {
      total += dim_bound_rec(k - 1, c, rest, memo);
      return;
    }
    if (i >= len || static_cast<int>(len - i) < left) return;
    self(self, i + 1, left);  // lam''_i = 0
    if (lam[i] >= 1) {
      rest[i] -= 1;
      self(self, i + 1, left - 1);  // lam''_i = 1
      rest[i] += 1;
    }
  };
  rec(rec, 0, c);
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace detail

// Gluing-filtration upper bound B(k,c,lambda) on the dimension of the
// semi-Whittaker functional at the character attached to lambda:
//   B(1,c,lambda) = [all parts <= 1],
//   B(k,c,lambda) = sum over lambda'' in {0,1}^len, sum = c, lambda'' <= lambda
//                   of B(k-1,c,lambda - lambda'').
// Only the values 0 (above/incomparable to (k^c)) and 1 (at (k^c)) are
// asserted as exact dimensions by the verification suites.
inline long long semi_whittaker_dim_bound(int k, int c, const Composition& lam) {
  if (k < 1 || c < 1) throw std::invalid_argument("k and c must be positive");
  if (lam.size() != static_cast<long>(k) * c)
    throw std::invalid_argument("composition size must be k*c");
  detail::DimMemo memo;
  return detail::dim_bound_rec(k, c, lam.parts, memo);
}

}  // namespace lcalc
