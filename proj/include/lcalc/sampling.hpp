#pragma once

#include <cstdint>
#include <random>
#include <set>

#include "factored.hpp"

namespace lcalc {

// Seeded source of exact random rationals with numerator and denominator
// bounded by 1000 (numerator nonzero).
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  // Draws map raw engine output directly so the sequence is identical for a
  // given seed on every platform (distributions are not portable).
  Rational nonzero() {
    long n = 0;
    while (n == 0) n = static_cast<long>(rng_() % 2001) - 1000;
    long d = static_cast<long>(rng_() % 1000) + 1;
    return rat(n, d);
  }

  std::uint64_t raw() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

using Assignment = std::map<VarId, Rational>;

inline Assignment sample_point(const std::set<VarId>& vars,
                               RationalSampler& sampler) {
  Assignment a;
  for (const auto& v : vars) a.emplace(v, sampler.nonzero());
  return a;
}

// One Schwartz-Zippel comparison of f and g at a random point, re-sampling
// on poles up to `attempts` times.  Exhausting the attempts (which bounded
// random rationals essentially never do) is reported as an error, not as
// equality.
inline bool numeric_rf_equal(const FactoredLFunction& f,
                             const FactoredLFunction& g,
                             RationalSampler& sampler, int attempts = 16) {
  std::set<VarId> vars = f.vars();
  for (const auto& v : g.vars()) vars.insert(v);
  for (int t = 0; t < attempts; ++t) {
    Assignment point = sample_point(vars, sampler);
    try {
      return f.eval_at(point) == g.eval_at(point);
    } catch (const PoleAtPoint&) {
      continue;
    }
  }
  throw std::runtime_error("exhausted pole re-sampling attempts");
}

}  // namespace lcalc
