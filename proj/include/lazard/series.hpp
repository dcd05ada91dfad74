#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "lazard/error.hpp"
#include "lazard/rational.hpp"
#include "lazard/word.hpp"

namespace lazard {

/// Graded dimensions: nonnegative integers indexed by multidegree, truncated
/// at a total-degree cutoff. Absent entries are zero.
class GradedDims {
public:
  using Map = std::map<MultiDegree, std::int64_t, TotalThenLex>;

  GradedDims() = default;
  GradedDims(std::size_t nletters, int cutoff) : nletters_(nletters), cutoff_(cutoff) {}

  std::size_t nletters() const { return nletters_; }
  int cutoff() const { return cutoff_; }
  const Map& entries() const { return dims_; }

  std::int64_t at(const MultiDegree& d) const {
    auto it = dims_.find(d);
    return it == dims_.end() ? 0 : it->second;
  }

  void set(const MultiDegree& d, std::int64_t value) {
    if (d.size() != nletters_)
      throw InputError("multidegree has " + std::to_string(d.size()) + " slots, expected " +
                       std::to_string(nletters_));
    if (value < 0)
      throw NonIntegralDimension("negative dimension " + std::to_string(value) + " at (" +
                                 d.str() + ")");
    if (d.total() > cutoff_)
      return;
    if (value == 0)
      dims_.erase(d);
    else
      dims_[d] = value;
  }

  std::int64_t total_at(int n) const {
    std::int64_t s = 0;
    for (const auto& [d, v] : dims_)
      if (d.total() == n)
        s += v;
    return s;
  }

  /// Entries whose degree satisfies the predicate.
  GradedDims filter(const std::function<bool(const MultiDegree&)>& keep) const {
    GradedDims out(nletters_, cutoff_);
    for (const auto& [d, v] : dims_)
      if (keep(d))
        out.dims_.emplace(d, v);
    return out;
  }

  /// Copy truncated to a smaller cutoff.
  GradedDims truncated(int cutoff) const {
    GradedDims out(nletters_, cutoff);
    for (const auto& [d, v] : dims_)
      if (d.total() <= cutoff)
        out.dims_.emplace(d, v);
    return out;
  }

  friend bool operator==(const GradedDims&, const GradedDims&) = default;

private:
  std::size_t nletters_ = 0;
  int cutoff_ = 0;
  Map dims_;
};

/// Truncated multivariate power series with rational coefficients.
using Series = std::map<MultiDegree, Rational, TotalThenLex>;

inline Series multiply(const Series& a, const Series& b, int cutoff) {
  Series out;
  for (const auto& [da, ca] : a) {
    const int ta = da.total();
    for (const auto& [db, cb] : b) {
      if (ta + db.total() > cutoff)
        break; // b is ordered by total degree
      auto& slot = out[da + db];
      slot += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

inline int mobius(int n) {
  if (n < 1)
    throw InputError("mobius needs a positive argument");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p)
      continue;
    n /= p;
    if (n % p == 0)
      return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

/// Dimension of the multidegree-alpha component of the free Lie algebra:
/// (1/|a|) sum_{d | gcd a} mu(d) (|a|/d)! / prod (a_i/d)!
inline std::int64_t witt_dim(const MultiDegree& alpha) {
  const int n = alpha.total();
  if (n <= 0)
    throw InputError("witt_dim needs a nonzero multidegree");
  const int g = alpha.gcd();
  mpz_class sum = 0;
  for (int d = 1; d <= g; ++d) {
    if (g % d)
      continue;
    const int mu = mobius(d);
    if (mu == 0)
      continue;
    mpz_class term;
    mpz_fac_ui(term.get_mpz_t(), static_cast<unsigned long>(n / d));
    for (int c : alpha.counts) {
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(c / d));
      term /= f;
    }
    sum += mu * term;
  }
  if (sum % n != 0)
    throw NonIntegralDimension("Witt sum not divisible by total degree at (" + alpha.str() + ")");
  return to_int64(sum / n);
}

/// Free Lie algebra dimensions on n letters up to the cutoff.
inline GradedDims witt_dims(std::size_t nletters, int cutoff) {
  GradedDims out(nletters, cutoff);
  for (const auto& d : multidegrees_up_to(nletters, cutoff))
    out.set(d, witt_dim(d));
  return out;
}

/// Coefficients of prod_a (1 - t^a)^(-g_a): graded dimensions of U(g).
inline GradedDims pbw_series(const GradedDims& g, int cutoff) {
  const std::size_t n = g.nletters();
  std::map<MultiDegree, mpz_class, TotalThenLex> acc;
  acc[MultiDegree(n)] = 1;
  for (const auto& [alpha, dim] : g.entries()) {
    if (alpha.is_zero())
      throw InputError("pbw_series input has support at the zero multidegree");
    const int step = alpha.total();
    if (step > cutoff)
      continue;
    // factor coefficients binom(dim + k - 1, k) at k * alpha
    std::vector<mpz_class> factor{1};
    for (int k = 1; k * step <= cutoff; ++k) {
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(dim + k - 1),
                   static_cast<unsigned long>(k));
      factor.push_back(b);
    }
    std::map<MultiDegree, mpz_class, TotalThenLex> next;
    for (const auto& [d, c] : acc) {
      MultiDegree shifted = d;
      for (std::size_t k = 0; k < factor.size() && shifted.total() <= cutoff; ++k) {
        next[shifted] += c * factor[k];
        shifted += alpha;
      }
    }
    acc = std::move(next);
  }
  GradedDims out(n, cutoff);
  for (const auto& [d, c] : acc)
    out.set(d, to_int64(c));
  return out;
}

/// Dimensions l of the free Lie algebra on a graded space N: the unique family
/// with prod_b (1 - t^b)^(l_b) = 1 - sum_c N_c t^c, solved through
///   sum_b l_b sum_k t^(k b) / k = sum_m (sum_c N_c t^c)^m / m.
inline GradedDims free_lie_on_module(const GradedDims& module, int cutoff) {
  const std::size_t n = module.nletters();
  Series f;
  for (const auto& [d, v] : module.entries()) {
    if (d.is_zero())
      throw InputError("free_lie_on_module input has support at the zero multidegree");
    if (d.total() <= cutoff)
      f[d] = Rational(static_cast<long>(v));
  }
  Series log_series;
  Series power = f;
  for (int m = 1; m <= cutoff && !power.empty(); ++m) {
    for (const auto& [d, c] : power)
      log_series[d] += c / Rational(m);
    power = multiply(power, f, cutoff);
  }

  std::map<MultiDegree, Rational, TotalThenLex> solved;
  GradedDims out(n, cutoff);
  for (const auto& delta : multidegrees_up_to(n, cutoff)) {
    auto it = log_series.find(delta);
    Rational l = it == log_series.end() ? Rational() : it->second;
    const int g = delta.gcd();
    for (int k = 2; k <= g; ++k) {
      if (g % k)
        continue;
      MultiDegree base = delta;
      for (auto& x : base.counts)
        x /= k;
      if (auto b = solved.find(base); b != solved.end())
        l -= b->second / Rational(k);
    }
    if (!l.is_integer() || l.sign() < 0)
      throw NonIntegralDimension("free Lie dimension " + l.str() + " at (" + delta.str() + ")");
    if (!l.is_zero()) {
      out.set(delta, to_int64(l.numerator()));
      solved.emplace(delta, std::move(l));
    }
  }
  return out;
}

} // namespace lazard
