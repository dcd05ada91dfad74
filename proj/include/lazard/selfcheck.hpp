#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lazard/corpus.hpp"
#include "lazard/elimination.hpp"
#include "lazard/free_lie.hpp"
#include "lazard/lyndon.hpp"
#include "lazard/oracle.hpp"
#include "lazard/series.hpp"
#include "lazard/sparse.hpp"

namespace lazard {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace selfcheck {

using Rng = std::mt19937_64;

/// Random polynomial with a few terms, all words of one length over k letters.
inline NCPolynomial random_homogeneous(std::size_t k, std::size_t length, Rng& rng) {
  std::uniform_int_distribution<int> letter(0, static_cast<int>(k) - 1);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> nterms(1, 4);
  NCPolynomial p;
  const int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    Word w;
    for (std::size_t i = 0; i < length; ++i)
      w.push_back(static_cast<Letter>(letter(rng)));
    p.add_term(w, Rational(coef(rng), 1 + (t % 2)));
  }
  return p;
}

inline CheckResult antisymmetry_and_jacobi(Rng& rng) {
  std::uniform_int_distribution<std::size_t> len(1, 5);
  for (int trial = 0; trial < 60; ++trial) {
    auto p = random_homogeneous(3, len(rng), rng);
    auto q = random_homogeneous(3, len(rng), rng);
    auto r = random_homogeneous(3, len(rng), rng);
    if (!bracket(p, p).is_zero())
      return {"antisymmetry-jacobi", false, "[p,p] != 0"};
    auto jac = bracket(p, bracket(q, r)) + bracket(q, bracket(r, p)) + bracket(r, bracket(p, q));
    if (!jac.is_zero())
      return {"antisymmetry-jacobi", false, "Jacobi sum nonzero"};
  }
  return {"antisymmetry-jacobi", true, "60 random triples"};
}

inline CheckResult triangularity_and_round_trip() {
  LyndonRealizer realizer;
  std::size_t count = 0;
  for (const auto& w : lyndon_words_up_to(2, 7)) {
    const NCPolynomial p = realize(bracketing(w));
    if (p.leading().first != w || p.leading().second != Rational(1))
      return {"triangularity-roundtrip", false, "leading monomial mismatch"};
    const auto coords = lyndon_expand(p, realizer);
    if (coords.size() != 1 || coords.begin()->first != w || coords.begin()->second != Rational(1))
      return {"triangularity-roundtrip", false, "lyndon_expand round trip failed"};
    ++count;
  }
  return {"triangularity-roundtrip", true, std::to_string(count) + " Lyndon words"};
}

/// Primitive and strictly smallest among its rotations.
inline bool is_lyndon_by_rotation(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t i = 1; i < n; ++i) {
    Word rot = w.substr(i, n - i) + w.substr(0, i);
    if (!(w < rot))
      return false;
  }
  return n > 0;
}

inline CheckResult lyndon_predicates() {
  std::size_t checked = 0;
  for (std::size_t k : {2u, 3u})
    for (std::size_t n = 1; n <= 8; ++n) {
      std::vector<Letter> letters(n, 0);
      while (true) {
        Word w(letters);
        if (is_lyndon(w) != is_lyndon_by_rotation(w))
          return {"lyndon-predicates", false, "disagreement on a word of length " +
                                                  std::to_string(n)};
        ++checked;
        std::size_t i = n;
        while (i > 0 && letters[i - 1] == k - 1)
          letters[--i] = 0;
        if (i == 0)
          break;
        ++letters[i - 1];
      }
    }
  return {"lyndon-predicates", true, std::to_string(checked) + " words"};
}

inline CheckResult witt_matches_lyndon_count() {
  for (std::size_t k : {2u, 3u}) {
    LieBasisCache cache(k);
    for (const auto& d : multidegrees_up_to(k, 8))
      if (witt_dim(d) != static_cast<std::int64_t>(cache.dim(d)))
        return {"witt-lyndon", false, "mismatch at (" + d.str() + ")"};
  }
  return {"witt-lyndon", true, "all multidegrees up to 8 over 2 and 3 letters"};
}

inline CheckResult pbw_tensor_algebra() {
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto u = pbw_series(witt_dims(k, 6), 6);
    std::int64_t power = 1;
    for (int n = 0; n <= 6; ++n, power *= static_cast<std::int64_t>(k)) {
      const std::int64_t got = n == 0 ? u.at(MultiDegree(k)) : u.total_at(n);
      if (got != power)
        return {"pbw-tensor", false, "k=" + std::to_string(k) + " n=" + std::to_string(n)};
    }
  }
  return {"pbw-tensor", true, "k <= 3, n <= 6"};
}

inline CheckResult free_lie_on_free_generators() {
  for (std::size_t k = 1; k <= 3; ++k) {
    GradedDims gens(k, 7);
    for (std::size_t i = 0; i < k; ++i)
      gens.set(MultiDegree::unit(k, i), 1);
    if (free_lie_on_module(gens, 7) != witt_dims(k, 7))
      return {"free-lie-on-generators", false, "k=" + std::to_string(k)};
  }
  return {"free-lie-on-generators", true, "k <= 3 up to degree 7"};
}

inline CheckResult row_reduce_order_independence(Rng& rng) {
  std::uniform_int_distribution<int> val(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    SparseMatrix m;
    m.ncols = 6;
    for (int r = 0; r < 7; ++r) {
      std::vector<Rational> dense;
      for (int c = 0; c < 6; ++c)
        dense.emplace_back(val(rng), 1 + (c % 3));
      m.append(SparseVector::from_dense(dense));
    }
    auto base = row_reduce(m);
    std::shuffle(m.rows.begin(), m.rows.end(), rng);
    auto shuffled = row_reduce(m);
    if (base.rank != shuffled.rank || base.basis != shuffled.basis)
      return {"row-reduce-order", false, "rank or reduced basis changed under shuffle"};
    EchelonBasis inc(6);
    for (const auto& row : m.rows)
      inc.insert(row);
    if (inc.reduced() != base.basis)
      return {"row-reduce-order", false, "incremental basis disagrees"};
  }
  return {"row-reduce-order", true, "40 random matrices"};
}

/// Re-expresses dims computed for a permuted presentation in the original letter order.
inline GradedDims by_names(const GradedDims& dims, const Alphabet& from, const Alphabet& to) {
  GradedDims out(dims.nletters(), dims.cutoff());
  for (const auto& [d, v] : dims.entries()) {
    MultiDegree r(d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
      r[to.index_of(from.name(static_cast<Letter>(i)))] = d[i];
    out.set(r, v);
  }
  return out;
}

inline CheckResult closure_order_independence(Rng& rng) {
  CorpusShape shape;
  for (int trial = 0; trial < 25; ++trial) {
    const Presentation p = random_presentation(shape, rng);
    const GradedDims base = quotient_dims(p, 5);

    auto gens = p.generators();
    auto rels = p.relations();
    std::shuffle(gens.begin(), gens.end(), rng);
    std::shuffle(rels.begin(), rels.end(), rng);
    const Presentation q(gens, rels);
    if (by_names(quotient_dims(q, 5), q.alphabet(), p.alphabet()) != base)
      return {"closure-order", false, "dims changed under permutation"};

    ClosureOptions right;
    right.cutoff = 5;
    right.side = BracketSide::right;
    if (quotient_dims(p, right) != base)
      return {"closure-order", false, "left and right bracketing disagree"};
  }
  return {"closure-order", true, "25 random presentations"};
}

inline CheckResult corpus_integrality(Rng& rng) {
  CorpusShape shape;
  for (int trial = 0; trial < 40; ++trial) {
    const Presentation p = random_presentation(shape, rng);
    try {
      auto r = verify_elimination(EliminationInput(p), 5);
      if (!r.ok())
        return {"free-lie-integrality", false, "theorem and oracle disagree"};
    } catch (const NonIntegralDimension& e) {
      return {"free-lie-integrality", false, e.what()};
    }
  }
  return {"free-lie-integrality", true, "40 random presentations"};
}

inline CheckResult lazard_identities() {
  for (std::size_t nv = 0; nv <= 2; ++nv)
    for (std::size_t nw = 0; nw <= 2; ++nw) {
      if (nv + nw == 0)
        continue;
      if (!lazard_check(nv, nw, 5).ok())
        return {"lazard", false, "nv=" + std::to_string(nv) + " nw=" + std::to_string(nw)};
    }
  return {"lazard", true, "|V|,|W| <= 2 up to degree 5"};
}

} // namespace selfcheck

/// The algebraic invariant suite; deterministic for a given seed.
inline std::vector<CheckResult> run_selfcheck(std::uint64_t seed = 1) {
  selfcheck::Rng rng(seed);
  std::vector<CheckResult> out;
  auto guarded = [&](const std::string& name, const std::function<CheckResult()>& f) {
    try {
      out.push_back(f());
    } catch (const std::exception& e) {
      out.push_back({name, false, std::string("exception: ") + e.what()});
    }
  };
  guarded("antisymmetry-jacobi", [&] { return selfcheck::antisymmetry_and_jacobi(rng); });
  guarded("triangularity-roundtrip", [] { return selfcheck::triangularity_and_round_trip(); });
  guarded("lyndon-predicates", [] { return selfcheck::lyndon_predicates(); });
  guarded("witt-lyndon", [] { return selfcheck::witt_matches_lyndon_count(); });
  guarded("pbw-tensor", [] { return selfcheck::pbw_tensor_algebra(); });
  guarded("free-lie-on-generators", [] { return selfcheck::free_lie_on_free_generators(); });
  guarded("row-reduce-order", [&] { return selfcheck::row_reduce_order_independence(rng); });
  guarded("closure-order", [&] { return selfcheck::closure_order_independence(rng); });
  guarded("free-lie-integrality", [&] { return selfcheck::corpus_integrality(rng); });
  guarded("lazard", [] { return selfcheck::lazard_identities(); });
  return out;
}

} // namespace lazard
