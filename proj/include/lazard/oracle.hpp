#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "lazard/error.hpp"
#include "lazard/free_lie.hpp"
#include "lazard/lyndon.hpp"
#include "lazard/presentation.hpp"
#include "lazard/series.hpp"
#include "lazard/sparse.hpp"
#include "lazard/word.hpp"

namespace lazard {

enum class BracketSide { left, right };

struct ClosureOptions {
  int cutoff = 6;
  /// [x, v] or [v, x] when extending a component by a generator.
  BracketSide side = BracketSide::left;
  /// Components whose free Lie dimension exceeds this abort the run.
  std::size_t max_component_dim = 5000;
};

/// Lyndon bases of the free Lie algebra on a fixed number of letters, one
/// per multidegree, with the column numbering used for echelon rows.
class LieBasisCache {
public:
  explicit LieBasisCache(std::size_t nletters) : nletters_(nletters) {}

  std::size_t nletters() const { return nletters_; }

  const std::vector<Word>& lyndon(const MultiDegree& d) {
    const int n = d.total();
    if (!lengths_done_.count(n)) {
      for (auto& w : lyndon_words_of_length(nletters_, static_cast<std::size_t>(n)))
        by_degree_[w.degree(nletters_)].push_back(w);
      lengths_done_.insert(n);
    }
    return by_degree_[d];
  }

  std::size_t dim(const MultiDegree& d) { return lyndon(d).size(); }

  /// Lyndon coordinates of a homogeneous Lie element of degree d as a sparse row.
  SparseVector coordinates(const NCPolynomial& p, const MultiDegree& d) {
    const auto& words = lyndon(d);
    LieCoordinates coords = lyndon_expand(p, realizer_);
    std::vector<SparseVector::Entry> entries;
    entries.reserve(coords.size());
    for (auto& [w, c] : coords) {
      auto it = std::lower_bound(words.begin(), words.end(), w);
      if (it == words.end() || *it != w)
        throw NotHomogeneous("Lie element has a component outside multidegree (" + d.str() + ")");
      entries.emplace_back(static_cast<std::size_t>(it - words.begin()), std::move(c));
    }
    return SparseVector::from_entries(std::move(entries));
  }

  LyndonRealizer& realizer() { return realizer_; }

private:
  std::size_t nletters_;
  std::set<int> lengths_done_;
  std::map<MultiDegree, std::vector<Word>> by_degree_;
  LyndonRealizer realizer_;
};

/// One multidegree component of an ideal: an echelon basis in Lyndon
/// coordinates and the independent Lie elements that produced it.
struct IdealComponent {
  EchelonBasis basis;
  std::vector<NCPolynomial> spanning;
};

class IdealComponents {
public:
  using Map = std::map<MultiDegree, IdealComponent, TotalThenLex>;

  IdealComponents() = default;
  IdealComponents(std::size_t nletters, int cutoff) : nletters_(nletters), cutoff_(cutoff) {}

  std::size_t nletters() const { return nletters_; }
  int cutoff() const { return cutoff_; }
  const Map& components() const { return components_; }
  Map& components() { return components_; }

  const IdealComponent* find(const MultiDegree& d) const {
    auto it = components_.find(d);
    return it == components_.end() ? nullptr : &it->second;
  }
  std::size_t dim(const MultiDegree& d) const {
    const auto* c = find(d);
    return c ? c->basis.rank() : 0;
  }

private:
  std::size_t nletters_ = 0;
  int cutoff_ = 0;
  Map components_;
};

/// Smallest subspace containing the seeds and closed under bracketing with
/// the acting letters, computed component by component in increasing total
/// degree up to the cutoff. With every letter acting this is the ideal the
/// seeds generate; with a subset it is the submodule over the subalgebra
/// those letters generate.
inline IdealComponents close_under_ad(LieBasisCache& cache,
                                      const std::vector<EvaluatedRelation>& seeds,
                                      const std::vector<Letter>& acting,
                                      const ClosureOptions& opts) {
  const std::size_t n = cache.nletters();
  IdealComponents out(n, opts.cutoff);
  std::map<MultiDegree, std::vector<const NCPolynomial*>, TotalThenLex> seeds_at;
  std::set<MultiDegree, TotalThenLex> frontier;
  for (const auto& s : seeds) {
    if (s.degree.size() != n)
      throw InputError("seed multidegree has the wrong number of slots");
    if (s.degree.total() <= opts.cutoff) {
      seeds_at[s.degree].push_back(&s.poly);
      frontier.insert(s.degree);
    }
  }

  while (!frontier.empty()) {
    const MultiDegree alpha = *frontier.begin();
    frontier.erase(frontier.begin());
    const std::size_t full = cache.dim(alpha);
    if (full > opts.max_component_dim)
      throw SizeLimitExceeded("free Lie component (" + alpha.str() + ") has dimension " +
                              std::to_string(full) + ", above the limit of " +
                              std::to_string(opts.max_component_dim));
    IdealComponent comp{EchelonBasis(full), {}};
    auto offer = [&](NCPolynomial poly) {
      if (comp.basis.full() || poly.is_zero())
        return;
      if (comp.basis.insert(cache.coordinates(poly, alpha)))
        comp.spanning.push_back(std::move(poly));
    };

    if (auto it = seeds_at.find(alpha); it != seeds_at.end())
      for (const auto* p : it->second)
        offer(*p);
    for (Letter l : acting) {
      if (comp.basis.full())
        break;
      if (alpha[l] == 0)
        continue;
      MultiDegree prev = alpha;
      --prev[l];
      const auto* source = out.find(prev);
      if (!source)
        continue;
      for (const auto& v : source->spanning) {
        if (comp.basis.full())
          break;
        if (opts.side == BracketSide::left)
          offer(bracket_letter_left(l, v));
        else
          offer(bracket(v, NCPolynomial::generator(l)));
      }
    }

    if (comp.basis.rank() == 0)
      continue;
    if (alpha.total() < opts.cutoff)
      for (Letter l : acting) {
        MultiDegree next = alpha;
        ++next[l];
        frontier.insert(next);
      }
    out.components().emplace(alpha, std::move(comp));
  }
  return out;
}

inline std::vector<Letter> all_letters(std::size_t n) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(static_cast<Letter>(i));
  return out;
}

/// Graded components of the ideal generated by the relations, up to the cutoff.
inline IdealComponents ideal_closure(const Presentation& p, const ClosureOptions& opts) {
  LieBasisCache cache(p.size());
  return close_under_ad(cache, eval_relations(p), all_letters(p.size()), opts);
}

/// dim L(X)_a - dim I_a for every multidegree up to the cutoff of the ideal.
inline GradedDims quotient_dims(const IdealComponents& ideal) {
  GradedDims out(ideal.nletters(), ideal.cutoff());
  for (const auto& d : multidegrees_up_to(ideal.nletters(), ideal.cutoff())) {
    const auto free_dim = witt_dim(d);
    const auto killed = static_cast<std::int64_t>(ideal.dim(d));
    if (killed > free_dim)
      throw Error("ideal component exceeds the free Lie component at (" + d.str() + ")");
    out.set(d, free_dim - killed);
  }
  return out;
}

inline GradedDims quotient_dims(const Presentation& p, const ClosureOptions& opts) {
  return quotient_dims(ideal_closure(p, opts));
}

inline GradedDims quotient_dims(const Presentation& p, int cutoff) {
  ClosureOptions opts;
  opts.cutoff = cutoff;
  return quotient_dims(p, opts);
}

} // namespace lazard
