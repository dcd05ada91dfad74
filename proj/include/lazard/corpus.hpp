#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lazard/lyndon.hpp"
#include "lazard/presentation.hpp"
#include "lazard/rational.hpp"

namespace lazard {

/// Shape of randomly generated presentations.
struct CorpusShape {
  std::size_t max_v = 2;
  std::size_t max_w = 2;
  std::size_t max_relations = 3;
  int max_relation_degree = 4;
  int max_coefficient = 3;
};

/// Random Lie element of the given multidegree as a combination of Lyndon
/// bracketings with integer coefficients; nullopt when the component is zero.
template <class Rng>
std::optional<RelationExpr> random_lie_element(const MultiDegree& degree, const Alphabet& alphabet,
                                               int max_coefficient, Rng& rng) {
  const auto words = lyndon_words(degree);
  if (words.empty())
    return std::nullopt;
  std::uniform_int_distribution<int> coef(-max_coefficient, max_coefficient);
  std::vector<RelationExpr> terms;
  while (terms.empty()) {
    for (const auto& w : words) {
      const int c = coef(rng);
      if (c == 0)
        continue;
      auto tree = RelationExpr::from_tree(bracketing(w), alphabet);
      terms.push_back(c == 1 ? tree : RelationExpr::scale(Rational(c), tree));
    }
  }
  return terms.size() == 1 ? terms.front() : RelationExpr::sum(std::move(terms));
}

/// Random presentation with relations of W-degree 0 or 1, multihomogeneous,
/// nonzero and of total degree at most shape.max_relation_degree.
template <class Rng>
Presentation random_presentation(const CorpusShape& shape, Rng& rng) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  std::size_t nv = 0, nw = 0;
  while (nv + nw == 0) {
    nv = pick(0, shape.max_v);
    nw = pick(0, shape.max_w);
  }
  std::vector<GeneratorDecl> gens;
  for (std::size_t i = 0; i < nv; ++i)
    gens.push_back({"v" + std::to_string(i + 1), Part::V});
  for (std::size_t i = 0; i < nw; ++i)
    gens.push_back({"w" + std::to_string(i + 1), Part::W});
  const Presentation base(gens, {});
  const Alphabet alphabet = base.alphabet();
  const std::size_t n = nv + nw;

  std::vector<RelationExpr> rels;
  const std::size_t nrel = pick(0, shape.max_relations);
  while (rels.size() < nrel) {
    int wdeg = nv == 0 ? 1 : (nw == 0 ? 0 : static_cast<int>(pick(0, 1)));
    const int total =
        static_cast<int>(pick(1, static_cast<std::size_t>(shape.max_relation_degree)));
    if (nv == 0 && total != wdeg)
      continue;
    MultiDegree d(n);
    if (wdeg == 1)
      ++d[nv + pick(0, nw - 1)];
    for (int k = 0; k < total - wdeg; ++k)
      ++d[pick(0, nv - 1)];
    if (auto e = random_lie_element(d, alphabet, shape.max_coefficient, rng))
      rels.push_back(*e);
  }
  return Presentation(std::move(gens), std::move(rels));
}

} // namespace lazard
