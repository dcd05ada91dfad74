#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "lazard/error.hpp"
#include "lazard/word.hpp"

namespace lazard {

/// True iff w is strictly smaller than each of its proper nonempty suffixes.
inline bool is_lyndon(const Word& w) {
  if (w.empty())
    return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!(w < w.substr(i, w.size() - i)))
      return false;
  return true;
}

/// Every Lyndon word over k letters of length at most n, in lexicographic
/// order (Duval's successor iteration).
inline std::vector<Word> lyndon_words_up_to(std::size_t k, std::size_t n) {
  std::vector<Word> out;
  if (k == 0 || n == 0)
    return out;
  std::vector<Letter> w{0};
  const auto top = static_cast<Letter>(k - 1);
  while (!w.empty()) {
    out.emplace_back(w);
    const std::size_t m = w.size();
    while (w.size() < n)
      w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == top)
      w.pop_back();
    if (!w.empty())
      ++w.back();
  }
  return out;
}

inline std::vector<Word> lyndon_words_of_length(std::size_t k, std::size_t n) {
  std::vector<Word> out;
  for (auto& w : lyndon_words_up_to(k, n))
    if (w.size() == n)
      out.push_back(w);
  return out;
}

/// Lyndon words of the given multidegree (one count per letter), lexicographic.
inline std::vector<Word> lyndon_words(const MultiDegree& degree) {
  std::vector<Word> out;
  const int n = degree.total();
  if (n <= 0)
    return out;
  for (auto& w : lyndon_words_of_length(degree.size(), static_cast<std::size_t>(n)))
    if (w.degree(degree.size()) == degree)
      out.push_back(w);
  return out;
}

/// w = u v with v the longest proper Lyndon suffix of w.
inline std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2)
    throw InputError("standard factorization needs a word of length at least 2");
  if (!is_lyndon(w))
    throw InputError("standard factorization needs a Lyndon word");
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word v = w.substr(i, w.size() - i);
    if (is_lyndon(v))
      return {w.substr(0, i), v};
  }
  // every Lyndon word of length >= 2 has its last letter as a Lyndon suffix
  throw Error("unreachable: no Lyndon suffix");
}

/// Binary bracket tree with generator leaves.
class BracketTree {
public:
  static BracketTree leaf(Letter l) {
    BracketTree t;
    t.letter_ = l;
    return t;
  }
  static BracketTree node(BracketTree left, BracketTree right) {
    BracketTree t;
    t.children_ = std::make_shared<const std::pair<BracketTree, BracketTree>>(std::move(left),
                                                                            std::move(right));
    return t;
  }

  bool is_leaf() const { return children_ == nullptr; }
  Letter letter() const { return letter_; }
  const BracketTree& left() const { return children_->first; }
  const BracketTree& right() const { return children_->second; }

  Word foliage() const {
    if (is_leaf())
      return Word::letter(letter_);
    return left().foliage() + right().foliage();
  }

  std::string str(const Alphabet& alphabet) const {
    if (is_leaf())
      return alphabet.name(letter_);
    return "[" + left().str(alphabet) + "," + right().str(alphabet) + "]";
  }

  friend bool operator==(const BracketTree& a, const BracketTree& b) {
    if (a.is_leaf() != b.is_leaf())
      return false;
    if (a.is_leaf())
      return a.letter_ == b.letter_;
    return a.left() == b.left() && a.right() == b.right();
  }

private:
  Letter letter_ = 0;
  std::shared_ptr<const std::pair<BracketTree, BracketTree>> children_;
};

/// Standard bracketing b(w) of a Lyndon word.
inline BracketTree bracketing(const Word& w) {
  if (w.size() == 1)
    return BracketTree::leaf(w[0]);
  auto [u, v] = standard_factorization(w);
  return BracketTree::node(bracketing(u), bracketing(v));
}

} // namespace lazard
