#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "lazard/error.hpp"

namespace lazard {

using Letter = std::uint8_t;

/// Ordered generator names; letter i is the i-th name and letters compare by index.
class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
      throw InputError("alphabet must be nonempty");
    auto sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InputError("alphabet letters must be unique");
  }

  /// Letters a, b, c, ... (or x1, x2, ... beyond 26 letters).
  static Alphabet standard(std::size_t k) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i)
      names.push_back(k <= 26 ? std::string(1, static_cast<char>('a' + i))
                              : "x" + std::to_string(i + 1));
    return Alphabet(std::move(names));
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(Letter l) const { return names_.at(l); }
  const std::vector<std::string>& names() const { return names_; }

  std::size_t index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
      throw UnknownGenerator(name);
    return static_cast<std::size_t>(it - names_.begin());
  }

  bool single_char_names() const {
    return std::all_of(names_.begin(), names_.end(),
                       [](const std::string& n) { return n.size() == 1; });
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
  std::vector<std::string> names_;
};

/// Occurrence counts per letter.
struct MultiDegree {
  std::vector<int> counts;

  MultiDegree() = default;
  explicit MultiDegree(std::size_t nletters) : counts(nletters, 0) {}
  MultiDegree(std::initializer_list<int> c) : counts(c) {}
  explicit MultiDegree(std::vector<int> c) : counts(std::move(c)) {}

  static MultiDegree unit(std::size_t nletters, std::size_t i) {
    MultiDegree d(nletters);
    d.counts.at(i) = 1;
    return d;
  }

  std::size_t size() const { return counts.size(); }
  int operator[](std::size_t i) const { return counts[i]; }
  int& operator[](std::size_t i) { return counts[i]; }

  int total() const { return std::accumulate(counts.begin(), counts.end(), 0); }
  bool is_zero() const {
    return std::all_of(counts.begin(), counts.end(), [](int c) { return c == 0; });
  }
  int gcd() const {
    int g = 0;
    for (int c : counts)
      g = std::gcd(g, c);
    return g;
  }
  /// Sum of counts over letters [first, size).
  int tail_sum(std::size_t first) const {
    int s = 0;
    for (std::size_t i = first; i < counts.size(); ++i)
      s += counts[i];
    return s;
  }
  bool dominated_by(const MultiDegree& o) const {
    for (std::size_t i = 0; i < counts.size(); ++i)
      if (counts[i] > o.counts[i])
        return false;
    return true;
  }

  MultiDegree& operator+=(const MultiDegree& o) {
    for (std::size_t i = 0; i < counts.size(); ++i)
      counts[i] += o.counts[i];
    return *this;
  }
  MultiDegree& operator-=(const MultiDegree& o) {
    for (std::size_t i = 0; i < counts.size(); ++i)
      counts[i] -= o.counts[i];
    return *this;
  }
  friend MultiDegree operator+(MultiDegree a, const MultiDegree& b) { return a += b; }
  friend MultiDegree operator-(MultiDegree a, const MultiDegree& b) { return a -= b; }
  friend MultiDegree operator*(int k, MultiDegree a) {
    for (auto& c : a.counts)
      c *= k;
    return a;
  }

  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
  friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (i)
        s += ',';
      s += std::to_string(counts[i]);
    }
    return s;
  }
};

/// Total degree first, then lexicographic on the count vector.
struct TotalThenLex {
  bool operator()(const MultiDegree& a, const MultiDegree& b) const {
    int ta = a.total(), tb = b.total();
    if (ta != tb)
      return ta < tb;
    return a.counts < b.counts;
  }
};

/// All multidegrees over n letters with total degree exactly t, in lexicographic order.
inline std::vector<MultiDegree> multidegrees_of_total(std::size_t n, int t) {
  std::vector<MultiDegree> out;
  if (n == 0)
    return out;
  MultiDegree cur(n);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      cur[i] = c;
      self(self, i + 1, left - c);
    }
  };
  rec(rec, 0, t);
  return out;
}

/// All nonzero multidegrees with total degree in [1, cutoff], in TotalThenLex order.
inline std::vector<MultiDegree> multidegrees_up_to(std::size_t n, int cutoff) {
  std::vector<MultiDegree> out;
  for (int t = 1; t <= cutoff; ++t) {
    auto level = multidegrees_of_total(n, t);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// A word over at most 16 letters of length at most 16, packed four bits per
/// letter from the most significant end. Comparison is the lexicographic
/// order in which a proper prefix precedes its extensions.
class Word {
public:
  static constexpr std::size_t max_length = 16;
  static constexpr std::size_t max_letters = 16;

  Word() = default;
  Word(std::initializer_list<Letter> letters) {
    for (Letter l : letters)
      push_back(l);
  }
  explicit Word(const std::vector<Letter>& letters) {
    for (Letter l : letters)
      push_back(l);
  }
  static Word letter(Letter l) {
    Word w;
    w.push_back(l);
    return w;
  }

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }

  Letter operator[](std::size_t i) const {
    return static_cast<Letter>((bits_ >> shift(i)) & 0xFu);
  }

  void push_back(Letter l) {
    if (l >= max_letters)
      throw SizeLimitExceeded("words support at most 16 letters");
    if (len_ >= max_length)
      throw SizeLimitExceeded("words support length at most 16");
    bits_ |= static_cast<std::uint64_t>(l) << shift(len_);
    ++len_;
  }

  Word substr(std::size_t pos, std::size_t n) const {
    Word w;
    for (std::size_t i = pos; i < pos + n && i < len_; ++i)
      w.push_back((*this)[i]);
    return w;
  }

  friend Word operator+(const Word& a, const Word& b) {
    if (a.len_ + b.len_ > max_length)
      throw SizeLimitExceeded("words support length at most 16");
    Word w;
    w.bits_ = a.bits_ | (b.len_ == 0 ? 0 : (b.bits_ >> (4 * a.len_)));
    w.len_ = static_cast<std::uint8_t>(a.len_ + b.len_);
    return w;
  }

  MultiDegree degree(std::size_t nletters) const {
    MultiDegree d(nletters);
    for (std::size_t i = 0; i < len_; ++i)
      ++d[(*this)[i]];
    return d;
  }

  std::vector<Letter> letters() const {
    std::vector<Letter> out;
    for (std::size_t i = 0; i < len_; ++i)
      out.push_back((*this)[i]);
    return out;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.bits_ <=> b.bits_; c != 0)
      return c;
    return a.len_ <=> b.len_;
  }

  /// Juxtaposed names, dot-separated when any name is longer than one character.
  std::string str(const Alphabet& alphabet) const {
    std::string s;
    bool dots = !alphabet.single_char_names();
    for (std::size_t i = 0; i < len_; ++i) {
      if (dots && i)
        s += '.';
      s += alphabet.name((*this)[i]);
    }
    return s;
  }

private:
  static unsigned shift(std::size_t i) { return static_cast<unsigned>(60 - 4 * i); }

  std::uint64_t bits_ = 0;
  std::uint8_t len_ = 0;
};

/// Parses a word written in an alphabet's names (dot separated, or juxtaposed
/// single-character names).
inline Word parse_word(const std::string& text, const Alphabet& alphabet) {
  Word w;
  if (text.find('.') != std::string::npos || !alphabet.single_char_names()) {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto dot = text.find('.', start);
      auto piece = text.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
      w.push_back(static_cast<Letter>(alphabet.index_of(piece)));
      if (dot == std::string::npos)
        break;
      start = dot + 1;
    }
  } else {
    for (char c : text)
      w.push_back(static_cast<Letter>(alphabet.index_of(std::string(1, c))));
  }
  return w;
}

} // namespace lazard
