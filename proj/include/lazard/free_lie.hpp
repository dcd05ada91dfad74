#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "lazard/error.hpp"
#include "lazard/lyndon.hpp"
#include "lazard/rational.hpp"
#include "lazard/word.hpp"

namespace lazard {

/// Element of the tensor algebra: a sparse linear combination of words.
class NCPolynomial {
public:
  using Terms = std::map<Word, Rational>;

  NCPolynomial() = default;
  static NCPolynomial monomial(const Word& w, Rational c = Rational(1)) {
    NCPolynomial p;
    if (!c.is_zero())
      p.terms_.emplace(w, std::move(c));
    return p;
  }
  static NCPolynomial generator(Letter l) { return monomial(Word::letter(l)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational() : it->second;
  }

  /// Lexicographically smallest monomial with its coefficient.
  const std::pair<const Word, Rational>& leading() const { return *terms_.begin(); }

  void add_term(const Word& w, const Rational& c) {
    if (c.is_zero())
      return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero())
        terms_.erase(it);
    }
  }

  /// this += factor * other
  void add_scaled(const Rational& factor, const NCPolynomial& other) {
    if (factor.is_zero())
      return;
    for (const auto& [w, c] : other.terms_)
      add_term(w, factor * c);
  }

  NCPolynomial& operator+=(const NCPolynomial& o) {
    add_scaled(Rational(1), o);
    return *this;
  }
  NCPolynomial& operator-=(const NCPolynomial& o) {
    add_scaled(Rational(-1), o);
    return *this;
  }
  NCPolynomial& operator*=(const Rational& c) {
    if (c.is_zero())
      terms_.clear();
    for (auto& [w, v] : terms_)
      v *= c;
    return *this;
  }
  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
  friend NCPolynomial operator*(const Rational& c, NCPolynomial a) { return a *= c; }

  /// Concatenation product in the tensor algebra.
  friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
    NCPolynomial out;
    for (const auto& [u, cu] : a.terms_)
      for (const auto& [v, cv] : b.terms_)
        out.add_term(u + v, cu * cv);
    return out;
  }

  /// The common multidegree of all terms, or nullopt when zero or inhomogeneous.
  std::optional<MultiDegree> homogeneous_degree(std::size_t nletters) const {
    if (terms_.empty())
      return std::nullopt;
    MultiDegree d = terms_.begin()->first.degree(nletters);
    for (const auto& [w, c] : terms_)
      if (w.degree(nletters) != d)
        return std::nullopt;
    return d;
  }

  std::string str(const Alphabet& alphabet) const {
    if (terms_.empty())
      return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      Rational mag = c.sign() < 0 ? -c : c;
      s += first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
      if (mag != Rational(1))
        s += mag.str() + "*";
      s += w.str(alphabet);
      first = false;
    }
    return s;
  }

  friend bool operator==(const NCPolynomial&, const NCPolynomial&) = default;

private:
  Terms terms_;
};

/// pq - qp
inline NCPolynomial bracket(const NCPolynomial& p, const NCPolynomial& q) {
  return p * q - q * p;
}

/// [x_l, p] computed directly on words.
inline NCPolynomial bracket_letter_left(Letter l, const NCPolynomial& p) {
  NCPolynomial out;
  const Word x = Word::letter(l);
  for (const auto& [w, c] : p.terms()) {
    out.add_term(x + w, c);
    out.add_term(w + x, -c);
  }
  return out;
}

inline NCPolynomial realize(const BracketTree& t) {
  if (t.is_leaf())
    return NCPolynomial::generator(t.letter());
  return bracket(realize(t.left()), realize(t.right()));
}

/// Coordinates sum_w c_w * realize(bracketing(w)) over Lyndon words w.
using LieCoordinates = std::map<Word, Rational>;

/// Memoizes realize(bracketing(w)) for Lyndon words. Not thread-safe; use one
/// per computation.
class LyndonRealizer {
public:
  const NCPolynomial& operator()(const Word& w) {
    auto it = cache_.find(w);
    if (it != cache_.end())
      return it->second;
    NCPolynomial p;
    if (w.size() == 1) {
      p = NCPolynomial::generator(w[0]);
    } else {
      auto [u, v] = standard_factorization(w);
      const NCPolynomial& pu = (*this)(u);
      const NCPolynomial& pv = (*this)(v);
      p = bracket(pu, pv);
    }
    return cache_.emplace(w, std::move(p)).first->second;
  }

private:
  std::map<Word, NCPolynomial> cache_;
};

/// Expands a Lie element in the Lyndon basis by peeling off the
/// lexicographically smallest monomial, which must be Lyndon at every step.
inline LieCoordinates lyndon_expand(const NCPolynomial& p, LyndonRealizer& realizer) {
  LieCoordinates coords;
  NCPolynomial residual = p;
  while (!residual.is_zero()) {
    const auto [w, c] = residual.leading();
    if (!is_lyndon(w))
      throw NotLieElement("not a Lie element: leading monomial is not a Lyndon word");
    coords.emplace(w, c);
    residual.add_scaled(-c, realizer(w));
  }
  return coords;
}

inline LieCoordinates lyndon_expand(const NCPolynomial& p) {
  LyndonRealizer realizer;
  return lyndon_expand(p, realizer);
}

inline bool is_lie_element(const NCPolynomial& p) {
  try {
    lyndon_expand(p);
    return true;
  } catch (const NotLieElement&) {
    return false;
  }
}

} // namespace lazard
