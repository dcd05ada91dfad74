#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "lazard/elimination.hpp"
#include "lazard/error.hpp"
#include "lazard/oracle.hpp"
#include "lazard/presentation.hpp"
#include "lazard/rational.hpp"
#include "lazard/series.hpp"

namespace lazard {

/// Square matrix (a_ij) over the rationals; indices are 0-based.
class CartanMatrix {
public:
  CartanMatrix() = default;
  explicit CartanMatrix(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (rows_[i].size() != rows_.size())
        throw InputError("matrix[" + std::to_string(i) + "]: row length " +
                         std::to_string(rows_[i].size()) + ", expected " +
                         std::to_string(rows_.size()));
  }
  static CartanMatrix from_ints(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Rational>> r;
    for (const auto& row : rows) {
      r.emplace_back();
      for (long v : row)
        r.back().emplace_back(v);
    }
    return CartanMatrix(std::move(r));
  }

  std::size_t size() const { return rows_.size(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return rows_.at(i).at(j); }

  CartanMatrix submatrix(const std::vector<std::size_t>& idx) const {
    std::vector<std::vector<Rational>> r;
    for (auto i : idx) {
      r.emplace_back();
      for (auto j : idx)
        r.back().push_back((*this)(i, j));
    }
    return CartanMatrix(std::move(r));
  }

private:
  std::vector<std::vector<Rational>> rows_;
};

inline std::string generator_name(std::size_t i) { return "x" + std::to_string(i + 1); }

/// Diagnostics for every violated Borcherds-Cartan condition; empty iff valid.
inline std::vector<std::string> validate_matrix(const CartanMatrix& a) {
  std::vector<std::string> out;
  const std::size_t n = a.size();
  if (n == 0)
    out.push_back("matrix is empty");
  auto at = [](std::size_t i, std::size_t j) {
    return "a[" + std::to_string(i) + "][" + std::to_string(j) + "]";
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        continue;
      if (a(i, j).sign() > 0)
        out.push_back(at(i, j) + " = " + a(i, j).str() + " is positive off the diagonal");
      if (a(i, j).is_zero() != a(j, i).is_zero())
        out.push_back(at(i, j) + " = " + a(i, j).str() + " but " + at(j, i) + " = " +
                      a(j, i).str() + ": zero pattern is not symmetric");
      if (a(i, i).sign() > 0) {
        Rational q = Rational(2) * a(i, j) / a(i, i);
        if (!q.is_integer() || q.sign() > 0)
          out.push_back("2*" + at(i, j) + "/" + at(i, i) + " = " + q.str() +
                        " is not a nonpositive integer");
      }
    }
  // symmetrizability: propagate d_j = d_i a_ij / a_ji along nonzero entries
  std::vector<std::optional<Rational>> d(n);
  for (std::size_t root = 0; root < n; ++root) {
    if (d[root])
      continue;
    d[root] = Rational(1);
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      const std::size_t i = q.front();
      q.pop();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || a(i, j).is_zero() || a(j, i).is_zero())
          continue;
        const Rational dj = *d[i] * a(i, j) / a(j, i);
        if (!d[j]) {
          if (dj.sign() <= 0) {
            out.push_back("not symmetrizable: d[" + std::to_string(j) + "] would be " + dj.str());
            continue;
          }
          d[j] = dj;
          q.push(j);
        } else if (*d[j] != dj) {
          out.push_back("not symmetrizable: inconsistent scaling around " + at(i, j));
        }
      }
    }
  }
  return out;
}

/// The pairs (i, j), i != j, carrying a Serre relation (ad x_i)^n_ij x_j.
class RelationSet {
public:
  void add(std::size_t i, std::size_t j, int exponent) { pairs_[{i, j}] = exponent; }
  bool contains(std::size_t i, std::size_t j) const { return pairs_.count({i, j}) != 0; }
  int exponent(std::size_t i, std::size_t j) const { return pairs_.at({i, j}); }
  const std::map<std::pair<std::size_t, std::size_t>, int>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }

private:
  std::map<std::pair<std::size_t, std::size_t>, int> pairs_;
};

/// (i, j) is present iff a_ii > 0, or a_ii <= 0 and a_ij = 0. The exponent is
/// 1 - 2 a_ij / a_ii for a_ii > 0 and 1 otherwise.
inline RelationSet serre_relation_set(const CartanMatrix& a) {
  if (auto diag = validate_matrix(a); !diag.empty())
    throw InputError("invalid Borcherds-Cartan matrix: " + diag.front());
  RelationSet r;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i == j)
        continue;
      if (a(i, i).sign() > 0) {
        Rational n = Rational(1) - Rational(2) * a(i, j) / a(i, i);
        r.add(i, j, static_cast<int>(to_int64(n.numerator())));
      } else if (a(i, j).is_zero()) {
        r.add(i, j, 1);
      }
    }
  return r;
}

struct SplitChoice {
  std::vector<std::size_t> S;
  std::vector<std::size_t> T;
  friend bool operator==(const SplitChoice&, const SplitChoice&) = default;
};

inline SplitChoice trivial_split(std::size_t n) {
  SplitChoice s;
  for (std::size_t i = 0; i < n; ++i)
    s.S.push_back(i);
  return s;
}

struct SplitViolation {
  enum class Condition {
    /// S and T do not partition the index set.
    partition,
    /// Two distinct T indices carry a relation.
    t_pair,
    /// A relation (ad x_i)^n x_j with i in T, j in S has W-degree n != 1, or lacks its mate.
    t_to_s,
  };
  Condition condition;
  std::size_t i = 0;
  std::size_t j = 0;
  std::string message;
};

/// Checks that T carries no relations among its distinct members and that every
/// relation from a T generator to an S generator has W-degree 1 so that it can
/// be rewritten into B. Returns all violations; empty means valid.
inline std::vector<SplitViolation> validate_split(const CartanMatrix& a, const SplitChoice& split) {
  using C = SplitViolation::Condition;
  std::vector<SplitViolation> out;
  const std::size_t n = a.size();
  std::vector<int> seen(n, 0);
  for (auto list : {&split.S, &split.T})
    for (auto i : *list) {
      if (i >= n) {
        out.push_back({C::partition, i, i, "index " + std::to_string(i) + " is out of range"});
        continue;
      }
      ++seen[i];
    }
  for (std::size_t i = 0; i < n; ++i)
    if (seen[i] != 1)
      out.push_back({C::partition, i, i,
                     "index " + std::to_string(i) +
                         (seen[i] == 0 ? " is in neither S nor T" : " is listed more than once")});
  if (!out.empty())
    return out;

  const RelationSet r = serre_relation_set(a);
  for (auto i : split.T)
    for (auto j : split.T)
      if (i != j && r.contains(i, j))
        out.push_back({C::t_pair, i, j,
                       "T-pair (" + generator_name(i) + ", " + generator_name(j) +
                           ") carries a relation; T must be relation-free"});
  for (auto i : split.T)
    for (auto j : split.S) {
      if (!r.contains(i, j))
        continue;
      const int e = r.exponent(i, j);
      if (e != 1)
        out.push_back({C::t_to_s, i, j,
                       "relation (ad " + generator_name(i) + ")^" + std::to_string(e) + " " +
                           generator_name(j) + " has W-degree " + std::to_string(e) +
                           " (i in T, j in S needs n_ij = 1 to fold into B)"});
      else if (!r.contains(j, i) || r.exponent(j, i) != 1)
        out.push_back({C::t_to_s, i, j,
                       "relation [" + generator_name(i) + ", " + generator_name(j) +
                           "] has no antisymmetric mate with n_ji = 1"});
    }
  return out;
}

/// Scan indices in order; i joins T when a_ii <= 0 and the enlarged split
/// (everything else in S) is still valid.
inline SplitChoice auto_split(const CartanMatrix& a) {
  std::vector<std::size_t> t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a(i, i).sign() > 0)
      continue;
    SplitChoice trial;
    auto cand = t;
    cand.push_back(i);
    for (std::size_t k = 0; k < a.size(); ++k)
      (std::find(cand.begin(), cand.end(), k) != cand.end() ? trial.T : trial.S).push_back(k);
    if (validate_split(a, trial).empty())
      t = std::move(cand);
  }
  SplitChoice s;
  for (std::size_t k = 0; k < a.size(); ++k)
    (std::find(t.begin(), t.end(), k) != t.end() ? s.T : s.S).push_back(k);
  return s;
}

inline RelationExpr serre_expr(std::size_t i, std::size_t j, int exponent) {
  return RelationExpr::adpow(generator_name(i), exponent, RelationExpr::gen(generator_name(j)));
}

/// Generators x_i for i in S (V-block) and i in T (W-block); A holds the
/// relations with i, j in S, B those with i in S, j in T, and relations with
/// i in T, j in S are folded into B by antisymmetry.
inline EliminationInput build_nilpotent_presentation(const CartanMatrix& a,
                                                     const SplitChoice& split) {
  if (auto v = validate_split(a, split); !v.empty())
    throw InvalidSplit(v.front().message);
  const RelationSet r = serre_relation_set(a);
  std::vector<GeneratorDecl> gens;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const bool in_t = std::find(split.T.begin(), split.T.end(), i) != split.T.end();
    gens.push_back({generator_name(i), in_t ? Part::W : Part::V});
  }
  auto in_s = [&](std::size_t i) {
    return std::find(split.S.begin(), split.S.end(), i) != split.S.end();
  };
  std::vector<RelationExpr> rels;
  std::vector<std::pair<std::size_t, std::size_t>> b_pairs;
  for (const auto& [ij, e] : r.pairs()) {
    const auto [i, j] = ij;
    if (in_s(i)) {
      rels.push_back(serre_expr(i, j, e));
      if (!in_s(j))
        b_pairs.emplace_back(i, j);
    }
  }
  for (const auto& [ij, e] : r.pairs()) {
    const auto [i, j] = ij;
    if (!in_s(i) && in_s(j)) {
      // [x_i, x_j] = -[x_j, x_i]: already present when the mate (j, i) is in B
      if (std::find(b_pairs.begin(), b_pairs.end(), std::make_pair(j, i)) == b_pairs.end()) {
        rels.push_back(serre_expr(j, i, 1));
        b_pairs.emplace_back(j, i);
      }
    }
  }
  return EliminationInput(Presentation(std::move(gens), std::move(rels)));
}

/// Every Serre relation of the nilpotent subalgebra, all generators in V, in index order.
inline Presentation full_nilpotent_presentation(const CartanMatrix& a) {
  const RelationSet r = serre_relation_set(a);
  std::vector<GeneratorDecl> gens;
  for (std::size_t i = 0; i < a.size(); ++i)
    gens.push_back({generator_name(i), Part::V});
  std::vector<RelationExpr> rels;
  for (const auto& [ij, e] : r.pairs())
    rels.push_back(serre_expr(ij.first, ij.second, e));
  return Presentation(std::move(gens), std::move(rels));
}

enum class Method { theorem, oracle, both };

inline std::string method_name(Method m) {
  switch (m) {
  case Method::theorem: return "theorem";
  case Method::oracle: return "oracle";
  case Method::both: return "both";
  }
  return "?";
}

inline Method parse_method(const std::string& s) {
  if (s == "theorem")
    return Method::theorem;
  if (s == "oracle")
    return Method::oracle;
  if (s == "both")
    return Method::both;
  throw InputError("method: expected theorem, oracle or both, got '" + s + "'");
}

/// Root multiplicities of the positive nilpotent subalgebra indexed by
/// root-lattice vectors in index order. The negative part has the same table.
struct RootMultiplicityTable {
  std::size_t rank = 0;
  int cutoff = 0;
  Method method = Method::both;
  SplitChoice split;
  GradedDims multiplicities;
  std::optional<GradedDims> theorem;
  std::optional<GradedDims> oracle;
  std::vector<Mismatch> mismatches;
};

/// Reorders a letter-order multidegree map of a presentation into declaration order.
inline GradedDims to_declaration_order(const GradedDims& dims, const Presentation& p) {
  GradedDims out(dims.nletters(), dims.cutoff());
  const auto& order = p.letter_order();
  for (const auto& [d, v] : dims.entries()) {
    MultiDegree r(d.size());
    for (std::size_t pos = 0; pos < d.size(); ++pos)
      r[order[pos]] = d[pos];
    out.set(r, v);
  }
  return out;
}

inline GradedDims from_declaration_order(const GradedDims& dims, const Presentation& p) {
  GradedDims out(dims.nletters(), dims.cutoff());
  const auto& order = p.letter_order();
  for (const auto& [r, v] : dims.entries()) {
    MultiDegree d(r.size());
    for (std::size_t pos = 0; pos < r.size(); ++pos)
      d[pos] = r[order[pos]];
    out.set(d, v);
  }
  return out;
}

/// Theorem-side prediction in index order. When inner_g is given (index order,
/// support on S) it replaces the oracle computation of n_S.
inline GradedDims theorem_multiplicities(const CartanMatrix& a, const SplitChoice& split,
                                         int cutoff, const GradedDims* inner_g = nullptr) {
  const EliminationInput input = build_nilpotent_presentation(a, split);
  EliminationEngine engine(input, cutoff);
  const GradedDims g = inner_g ? from_declaration_order(*inner_g, input.presentation())
                               : engine.g_dims();
  const GradedDims predicted = predict_quotient(g, engine.n_dims(), cutoff);
  return to_declaration_order(predicted, input.presentation());
}

inline GradedDims oracle_multiplicities(const CartanMatrix& a, int cutoff) {
  return quotient_dims(full_nilpotent_presentation(a), cutoff);
}

inline RootMultiplicityTable root_multiplicities(const CartanMatrix& a, const SplitChoice& split,
                                                 int cutoff, Method method) {
  if (auto v = validate_split(a, split); !v.empty())
    throw InvalidSplit(v.front().message);
  RootMultiplicityTable t;
  t.rank = a.size();
  t.cutoff = cutoff;
  t.method = method;
  t.split = split;
  if (method != Method::oracle)
    t.theorem = theorem_multiplicities(a, split, cutoff);
  if (method != Method::theorem)
    t.oracle = oracle_multiplicities(a, cutoff);
  if (t.theorem && t.oracle)
    t.mismatches = compare_dims(*t.theorem, *t.oracle);
  t.multiplicities = t.theorem ? *t.theorem : *t.oracle;
  return t;
}

/// Eliminates the index sets of t_chain one after another (each a subset of
/// what remains), computing the innermost subalgebra by the oracle and every
/// outer level by the theorem pipeline on top of the inner prediction.
inline GradedDims iterated_multiplicities(const CartanMatrix& a,
                                          const std::vector<std::vector<std::size_t>>& t_chain,
                                          int cutoff) {
  if (t_chain.empty())
    return oracle_multiplicities(a, cutoff);
  const auto& t = t_chain.front();
  SplitChoice split;
  for (std::size_t k = 0; k < a.size(); ++k)
    (std::find(t.begin(), t.end(), k) != t.end() ? split.T : split.S).push_back(k);
  if (auto v = validate_split(a, split); !v.empty())
    throw InvalidSplit(v.front().message);
  if (split.S.empty())
    return theorem_multiplicities(a, split, cutoff);

  // relabel the remaining chain into S-local indices
  std::vector<std::vector<std::size_t>> rest;
  for (std::size_t level = 1; level < t_chain.size(); ++level) {
    rest.emplace_back();
    for (auto k : t_chain[level]) {
      auto it = std::find(split.S.begin(), split.S.end(), k);
      if (it == split.S.end())
        throw InvalidSplit("iterated split: index " + std::to_string(k) +
                           " was already eliminated");
      rest.back().push_back(static_cast<std::size_t>(it - split.S.begin()));
    }
  }
  const GradedDims inner = iterated_multiplicities(a.submatrix(split.S), rest, cutoff);
  GradedDims embedded(a.size(), cutoff);
  for (const auto& [d, v] : inner.entries()) {
    MultiDegree full(a.size());
    for (std::size_t k = 0; k < split.S.size(); ++k)
      full[split.S[k]] = d[k];
    embedded.set(full, v);
  }
  return theorem_multiplicities(a, split, cutoff, &embedded);
}

// ---- free partially commutative Lie algebras -----------------------------

struct CommutationGraph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> commuting_pairs;

  bool commute(std::size_t i, std::size_t j) const {
    for (const auto& [a, b] : commuting_pairs)
      if ((a == i && b == j) || (a == j && b == i))
        return true;
    return false;
  }
};

/// a_ii = -2, a_ij = 0 for commuting pairs and -1 otherwise.
inline CartanMatrix fpc_matrix(const CommutationGraph& g) {
  for (const auto& [a, b] : g.commuting_pairs) {
    if (a >= g.vertices || b >= g.vertices)
      throw InputError("commuting_pairs: vertex out of range");
    if (a == b)
      throw InputError("commuting_pairs: graph must be irreflexive");
  }
  std::vector<std::vector<Rational>> rows(g.vertices, std::vector<Rational>(g.vertices));
  for (std::size_t i = 0; i < g.vertices; ++i)
    for (std::size_t j = 0; j < g.vertices; ++j)
      rows[i][j] = i == j ? Rational(-2) : (g.commute(i, j) ? Rational(0) : Rational(-1));
  return CartanMatrix(std::move(rows));
}

/// Oracle dimensions, cross-checked by the theorem pipeline when the greedy
/// split is nontrivial.
inline RootMultiplicityTable fpc_dims(const CommutationGraph& g, int cutoff) {
  const CartanMatrix a = fpc_matrix(g);
  const SplitChoice split = auto_split(a);
  return root_multiplicities(a, split, cutoff, split.T.empty() ? Method::oracle : Method::both);
}

// ---- matrix and graph files ----------------------------------------------

struct MatrixFile {
  CartanMatrix matrix;
  std::optional<SplitChoice> split;
};

inline MatrixFile matrix_file_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("matrix") || !j["matrix"].is_array())
    throw InputError("matrix: expected an array of rows");
  std::vector<std::vector<Rational>> rows;
  const auto& m = j["matrix"];
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i].is_array())
      throw InputError("matrix[" + std::to_string(i) + "]: expected an array");
    rows.emplace_back();
    for (std::size_t k = 0; k < m[i].size(); ++k) {
      const auto& e = m[i][k];
      const std::string path = "matrix[" + std::to_string(i) + "][" + std::to_string(k) + "]";
      if (e.is_string())
        try {
          rows.back().push_back(Rational::parse(e.get<std::string>()));
        } catch (const Error& err) {
          throw InputError(path + ": " + err.what());
        }
      else if (e.is_number_integer())
        rows.back().emplace_back(e.get<long>());
      else
        throw InputError(path + ": expected a rational string");
    }
  }
  MatrixFile f{CartanMatrix(std::move(rows)), std::nullopt};
  if (auto diag = validate_matrix(f.matrix); !diag.empty())
    throw InputError("matrix: " + diag.front());
  if (j.contains("split")) {
    const auto& s = j["split"];
    if (!s.is_object() || !s.contains("S") || !s.contains("T") || !s["S"].is_array() ||
        !s["T"].is_array())
      throw InputError("split: expected {\"S\": [...], \"T\": [...]}");
    SplitChoice sc;
    for (const char* key : {"S", "T"})
      for (const auto& v : s[key]) {
        if (!v.is_number_unsigned())
          throw InputError(std::string("split.") + key + ": expected nonnegative integers");
        (std::string(key) == "S" ? sc.S : sc.T).push_back(v.get<std::size_t>());
      }
    f.split = sc;
  }
  return f;
}

inline CommutationGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_number_unsigned())
    throw InputError("vertices: expected a nonnegative integer");
  CommutationGraph g;
  g.vertices = j["vertices"].get<std::size_t>();
  if (g.vertices == 0)
    throw InputError("vertices: need at least one vertex");
  if (j.contains("commuting_pairs")) {
    const auto& p = j["commuting_pairs"];
    if (!p.is_array())
      throw InputError("commuting_pairs: expected an array of pairs");
    for (std::size_t i = 0; i < p.size(); ++i) {
      const auto& e = p[i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
          !e[1].is_number_unsigned())
        throw InputError("commuting_pairs[" + std::to_string(i) + "]: expected [i, j]");
      g.commuting_pairs.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
  }
  fpc_matrix(g); // range and irreflexivity checks
  return g;
}

} // namespace lazard
