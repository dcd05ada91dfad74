#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lazard/error.hpp"
#include "lazard/free_lie.hpp"
#include "lazard/oracle.hpp"
#include "lazard/presentation.hpp"
#include "lazard/series.hpp"
#include "lazard/sparse.hpp"

namespace lazard {

/// A presentation whose relations split into A (W-degree 0, so V letters
/// only) and B (W-degree exactly 1).
class EliminationInput {
public:
  explicit EliminationInput(Presentation p) : presentation_(std::move(p)) {
    auto evaluated = eval_relations(presentation_);
    for (std::size_t i = 0; i < evaluated.size(); ++i) {
      const int wdeg = presentation_.w_degree(evaluated[i].degree);
      if (wdeg == 0)
        a_.push_back(std::move(evaluated[i]));
      else if (wdeg == 1)
        b_.push_back(std::move(evaluated[i]));
      else
        throw InputError("relations[" + std::to_string(i) + "]: W-degree " + std::to_string(wdeg) +
                         "; elimination accepts only relations of W-degree 0 or 1");
    }
  }

  const Presentation& presentation() const { return presentation_; }
  const std::vector<EvaluatedRelation>& a_relations() const { return a_; }
  const std::vector<EvaluatedRelation>& b_relations() const { return b_; }
  std::size_t nletters() const { return presentation_.size(); }
  std::size_t v_count() const { return presentation_.v_count(); }

  std::vector<Letter> v_letters() const {
    std::vector<Letter> out;
    for (std::size_t i = 0; i < v_count(); ++i)
      out.push_back(static_cast<Letter>(i));
    return out;
  }
  std::vector<Letter> w_letters() const {
    std::vector<Letter> out;
    for (std::size_t i = v_count(); i < nletters(); ++i)
      out.push_back(static_cast<Letter>(i));
    return out;
  }

private:
  Presentation presentation_;
  std::vector<EvaluatedRelation> a_;
  std::vector<EvaluatedRelation> b_;
};

/// Dimensions supported on the W-degree-1 slice (one W letter, any V part).
using ModuleDims = GradedDims;

struct Mismatch {
  MultiDegree degree;
  std::int64_t predicted = 0;
  std::int64_t oracle = 0;
  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct EliminationReport {
  Alphabet alphabet;
  std::size_t v_count = 0;
  int cutoff = 0;
  GradedDims g_dims;
  ModuleDims m_dims;
  ModuleDims n_dims;
  GradedDims predicted;
  std::optional<GradedDims> oracle;
  std::vector<Mismatch> mismatches;
  /// Membership tests showing N is a module over g; failures are listed by degree.
  std::size_t module_checks = 0;
  std::vector<MultiDegree> module_failures;

  bool ok() const { return mismatches.empty() && module_failures.empty(); }
};

/// Shared state for one elimination run: the Lyndon cache, the closure of A
/// inside L(V), and the components of M1 in the W-degree-1 slice.
class EliminationEngine {
public:
  EliminationEngine(const EliminationInput& input, int cutoff, ClosureOptions opts = {})
      : input_(input), cutoff_(cutoff), cache_(input.nletters()) {
    opts.cutoff = cutoff;
    opts_ = opts;
  }

  const EliminationInput& input() const { return input_; }
  int cutoff() const { return cutoff_; }

  /// Components of the ideal of L(V) generated by A.
  const IdealComponents& a_closure() {
    if (!a_closure_)
      a_closure_ = close_under_ad(cache_, input_.a_relations(), input_.v_letters(), opts_);
    return *a_closure_;
  }

  /// g = L(V)/<A>, embedded with zero W coordinates.
  GradedDims g_dims() {
    const auto& ideal = a_closure();
    GradedDims out(input_.nletters(), cutoff_);
    for (const auto& d : multidegrees_up_to(input_.nletters(), cutoff_)) {
      if (input_.presentation().w_degree(d) != 0)
        continue;
      out.set(d, witt_dim(d) - static_cast<std::int64_t>(ideal.dim(d)));
    }
    return out;
  }

  /// M = U(L(V)) w_j for each W letter: dim at (a, e_j) is the PBW
  /// coefficient of U(L(V)) at a.
  ModuleDims m_dims() {
    const std::size_t n = input_.nletters();
    GradedDims free_v(n, cutoff_);
    for (const auto& d : multidegrees_up_to(n, cutoff_))
      if (input_.presentation().w_degree(d) == 0)
        free_v.set(d, witt_dim(d));
    const GradedDims u = pbw_series(free_v, cutoff_ - 1);
    ModuleDims out(n, cutoff_);
    for (Letter j : input_.w_letters())
      for (const auto& [a, dim] : u.entries())
        out.set(a + MultiDegree::unit(n, j), dim);
    return out;
  }

  /// Number of Lyndon words in each (a, e_j) component: the W-degree-1 slice of L(V + W).
  ModuleDims m_dims_by_lyndon_count() {
    const std::size_t n = input_.nletters();
    ModuleDims out(n, cutoff_);
    for (const auto& d : multidegrees_up_to(n, cutoff_))
      if (input_.presentation().w_degree(d) == 1)
        out.set(d, static_cast<std::int64_t>(cache_.dim(d)));
    return out;
  }

  /// M1 = [M, <A>] + U(L(V)) B inside the W-degree-1 slice.
  const IdealComponents& m1() {
    if (m1_)
      return *m1_;
    const std::size_t n = input_.nletters();
    const auto& a_ideal = a_closure();
    const auto b_closure =
        close_under_ad(cache_, input_.b_relations(), input_.v_letters(), opts_);
    IdealComponents out(n, cutoff_);

    for (Letter j : input_.w_letters()) {
      const MultiDegree ej = MultiDegree::unit(n, j);
      for (int t = 0; t + 1 <= cutoff_; ++t) {
        for (const auto& vdeg : v_degrees_of_total(t)) {
          const MultiDegree deg = vdeg + ej;
          const std::size_t full = cache_.dim(deg);
          if (full > opts_.max_component_dim)
            throw SizeLimitExceeded("module component (" + deg.str() + ") has dimension " +
                                    std::to_string(full));
          IdealComponent comp{EchelonBasis(full), {}};
          auto offer = [&](NCPolynomial poly) {
            if (comp.basis.full() || poly.is_zero())
              return;
            if (comp.basis.insert(cache_.coordinates(poly, deg)))
              comp.spanning.push_back(std::move(poly));
          };
          if (const auto* b = b_closure.find(deg))
            for (const auto& v : b->spanning)
              offer(v);
          // [m, a] with m in M at (beta, e_j) and a in <A> at vdeg - beta
          for (const auto& [adeg, acomp] : a_ideal.components()) {
            if (comp.basis.full())
              break;
            if (!adeg.dominated_by(vdeg))
              continue;
            const MultiDegree mdeg = deg - adeg;
            for (const auto& w : cache_.lyndon(mdeg)) {
              if (comp.basis.full())
                break;
              const NCPolynomial m = cache_.realizer()(w);
              for (const auto& a : acomp.spanning) {
                if (comp.basis.full())
                  break;
                offer(bracket(m, a));
              }
            }
          }
          if (comp.basis.rank() > 0)
            out.components().emplace(deg, std::move(comp));
        }
      }
    }
    m1_ = std::move(out);
    return *m1_;
  }

  /// N = M / M1.
  ModuleDims n_dims() {
    const auto& sub = m1();
    ModuleDims out(input_.nletters(), cutoff_);
    for (const auto& d : multidegrees_up_to(input_.nletters(), cutoff_))
      if (input_.presentation().w_degree(d) == 1)
        out.set(d, static_cast<std::int64_t>(cache_.dim(d) - sub.dim(d)));
    return out;
  }

  /// Checks that N is a g-module: M1 is stable under ad of each V letter, and
  /// [a, m] lies in M1 for a in <A>, m in M. Returns the number of checks and
  /// appends the degrees of failed ones.
  std::size_t check_module(std::vector<MultiDegree>& failures) {
    const std::size_t n = input_.nletters();
    const auto& sub = m1();
    const auto& a_ideal = a_closure();
    std::size_t checks = 0;
    auto in_m1 = [&](const NCPolynomial& p, const MultiDegree& deg) {
      ++checks;
      if (p.is_zero())
        return true;
      const auto* comp = sub.find(deg);
      const SparseVector row = cache_.coordinates(p, deg);
      return comp ? comp->basis.contains(row) : row.empty();
    };
    for (const auto& [deg, comp] : sub.components()) {
      if (deg.total() >= cutoff_)
        continue;
      for (Letter i : input_.v_letters()) {
        const MultiDegree up = deg + MultiDegree::unit(n, i);
        for (const auto& v : comp.spanning)
          if (!in_m1(bracket_letter_left(i, v), up)) {
            failures.push_back(up);
            break;
          }
      }
    }
    for (Letter j : input_.w_letters()) {
      const MultiDegree ej = MultiDegree::unit(n, j);
      for (const auto& [adeg, acomp] : a_ideal.components()) {
        for (int t = 0; t + adeg.total() + 1 <= cutoff_; ++t) {
          for (const auto& vdeg : v_degrees_of_total(t)) {
            const MultiDegree mdeg = vdeg + ej;
            for (const auto& w : cache_.lyndon(mdeg)) {
              const NCPolynomial m = cache_.realizer()(w);
              for (const auto& a : acomp.spanning)
                if (!in_m1(bracket(a, m), mdeg + adeg))
                  failures.push_back(mdeg + adeg);
            }
          }
        }
      }
    }
    return checks;
  }

private:
  std::vector<MultiDegree> v_degrees_of_total(int t) const {
    const std::size_t n = input_.nletters();
    const std::size_t nv = input_.v_count();
    std::vector<MultiDegree> out;
    if (nv == 0) {
      if (t == 0)
        out.emplace_back(n);
      return out;
    }
    for (auto& d : multidegrees_of_total(nv, t)) {
      MultiDegree full(n);
      for (std::size_t i = 0; i < nv; ++i)
        full[i] = d[i];
      out.push_back(std::move(full));
    }
    return out;
  }

  const EliminationInput& input_;
  int cutoff_;
  ClosureOptions opts_;
  LieBasisCache cache_;
  std::optional<IdealComponents> a_closure_;
  std::optional<IdealComponents> m1_;
};

inline GradedDims compute_g(const EliminationInput& input, int cutoff) {
  return EliminationEngine(input, cutoff).g_dims();
}

/// With cross_check set, the PBW-derived dimensions are compared against the
/// Lyndon-word count of the W-degree-1 slice and an Error is thrown on disagreement.
inline ModuleDims compute_m_dims(const EliminationInput& input, int cutoff,
                                 bool cross_check = false) {
  EliminationEngine engine(input, cutoff);
  auto dims = engine.m_dims();
  if (cross_check && dims != engine.m_dims_by_lyndon_count())
    throw Error("M dimensions from PBW disagree with the Lyndon count of the W-degree-1 slice");
  return dims;
}

inline ModuleDims compute_n_dims(const EliminationInput& input, int cutoff) {
  return EliminationEngine(input, cutoff).n_dims();
}

/// g in W-degree 0 and the free Lie algebra on N in W-degree >= 1.
inline GradedDims predict_quotient(const GradedDims& g, const ModuleDims& n, int cutoff) {
  GradedDims out = free_lie_on_module(n, cutoff);
  for (const auto& [d, v] : g.entries()) {
    if (out.at(d) != 0)
      throw InputError("g and N overlap at (" + d.str() + ")");
    out.set(d, v);
  }
  return out;
}

inline std::vector<Mismatch> compare_dims(const GradedDims& predicted, const GradedDims& oracle) {
  std::vector<Mismatch> out;
  const int cutoff = std::min(predicted.cutoff(), oracle.cutoff());
  for (const auto& d : multidegrees_up_to(predicted.nletters(), cutoff))
    if (predicted.at(d) != oracle.at(d))
      out.push_back({d, predicted.at(d), oracle.at(d)});
  return out;
}

inline EliminationReport verify_elimination(const EliminationInput& input, int cutoff,
                                         bool with_oracle = true, ClosureOptions opts = {}) {
  EliminationEngine engine(input, cutoff, opts);
  EliminationReport r;
  r.alphabet = input.presentation().alphabet();
  r.v_count = input.v_count();
  r.cutoff = cutoff;
  r.g_dims = engine.g_dims();
  r.m_dims = engine.m_dims();
  r.n_dims = engine.n_dims();
  r.predicted = predict_quotient(r.g_dims, r.n_dims, cutoff);
  r.module_checks = engine.check_module(r.module_failures);
  if (with_oracle) {
    opts.cutoff = cutoff;
    r.oracle = quotient_dims(input.presentation(), opts);
    r.mismatches = compare_dims(r.predicted, *r.oracle);
  }
  return r;
}

// ---- Lazard special case and the enveloping-algebra identity -------------

/// Coefficientwise product of two truncated series of dimensions.
inline GradedDims multiply_series(const GradedDims& a, const GradedDims& b, int cutoff) {
  std::map<MultiDegree, mpz_class, TotalThenLex> acc;
  for (const auto& [da, ca] : a.entries())
    for (const auto& [db, cb] : b.entries()) {
      if (da.total() + db.total() > cutoff)
        break;
      acc[da + db] += mpz_class(static_cast<long>(ca)) * static_cast<long>(cb);
    }
  GradedDims out(a.nletters(), cutoff);
  for (const auto& [d, c] : acc)
    out.set(d, to_int64(c));
  return out;
}

struct LazardCheck {
  GradedDims predicted;
  GradedDims witt;
  std::vector<Mismatch> mismatches;
  /// U(L(V + W)) against U(L(M)) * U(L(V)).
  GradedDims pbw_full;
  GradedDims pbw_product;
  bool pbw_identity = false;

  bool ok() const { return mismatches.empty() && pbw_identity; }
};

/// A = B = {} on nv V letters and nw W letters: g = L(V), N = M.
inline LazardCheck lazard_check(std::size_t nv, std::size_t nw, int cutoff) {
  std::vector<GeneratorDecl> gens;
  for (std::size_t i = 0; i < nv; ++i)
    gens.push_back({"v" + std::to_string(i + 1), Part::V});
  for (std::size_t i = 0; i < nw; ++i)
    gens.push_back({"w" + std::to_string(i + 1), Part::W});
  EliminationInput input(Presentation(std::move(gens), {}));
  EliminationEngine engine(input, cutoff);

  LazardCheck c;
  const GradedDims g = engine.g_dims();
  const ModuleDims m = engine.m_dims();
  const GradedDims lm = free_lie_on_module(m, cutoff);
  c.predicted = predict_quotient(g, m, cutoff);
  c.witt = witt_dims(nv + nw, cutoff);
  c.mismatches = compare_dims(c.predicted, c.witt);
  c.pbw_full = pbw_series(c.witt, cutoff);
  c.pbw_product = multiply_series(pbw_series(lm, cutoff), pbw_series(g, cutoff), cutoff);
  c.pbw_identity = c.pbw_full == c.pbw_product;
  return c;
}

} // namespace lazard
