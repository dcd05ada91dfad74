#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "lazard/error.hpp"
#include "lazard/free_lie.hpp"
#include "lazard/lyndon.hpp"
#include "lazard/rational.hpp"
#include "lazard/word.hpp"

namespace lazard {

/// Which block of V + W a generator belongs to.
enum class Part { V, W };

struct GeneratorDecl {
  std::string name;
  Part part = Part::V;
  friend bool operator==(const GeneratorDecl&, const GeneratorDecl&) = default;
};

/// Immutable expression tree for a relation. Nodes are shared between copies.
class RelationExpr {
public:
  enum class Kind { gen, bracket, scale, sum, adpow };

  static RelationExpr gen(std::string name) {
    Node n;
    n.kind = Kind::gen;
    n.name = std::move(name);
    return RelationExpr(std::move(n));
  }
  static RelationExpr bracket(RelationExpr left, RelationExpr right) {
    Node n;
    n.kind = Kind::bracket;
    n.children = {std::move(left), std::move(right)};
    return RelationExpr(std::move(n));
  }
  static RelationExpr scale(Rational factor, RelationExpr e) {
    Node n;
    n.kind = Kind::scale;
    n.factor = std::move(factor);
    n.children = {std::move(e)};
    return RelationExpr(std::move(n));
  }
  static RelationExpr sum(std::vector<RelationExpr> terms) {
    Node n;
    n.kind = Kind::sum;
    n.children = std::move(terms);
    return RelationExpr(std::move(n));
  }
  /// (ad op)^exponent arg
  static RelationExpr adpow(std::string op, int exponent, RelationExpr arg) {
    if (exponent < 1)
      throw InputError("adpow exponent must be at least 1");
    Node n;
    n.kind = Kind::adpow;
    n.name = std::move(op);
    n.exponent = exponent;
    n.children = {std::move(arg)};
    return RelationExpr(std::move(n));
  }
  static RelationExpr from_tree(const BracketTree& t, const Alphabet& alphabet) {
    if (t.is_leaf())
      return gen(alphabet.name(t.letter()));
    return bracket(from_tree(t.left(), alphabet), from_tree(t.right(), alphabet));
  }

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  const Rational& factor() const { return node_->factor; }
  int exponent() const { return node_->exponent; }
  const std::vector<RelationExpr>& children() const { return node_->children; }

private:
  struct Node {
    Kind kind = Kind::gen;
    std::string name;
    Rational factor;
    int exponent = 0;
    std::vector<RelationExpr> children;
  };
  explicit RelationExpr(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}

  std::shared_ptr<const Node> node_;
};

/// Generators split into a V-block and a W-block, plus relations.
///
/// Letters are ordered V-block first, then W-block, each in declaration
/// order; every multidegree produced by the engines uses that order.
class Presentation {
public:
  Presentation() = default;
  Presentation(std::vector<GeneratorDecl> generators, std::vector<RelationExpr> relations)
      : generators_(std::move(generators)), relations_(std::move(relations)) {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (generators_[i].name.empty())
        throw InputError("generators[" + std::to_string(i) + "].name: empty name");
      for (std::size_t j = 0; j < i; ++j)
        if (generators_[j].name == generators_[i].name)
          throw InputError("generators[" + std::to_string(i) + "].name: duplicate name '" +
                           generators_[i].name + "'");
    }
    if (generators_.size() > Word::max_letters)
      throw SizeLimitExceeded("at most 16 generators are supported");
    for (Part part : {Part::V, Part::W})
      for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].part == part)
          order_.push_back(i);
  }

  const std::vector<GeneratorDecl>& generators() const { return generators_; }
  const std::vector<RelationExpr>& relations() const { return relations_; }
  std::size_t size() const { return generators_.size(); }

  std::size_t v_count() const {
    std::size_t n = 0;
    for (const auto& g : generators_)
      n += g.part == Part::V;
    return n;
  }
  std::size_t w_count() const { return size() - v_count(); }

  /// Declaration index of the generator at each letter position.
  const std::vector<std::size_t>& letter_order() const { return order_; }

  /// Generator names in letter order (V-block first).
  Alphabet alphabet() const {
    std::vector<std::string> names;
    for (auto i : order_)
      names.push_back(generators_[i].name);
    return Alphabet(std::move(names));
  }

  Letter letter_of(const std::string& name) const {
    for (std::size_t pos = 0; pos < order_.size(); ++pos)
      if (generators_[order_[pos]].name == name)
        return static_cast<Letter>(pos);
    throw UnknownGenerator(name);
  }

  /// Sum of a letter-order multidegree over W letters.
  int w_degree(const MultiDegree& d) const { return d.tail_sum(v_count()); }

  Presentation with_relations(std::vector<RelationExpr> relations) const {
    return Presentation(generators_, std::move(relations));
  }

private:
  std::vector<GeneratorDecl> generators_;
  std::vector<RelationExpr> relations_;
  std::vector<std::size_t> order_;
};

namespace detail {

inline NCPolynomial eval_expr(const Presentation& p, const RelationExpr& e) {
  switch (e.kind()) {
  case RelationExpr::Kind::gen:
    return NCPolynomial::generator(p.letter_of(e.name()));
  case RelationExpr::Kind::bracket:
    return lazard::bracket(eval_expr(p, e.children()[0]), eval_expr(p, e.children()[1]));
  case RelationExpr::Kind::scale:
    return e.factor() * eval_expr(p, e.children()[0]);
  case RelationExpr::Kind::sum: {
    NCPolynomial acc;
    for (const auto& c : e.children())
      acc += eval_expr(p, c);
    return acc;
  }
  case RelationExpr::Kind::adpow: {
    const Letter op = p.letter_of(e.name());
    NCPolynomial acc = eval_expr(p, e.children()[0]);
    for (int k = 0; k < e.exponent() && !acc.is_zero(); ++k)
      acc = bracket_letter_left(op, acc);
    return acc;
  }
  }
  throw Error("unknown relation node");
}

} // namespace detail

/// A relation evaluated in the tensor algebra together with its multidegree.
struct EvaluatedRelation {
  MultiDegree degree;
  NCPolynomial poly;
};

/// Evaluates a relation and checks it is a nonzero multihomogeneous Lie element.
inline EvaluatedRelation eval_relation(const Presentation& p, const RelationExpr& e) {
  NCPolynomial poly = detail::eval_expr(p, e);
  if (poly.is_zero())
    throw ZeroRelation("relation evaluates to zero");
  auto degree = poly.homogeneous_degree(p.size());
  if (!degree)
    throw NotHomogeneous("relation is not multihomogeneous: " + poly.str(p.alphabet()));
  lyndon_expand(poly); // throws NotLieElement
  return {*degree, std::move(poly)};
}

inline std::vector<EvaluatedRelation> eval_relations(const Presentation& p) {
  std::vector<EvaluatedRelation> out;
  for (std::size_t i = 0; i < p.relations().size(); ++i) {
    try {
      out.push_back(eval_relation(p, p.relations()[i]));
    } catch (const ZeroRelation&) {
      throw ZeroRelation("relations[" + std::to_string(i) + "]: relation evaluates to zero");
    }
  }
  return out;
}

// ---- JSON ----------------------------------------------------------------

inline nlohmann::json expr_to_json(const RelationExpr& e) {
  using nlohmann::json;
  switch (e.kind()) {
  case RelationExpr::Kind::gen:
    return json{{"gen", e.name()}};
  case RelationExpr::Kind::bracket:
    return json{{"bracket", json::array({expr_to_json(e.children()[0]),
                                         expr_to_json(e.children()[1])})}};
  case RelationExpr::Kind::scale:
    return json{{"scale", json::array({e.factor().str(), expr_to_json(e.children()[0])})}};
  case RelationExpr::Kind::sum: {
    json terms = json::array();
    for (const auto& c : e.children())
      terms.push_back(expr_to_json(c));
    return json{{"sum", terms}};
  }
  case RelationExpr::Kind::adpow:
    return json{{"adpow",
                 {{"op", e.name()}, {"exp", e.exponent()}, {"arg", expr_to_json(e.children()[0])}}}};
  }
  throw Error("unknown relation node");
}

inline RelationExpr expr_from_json(const nlohmann::json& j, const std::string& path) {
  auto fail = [&](const std::string& why) -> InputError { return InputError(path + ": " + why); };
  if (!j.is_object() || j.size() != 1)
    throw fail("expected an object with exactly one of gen/bracket/scale/sum/adpow");
  const auto it = j.begin();
  const std::string key = it.key();
  const nlohmann::json& val = it.value();
  const std::string sub = path + "." + key;
  if (key == "gen") {
    if (!val.is_string())
      throw InputError(sub + ": expected a generator name");
    return RelationExpr::gen(val.get<std::string>());
  }
  if (key == "bracket") {
    if (!val.is_array() || val.size() != 2)
      throw InputError(sub + ": expected an array of two expressions");
    return RelationExpr::bracket(expr_from_json(val[0], sub + "[0]"),
                                 expr_from_json(val[1], sub + "[1]"));
  }
  if (key == "scale") {
    if (!val.is_array() || val.size() != 2 || !(val[0].is_string() || val[0].is_number_integer()))
      throw InputError(sub + ": expected [\"p/q\", expression]");
    Rational f = val[0].is_string() ? Rational::parse(val[0].get<std::string>())
                                    : Rational(val[0].get<long>());
    return RelationExpr::scale(std::move(f), expr_from_json(val[1], sub + "[1]"));
  }
  if (key == "sum") {
    if (!val.is_array() || val.empty())
      throw InputError(sub + ": expected a nonempty array of expressions");
    std::vector<RelationExpr> terms;
    for (std::size_t i = 0; i < val.size(); ++i)
      terms.push_back(expr_from_json(val[i], sub + "[" + std::to_string(i) + "]"));
    return RelationExpr::sum(std::move(terms));
  }
  if (key == "adpow") {
    if (!val.is_object() || !val.contains("op") || !val.contains("exp") || !val.contains("arg"))
      throw InputError(sub + ": expected {op, exp, arg}");
    if (!val["op"].is_string())
      throw InputError(sub + ".op: expected a generator name");
    if (!val["exp"].is_number_integer() || val["exp"].get<long>() < 1)
      throw InputError(sub + ".exp: expected a positive integer");
    return RelationExpr::adpow(val["op"].get<std::string>(), val["exp"].get<int>(),
                               expr_from_json(val["arg"], sub + ".arg"));
  }
  throw fail("unknown expression kind '" + key + "'");
}

inline nlohmann::json presentation_to_json(const Presentation& p) {
  using nlohmann::json;
  json gens = json::array();
  for (const auto& g : p.generators())
    gens.push_back({{"name", g.name}, {"part", g.part == Part::V ? "V" : "W"}});
  json rels = json::array();
  for (const auto& r : p.relations())
    rels.push_back(expr_to_json(r));
  return json{{"generators", gens}, {"relations", rels}};
}

inline Presentation presentation_from_json(const nlohmann::json& j) {
  if (!j.is_object())
    throw InputError("presentation: expected a JSON object");
  if (!j.contains("generators") || !j["generators"].is_array())
    throw InputError("generators: expected an array");
  std::vector<GeneratorDecl> gens;
  const auto& ga = j["generators"];
  for (std::size_t i = 0; i < ga.size(); ++i) {
    const std::string path = "generators[" + std::to_string(i) + "]";
    const auto& g = ga[i];
    if (!g.is_object() || !g.contains("name") || !g["name"].is_string())
      throw InputError(path + ".name: expected a string");
    Part part = Part::V;
    if (g.contains("part")) {
      if (!g["part"].is_string())
        throw InputError(path + ".part: expected \"V\" or \"W\"");
      auto s = g["part"].get<std::string>();
      if (s == "V")
        part = Part::V;
      else if (s == "W")
        part = Part::W;
      else
        throw InputError(path + ".part: expected \"V\" or \"W\", got \"" + s + "\"");
    }
    gens.push_back({g["name"].get<std::string>(), part});
  }
  if (gens.empty())
    throw InputError("generators: at least one generator is required");
  std::vector<RelationExpr> rels;
  if (j.contains("relations")) {
    const auto& ra = j["relations"];
    if (!ra.is_array())
      throw InputError("relations: expected an array");
    for (std::size_t i = 0; i < ra.size(); ++i)
      rels.push_back(expr_from_json(ra[i], "relations[" + std::to_string(i) + "]"));
  }
  Presentation p(std::move(gens), std::move(rels));
  // surface unknown names, zero and inhomogeneous relations at load time
  for (std::size_t i = 0; i < p.relations().size(); ++i) {
    try {
      eval_relation(p, p.relations()[i]);
    } catch (const Error& e) {
      throw InputError("relations[" + std::to_string(i) + "]: " + e.what());
    }
  }
  return p;
}

} // namespace lazard
