#pragma once

#include <ostream>
#include <string>

#include "json.hpp"

#include "lazard/elimination.hpp"
#include "lazard/gkm.hpp"
#include "lazard/series.hpp"

namespace lazard {

inline nlohmann::json degree_to_json(const MultiDegree& d) { return d.counts; }

/// [{degree: [...], dim: n}, ...] sorted by total degree, then lexicographically.
inline nlohmann::json dims_to_json(const GradedDims& dims) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [d, v] : dims.entries())
    out.push_back({{"degree", degree_to_json(d)}, {"dim", v}});
  return out;
}

inline GradedDims dims_from_json(const nlohmann::json& j, std::size_t nletters, int cutoff) {
  GradedDims out(nletters, cutoff);
  if (!j.is_array())
    throw InputError("dims: expected an array of {degree, dim}");
  for (const auto& e : j)
    out.set(MultiDegree(e.at("degree").get<std::vector<int>>()), e.at("dim").get<std::int64_t>());
  return out;
}

inline void write_dims_tsv(std::ostream& os, const GradedDims& dims) {
  os << "degree\tdim\n";
  for (const auto& [d, v] : dims.entries())
    os << d.str() << '\t' << v << '\n';
}

inline nlohmann::json mismatches_to_json(const std::vector<Mismatch>& ms,
                                         const char* left = "predicted",
                                         const char* right = "oracle") {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& m : ms)
    out.push_back({{"degree", degree_to_json(m.degree)}, {left, m.predicted}, {right, m.oracle}});
  return out;
}

inline nlohmann::json report_to_json(const EliminationReport& r) {
  nlohmann::json j;
  j["alphabet"] = r.alphabet.names();
  j["v_count"] = r.v_count;
  j["cutoff"] = r.cutoff;
  j["g_dims"] = dims_to_json(r.g_dims);
  j["m_dims"] = dims_to_json(r.m_dims);
  j["n_dims"] = dims_to_json(r.n_dims);
  j["predicted"] = dims_to_json(r.predicted);
  if (r.oracle)
    j["oracle"] = dims_to_json(*r.oracle);
  j["mismatches"] = mismatches_to_json(r.mismatches);
  j["module_checks"] = r.module_checks;
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& d : r.module_failures)
    failures.push_back(degree_to_json(d));
  j["module_failures"] = failures;
  return j;
}

/// Columns degree, predicted, oracle, match over every degree where either side is nonzero.
inline void write_report_tsv(std::ostream& os, const EliminationReport& r) {
  os << "degree\tpredicted\toracle\tmatch\n";
  for (const auto& d : multidegrees_up_to(r.predicted.nletters(), r.cutoff)) {
    const auto p = r.predicted.at(d);
    if (!r.oracle) {
      if (p != 0)
        os << d.str() << '\t' << p << "\tNA\tNA\n";
      continue;
    }
    const auto o = r.oracle->at(d);
    if (p != 0 || o != 0)
      os << d.str() << '\t' << p << '\t' << o << '\t' << (p == o ? "yes" : "no") << '\n';
  }
}

inline nlohmann::json table_to_json(const RootMultiplicityTable& t) {
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& [d, v] : t.multiplicities.entries())
    roots.push_back({{"root", degree_to_json(d)}, {"multiplicity", v}});
  nlohmann::json j;
  j["rank"] = t.rank;
  j["cartan_dim"] = t.rank;
  j["max_height"] = t.cutoff;
  j["method"] = method_name(t.method);
  j["split"] = {{"S", t.split.S}, {"T", t.split.T}};
  j["tables"] = nlohmann::json::array({{{"sign", "+"}, {"roots", roots}},
                                       {{"sign", "-"}, {"roots", roots}}});
  j["mismatches"] = mismatches_to_json(t.mismatches, "theorem", "oracle");
  return j;
}

/// Columns root, multiplicity, method for the positive table; mismatches follow as comments.
inline void write_table_tsv(std::ostream& os, const RootMultiplicityTable& t) {
  os << "root\tmultiplicity\tmethod\n";
  for (const auto& [d, v] : t.multiplicities.entries())
    os << d.str() << '\t' << v << '\t' << method_name(t.method) << '\n';
  for (const auto& m : t.mismatches)
    os << "# mismatch\t" << m.degree.str() << "\ttheorem=" << m.predicted
       << "\toracle=" << m.oracle << '\n';
}

} // namespace lazard
