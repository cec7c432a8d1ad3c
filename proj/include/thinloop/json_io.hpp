#pragma once

// JSON forms of fields, elements, structure tables, gradings and reports.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "thinloop/error.hpp"
#include "thinloop/ffield.hpp"
#include "thinloop/liealg.hpp"
#include "thinloop/loop.hpp"
#include "thinloop/runs.hpp"

namespace thinloop {

using json = nlohmann::ordered_json;

/// {"p": p, "k": k, "modulus": [...]}; modulus omitted for prime fields.
inline json to_json(const Field& f) {
  json j{{"p", f.p()}, {"k", f.k()}};
  if (f.k() > 1) j["modulus"] = f.modulus();
  return j;
}

inline FieldPtr field_from_json(const json& j) {
  try {
    const auto p = j.at("p").get<std::uint32_t>();
    const auto k = j.value("k", std::uint32_t{1});
    std::optional<std::vector<std::uint32_t>> mod;
    if (j.contains("modulus")) mod = j.at("modulus").get<std::vector<std::uint32_t>>();
    return Field::create(p, k, mod);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad field JSON: ") + e.what());
  }
}

inline json to_json(const FieldElement& a) { return a.coords(); }

inline FieldElement element_from_json(const Field& f, const json& j) {
  try {
    const auto c = j.is_number() ? std::vector<std::uint32_t>{j.get<std::uint32_t>()} : j.get<std::vector<std::uint32_t>>();
    for (auto v : c)
      if (v >= f.p()) throw Error(ErrorCode::InvalidArgument, "element coefficient out of range");
    return f.from_coords(c);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad element JSON: ") + e.what());
  }
}

/// {"field", "labels", "brackets": [[i, j, [[k, coeff], ...]], ...]} with i < j.
inline json to_json(const StructureTable& t) {
  json br = json::array();
  const Field& f = t.field();
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = i + 1; j < t.dim(); ++j) {
      const auto& v = t.stored(i, j);
      if (v.empty()) continue;
      json terms = json::array();
      for (const auto& term : v) terms.push_back(json::array({term.index, f.coords(term.coeff)}));
      br.push_back(json::array({i, j, terms}));
    }
  return json{{"field", to_json(f)}, {"labels", t.labels()}, {"brackets", br}};
}

inline StructureTable table_from_json(const json& j) {
  try {
    FieldPtr f = field_from_json(j.at("field"));
    StructureTable t(f, j.at("labels").get<std::vector<std::string>>());
    for (const auto& b : j.at("brackets")) {
      const auto i = b.at(0).get<std::size_t>(), k = b.at(1).get<std::size_t>();
      if (i >= k || k >= t.dim()) throw Error(ErrorCode::InvalidArgument, "bracket indices must satisfy i < j < dim");
      for (const auto& term : b.at(2)) {
        const auto idx = term.at(0).get<std::size_t>();
        if (idx >= t.dim()) throw Error(ErrorCode::InvalidArgument, "bracket target out of range");
        t.add_term(i, k, idx, element_from_json(*f, term.at(1)));
      }
    }
    return t;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad structure table JSON: ") + e.what());
  }
}

inline json to_json(const DegreeMap& d) { return json{{"modulus", d.modulus}, {"degrees", d.degrees}}; }

inline DegreeMap degmap_from_json(const json& j) {
  try {
    DegreeMap d;
    d.modulus = j.at("modulus").get<std::int64_t>();
    d.degrees = j.at("degrees").get<std::vector<std::int64_t>>();
    if (d.modulus < 1) throw Error(ErrorCode::InvalidGrading, "grading modulus must be positive");
    return d;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad grading JSON: ") + e.what());
  }
}

inline json to_json(const DiamondRecord& r) {
  json j{{"degree", r.degree}, {"kind", to_string(r.kind)}, {"type", r.type_string()}, {"ordinal", r.ordinal}};
  if (r.c1) j["c1"] = to_json(*r.c1);
  if (r.c2) j["c2"] = to_json(*r.c2);
  return j;
}

inline json to_json(const Element& e) {
  json terms = json::array();
  const Field& f = e.table().field();
  for (std::size_t i = 0; i < e.coeffs().size(); ++i)
    if (e.coeffs()[i]) terms.push_back(json::array({e.table().label(i), f.coords(e.coeffs()[i])}));
  return terms;
}

inline json to_json(const ThinReport& r) {
  json j;
  j["dims"] = r.dims;
  json ds = json::array();
  for (const auto& d : r.diamonds.records) ds.push_back(to_json(d));
  j["diamonds"] = ds;
  j["anomalies"] = r.diamonds.anomalies;
  if (r.k) {
    j["k"] = r.k->k;
  } else {
    j["k"] = nullptr;
    j["k_error"] = r.k_error;
  }
  j["covering"] = to_string(r.covering.overall);
  if (r.covering.first_failure) j["covering_first_failure"] = *r.covering.first_failure;
  j["chains"] = json{{"first", r.chains.first_checked ? json(r.chains.first_pass ? "PASS" : "FAIL") : json("unchecked")},
                     {"first_in_hypotheses", r.chains.first_in_hypotheses},
                     {"second", r.chains.second_checked ? json(r.chains.second_pass ? "PASS" : "FAIL") : json("unchecked")},
                     {"second_in_hypotheses", r.chains.second_in_hypotheses}};
  if (!r.chains.proviso.empty()) j["chains"]["proviso"] = r.chains.proviso;
  j["generators"] = json{{"X", to_json(r.generators.X)}, {"Y", to_json(r.generators.Y)},
                         {"intrinsic", r.generators_intrinsic}};
  j["coincidence"] = r.coincidence;
  json cert{{"ok", r.certificate_ok}};
  if (r.c_xy) {
    cert["xx"] = to_json(*r.c_xx);
    cert["yy"] = to_json(*r.c_yy);
    cert["xy"] = to_json(*r.c_xy);
    cert["yx"] = to_json(*r.c_yx);
  }
  j["certificate"] = cert;
  return j;
}

inline json to_json(const RunResult& r) {
  json j = to_json(r.report);
  j["q"] = r.q;
  j["depth"] = r.depth;
  j["grading"] = to_json(r.degmap);
  if (r.params) {
    j["params"] = json{{"sigma", to_json(r.params->sigma)}, {"rho", to_json(r.params->rho)},
                       {"pi", to_json(r.params->pi)}, {"eps", to_json(r.params->eps)}};
  }
  if (r.step) j["step"] = to_json(*r.step);
  if (r.generated_dim) j["generated_dim"] = *r.generated_dim;
  if (r.center_dim) j["center_dim"] = *r.center_dim;
  j["mismatches"] = r.mismatches;
  j["notes"] = r.notes;
  j["verdict"] = r.pass() ? "PASS" : "FAIL";
  if (!r.pass()) j["first_failure"] = r.first_failure;
  return j;
}

}  // namespace thinloop
