#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "equicat/classify.hpp"

// JSON document shapes for every value the tools exchange. Parsing is
// strict about structure (shape problems raise ParseError; law violations
// surface from the validators) and emission is deterministic: nlohmann's
// default object ordering is alphabetical and all tables are written in
// increasing index order.
namespace equicat::io {

using nlohmann::json;

namespace detail {

inline const json& key(const json& j, const char* k) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with key '") + k + "'");
  auto it = j.find(k);
  if (it == j.end()) throw ParseError(std::string("missing key '") + k + "'");
  return *it;
}

inline std::int64_t as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

inline std::vector<int> int_array(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(static_cast<int>(as_int(e, what)));
  return out;
}

}  // namespace detail

inline json group_to_json(const FiniteGroup& g) {
  json rows = json::array();
  for (int i = 0; i < g.order(); ++i) {
    json row = json::array();
    for (int j = 0; j < g.order(); ++j) row.push_back(g.mul(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"order", g.order()}, {"table", std::move(rows)}};
}

inline FiniteGroup group_from_json(const json& j) {
  std::int64_t order = detail::as_int(detail::key(j, "order"), "order");
  const json& table = detail::key(j, "table");
  if (!table.is_array() || static_cast<std::int64_t>(table.size()) != order)
    throw ParseError("table must be an array of `order` rows");
  std::vector<std::vector<int>> rows;
  for (const auto& r : table) {
    rows.push_back(detail::int_array(r, "table row"));
    if (static_cast<std::int64_t>(rows.back().size()) != order)
      throw ParseError("table row has wrong length");
  }
  return validate_group(rows);
}

inline json abelian_to_json(const FiniteAbelianGroup& a) {
  return json{{"invariant_factors", a.invariant_factors()}};
}

inline FiniteAbelianGroup abelian_from_json(const json& j) {
  const json& f = detail::key(j, "invariant_factors");
  if (!f.is_array()) throw ParseError("invariant_factors must be an array");
  std::vector<std::int64_t> factors;
  for (const auto& e : f) factors.push_back(detail::as_int(e, "invariant factor"));
  return FiniteAbelianGroup(std::move(factors));
}

inline json action_to_json(const AutAction& act) {
  json maps = json::object();
  for (std::size_t s = 0; s < act.maps.size(); ++s) maps[std::to_string(s)] = act.maps[s];
  return json{{"maps", std::move(maps)}};
}

inline std::vector<std::vector<int>> action_maps_from_json(const json& j, int actor_order) {
  const json& maps = detail::key(j, "maps");
  if (!maps.is_object()) throw ParseError("maps must be an object keyed by actor index");
  std::vector<std::vector<int>> out(actor_order);
  std::vector<char> seen(actor_order, 0);
  for (auto it = maps.begin(); it != maps.end(); ++it) {
    int s;
    try {
      s = std::stoi(it.key());
    } catch (...) {
      throw ParseError("map key is not an actor index");
    }
    if (s < 0 || s >= actor_order || seen[s]) throw ParseError("map key out of range or repeated");
    seen[s] = 1;
    out[s] = detail::int_array(it.value(), "action map");
  }
  for (char c : seen)
    if (!c) throw ParseError("one map required per actor element");
  return out;
}

inline json module_to_json(const EquivariantModule& em) {
  return json{{"pi", group_to_json(em.pi)},
              {"gamma", group_to_json(em.gamma)},
              {"a", abelian_to_json(em.a)},
              {"pi_on_a", action_to_json(em.pi_on_a)},
              {"gamma_on_pi", action_to_json(em.gamma_on_pi)},
              {"gamma_on_a", action_to_json(em.gamma_on_a)}};
}

inline EmPtr module_from_json(const json& j) {
  FiniteGroup pi = group_from_json(detail::key(j, "pi"));
  FiniteGroup gamma = group_from_json(detail::key(j, "gamma"));
  FiniteAbelianGroup a = abelian_from_json(detail::key(j, "a"));
  return share(validate_equivariant_module(
      pi, gamma, a, action_maps_from_json(detail::key(j, "pi_on_a"), pi.order()),
      action_maps_from_json(detail::key(j, "gamma_on_pi"), gamma.order()),
      action_maps_from_json(detail::key(j, "gamma_on_a"), gamma.order())));
}

inline json a_elt_to_json(const FiniteAbelianGroup& a, int v) { return json(a.tuple(v)); }

inline int a_elt_from_json(const FiniteAbelianGroup& a, const json& j) {
  if (!j.is_array()) throw ParseError("coefficient element must be a residue tuple");
  std::vector<std::int64_t> t;
  for (const auto& e : j) t.push_back(detail::as_int(e, "residue"));
  return a.from_tuple(t);
}

inline json grcat_to_json(const GrCategory& c) {
  json doc = module_to_json(*c.em);
  const int n = c.em->pi.order();
  json xi = json::array();
  for (int x = 0; x < n; ++x) {
    json plane = json::array();
    for (int y = 0; y < n; ++y) {
      json row = json::array();
      for (int z = 0; z < n; ++z) row.push_back(a_elt_to_json(c.em->a, c.xi_at(x, y, z)));
      plane.push_back(std::move(row));
    }
    xi.push_back(std::move(plane));
  }
  doc["xi"] = std::move(xi);
  return doc;
}

namespace detail {

// Dense nested table of A-elements with the given dimensions, flattened.
inline std::vector<int> a_table_from_json(const FiniteAbelianGroup& a, const json& j,
                                          const std::vector<int>& dims, const char* what) {
  std::vector<int> out;
  std::size_t total = 1;
  for (int d : dims) total *= d;
  out.reserve(total);
  std::function<void(const json&, std::size_t)> walk = [&](const json& node, std::size_t depth) {
    if (depth == dims.size()) {
      out.push_back(a_elt_from_json(a, node));
      return;
    }
    if (!node.is_array() || static_cast<int>(node.size()) != dims[depth])
      throw ParseError(std::string(what) + " has wrong dimensions");
    for (const auto& child : node) walk(child, depth + 1);
  };
  walk(j, 0);
  return out;
}

inline json a_table_to_json(const FiniteAbelianGroup& a, const std::vector<int>& table,
                            const std::vector<int>& dims) {
  std::size_t pos = 0;
  std::function<json(std::size_t)> build = [&](std::size_t depth) -> json {
    if (depth == dims.size()) return a_elt_to_json(a, table[pos++]);
    json arr = json::array();
    for (int i = 0; i < dims[depth]; ++i) arr.push_back(build(depth + 1));
    return arr;
  };
  return build(0);
}

}  // namespace detail

inline GrCategory grcat_from_json(const json& j) {
  EmPtr em = module_from_json(j);
  const int n = em->pi.order();
  std::vector<int> xi =
      detail::a_table_from_json(em->a, detail::key(j, "xi"), {n, n, n}, "xi");
  return build_gr_category(em, std::move(xi));
}

inline json cochain1_to_json(const Cochain1& f) {
  return json{{"f", detail::a_table_to_json(f.em->a, f.f, {f.em->pi.order()})}};
}

inline Cochain1 cochain1_from_json(EmPtr em, const json& j) {
  auto f = detail::a_table_from_json(em->a, detail::key(j, "f"), {em->pi.order()}, "f");
  return make_cochain1(std::move(em), std::move(f));
}

inline json cochain2_to_json(const Cochain2& g) {
  const int n = g.em->pi.order(), m = g.em->gamma.order();
  return json{{"g_pp", detail::a_table_to_json(g.em->a, g.g_pp, {n, n})},
              {"g_pg", detail::a_table_to_json(g.em->a, g.g_pg, {n, m})}};
}

inline Cochain2 cochain2_from_json(EmPtr em, const json& j) {
  const int n = em->pi.order(), m = em->gamma.order();
  auto pp = detail::a_table_from_json(em->a, detail::key(j, "g_pp"), {n, n}, "g_pp");
  auto pg = detail::a_table_from_json(em->a, detail::key(j, "g_pg"), {n, m}, "g_pg");
  return make_cochain2(std::move(em), std::move(pp), std::move(pg));
}

inline json cochain3_to_json(const Cochain3& h) {
  const int n = h.em->pi.order(), m = h.em->gamma.order();
  return json{{"h_ppp", detail::a_table_to_json(h.em->a, h.h_ppp, {n, n, n})},
              {"h_ppg", detail::a_table_to_json(h.em->a, h.h_ppg, {n, n, m})},
              {"h_pgg", detail::a_table_to_json(h.em->a, h.h_pgg, {n, m, m})}};
}

inline Cochain3 cochain3_from_json(EmPtr em, const json& j) {
  const int n = em->pi.order(), m = em->gamma.order();
  auto ppp = detail::a_table_from_json(em->a, detail::key(j, "h_ppp"), {n, n, n}, "h_ppp");
  auto ppg = detail::a_table_from_json(em->a, detail::key(j, "h_ppg"), {n, n, m}, "h_ppg");
  auto pgg = detail::a_table_from_json(em->a, detail::key(j, "h_pgg"), {n, m, m}, "h_pgg");
  return make_cochain3(std::move(em), std::move(ppp), std::move(ppg), std::move(pgg));
}

inline json factor_set_to_json(const FactorSet& fs) {
  const auto& em = *fs.base.em;
  const int n = em.pi.order(), m = em.gamma.order();
  json phi = json::object(), f = json::object(), ftilde = json::object(), c = json::object(),
       t = json::object();
  for (int s = 0; s < m; ++s) {
    std::string k = std::to_string(s);
    phi[k] = fs.phi[s];
    f[k] = fs.f[s];
    ftilde[k] = detail::a_table_to_json(em.a, fs.ftilde[s], {n, n});
    c[k] = a_elt_to_json(em.a, fs.c[s]);
    json row = json::object();
    for (int tau = 0; tau < m; ++tau)
      row[std::to_string(tau)] = detail::a_table_to_json(em.a, fs.t[s][tau], {n});
    t[k] = std::move(row);
  }
  return json{{"phi", std::move(phi)}, {"f", std::move(f)},       {"ftilde", std::move(ftilde)},
              {"c", std::move(c)},     {"t", std::move(t)}};
}

inline FactorSet factor_set_from_json(const GrCategory& base, const json& j) {
  const auto& em = *base.em;
  const int n = em.pi.order(), m = em.gamma.order();
  auto per_sigma = [&](const json& obj, const char* what) {
    if (!obj.is_object() || static_cast<int>(obj.size()) != m)
      throw ParseError(std::string(what) + " must map every Gamma index");
    return obj;
  };
  const json& jphi = per_sigma(detail::key(j, "phi"), "phi");
  const json& jf = per_sigma(detail::key(j, "f"), "f");
  const json& jft = per_sigma(detail::key(j, "ftilde"), "ftilde");
  const json& jc = per_sigma(detail::key(j, "c"), "c");
  const json& jt = per_sigma(detail::key(j, "t"), "t");

  std::vector<std::vector<int>> phi(m), f(m), ftilde(m);
  std::vector<int> c(m, 0);
  std::vector<std::vector<std::vector<int>>> t(m);
  for (int s = 0; s < m; ++s) {
    std::string k = std::to_string(s);
    if (!jphi.contains(k) || !jf.contains(k) || !jft.contains(k) || !jc.contains(k) ||
        !jt.contains(k))
      throw ParseError("factor set is missing data for Gamma index " + k);
    phi[s] = detail::int_array(jphi[k], "phi");
    f[s] = detail::int_array(jf[k], "f");
    ftilde[s] = detail::a_table_from_json(em.a, jft[k], {n, n}, "ftilde");
    c[s] = a_elt_from_json(em.a, jc[k]);
    const json& row = jt[k];
    if (!row.is_object() || static_cast<int>(row.size()) != m)
      throw ParseError("t must map every Gamma index pair");
    t[s].resize(m);
    for (int tau = 0; tau < m; ++tau) {
      std::string k2 = std::to_string(tau);
      if (!row.contains(k2)) throw ParseError("t is missing data for Gamma index " + k2);
      t[s][tau] = detail::a_table_from_json(em.a, row[k2], {n}, "t");
    }
  }
  return make_factor_set(base, std::move(phi), std::move(f), std::move(ftilde), std::move(c),
                         std::move(t));
}

inline json witness_to_json(const EquivariantModule& em, const CohomologyWitness& w) {
  return json{{"u", detail::a_table_to_json(em.a, w.u, {em.pi.order(), em.gamma.order()})}};
}

inline CohomologyWitness witness_from_json(const EquivariantModule& em, const json& j) {
  auto u = detail::a_table_from_json(em.a, detail::key(j, "u"),
                                     {em.pi.order(), em.gamma.order()}, "u");
  return make_witness(em, std::move(u));
}

inline json report_to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json item{{"name", c.name}, {"pass", c.pass}};
    item["witness"] = c.pass ? json() : json(c.witness);
    checks.push_back(std::move(item));
  }
  return json{{"checks", std::move(checks)}};
}

inline json factor_set_report_to_json(const FactorSetReport& r) {
  json out = report_to_json(r.laws);
  out["enough_strict"] = r.enough_strict;
  out["unit_functor_derived"] = r.unit_functor_derived;
  out["valid"] = r.all_pass();
  return out;
}

inline json h3_result_to_json(const H3Result& r) {
  json out{{"order", r.order}, {"invariant_factors", r.invariant_factors}};
  if (r.representatives) {
    json reps = json::array();
    for (const auto& h : *r.representatives) reps.push_back(cochain3_to_json(h));
    out["representatives"] = std::move(reps);
  }
  return out;
}

inline json classification_to_json(const ClassificationReport& r) {
  json pairs = json::array();
  for (const auto& p : r.pairs)
    pairs.push_back(json{{"h_rep", cochain3_to_json(p.h_rep)},
                         {"factor_set_rep", factor_set_to_json(p.fs_rep)},
                         {"crossed_fingerprint", p.crossed_fingerprint}});
  return json{{"cocycle_count", r.cocycle_count},
              {"h_class_count", r.h_class_count},
              {"fs_class_count", r.fs_class_count},
              {"factor_sets_valid", r.factor_sets_valid},
              {"forward_well_defined", r.forward_well_defined},
              {"surjective", r.surjective},
              {"injective", r.injective},
              {"crossed_products_valid", r.crossed_products_valid},
              {"bijection_verified", r.bijection_verified},
              {"pairs", std::move(pairs)}};
}

inline json error_to_json(const Error& e) {
  return json{{"error", json{{"kind", e.kind()}, {"witness", e.witness()}, {"message", e.what()}}}};
}

// Plain-text rendering of any report document: one "key: value" line per
// scalar, checks as one line each, nested tables in compact JSON.
inline std::string render_text(const json& j) {
  std::string out;
  auto witness_line = [](const json& w) {
    if (w.is_null() || (w.is_array() && w.empty())) return std::string("none");
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += ", ";
      s += w[i].dump();
    }
    return s + ")";
  };
  if (!j.is_object()) return j.dump() + "\n";
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "checks" && it->is_array()) {
      for (const auto& c : *it) {
        out += "check " + c.at("name").get<std::string>() + ": ";
        out += c.at("pass").get<bool>() ? "pass" : "FAIL";
        out += "  witness: " + witness_line(c.contains("witness") ? c["witness"] : json());
        out += "\n";
      }
    } else if (it.key() == "order") {
      out += "H3 order: " + it->dump() + "\n";
    } else {
      out += it.key() + ": " + it->dump() + "\n";
    }
  }
  return out;
}

}  // namespace equicat::io
