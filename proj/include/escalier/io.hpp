#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "escalier/planes.hpp"
#include "escalier/staircase.hpp"

#include "json.hpp"

namespace escalier {

// Malformed document structure: exit code 2 territory.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed document describing an impossible object: exit code 3.
struct SemanticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string or integer");
  auto r = parse_rational(j.get<std::string>());
  if (!r) throw ParseError("malformed rational: " + j.get<std::string>());
  return *r;
}

inline Json rational_to_json(const Rational& r) { return to_string(r); }

inline TermOrder order_from_name(const std::string& name) {
  if (name == "lex") return TermOrder::lex();
  if (name == "grlex") return TermOrder::grlex();
  throw ParseError("unknown order: " + name);
}

struct VarietyDocument {
  std::size_t n = 0;
  std::string order = "lex";
  Variety variety;
};

// Parses {"n": …, "order": "lex"|"grlex", "components": [{"equations": rows}
// | {"canonical": {"J": …, "b": [[i,j,v]…], "c": [[i,v]…]}}]}. Indices are
// 1-based in documents.
inline VarietyDocument parse_variety(const Json& j) {
  if (!j.is_object()) throw ParseError("variety document must be an object");
  VarietyDocument doc;
  if (!j.contains("n") || !j["n"].is_number_unsigned())
    throw ParseError("missing ambient dimension \"n\"");
  doc.n = j["n"].get<std::size_t>();
  doc.order = j.value("order", std::string("lex"));
  order_from_name(doc.order);  // validate
  doc.variety.n = doc.n;
  if (!j.contains("components") || !j["components"].is_array())
    throw ParseError("missing \"components\" array");
  for (const auto& comp : j["components"]) {
    if (comp.contains("equations")) {
      const auto& rows = comp["equations"];
      if (!rows.is_array()) throw ParseError("\"equations\" must be an array of rows");
      Matrix B;
      std::vector<Rational> c;
      for (const auto& row : rows) {
        if (!row.is_array() || row.size() != doc.n + 1)
          throw ParseError("each equation row needs n+1 entries");
        std::vector<Rational> b;
        for (std::size_t i = 0; i < doc.n; ++i) b.push_back(rational_from_json(row[i]));
        B.push_back(std::move(b));
        c.push_back(rational_from_json(row[doc.n]));
      }
      try {
        doc.variety.components.push_back(from_general_equations(doc.n, B, c));
      } catch (const std::invalid_argument& e) {
        throw SemanticError(e.what());
      }
    } else if (comp.contains("canonical")) {
      const auto& can = comp["canonical"];
      AffinePlane P;
      P.n = doc.n;
      if (!can.contains("J") || !can["J"].is_array())
        throw ParseError("canonical form needs \"J\"");
      for (const auto& jj : can["J"]) {
        std::size_t v = jj.get<std::size_t>();
        if (v < 1 || v > doc.n) throw SemanticError("J index out of range");
        P.J.push_back(v - 1);
      }
      std::sort(P.J.begin(), P.J.end());
      for (const auto& ent : can.value("b", Json::array())) {
        if (!ent.is_array() || ent.size() != 3)
          throw ParseError("b entries are [i, j, value]");
        std::size_t i = ent[0].get<std::size_t>(), jj = ent[1].get<std::size_t>();
        if (i < 1 || i > doc.n || jj < 1 || jj >= i)
          throw SemanticError("b index out of range");
        P.b[{i - 1, jj - 1}] = rational_from_json(ent[2]);
      }
      for (const auto& ent : can.value("c", Json::array())) {
        if (!ent.is_array() || ent.size() != 2) throw ParseError("c entries are [i, value]");
        std::size_t i = ent[0].get<std::size_t>();
        if (i < 1 || i > doc.n) throw SemanticError("c index out of range");
        P.c[i - 1] = rational_from_json(ent[1]);
      }
      for (std::size_t i = 0; i < doc.n; ++i) {
        bool free_i = std::find(P.J.begin(), P.J.end(), i) != P.J.end();
        if (free_i) continue;
        if (!P.c.count(i)) P.c[i] = 0;
      }
      // Round-trip through the general form to enforce canonical invariants.
      Matrix B;
      std::vector<Rational> c;
      for (const auto& f : ideal_of_plane(P).generators) {
        std::vector<Rational> row(doc.n, 0);
        Rational cc = 0;
        for (const auto& [e, coef] : f.terms()) {
          if (e.is_zero()) cc = coef;
          else
            for (std::size_t i = 0; i < doc.n; ++i)
              if (e[i] != 0) row[i] = coef;
        }
        B.push_back(std::move(row));
        c.push_back(cc);
      }
      AffinePlane Q = from_general_equations(doc.n, B, c);
      if (!(Q == P))
        throw SemanticError("component is not in canonical form (J not minimal)");
      doc.variety.components.push_back(P);
    } else {
      throw ParseError("component needs \"equations\" or \"canonical\"");
    }
  }
  if (doc.variety.components.empty()) throw SemanticError("variety has no components");
  return doc;
}

inline Json variety_to_json(const VarietyDocument& doc) {
  Json j;
  j["n"] = doc.n;
  j["order"] = doc.order;
  j["components"] = Json::array();
  for (const auto& P : doc.variety.components) {
    Json can;
    can["J"] = Json::array();
    for (std::size_t v : P.J) can["J"].push_back(v + 1);
    can["b"] = Json::array();
    for (const auto& [key, v] : P.b)
      if (v != 0)
        can["b"].push_back(Json::array({key.first + 1, key.second + 1, rational_to_json(v)}));
    can["c"] = Json::array();
    for (const auto& [i, v] : P.c)
      if (v != 0) can["c"].push_back(Json::array({i + 1, rational_to_json(v)}));
    j["components"].push_back(Json{{"canonical", can}});
  }
  return j;
}

inline StandardSet parse_staircase(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("corners"))
    throw ParseError("staircase document needs \"n\" and \"corners\"");
  std::size_t n = j["n"].get<std::size_t>();
  std::vector<Exponent> corners;
  for (const auto& row : j["corners"]) {
    if (!row.is_array() || row.size() != n)
      throw ParseError("each corner needs n entries");
    std::vector<unsigned> v;
    for (const auto& x : row) {
      if (!x.is_number_unsigned()) throw ParseError("corner entries are naturals");
      v.push_back(x.get<unsigned>());
    }
    corners.push_back(Exponent(std::move(v)));
  }
  StandardSet s = StandardSet::from_corners(n, corners);
  if (s.corners().size() != corners.size())
    throw SemanticError("corner list is not an antichain");
  return s;
}

// Corners sorted for byte-stable output (from_corners already sorts).
inline Json staircase_to_json(const StandardSet& s) {
  Json j;
  j["n"] = s.arity();
  j["corners"] = Json::array();
  for (const auto& g : s.corners()) {
    Json row = Json::array();
    for (std::size_t i = 0; i < g.size(); ++i) row.push_back(g[i]);
    j["corners"].push_back(row);
  }
  return j;
}

}  // namespace escalier
