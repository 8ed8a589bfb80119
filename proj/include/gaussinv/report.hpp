#pragma once

// JSON and text reports of every invariant of a diagram.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gaussinv/diagram.hpp"
#include "gaussinv/knot_invariants.hpp"
#include "gaussinv/laurent.hpp"
#include "gaussinv/link_invariants.hpp"
#include "gaussinv/longflat_invariants.hpp"

namespace gaussinv {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are numbers; larger ones are decimal strings.
inline Json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

/// {"modulus": m, "terms": [[e, c], ...]} with exponents ascending.
inline Json to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e, integer_to_json(c)}));
  return Json{{"modulus", p.modulus()}, {"terms", std::move(terms)}};
}

inline LaurentPoly poly_from_json(const Json& j) {
  LaurentPoly p(j.at("modulus").get<std::int64_t>());
  for (const auto& t : j.at("terms")) {
    const Json& c = t.at(1);
    p.add_term(t.at(0).get<Exponent>(), c.is_string() ? Integer(c.get<std::string>()) : Integer(c.get<std::int64_t>()));
  }
  return p;
}

/// Half-integers print as "p/2".
inline std::string format_half(std::int64_t twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

inline Json half_to_json(std::int64_t twice) {
  if (twice % 2 == 0) return twice / 2;
  return format_half(twice);
}

template <Diagram D>
Json diagram_to_json(const D& d) {
  const D c = canonical_form(d);
  Json strands = Json::array();
  for (const auto& s : c.strands()) {
    Json js = Json::array();
    for (const Endpoint& e : s) {
      js.push_back(Json{{"id", e.chord + 1}, {"role", e.role == Role::tail ? "O" : "U"}, {"sign", c.sign(e.chord)}});
    }
    strands.push_back(std::move(js));
  }
  return Json{{"kind", std::string(KindTraits<D::kind>::name)}, {"code", serialize(d)}, {"strands", std::move(strands)}};
}

inline Json diagram_to_json(const AnyDiagram& d) {
  return std::visit([](const auto& x) { return diagram_to_json(x); }, d);
}

inline Json knot_report(const KnotDiagram& k) {
  const KnotScalars s = scalar_invariants(k);
  Json f = Json::object();
  for (const auto& [level, p] : f_polys(k)) f[std::to_string(level)] = to_json(p);
  return Json{{"wr", s.wr},
              {"J", s.J},
              {"Q", s.Q},
              {"writhe_poly", to_json(writhe_poly(k))},
              {"affine_index_poly", to_json(affine_index_poly(k))},
              {"f", std::move(f)}};
}

inline Json flat_report(const FlatLongDiagram& d) {
  Json per_chord = Json::array();
  const auto data = flat_chord_data(d);
  for (std::size_t c = 0; c < data.size(); ++c) {
    per_chord.push_back(Json{{"id", c + 1}, {"o", data[c].o}, {"I", data[c].I}, {"sigma", data[c].sigma}});
  }
  return Json{{"flat_writhe_poly", to_json(flat_writhe_poly(d))},
              {"s", integer_to_json(flat_s_value(d))},
              {"per_chord", std::move(per_chord)}};
}

inline Json long_report(const LongDiagram& d) {
  return Json{{"closure", knot_report(closure(d))}, {"flat", flat_report(forget(d))}};
}

inline Json link_report(const LinkDiagram& L) {
  const LinkScalars s = link_scalars(L);
  const FGPair fg = fg_polys(L);
  return Json{{"lk", half_to_json(s.two_lk)},
              {"two_lk", s.two_lk},
              {"span", s.span},
              {"F", to_json(fg.F)},
              {"G", to_json(fg.G)},
              {"canonical_shift", fg.canonical_shift},
              {"linking_poly", to_json(linking_poly(L))}};
}

/// The kind-appropriate report, with the canonical code appended.
inline Json report(const AnyDiagram& d) {
  Json j = std::visit(
      [](const auto& x) -> Json {
        using D = std::decay_t<decltype(x)>;
        if constexpr (D::kind == DiagramKind::knot) return knot_report(x);
        if constexpr (D::kind == DiagramKind::long_knot) return long_report(x);
        if constexpr (D::kind == DiagramKind::flat_long) return flat_report(x);
        if constexpr (D::kind == DiagramKind::link) return link_report(x);
      },
      d);
  j["code"] = serialize(d);
  return j;
}

namespace detail {
inline void text_lines(const Json& j, const std::string& prefix, std::vector<std::string>& out) {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object() && value.contains("modulus") && value.contains("terms")) {
      out.push_back(name + " = " + to_string(poly_from_json(value)));
    } else if (value.is_object()) {
      text_lines(value, name, out);
    } else if (value.is_array()) {
      for (const auto& item : value) {
        std::string line = name + ":";
        for (const auto& [k2, v2] : item.items()) line += " " + k2 + "=" + (v2.is_string() ? v2.get<std::string>() : v2.dump());
        out.push_back(line);
      }
    } else {
      out.push_back(name + " = " + (value.is_string() ? value.get<std::string>() : value.dump()));
    }
  }
}
}  // namespace detail

/// One "name = value" line per field; polynomials in human-readable form.
inline std::string report_text(const Json& j) {
  std::vector<std::string> lines;
  detail::text_lines(j, "", lines);
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

}  // namespace gaussinv
