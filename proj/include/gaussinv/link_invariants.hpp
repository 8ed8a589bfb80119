#pragma once

// Linking invariants of 2-component virtual links.
//
// Each component is labelled on its universal cover: the segment before
// position 0 carries 0 and the label changes by +w at a tail and by -w at a
// head of sign w (self-chords and bridges alike). A bridge c gets
//   N(c) = label(segment into head) - label(segment into tail) - w(c)
// read in Z_span. F collects w t^N over bridges from component 1 to 2, G over
// the reverse direction, and the linking polynomial is F * G.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gaussinv/diagram.hpp"
#include "gaussinv/laurent.hpp"

namespace gaussinv {

struct LinkScalars {
  std::int64_t two_lk = 0;
  std::int64_t span = 0;
  std::int64_t bridge_count = 0;
  friend bool operator==(const LinkScalars&, const LinkScalars&) = default;
};

struct ComponentLabeling {
  std::vector<std::int64_t> values;  // label of the segment after each position
  std::int64_t defect = 0;           // net change over one traversal
  friend bool operator==(const ComponentLabeling&, const ComponentLabeling&) = default;
};

struct FGPair {
  LaurentPoly F;
  LaurentPoly G;
  Exponent canonical_shift = 0;  // F was multiplied by t^k and G by t^-k
  friend bool operator==(const FGPair& a, const FGPair& b) { return a.F == b.F && a.G == b.G; }
};

inline bool is_bridge(const LinkDiagram& L, std::size_t c) { return !L.is_self_chord(c); }

inline LinkScalars link_scalars(const LinkDiagram& L) {
  std::int64_t r = 0;  // signed count of bridges 1 -> 2
  std::int64_t l = 0;  // signed count of bridges 2 -> 1
  LinkScalars s;
  for (std::size_t c = 0; c < L.chord_count(); ++c) {
    if (!is_bridge(L, c)) continue;
    ++s.bridge_count;
    (L.tail(c).strand == 0 ? r : l) += L.sign(c);
  }
  s.two_lk = r + l;
  s.span = r - l < 0 ? l - r : r - l;
  return s;
}

/// Labels of component `comp` (1 or 2).
inline ComponentLabeling component_labels(const LinkDiagram& L, int comp) {
  if (comp != 1 && comp != 2) throw Error(ErrorKind::invalid_argument, "component must be 1 or 2");
  const Strand& s = L.strand(static_cast<std::size_t>(comp - 1));
  ComponentLabeling out;
  std::int64_t label = 0;
  for (const Endpoint& e : s) {
    label += e.role == Role::tail ? L.sign(e.chord) : -L.sign(e.chord);
    out.values.push_back(label);
  }
  out.defect = label;
  return out;
}

/// A closed labeling of both components, which exists iff span = 0.
inline std::optional<std::pair<ComponentLabeling, ComponentLabeling>> coloring(const LinkDiagram& L) {
  auto a = component_labels(L, 1);
  auto b = component_labels(L, 2);
  if (a.defect != 0 || b.defect != 0) return std::nullopt;
  return std::pair{std::move(a), std::move(b)};
}

namespace detail {

inline std::int64_t label_into(const ComponentLabeling& lab, std::size_t pos) {
  return pos == 0 ? 0 : lab.values[pos - 1];
}

inline std::int64_t reduce_mod(std::int64_t v, std::int64_t span) {
  if (span == 0) return v;
  std::int64_t r = v % span;
  return r < 0 ? r + span : r;
}

inline std::int64_t bridge_value(const LinkDiagram& L, const std::array<ComponentLabeling, 2>& labs,
                                 std::size_t c) {
  const Location t = L.tail(c);
  const Location h = L.head(c);
  return label_into(labs[h.strand], h.pos) - label_into(labs[t.strand], t.pos) - L.sign(c);
}

}  // namespace detail

inline std::int64_t bridge_n_value(const LinkDiagram& L, ChordId id) {
  const std::size_t c = L.index_of(id);
  if (!is_bridge(L, c)) throw Error(ErrorKind::not_a_bridge, "chord " + std::to_string(id.value) + " is a self-chord");
  const std::array<ComponentLabeling, 2> labs{component_labels(L, 1), component_labels(L, 2)};
  return detail::reduce_mod(detail::bridge_value(L, labs, c), link_scalars(L).span);
}

/// F and G for the base-point labeling, before canonicalization.
inline std::pair<LaurentPoly, LaurentPoly> raw_fg_polys(const LinkDiagram& L) {
  const std::int64_t span = link_scalars(L).span;
  const std::array<ComponentLabeling, 2> labs{component_labels(L, 1), component_labels(L, 2)};
  LaurentPoly F(span);
  LaurentPoly G(span);
  for (std::size_t c = 0; c < L.chord_count(); ++c) {
    if (!is_bridge(L, c)) continue;
    (L.tail(c).strand == 0 ? F : G).add_term(detail::bridge_value(L, labs, c), L.sign(c));
  }
  return {std::move(F), std::move(G)};
}

namespace detail {
inline std::vector<Integer> dense(const LaurentPoly& p) {
  std::vector<Integer> v(static_cast<std::size_t>(p.modulus()));
  for (const auto& [e, c] : p.terms()) v[static_cast<std::size_t>(e)] = c;
  return v;
}
}  // namespace detail

/// Canonical representative of the pair (F t^k, G t^-k) over all k.
inline FGPair canonicalize(const LaurentPoly& F, const LaurentPoly& G) {
  const std::int64_t m = F.modulus();
  Exponent k = 0;
  if (m == 0) {
    if (!F.is_zero()) {
      k = -F.min_exponent();
    } else if (!G.is_zero()) {
      k = G.min_exponent();
    }
  } else {
    std::pair<std::vector<Integer>, std::vector<Integer>> best;
    for (Exponent s = 0; s < m; ++s) {
      auto cand = std::pair{detail::dense(poly_shift(F, s)), detail::dense(poly_shift(G, -s))};
      if (s == 0 || cand < best) {
        best = std::move(cand);
        k = s;
      }
    }
  }
  return FGPair{poly_shift(F, k), poly_shift(G, -k), k};
}

inline FGPair fg_polys(const LinkDiagram& L) {
  auto [F, G] = raw_fg_polys(L);
  return canonicalize(F, G);
}

inline LaurentPoly linking_poly(const LinkDiagram& L) {
  auto [F, G] = raw_fg_polys(L);
  return poly_mul(F, G);
}

/// Sum of absolute coefficients of F and G; a lower bound for the number of
/// non-self crossings.
inline Integer link_s_value(const LinkDiagram& L) {
  auto [F, G] = raw_fg_polys(L);
  return poly_coeff_abs_sum(F) + poly_coeff_abs_sum(G);
}

}  // namespace gaussinv
