#pragma once

// Index, parity and writhe-polynomial invariants of virtual knot diagrams.
//
// Segment i of a knot diagram is the arc following endpoint position i.
// Ind(c) counts chords crossing c: +w(d) when tail(d) lies on the open arc
// running from tail(c) to head(c), -w(d) when head(d) lies there. Odd_k is the
// set of chords with Ind = 2^k mod 2^(k+1), and
//   f_k(t) = sum_{c in Odd_k} w(c) t^(Ind(c)+1),   W(t) = sum_k f_k(t).

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gaussinv/diagram.hpp"
#include "gaussinv/laurent.hpp"

namespace gaussinv {

struct SegmentLabeling {
  std::vector<std::int64_t> values;
  friend bool operator==(const SegmentLabeling&, const SegmentLabeling&) = default;
};

struct KnotScalars {
  std::int64_t wr = 0;  // writhe of the diagram
  std::int64_t J = 0;   // odd writhe
  std::int64_t Q = 0;   // sum of signs over chords of nonzero index
  friend bool operator==(const KnotScalars&, const KnotScalars&) = default;
};

namespace detail {

/// Segment label summing w(d) over chords whose `first` endpoint is met
/// strictly before the other one when walking on from the segment.
inline SegmentLabeling first_met_labels(const KnotDiagram& k, Role first) {
  const std::size_t m = k.strand(0).size();
  SegmentLabeling out;
  out.values.assign(m, 0);
  for (std::size_t seg = 0; seg < m; ++seg) {
    std::int64_t sum = 0;
    for (std::size_t c = 0; c < k.chord_count(); ++c) {
      const std::size_t a = (k.locate(c, first).pos + m - seg - 1) % m;
      const std::size_t b = (k.locate(c, opposite(first)).pos + m - seg - 1) % m;
      if (a < b) sum += k.sign(c);
    }
    out.values[seg] = sum;
  }
  return out;
}

/// Segment arriving at position p.
inline std::size_t in_segment(std::size_t p, std::size_t m) { return (p + m - 1) % m; }

}  // namespace detail

/// Labels from chords whose head is met before their tail.
inline SegmentLabeling segment_labels_lambda(const KnotDiagram& k) {
  return detail::first_met_labels(k, Role::head);
}

/// Labels from chords whose tail is met before their head (a Kauffman labeling).
inline SegmentLabeling segment_labels_mu(const KnotDiagram& k) {
  return detail::first_met_labels(k, Role::tail);
}

inline std::int64_t writhe(const KnotDiagram& k) {
  std::int64_t wr = 0;
  for (int w : k.signs()) wr += w;
  return wr;
}

namespace detail {
inline std::int64_t index_of_chord(const KnotDiagram& k, std::size_t c) {
  const std::size_t m = k.strand(0).size();
  const std::size_t from = k.tail(c).pos;
  const std::size_t to = k.head(c).pos;
  std::int64_t ind = 0;
  for (std::size_t d = 0; d < k.chord_count(); ++d) {
    if (d == c) continue;
    const bool t_in = in_open_arc<KnotDiagram>(from, to, k.tail(d).pos, m);
    const bool h_in = in_open_arc<KnotDiagram>(from, to, k.head(d).pos, m);
    if (t_in == h_in) continue;
    ind += t_in ? k.sign(d) : -k.sign(d);
  }
  return ind;
}
}  // namespace detail

inline std::int64_t chord_index(const KnotDiagram& k, ChordId c) {
  return detail::index_of_chord(k, k.index_of(c));
}

/// Index of every chord, by dense chord index.
inline std::vector<std::int64_t> chord_indices(const KnotDiagram& k) {
  std::vector<std::int64_t> out(k.chord_count());
  for (std::size_t c = 0; c < k.chord_count(); ++c) out[c] = detail::index_of_chord(k, c);
  return out;
}

inline std::int64_t n_value(const KnotDiagram& k, ChordId c) { return chord_index(k, c) + 1; }

/// The k with index = 2^k mod 2^(k+1), i.e. the 2-adic valuation; none for index 0.
inline std::optional<int> parity_class_of_index(std::int64_t index) {
  if (index == 0) return std::nullopt;
  const auto mag = static_cast<std::uint64_t>(index < 0 ? -index : index);
  return std::countr_zero(mag);
}

inline std::optional<int> parity_class(const KnotDiagram& k, ChordId c) {
  return parity_class_of_index(chord_index(k, c));
}

inline LaurentPoly f_poly(const KnotDiagram& k, int level) {
  LaurentPoly p;
  const auto ind = chord_indices(k);
  for (std::size_t c = 0; c < k.chord_count(); ++c) {
    if (parity_class_of_index(ind[c]) == level) p.add_term(ind[c] + 1, k.sign(c));
  }
  return p;
}

/// Every nonzero f_k, keyed by k.
inline std::map<int, LaurentPoly> f_polys(const KnotDiagram& k) {
  std::map<int, LaurentPoly> out;
  const auto ind = chord_indices(k);
  for (std::size_t c = 0; c < k.chord_count(); ++c) {
    if (auto level = parity_class_of_index(ind[c])) out[*level].add_term(ind[c] + 1, k.sign(c));
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

/// W(t) = sum over chords of nonzero index of w t^(Ind+1); checked against sum_k f_k.
inline LaurentPoly writhe_poly(const KnotDiagram& k) {
  LaurentPoly direct;
  const auto ind = chord_indices(k);
  int max_level = -1;
  for (std::size_t c = 0; c < k.chord_count(); ++c) {
    if (ind[c] == 0) continue;
    direct.add_term(ind[c] + 1, k.sign(c));
    max_level = std::max(max_level, *parity_class_of_index(ind[c]));
  }
  LaurentPoly summed;
  for (int level = 0; level <= max_level; ++level) summed = summed + f_poly(k, level);
  if (!(summed == direct)) throw Error(ErrorKind::internal, "sum of f_k disagrees with writhe polynomial");
  return direct;
}

inline KnotScalars scalar_invariants(const KnotDiagram& k) {
  KnotScalars s;
  const auto ind = chord_indices(k);
  for (std::size_t c = 0; c < k.chord_count(); ++c) {
    s.wr += k.sign(c);
    if (ind[c] % 2 != 0) s.J += k.sign(c);
    if (ind[c] != 0) s.Q += k.sign(c);
  }
  return s;
}

/// Kauffman weight of chord c from the mu labeling.
inline std::int64_t affine_weight(const KnotDiagram& k, const SegmentLabeling& mu, std::size_t c) {
  const std::size_t m = k.strand(0).size();
  return mu.values[detail::in_segment(k.tail(c).pos, m)] - mu.values[detail::in_segment(k.head(c).pos, m)] -
         k.sign(c);
}

/// P(t) = sum_c w(c) (t^W(c) - 1); checked against sum_c w(c) t^Ind(c) - wr.
inline LaurentPoly affine_index_poly(const KnotDiagram& k) {
  const SegmentLabeling mu = segment_labels_mu(k);
  const auto ind = chord_indices(k);
  LaurentPoly p;
  LaurentPoly check;
  for (std::size_t c = 0; c < k.chord_count(); ++c) {
    p.add_term(affine_weight(k, mu, c), k.sign(c));
    p.add_term(0, -k.sign(c));
    check.add_term(ind[c], k.sign(c));
  }
  check.add_term(0, -writhe(k));
  if (!(p == check)) throw Error(ErrorKind::internal, "affine weights disagree with chord indices");
  return p;
}

}  // namespace gaussinv
