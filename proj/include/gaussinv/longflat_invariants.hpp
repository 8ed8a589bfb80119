#pragma once

// Writhe polynomial of long flat virtual knots. A flat chord is stored as one
// of its two resolutions (tail, head, sign); o(c) = +1 iff the representative
// points along the line, I(c) counts chords leaving (+w) or entering (-w) the
// interval spanned by c, and W(t) = sum_{I(c) != 0} o(c) w(c) t^I(c).

#include <cstdint>
#include <vector>

#include "gaussinv/diagram.hpp"
#include "gaussinv/laurent.hpp"

namespace gaussinv {

struct FlatChordData {
  int o = 1;
  std::int64_t I = 0;
  int sigma = 1;  // o * w, independent of the representative
  friend bool operator==(const FlatChordData&, const FlatChordData&) = default;
};

template <class D>
concept LongLike = std::same_as<D, LongDiagram> || std::same_as<D, FlatLongDiagram>;

template <LongLike D>
int flat_orientation_sign(const D& d, ChordId id) {
  const std::size_t c = d.index_of(id);
  return d.tail(c).pos < d.head(c).pos ? 1 : -1;
}

namespace detail {
template <LongLike D>
std::int64_t flat_index_of(const D& d, std::size_t c) {
  const std::size_t lo = std::min(d.tail(c).pos, d.head(c).pos);
  const std::size_t hi = std::max(d.tail(c).pos, d.head(c).pos);
  auto inside = [&](std::size_t p) { return lo < p && p < hi; };
  std::int64_t I = 0;
  for (std::size_t e = 0; e < d.chord_count(); ++e) {
    if (e == c) continue;
    const bool t_in = inside(d.tail(e).pos);
    const bool h_in = inside(d.head(e).pos);
    if (t_in == h_in) continue;
    I += t_in ? d.sign(e) : -d.sign(e);
  }
  return I;
}
}  // namespace detail

template <LongLike D>
std::int64_t flat_index(const D& d, ChordId id) {
  return detail::flat_index_of(d, d.index_of(id));
}

template <LongLike D>
std::vector<FlatChordData> flat_chord_data(const D& d) {
  std::vector<FlatChordData> out(d.chord_count());
  for (std::size_t c = 0; c < d.chord_count(); ++c) {
    const int o = d.tail(c).pos < d.head(c).pos ? 1 : -1;
    out[c] = FlatChordData{o, detail::flat_index_of(d, c), o * d.sign(c)};
  }
  return out;
}

inline LaurentPoly flat_writhe_poly(const FlatLongDiagram& d) {
  LaurentPoly p;
  for (const FlatChordData& x : flat_chord_data(d)) {
    if (x.I != 0) p.add_term(x.I, x.sigma);
  }
  return p;
}

/// Sum of absolute coefficients of the flat writhe polynomial; a lower bound
/// for the flat crossing number.
inline Integer flat_s_value(const FlatLongDiagram& d) { return poly_coeff_abs_sum(flat_writhe_poly(d)); }

}  // namespace gaussinv
