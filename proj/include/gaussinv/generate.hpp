#pragma once

// Seeded random diagrams for property tests and the fuzzer.

#include <cstddef>
#include <utility>
#include <vector>

#include "gaussinv/diagram.hpp"
#include "gaussinv/rng.hpp"

namespace gaussinv {

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

namespace detail {
inline std::pair<Strand, std::vector<int>> random_endpoints(Rng& rng, std::size_t chords) {
  Strand ends;
  std::vector<int> signs;
  for (std::size_t c = 0; c < chords; ++c) {
    ends.push_back({c, Role::tail});
    ends.push_back({c, Role::head});
    signs.push_back(rng.coin() ? 1 : -1);
  }
  shuffle(ends, rng);
  return {std::move(ends), std::move(signs)};
}
}  // namespace detail

/// Uniformly shuffled endpoints with random signs, numbered by first appearance.
template <Diagram D>
  requires(D::strand_count == 1)
D random_diagram(Rng& rng, std::size_t chords) {
  auto [ends, signs] = detail::random_endpoints(rng, chords);
  return relabeled(D({std::move(ends)}, std::move(signs)));
}

/// Endpoints shuffled and cut at a random point into two components.
inline LinkDiagram random_link(Rng& rng, std::size_t chords) {
  auto [ends, signs] = detail::random_endpoints(rng, chords);
  const std::size_t cut = rng.below(ends.size() + 1);
  Strand second(ends.begin() + static_cast<std::ptrdiff_t>(cut), ends.end());
  ends.resize(cut);
  return relabeled(LinkDiagram({std::move(ends), std::move(second)}, std::move(signs)));
}

/// Closure of the 2-braid sigma_1^(2n): a classical link with linking number n.
inline LinkDiagram torus_link(std::size_t n) {
  LinkDiagram::Strands strands;
  std::vector<int> signs(2 * n, 1);
  for (std::size_t c = 0; c < 2 * n; ++c) {
    const bool first_over = c % 2 == 0;
    strands[0].push_back({c, first_over ? Role::tail : Role::head});
    strands[1].push_back({c, first_over ? Role::head : Role::tail});
  }
  return LinkDiagram(std::move(strands), std::move(signs));
}

}  // namespace gaussinv
