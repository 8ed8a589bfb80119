#pragma once

// Conformance of the index parities Odd_k to the parity axioms, checked on a
// single move: a chord created or removed by R1 is even, the two R2 chords
// share their parity, R3 keeps the parity of each of its three chords and
// leaves 0 or 2 of them in Odd_0, and no other chord changes parity.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gaussinv/knot_invariants.hpp"
#include "gaussinv/moves.hpp"

namespace gaussinv {

/// Highest k tested; indices of diagrams within the fuzz budget stay far below 2^kMaxParityLevel.
inline constexpr int kMaxParityLevel = 8;

inline bool is_odd_at(std::int64_t index, int level) { return parity_class_of_index(index) == level; }

/// Describes the first violated axiom, or none.
inline std::optional<std::string> parity_axiom_violation(const KnotDiagram& before, const MoveAction& move,
                                                         const KnotDiagram& after) {
  const auto ib = chord_indices(before);
  const auto ia = chord_indices(after);
  const auto map = chord_correspondence(before, move);

  for (int k = 0; k <= kMaxParityLevel; ++k) {
    const std::string lvl = " (k=" + std::to_string(k) + ")";
    for (std::size_t c = 0; c < map.size(); ++c) {
      if (map[c] && is_odd_at(ib[c], k) != is_odd_at(ia[*map[c]], k)) {
        return "chord " + std::to_string(c + 1) + " changed parity" + lvl;
      }
    }
    switch (move.kind) {
      case MoveKind::r1_insert:
        if (is_odd_at(ia.back(), k)) return "R1 chord is odd" + lvl;
        break;
      case MoveKind::r1_delete:
        if (is_odd_at(ib.at(static_cast<std::size_t>(move.ids[0] - 1)), k)) return "R1 chord is odd" + lvl;
        break;
      case MoveKind::r2_insert:
        if (is_odd_at(ia[ia.size() - 1], k) != is_odd_at(ia[ia.size() - 2], k)) return "R2 chords differ" + lvl;
        break;
      case MoveKind::r2_delete:
        if (is_odd_at(ib.at(static_cast<std::size_t>(move.ids[0] - 1)), k) !=
            is_odd_at(ib.at(static_cast<std::size_t>(move.ids[1] - 1)), k)) {
          return "R2 chords differ" + lvl;
        }
        break;
      default:
        break;
    }
  }
  if (move.kind == MoveKind::r3_swap) {
    int odd = 0;
    for (int id : move.ids) odd += is_odd_at(ib.at(static_cast<std::size_t>(id - 1)), 0) ? 1 : 0;
    if (odd != 0 && odd != 2) return "R3 triangle has " + std::to_string(odd) + " odd chords";
  }
  return std::nullopt;
}

}  // namespace gaussinv
