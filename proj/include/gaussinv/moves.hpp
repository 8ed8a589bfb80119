#pragma once

// Reidemeister moves on Gauss diagrams. Virtual moves leave the Gauss diagram
// unchanged and appear here only as rebasing of closed strands.
//
// R3 matches a triangle of chords a, b, c: the "top" block holds the tails of
// a and b, the "middle" block the head of a and the tail of c, the "bottom"
// block the heads of b and c; each block is two consecutive endpoints. With
// oX = +1 when the block lists (a, b), (a, c), (b, c) in strand order, a
// triangle is realizable exactly when
//   w(a) w(b) = oM oB   and   w(b) w(c) = oT oM.
// The move transposes the endpoints inside each block.

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gaussinv/diagram.hpp"
#include "gaussinv/rng.hpp"

namespace gaussinv {

enum class MoveKind { r1_insert, r1_delete, r2_insert, r2_delete, r3_swap, switch_crossing, rebase };

constexpr std::string_view move_name(MoveKind k) noexcept {
  switch (k) {
    case MoveKind::r1_insert: return "R1Insert";
    case MoveKind::r1_delete: return "R1Delete";
    case MoveKind::r2_insert: return "R2Insert";
    case MoveKind::r2_delete: return "R2Delete";
    case MoveKind::r3_swap: return "R3Swap";
    case MoveKind::switch_crossing: return "SwitchCrossing";
    case MoveKind::rebase: return "Rebase";
  }
  return "?";
}

struct MoveAction {
  MoveKind kind = MoveKind::rebase;
  Gap gap;                    // R1Insert position; R2Insert tail block; Rebase (strand, offset)
  Gap gap2;                   // R2Insert head block
  int sign = 1;               // sign of the (first) inserted chord
  bool tail_first = true;     // R1Insert
  bool crossed = false;       // R2Insert: heads in reverse order
  bool heads_first = false;   // R2Insert: head block precedes tail block when both share a gap
  std::array<int, 3> ids{};   // chord ids for deletes, R3 and switches
  friend bool operator==(const MoveAction&, const MoveAction&) = default;
};

inline std::string to_string(const MoveAction& a) {
  std::ostringstream os;
  os << move_name(a.kind) << "(";
  switch (a.kind) {
    case MoveKind::r1_insert:
      os << "strand=" << a.gap.strand << ",gap=" << a.gap.index << ",sign=" << (a.sign > 0 ? '+' : '-')
         << (a.tail_first ? ",tail_first" : ",head_first");
      break;
    case MoveKind::r2_insert:
      os << "tails=" << a.gap.strand << ":" << a.gap.index << ",heads=" << a.gap2.strand << ":" << a.gap2.index
         << ",sign=" << (a.sign > 0 ? '+' : '-') << (a.crossed ? ",crossed" : ",parallel")
         << (a.heads_first ? ",heads_first" : "");
      break;
    case MoveKind::rebase:
      os << "strand=" << a.gap.strand << ",offset=" << a.gap.index;
      break;
    case MoveKind::r1_delete:
    case MoveKind::switch_crossing:
      os << "chord=" << a.ids[0];
      break;
    case MoveKind::r2_delete:
      os << "chords=" << a.ids[0] << "," << a.ids[1];
      break;
    case MoveKind::r3_swap:
      os << "chords=" << a.ids[0] << "," << a.ids[1] << "," << a.ids[2];
      break;
  }
  os << ")";
  return os.str();
}

namespace detail {

template <Diagram D>
std::optional<Location> next_location(const D& d, Location l) {
  const std::size_t m = d.strand(l.strand).size();
  if (l.pos + 1 < m) return Location{l.strand, l.pos + 1};
  if (D::closed && m > 1) return Location{l.strand, 0};
  return std::nullopt;
}

template <Diagram D>
bool consecutive(const D& d, Location first, Location second) {
  auto n = next_location(d, first);
  return n && *n == second;
}

template <Diagram D>
bool adjacent(const D& d, Location x, Location y) {
  return consecutive(d, x, y) || consecutive(d, y, x);
}

/// Removes the given chords and renumbers the rest densely, keeping order.
template <Diagram D>
D remove_chords(const D& d, std::vector<std::size_t> doomed) {
  std::vector<std::size_t> map(d.chord_count());
  std::vector<bool> gone(d.chord_count(), false);
  for (std::size_t c : doomed) gone.at(c) = true;
  std::size_t next = 0;
  std::vector<int> signs;
  for (std::size_t c = 0; c < d.chord_count(); ++c) {
    if (gone[c]) continue;
    map[c] = next++;
    signs.push_back(d.sign(c));
  }
  typename D::Strands strands;
  for (std::size_t s = 0; s < D::strand_count; ++s) {
    for (const Endpoint& e : d.strand(s)) {
      if (!gone[e.chord]) strands[s].push_back(Endpoint{map[e.chord], e.role});
    }
  }
  return D(std::move(strands), std::move(signs));
}

template <Diagram D>
void check_gap(const D& d, Gap g) {
  if (g.strand >= D::strand_count || g.index > d.strand(g.strand).size()) {
    throw Error(ErrorKind::index_out_of_range,
                "gap " + std::to_string(g.strand) + ":" + std::to_string(g.index) + " out of range");
  }
}

inline std::size_t as_index(ChordId id) { return static_cast<std::size_t>(id.value - 1); }

}  // namespace detail

// ---------------------------------------------------------------------------
// R1

/// Inserts an isolated chord with consecutive endpoints at gap g.
template <Diagram D>
D r1_insert(const D& d, Gap g, int sign, bool tail_first) {
  detail::check_gap(d, g);
  const std::size_t c = d.chord_count();
  auto strands = d.strands();
  auto& s = strands[g.strand];
  const Endpoint first{c, tail_first ? Role::tail : Role::head};
  const Endpoint second{c, tail_first ? Role::head : Role::tail};
  s.insert(s.begin() + static_cast<std::ptrdiff_t>(g.index), {first, second});
  auto signs = d.signs();
  signs.push_back(sign > 0 ? 1 : -1);
  return D(std::move(strands), std::move(signs));
}

template <Diagram D>
bool is_isolated(const D& d, std::size_t c) {
  return d.is_self_chord(c) && detail::adjacent(d, d.tail(c), d.head(c));
}

template <Diagram D>
D r1_delete(const D& d, ChordId id) {
  const std::size_t c = d.index_of(id);
  if (!is_isolated(d, c)) throw Error(ErrorKind::not_isolated, "chord " + std::to_string(id.value) + " is not isolated");
  return detail::remove_chords(d, {c});
}

// ---------------------------------------------------------------------------
// R2

/// Inserts chords c1 (sign s) and c2 (sign -s) with tails (c1, c2) at `tails`
/// and heads (c1, c2), or (c2, c1) when crossed, at `heads`.
template <Diagram D>
D r2_insert(const D& d, Gap tails, Gap heads, int sign, bool crossed, bool heads_first = false) {
  detail::check_gap(d, tails);
  detail::check_gap(d, heads);
  const std::size_t c1 = d.chord_count();
  const std::size_t c2 = c1 + 1;
  const std::vector<Endpoint> tail_block{{c1, Role::tail}, {c2, Role::tail}};
  const std::vector<Endpoint> head_block = crossed ? std::vector<Endpoint>{{c2, Role::head}, {c1, Role::head}}
                                                   : std::vector<Endpoint>{{c1, Role::head}, {c2, Role::head}};
  auto strands = d.strands();
  auto insert = [&](Gap g, const std::vector<Endpoint>& block) {
    auto& s = strands[g.strand];
    s.insert(s.begin() + static_cast<std::ptrdiff_t>(g.index), block.begin(), block.end());
  };
  if (tails.strand != heads.strand) {
    insert(tails, tail_block);
    insert(heads, head_block);
  } else if (tails.index == heads.index) {
    std::vector<Endpoint> both = heads_first ? head_block : tail_block;
    const auto& rest = heads_first ? tail_block : head_block;
    both.insert(both.end(), rest.begin(), rest.end());
    insert(tails, both);
  } else if (tails.index > heads.index) {
    insert(tails, tail_block);
    insert(heads, head_block);
  } else {
    insert(heads, head_block);
    insert(tails, tail_block);
  }
  auto signs = d.signs();
  const int s = sign > 0 ? 1 : -1;
  signs.push_back(s);
  signs.push_back(-s);
  return D(std::move(strands), std::move(signs));
}

template <Diagram D>
bool is_r2_pair(const D& d, std::size_t c1, std::size_t c2) {
  return c1 != c2 && d.sign(c1) == -d.sign(c2) && detail::adjacent(d, d.tail(c1), d.tail(c2)) &&
         detail::adjacent(d, d.head(c1), d.head(c2));
}

template <Diagram D>
D r2_delete(const D& d, ChordId id1, ChordId id2) {
  const std::size_t c1 = d.index_of(id1);
  const std::size_t c2 = d.index_of(id2);
  if (!is_r2_pair(d, c1, c2)) {
    throw Error(ErrorKind::pattern_not_found, "chords " + std::to_string(id1.value) + " and " +
                                                  std::to_string(id2.value) + " are not an R2 pair");
  }
  return detail::remove_chords(d, {c1, c2});
}

// ---------------------------------------------------------------------------
// R3

struct R3Match {
  std::array<std::size_t, 3> chords{};                   // a, b, c
  std::array<std::array<Location, 2>, 3> blocks{};        // top, middle, bottom in strand order
};

namespace detail {

/// Orders two locations that must be consecutive; none otherwise or when the
/// order is ambiguous (closed strand of fewer than three endpoints).
template <Diagram D>
std::optional<std::pair<Location, Location>> ordered_block(const D& d, Location x, Location y) {
  if (x.strand != y.strand) return std::nullopt;
  if (D::closed && d.strand(x.strand).size() < 3) return std::nullopt;
  if (consecutive(d, x, y)) return std::pair{x, y};
  if (consecutive(d, y, x)) return std::pair{y, x};
  return std::nullopt;
}

/// Checks the triangle with the given roles; a is top-middle, b top-bottom, c middle-bottom.
template <Diagram D>
std::optional<R3Match> match_r3(const D& d, std::size_t a, std::size_t b, std::size_t c) {
  if (a == b || b == c || a == c) return std::nullopt;
  auto top = ordered_block(d, d.tail(a), d.tail(b));
  auto mid = ordered_block(d, d.head(a), d.tail(c));
  auto bot = ordered_block(d, d.head(b), d.head(c));
  if (!top || !mid || !bot) return std::nullopt;
  const int oT = top->first == d.tail(a) ? 1 : -1;
  const int oM = mid->first == d.head(a) ? 1 : -1;
  const int oB = bot->first == d.head(b) ? 1 : -1;
  if (d.sign(a) * d.sign(b) != oM * oB || d.sign(b) * d.sign(c) != oT * oM) return std::nullopt;
  R3Match m;
  m.chords = {a, b, c};
  m.blocks = {{{top->first, top->second}, {mid->first, mid->second}, {bot->first, bot->second}}};
  return m;
}

}  // namespace detail

/// Finds the triangle formed by three chords, trying every role assignment.
template <Diagram D>
std::optional<R3Match> find_r3(const D& d, std::array<std::size_t, 3> chords) {
  static constexpr std::array<std::array<int, 3>, 6> perms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (const auto& p : perms) {
    if (auto m = detail::match_r3(d, chords[p[0]], chords[p[1]], chords[p[2]])) return m;
  }
  return std::nullopt;
}

template <Diagram D>
D r3_apply(const D& d, std::array<ChordId, 3> ids) {
  const std::array<std::size_t, 3> chords{d.index_of(ids[0]), d.index_of(ids[1]), d.index_of(ids[2])};
  auto m = find_r3(d, chords);
  if (!m) throw Error(ErrorKind::pattern_not_applicable, "chords do not form an R3 triangle");
  auto strands = d.strands();
  for (const auto& blk : m->blocks) {
    std::swap(strands[blk[0].strand][blk[0].pos], strands[blk[1].strand][blk[1].pos]);
  }
  return D(std::move(strands), d.signs());
}

/// Every R3 triangle of the diagram, each reported once with roles (a, b, c).
template <Diagram D>
std::vector<R3Match> r3_candidates(const D& d) {
  std::vector<R3Match> out;
  for (std::size_t s = 0; s < D::strand_count; ++s) {
    for (std::size_t p = 0; p < d.strand(s).size(); ++p) {
      const Location x{s, p};
      auto y = detail::next_location(d, x);
      if (!y) continue;
      const Endpoint ex = d.at(x);
      const Endpoint ey = d.at(*y);
      if (ex.role != Role::tail || ey.role != Role::tail) continue;
      for (auto [a, b] : {std::pair{ex.chord, ey.chord}, std::pair{ey.chord, ex.chord}}) {
        // c's tail must sit next to a's head
        for (bool forward : {true, false}) {
          const Location ha = d.head(a);
          std::optional<Location> nb;
          if (forward) {
            nb = detail::next_location(d, ha);
          } else {
            for (std::size_t q = 0; q < d.strand(ha.strand).size(); ++q) {
              if (detail::consecutive(d, Location{ha.strand, q}, ha)) nb = Location{ha.strand, q};
            }
          }
          if (!nb || d.at(*nb).role != Role::tail) continue;
          const std::size_t c = d.at(*nb).chord;
          if (auto m = detail::match_r3(d, a, b, c)) {
            bool dup = false;
            for (const auto& o : out) dup = dup || o.chords == m->chords;
            if (!dup) out.push_back(*m);
          }
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Crossing switches

template <Diagram D>
D switch_crossing(const D& d, ChordId id) {
  return flip_chord(d, d.index_of(id));
}

// ---------------------------------------------------------------------------
// Generic application

template <Diagram D>
D apply_move(const D& d, const MoveAction& a) {
  switch (a.kind) {
    case MoveKind::r1_insert: return r1_insert(d, a.gap, a.sign, a.tail_first);
    case MoveKind::r1_delete: return r1_delete(d, ChordId{a.ids[0]});
    case MoveKind::r2_insert: return r2_insert(d, a.gap, a.gap2, a.sign, a.crossed, a.heads_first);
    case MoveKind::r2_delete: return r2_delete(d, ChordId{a.ids[0]}, ChordId{a.ids[1]});
    case MoveKind::r3_swap: return r3_apply(d, {ChordId{a.ids[0]}, ChordId{a.ids[1]}, ChordId{a.ids[2]}});
    case MoveKind::switch_crossing: return switch_crossing(d, ChordId{a.ids[0]});
    case MoveKind::rebase:
      if constexpr (D::closed) {
        return gaussinv::rebase(d, a.gap.strand, a.gap.index);
      } else {
        throw Error(ErrorKind::invalid_argument, "line diagrams have no base point to move");
      }
  }
  throw Error(ErrorKind::internal, "unhandled move");
}

template <Diagram D>
D replay(const D& d, const std::vector<MoveAction>& trace) {
  D cur = d;
  for (const auto& a : trace) cur = apply_move(cur, a);
  return cur;
}

/// For each chord before the move, its index afterwards (none if removed).
/// Inserted chords are appended after the surviving ones.
template <Diagram D>
std::vector<std::optional<std::size_t>> chord_correspondence(const D& before, const MoveAction& a) {
  const std::size_t n = before.chord_count();
  std::vector<std::optional<std::size_t>> map(n);
  std::vector<bool> gone(n, false);
  if (a.kind == MoveKind::r1_delete) gone.at(detail::as_index(ChordId{a.ids[0]})) = true;
  if (a.kind == MoveKind::r2_delete) {
    gone.at(detail::as_index(ChordId{a.ids[0]})) = true;
    gone.at(detail::as_index(ChordId{a.ids[1]})) = true;
  }
  std::size_t next = 0;
  for (std::size_t c = 0; c < n; ++c)
    if (!gone[c]) map[c] = next++;
  return map;
}

// ---------------------------------------------------------------------------
// Random walks

struct WalkOptions {
  std::size_t chord_budget = 24;
  bool allow_switch = false;
  bool switch_self_only = true;  // links: only self-chords may be switched
};

/// A uniformly drawn applicable move, insert-biased on small diagrams and
/// delete-biased on large ones. None when nothing fits the budget.
template <Diagram D>
std::optional<MoveAction> random_move(const D& d, Rng& rng, const WalkOptions& opt = {}) {
  const std::size_t n = d.chord_count();
  const std::uint64_t budget = opt.chord_budget;
  const std::uint64_t room = budget > n ? budget - n : 0;
  std::vector<std::pair<MoveKind, std::uint64_t>> weights{
      {MoveKind::r1_insert, room},
      {MoveKind::r2_insert, room >= 2 ? 2 * room : 0},
      {MoveKind::r1_delete, n},
      {MoveKind::r2_delete, 2 * n},
      {MoveKind::r3_swap, budget},
      {MoveKind::rebase, D::closed ? budget / 2 : 0},
      {MoveKind::switch_crossing, opt.allow_switch ? budget / 2 : 0},
  };
  auto draw_kind = [&]() -> std::optional<MoveKind> {
    std::uint64_t total = 0;
    for (auto& [k, w] : weights) total += w;
    if (total == 0) return std::nullopt;
    std::uint64_t r = rng.below(total);
    for (auto& [k, w] : weights) {
      if (r < w) return k;
      r -= w;
    }
    return std::nullopt;
  };
  auto random_gap = [&]() {
    const std::size_t s = rng.below(D::strand_count);
    return Gap{s, static_cast<std::size_t>(rng.below(d.strand(s).size() + 1))};
  };
  auto id_of = [](std::size_t c) { return static_cast<int>(c + 1); };

  while (auto kind = draw_kind()) {
    MoveAction a;
    a.kind = *kind;
    switch (*kind) {
      case MoveKind::r1_insert:
        a.gap = random_gap();
        a.sign = rng.coin() ? 1 : -1;
        a.tail_first = rng.coin();
        return a;
      case MoveKind::r2_insert:
        a.gap = random_gap();
        a.gap2 = random_gap();
        a.sign = rng.coin() ? 1 : -1;
        a.crossed = rng.coin();
        a.heads_first = a.gap == a.gap2 && rng.coin();
        return a;
      case MoveKind::r1_delete: {
        std::vector<std::size_t> cands;
        for (std::size_t c = 0; c < n; ++c)
          if (is_isolated(d, c)) cands.push_back(c);
        if (cands.empty()) break;
        a.ids[0] = id_of(cands[rng.below(cands.size())]);
        return a;
      }
      case MoveKind::r2_delete: {
        std::vector<std::pair<std::size_t, std::size_t>> cands;
        for (std::size_t c1 = 0; c1 < n; ++c1)
          for (std::size_t c2 = c1 + 1; c2 < n; ++c2)
            if (is_r2_pair(d, c1, c2)) cands.emplace_back(c1, c2);
        if (cands.empty()) break;
        auto [c1, c2] = cands[rng.below(cands.size())];
        a.ids = {id_of(c1), id_of(c2), 0};
        return a;
      }
      case MoveKind::r3_swap: {
        auto cands = r3_candidates(d);
        if (cands.empty()) break;
        const auto& m = cands[rng.below(cands.size())];
        a.ids = {id_of(m.chords[0]), id_of(m.chords[1]), id_of(m.chords[2])};
        return a;
      }
      case MoveKind::rebase: {
        std::vector<std::size_t> strands;
        for (std::size_t s = 0; s < D::strand_count; ++s)
          if (d.strand(s).size() >= 2) strands.push_back(s);
        if (strands.empty()) break;
        const std::size_t s = strands[rng.below(strands.size())];
        a.gap = Gap{s, 1 + static_cast<std::size_t>(rng.below(d.strand(s).size() - 1))};
        return a;
      }
      case MoveKind::switch_crossing: {
        std::vector<std::size_t> cands;
        for (std::size_t c = 0; c < n; ++c)
          if (!opt.switch_self_only || d.is_self_chord(c)) cands.push_back(c);
        if (cands.empty()) break;
        a.ids[0] = id_of(cands[rng.below(cands.size())]);
        return a;
      }
    }
    for (auto& [k, w] : weights)
      if (k == *kind) w = 0;
  }
  return std::nullopt;
}

template <Diagram D>
struct Walk {
  D diagram;
  std::vector<MoveAction> trace;
};

/// Applies `steps` random moves; deterministic in the seed.
template <Diagram D>
Walk<D> random_walk(const D& d, std::uint64_t seed, std::size_t steps, const WalkOptions& opt = {}) {
  Rng rng(seed);
  Walk<D> w{d, {}};
  for (std::size_t i = 0; i < steps; ++i) {
    auto a = random_move(w.diagram, rng, opt);
    if (!a) break;
    w.diagram = apply_move(w.diagram, *a);
    w.trace.push_back(*a);
  }
  return w;
}

}  // namespace gaussinv
