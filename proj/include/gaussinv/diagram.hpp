#pragma once

// Gauss diagrams of virtual knots, long knots, long flat knots and
// 2-component links. A diagram is a fixed number of strands (oriented circles
// or lines), each a sequence of chord endpoints, plus one sign per chord.
// Chords are directed from the over-crossing preimage (tail, token "O") to the
// under-crossing preimage (head, token "U").

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gaussinv/error.hpp"

namespace gaussinv {

enum class Role : std::uint8_t { tail, head };

constexpr Role opposite(Role r) noexcept { return r == Role::tail ? Role::head : Role::tail; }

/// 1-based chord identifier as written in Gauss codes.
struct ChordId {
  int value = 0;
  friend auto operator<=>(const ChordId&, const ChordId&) = default;
};

struct Endpoint {
  std::size_t chord = 0;  // dense 0-based index
  Role role = Role::tail;
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct Location {
  std::size_t strand = 0;
  std::size_t pos = 0;
  friend bool operator==(const Location&, const Location&) = default;
};

/// An insertion point: before position `index` of `strand` (index may equal the strand length).
struct Gap {
  std::size_t strand = 0;
  std::size_t index = 0;
  friend bool operator==(const Gap&, const Gap&) = default;
};

enum class DiagramKind { knot, long_knot, flat_long, link };

template <DiagramKind K>
struct KindTraits;
template <>
struct KindTraits<DiagramKind::knot> {
  static constexpr std::string_view name = "knot";
  static constexpr bool closed = true;
  static constexpr std::size_t strands = 1;
};
template <>
struct KindTraits<DiagramKind::long_knot> {
  static constexpr std::string_view name = "long";
  static constexpr bool closed = false;
  static constexpr std::size_t strands = 1;
};
template <>
struct KindTraits<DiagramKind::flat_long> {
  static constexpr std::string_view name = "flatlong";
  static constexpr bool closed = false;
  static constexpr std::size_t strands = 1;
};
template <>
struct KindTraits<DiagramKind::link> {
  static constexpr std::string_view name = "link";
  static constexpr bool closed = true;
  static constexpr std::size_t strands = 2;
};

using Strand = std::vector<Endpoint>;

template <DiagramKind K>
class GaussDiagram {
 public:
  static constexpr DiagramKind kind = K;
  static constexpr bool closed = KindTraits<K>::closed;
  static constexpr std::size_t strand_count = KindTraits<K>::strands;
  using Strands = std::array<Strand, strand_count>;

  GaussDiagram() = default;

  GaussDiagram(Strands strands, std::vector<int> signs)
      : strands_(std::move(strands)), signs_(std::move(signs)) {
    validate_and_index();
  }

  std::size_t chord_count() const noexcept { return signs_.size(); }
  const Strands& strands() const noexcept { return strands_; }
  const Strand& strand(std::size_t s) const { return strands_.at(s); }
  const std::vector<int>& signs() const noexcept { return signs_; }
  int sign(std::size_t c) const { return signs_.at(c); }

  Location tail(std::size_t c) const { return locations_.at(c)[0]; }
  Location head(std::size_t c) const { return locations_.at(c)[1]; }
  Location locate(std::size_t c, Role r) const { return r == Role::tail ? tail(c) : head(c); }
  const Endpoint& at(Location l) const { return strands_.at(l.strand).at(l.pos); }

  /// Dense index of a 1-based id; throws UnknownChord.
  std::size_t index_of(ChordId id) const {
    if (id.value < 1 || static_cast<std::size_t>(id.value) > signs_.size()) {
      throw Error(ErrorKind::unknown_chord, "no chord with id " + std::to_string(id.value));
    }
    return static_cast<std::size_t>(id.value - 1);
  }

  bool is_self_chord(std::size_t c) const { return tail(c).strand == head(c).strand; }

  /// Exact storage equality (no rebasing, no relabeling, no flips).
  bool same_storage(const GaussDiagram& o) const {
    return strands_ == o.strands_ && signs_ == o.signs_;
  }

 private:
  void validate_and_index() {
    const std::size_t n = signs_.size();
    for (std::size_t c = 0; c < n; ++c) {
      if (signs_[c] != 1 && signs_[c] != -1) {
        throw Error(ErrorKind::invalid_diagram, "chord " + std::to_string(c + 1) + " has sign " +
                                                    std::to_string(signs_[c]));
      }
    }
    std::vector<std::array<std::optional<Location>, 2>> seen(n);
    for (std::size_t s = 0; s < strand_count; ++s) {
      for (std::size_t p = 0; p < strands_[s].size(); ++p) {
        const Endpoint& e = strands_[s][p];
        if (e.chord >= n) {
          throw Error(ErrorKind::invalid_diagram,
                      "endpoint refers to chord " + std::to_string(e.chord + 1) + " of " +
                          std::to_string(n));
        }
        auto& slot = seen[e.chord][e.role == Role::tail ? 0 : 1];
        if (slot) {
          throw Error(ErrorKind::invalid_diagram, "id " + std::to_string(e.chord + 1) + " has two " +
                                                      (e.role == Role::tail ? "O" : "U") +
                                                      " tokens");
        }
        slot = Location{s, p};
      }
    }
    locations_.resize(n);
    for (std::size_t c = 0; c < n; ++c) {
      if (!seen[c][0] || !seen[c][1]) {
        throw Error(ErrorKind::invalid_diagram,
                    "id " + std::to_string(c + 1) + " lacks its " + (seen[c][0] ? "U" : "O") + " token");
      }
      locations_[c] = {*seen[c][0], *seen[c][1]};
    }
  }

  Strands strands_{};
  std::vector<int> signs_;
  std::vector<std::array<Location, 2>> locations_;
};

using KnotDiagram = GaussDiagram<DiagramKind::knot>;
using LongDiagram = GaussDiagram<DiagramKind::long_knot>;
using FlatLongDiagram = GaussDiagram<DiagramKind::flat_long>;
using LinkDiagram = GaussDiagram<DiagramKind::link>;

using AnyDiagram = std::variant<KnotDiagram, LongDiagram, FlatLongDiagram, LinkDiagram>;

template <class D>
concept Diagram = requires {
  { D::kind } -> std::convertible_to<DiagramKind>;
} && std::same_as<D, GaussDiagram<D::kind>>;

template <class D>
concept ClosedDiagram = Diagram<D> && D::closed;

template <class D>
concept LineDiagram = Diagram<D> && !D::closed;

// ---------------------------------------------------------------------------
// Construction helpers

namespace detail {

/// Renumbers chords in order of first appearance (strand by strand).
template <Diagram D>
D relabel(const typename D::Strands& strands, const std::vector<int>& signs) {
  std::vector<std::size_t> map(signs.size(), SIZE_MAX);
  std::size_t next = 0;
  typename D::Strands out = strands;
  for (auto& s : out) {
    for (auto& e : s) {
      if (map[e.chord] == SIZE_MAX) map[e.chord] = next++;
      e.chord = map[e.chord];
    }
  }
  std::vector<int> new_signs(signs.size());
  for (std::size_t c = 0; c < signs.size(); ++c) new_signs[map[c]] = signs[c];
  return D(std::move(out), std::move(new_signs));
}

inline Strand rotated(const Strand& s, std::size_t k) {
  Strand r = s;
  if (!r.empty()) std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k % r.size()), r.end());
  return r;
}

/// Sort key of a token: id, then O before U, then + before -.
using TokenKey = std::array<std::int64_t, 3>;

/// Keys of strands [0, upto) after rotating strand s by rot[s] and renumbering
/// chords by first appearance. The prefix does not depend on later strands.
template <Diagram D>
std::vector<TokenKey> rotated_keys(const D& d, const std::array<std::size_t, D::strand_count>& rot,
                                   std::size_t upto) {
  std::vector<std::int64_t> id(d.chord_count(), -1);
  std::int64_t next = 0;
  std::vector<TokenKey> keys;
  for (std::size_t s = 0; s < upto; ++s) {
    const auto& st = d.strand(s);
    for (std::size_t i = 0; i < st.size(); ++i) {
      const auto& e = st[(i + rot[s]) % st.size()];
      if (id[e.chord] < 0) id[e.chord] = next++;
      keys.push_back({id[e.chord], e.role == Role::tail ? 0 : 1, d.sign(e.chord) > 0 ? 0 : 1});
    }
    keys.push_back({-1, -1, -1});  // strand separator
  }
  return keys;
}

}  // namespace detail

/// Chords renumbered by first appearance; positions untouched.
template <Diagram D>
D relabeled(const D& d) {
  return detail::relabel<D>(d.strands(), d.signs());
}

/// Rotates a closed strand so that old position k becomes position 0.
template <ClosedDiagram D>
D rebase(const D& d, std::size_t strand, std::size_t k) {
  if (strand >= D::strand_count) throw Error(ErrorKind::index_out_of_range, "no strand " + std::to_string(strand));
  auto strands = d.strands();
  if (!strands[strand].empty() && k >= strands[strand].size()) {
    throw Error(ErrorKind::index_out_of_range, "rebase offset " + std::to_string(k));
  }
  strands[strand] = detail::rotated(strands[strand], k);
  return D(std::move(strands), d.signs());
}

/// Representative of the flip class with every tail before its head.
inline FlatLongDiagram flip_normalized(const FlatLongDiagram& d) {
  auto strands = d.strands();
  auto signs = d.signs();
  for (std::size_t c = 0; c < d.chord_count(); ++c) {
    if (d.tail(c).pos > d.head(c).pos) {
      strands[0][d.tail(c).pos].role = Role::head;
      strands[0][d.head(c).pos].role = Role::tail;
      signs[c] = -signs[c];
    }
  }
  return FlatLongDiagram(std::move(strands), std::move(signs));
}

/// Canonical representative used for printing and comparison: closed strands
/// are rotated to the lexicographically least token sequence, then chords are
/// renumbered by first appearance. Line strands are only renumbered.
template <Diagram D>
D canonical_form(const D& d) {
  if constexpr (!D::closed) {
    return relabeled(d);
  } else {
    using Rotation = std::array<std::size_t, D::strand_count>;
    std::vector<Rotation> ties{Rotation{}};
    for (std::size_t s = 0; s < D::strand_count; ++s) {
      std::vector<Rotation> next;
      std::vector<detail::TokenKey> best;
      for (const auto& r : ties) {
        for (std::size_t k = 0; k < std::max<std::size_t>(1, d.strand(s).size()); ++k) {
          Rotation cand = r;
          cand[s] = k;
          auto keys = detail::rotated_keys(d, cand, s + 1);
          if (next.empty() || keys < best) {
            next.assign(1, cand);
            best = std::move(keys);
          } else if (keys == best) {
            next.push_back(cand);
          }
        }
      }
      ties = std::move(next);
    }
    auto strands = d.strands();
    for (std::size_t s = 0; s < D::strand_count; ++s) strands[s] = detail::rotated(strands[s], ties.front()[s]);
    return detail::relabel<D>(strands, d.signs());
  }
}

/// Diagram equality: up to rebasing for closed strands, up to chord numbering,
/// and up to flips for flat chords.
template <Diagram D>
bool operator==(const D& a, const D& b) {
  if (a.chord_count() != b.chord_count()) return false;
  if constexpr (D::kind == DiagramKind::flat_long) {
    return canonical_form(flip_normalized(a)).same_storage(canonical_form(flip_normalized(b)));
  } else {
    return canonical_form(a).same_storage(canonical_form(b));
  }
}

// ---------------------------------------------------------------------------
// Text format
//   code  := kind ":" body
//   kind  := "knot" | "long" | "flatlong" | "link"
//   body  := tokens | tokens "/" tokens      ("/" only for links)
//   token := ("O"|"U") id ("+"|"-")

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct RawToken {
  Role role;
  int id;
  int sign;
};

inline RawToken parse_token(std::string_view tok) {
  auto bad = [&] { return Error(ErrorKind::parse_error, "malformed token '" + std::string(tok) + "'"); };
  if (tok.size() < 3) throw bad();
  Role role;
  if (tok.front() == 'O') {
    role = Role::tail;
  } else if (tok.front() == 'U') {
    role = Role::head;
  } else {
    throw bad();
  }
  int sign;
  if (tok.back() == '+') {
    sign = 1;
  } else if (tok.back() == '-') {
    sign = -1;
  } else {
    throw bad();
  }
  std::string_view digits = tok.substr(1, tok.size() - 2);
  if (digits.empty() || digits.front() == '0') throw bad();
  int id = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), id);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || id < 1) throw bad();
  return {role, id, sign};
}

inline std::vector<RawToken> tokenize(std::string_view body) {
  std::vector<RawToken> out;
  std::size_t i = 0;
  while (i < body.size()) {
    while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
    std::size_t j = i;
    while (j < body.size() && !std::isspace(static_cast<unsigned char>(body[j]))) ++j;
    if (j > i) out.push_back(parse_token(body.substr(i, j - i)));
    i = j;
  }
  return out;
}

template <Diagram D>
D build(const std::vector<std::vector<RawToken>>& parts) {
  struct Seen {
    std::size_t index;
    int sign;
    int count = 0;
    std::array<bool, 2> roles{};
  };
  std::map<int, Seen> ids;
  typename D::Strands strands;
  std::vector<int> signs;
  for (std::size_t s = 0; s < parts.size(); ++s) {
    for (const RawToken& t : parts[s]) {
      auto [it, inserted] = ids.try_emplace(t.id, Seen{signs.size(), t.sign});
      Seen& info = it->second;
      if (inserted) signs.push_back(t.sign);
      const std::string id = std::to_string(t.id);
      if (++info.count > 2) throw Error(ErrorKind::invalid_diagram, "id " + id + " appears more than twice");
      const int r = t.role == Role::tail ? 0 : 1;
      if (info.roles[r]) {
        throw Error(ErrorKind::invalid_diagram,
                    "id " + id + " has two " + (t.role == Role::tail ? "O" : "U") + " tokens");
      }
      info.roles[r] = true;
      if (info.sign != t.sign) throw Error(ErrorKind::invalid_diagram, "id " + id + " has inconsistent signs");
      strands[s].push_back(Endpoint{info.index, t.role});
    }
  }
  for (const auto& [id, info] : ids) {
    if (info.count != 2) {
      throw Error(ErrorKind::invalid_diagram, "id " + std::to_string(id) + " appears only once");
    }
  }
  return D(std::move(strands), std::move(signs));
}

template <Diagram D>
D parse_body(std::string_view body) {
  std::vector<std::vector<RawToken>> parts;
  auto slash = body.find('/');
  if constexpr (D::strand_count == 2) {
    if (slash == std::string_view::npos) {
      throw Error(ErrorKind::parse_error, "link code needs '/' between components");
    }
    if (body.find('/', slash + 1) != std::string_view::npos) {
      throw Error(ErrorKind::parse_error, "link code has more than one '/'");
    }
    parts.push_back(tokenize(body.substr(0, slash)));
    parts.push_back(tokenize(body.substr(slash + 1)));
  } else {
    if (slash != std::string_view::npos) {
      throw Error(ErrorKind::parse_error, "'/' is only allowed in link codes");
    }
    parts.push_back(tokenize(body));
  }
  return build<D>(parts);
}

}  // namespace detail

/// Parses any Gauss code. Chords are numbered by first appearance in the text.
inline AnyDiagram parse(std::string_view text) {
  text = detail::trim(text);
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorKind::parse_error, "missing ':' after kind");
  std::string_view kind = detail::trim(text.substr(0, colon));
  std::string_view body = text.substr(colon + 1);
  if (kind == "knot") return detail::parse_body<KnotDiagram>(body);
  if (kind == "long") return detail::parse_body<LongDiagram>(body);
  if (kind == "flatlong") return detail::parse_body<FlatLongDiagram>(body);
  if (kind == "link") return detail::parse_body<LinkDiagram>(body);
  throw Error(ErrorKind::parse_error, "unknown kind '" + std::string(kind) + "'");
}

/// Parses a code that must be of kind D.
template <Diagram D>
D parse_as(std::string_view text) {
  AnyDiagram any = parse(text);
  if (auto* d = std::get_if<D>(&any)) return std::move(*d);
  throw Error(ErrorKind::kind_mismatch, "expected a " + std::string(KindTraits<D::kind>::name) + " code");
}

namespace detail {
template <Diagram D>
std::string write_tokens(const D& d) {
  std::string out(KindTraits<D::kind>::name);
  out += ":";
  for (std::size_t s = 0; s < D::strand_count; ++s) {
    if (s > 0) out += " /";
    for (const Endpoint& e : d.strand(s)) {
      out += ' ';
      out += e.role == Role::tail ? 'O' : 'U';
      out += std::to_string(e.chord + 1);
      out += d.sign(e.chord) > 0 ? '+' : '-';
    }
  }
  return out;
}
}  // namespace detail

/// Canonical code string; parse(serialize(d)) == d.
template <Diagram D>
std::string serialize(const D& d) {
  return detail::write_tokens(canonical_form(d));
}

inline std::string serialize(const AnyDiagram& d) {
  return std::visit([](const auto& x) { return serialize(x); }, d);
}

/// Code string of the diagram exactly as stored (base point and numbering kept).
template <Diagram D>
std::string serialize_raw(const D& d) {
  return detail::write_tokens(d);
}

// ---------------------------------------------------------------------------
// Structural transforms

/// Orientation reversal of every strand; chord directions and signs are kept.
template <Diagram D>
D inverse(const D& d) {
  auto strands = d.strands();
  for (auto& s : strands) std::reverse(s.begin(), s.end());
  return D(std::move(strands), d.signs());
}

/// Switches every classical crossing: roles swap and signs negate.
template <Diagram D>
  requires(D::kind != DiagramKind::flat_long)
D mirror(const D& d) {
  auto strands = d.strands();
  for (auto& s : strands)
    for (auto& e : s) e.role = opposite(e.role);
  auto signs = d.signs();
  for (int& w : signs) w = -w;
  return D(std::move(strands), std::move(signs));
}

/// Number of segments of a strand: closed strands have one per endpoint (at
/// least one), line strands one more than their endpoint count.
template <Diagram D>
std::size_t segment_count(const D& d, std::size_t strand) {
  const std::size_t m = d.strand(strand).size();
  if constexpr (D::closed) {
    return std::max<std::size_t>(1, m);
  } else {
    return m + 1;
  }
}

/// Splices k2, opened at its segment cut2, into k1 at segment cut1. Segment i
/// of a knot is the one immediately following endpoint position i.
inline KnotDiagram connected_sum(const KnotDiagram& k1, std::size_t cut1, const KnotDiagram& k2,
                                 std::size_t cut2) {
  if (cut1 >= segment_count(k1, 0) || cut2 >= segment_count(k2, 0)) {
    throw Error(ErrorKind::index_out_of_range, "cut segment out of range");
  }
  const std::size_t n1 = k1.chord_count();
  const Strand& a = k1.strand(0);
  Strand b = k2.strand(0).empty() ? Strand{} : detail::rotated(k2.strand(0), (cut2 + 1) % k2.strand(0).size());
  for (auto& e : b) e.chord += n1;
  Strand out;
  const std::size_t split = a.empty() ? 0 : cut1 + 1;
  out.insert(out.end(), a.begin(), a.begin() + static_cast<std::ptrdiff_t>(split));
  out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(split), a.end());
  std::vector<int> signs = k1.signs();
  signs.insert(signs.end(), k2.signs().begin(), k2.signs().end());
  return KnotDiagram({std::move(out)}, std::move(signs));
}

/// Glues the right end of the first line diagram to the left end of the second.
template <LineDiagram D>
D concat(const D& d1, const D& d2) {
  Strand out = d1.strand(0);
  for (Endpoint e : d2.strand(0)) {
    e.chord += d1.chord_count();
    out.push_back(e);
  }
  std::vector<int> signs = d1.signs();
  signs.insert(signs.end(), d2.signs().begin(), d2.signs().end());
  return D({std::move(out)}, std::move(signs));
}

inline KnotDiagram closure(const LongDiagram& d) { return KnotDiagram(d.strands(), d.signs()); }

inline FlatLongDiagram forget(const LongDiagram& d) { return FlatLongDiagram(d.strands(), d.signs()); }

/// Resolution passing over every crossing before passing under it.
inline LongDiagram descending(const FlatLongDiagram& d) {
  FlatLongDiagram n = flip_normalized(d);
  return LongDiagram(n.strands(), n.signs());
}

enum class Resolution { as_represented, flipped };
using ResolutionChoice = std::map<ChordId, Resolution>;

/// The choice whose bit c (0-based chord index) selects `flipped`.
inline ResolutionChoice resolution_from_mask(std::size_t chords, std::uint64_t mask) {
  ResolutionChoice choice;
  for (std::size_t c = 0; c < chords; ++c) {
    choice[ChordId{static_cast<int>(c + 1)}] = (mask >> c) & 1U ? Resolution::flipped : Resolution::as_represented;
  }
  return choice;
}

/// Replaces the representative (tail, head, sign) of a flat chord by (head, tail, -sign).
template <Diagram D>
D flip_chord(const D& d, std::size_t c) {
  auto strands = d.strands();
  strands[d.tail(c).strand][d.tail(c).pos].role = Role::head;
  strands[d.head(c).strand][d.head(c).pos].role = Role::tail;
  auto signs = d.signs();
  signs.at(c) = -signs.at(c);
  return D(std::move(strands), std::move(signs));
}

inline LongDiagram resolve(const FlatLongDiagram& d, const ResolutionChoice& choice) {
  for (const auto& [id, r] : choice) {
    if (id.value < 1 || static_cast<std::size_t>(id.value) > d.chord_count()) {
      throw Error(ErrorKind::invalid_choice, "unknown chord id " + std::to_string(id.value));
    }
  }
  FlatLongDiagram out = d;
  for (std::size_t c = 0; c < d.chord_count(); ++c) {
    auto it = choice.find(ChordId{static_cast<int>(c + 1)});
    if (it == choice.end()) {
      throw Error(ErrorKind::invalid_choice, "no resolution given for chord " + std::to_string(c + 1));
    }
    if (it->second == Resolution::flipped) out = flip_chord(out, c);
  }
  return LongDiagram(out.strands(), out.signs());
}

namespace detail {
/// Whether position p lies strictly inside the arc running from `from` to `to`.
template <Diagram D>
bool in_open_arc(std::size_t from, std::size_t to, std::size_t p, std::size_t m) {
  if constexpr (D::closed) {
    const std::size_t dp = (p + m - from) % m;
    const std::size_t dt = (to + m - from) % m;
    return dp > 0 && dp < dt;
  } else {
    (void)m;
    return std::min(from, to) < p && p < std::max(from, to);
  }
}
}  // namespace detail

/// Whether two chords on the same strand interleave.
template <Diagram D>
bool linked(const D& d, ChordId id1, ChordId id2) {
  const std::size_t c1 = d.index_of(id1);
  const std::size_t c2 = d.index_of(id2);
  if (c1 == c2) throw Error(ErrorKind::invalid_argument, "a chord is not compared with itself");
  if (!d.is_self_chord(c1) || !d.is_self_chord(c2) || d.tail(c1).strand != d.tail(c2).strand) {
    throw Error(ErrorKind::invalid_argument, "linked() needs two chords on one strand");
  }
  const std::size_t m = d.strand(d.tail(c1).strand).size();
  const std::size_t from = d.tail(c1).pos;
  const std::size_t to = d.head(c1).pos;
  const bool t_in = detail::in_open_arc<D>(from, to, d.tail(c2).pos, m);
  const bool h_in = detail::in_open_arc<D>(from, to, d.head(c2).pos, m);
  return t_in != h_in;
}

}  // namespace gaussinv
