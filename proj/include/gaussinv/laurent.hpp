#pragma once

// Sparse integer Laurent polynomials in one variable t, optionally reduced
// modulo t^m - 1 (exponents taken as residues in {0, ..., m-1}).

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gaussinv/error.hpp"

namespace gaussinv {

using Integer = boost::multiprecision::cpp_int;
using Exponent = std::int64_t;

class LaurentPoly {
 public:
  using Terms = std::map<Exponent, Integer>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::int64_t modulus) : modulus_(checked_modulus(modulus)) {}

  /// c * t^e in the ring with the given modulus.
  static LaurentPoly monomial(Integer c, Exponent e, std::int64_t modulus = 0) {
    LaurentPoly p(modulus);
    p.add_term(e, std::move(c));
    return p;
  }
  static LaurentPoly constant(Integer c, std::int64_t modulus = 0) {
    return monomial(std::move(c), 0, modulus);
  }
  static LaurentPoly from_terms(std::initializer_list<std::pair<Exponent, long long>> terms,
                                std::int64_t modulus = 0) {
    LaurentPoly p(modulus);
    for (auto [e, c] : terms) p.add_term(e, Integer(c));
    return p;
  }

  std::int64_t modulus() const noexcept { return modulus_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Integer coefficient(Exponent e) const {
    auto it = terms_.find(normalize(e));
    return it == terms_.end() ? Integer(0) : it->second;
  }
  Exponent min_exponent() const {
    if (terms_.empty()) throw Error(ErrorKind::internal, "min_exponent of zero polynomial");
    return terms_.begin()->first;
  }
  Exponent max_exponent() const {
    if (terms_.empty()) throw Error(ErrorKind::internal, "max_exponent of zero polynomial");
    return terms_.rbegin()->first;
  }

  /// Adds c * t^e in place, keeping the term map canonical.
  void add_term(Exponent e, const Integer& c) {
    if (c == 0) return;
    e = normalize(e);
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Exponent normalize(Exponent e) const noexcept {
    if (modulus_ == 0) return e;
    Exponent r = e % modulus_;
    return r < 0 ? r + modulus_ : r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.modulus_ == b.modulus_ && a.terms_ == b.terms_;
  }

 private:
  static std::int64_t checked_modulus(std::int64_t m) {
    if (m < 0) throw Error(ErrorKind::invalid_argument, "negative modulus");
    return m;
  }

  std::int64_t modulus_ = 0;
  Terms terms_;
};

namespace detail {
inline void require_same_modulus(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.modulus() != q.modulus()) {
    throw Error(ErrorKind::modulus_mismatch, "moduli " + std::to_string(p.modulus()) + " and " +
                                                 std::to_string(q.modulus()) + " differ");
  }
}
}  // namespace detail

inline LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q) {
  detail::require_same_modulus(p, q);
  LaurentPoly r = p;
  for (const auto& [e, c] : q.terms()) r.add_term(e, c);
  return r;
}

inline LaurentPoly poly_negate(const LaurentPoly& p) {
  LaurentPoly r(p.modulus());
  for (const auto& [e, c] : p.terms()) r.add_term(e, -c);
  return r;
}

inline LaurentPoly poly_sub(const LaurentPoly& p, const LaurentPoly& q) {
  return poly_add(p, poly_negate(q));
}

inline LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q) {
  detail::require_same_modulus(p, q);
  LaurentPoly r(p.modulus());
  for (const auto& [e1, c1] : p.terms())
    for (const auto& [e2, c2] : q.terms()) r.add_term(e1 + e2, c1 * c2);
  return r;
}

inline LaurentPoly poly_scale(const LaurentPoly& p, const Integer& k) {
  LaurentPoly r(p.modulus());
  for (const auto& [e, c] : p.terms()) r.add_term(e, c * k);
  return r;
}

/// t -> t^-1
inline LaurentPoly poly_invert_variable(const LaurentPoly& p) {
  LaurentPoly r(p.modulus());
  for (const auto& [e, c] : p.terms()) r.add_term(-e, c);
  return r;
}

/// Multiplication by t^k.
inline LaurentPoly poly_shift(const LaurentPoly& p, Exponent k) {
  LaurentPoly r(p.modulus());
  for (const auto& [e, c] : p.terms()) r.add_term(e + k, c);
  return r;
}

inline Integer poly_eval_at_one(const LaurentPoly& p) {
  Integer s = 0;
  for (const auto& [e, c] : p.terms()) s += c;
  return s;
}

/// Evaluation at t = -1; only meaningful for modulus 0 or even moduli.
inline Integer poly_eval_at_minus_one(const LaurentPoly& p) {
  if (p.modulus() % 2 == 1) {
    throw Error(ErrorKind::invalid_argument, "t = -1 is not a root of t^m - 1 for odd m");
  }
  Integer s = 0;
  for (const auto& [e, c] : p.terms()) s += (e % 2 == 0) ? c : Integer(-c);
  return s;
}

inline Integer poly_coeff_abs_sum(const LaurentPoly& p) {
  Integer s = 0;
  for (const auto& [e, c] : p.terms()) s += abs(c);
  return s;
}

/// Folds exponents of a modulus-0 polynomial into Z[t]/(t^m - 1).
inline LaurentPoly reduce(const LaurentPoly& p, std::int64_t m) {
  if (p.modulus() != 0 && (m == 0 || p.modulus() % m != 0)) {
    throw Error(ErrorKind::modulus_mismatch, "cannot reduce modulus " + std::to_string(p.modulus()) +
                                                 " to " + std::to_string(m));
  }
  LaurentPoly r(m);
  for (const auto& [e, c] : p.terms()) r.add_term(e, c);
  return r;
}

/// Some k with q = p * t^k, if one exists. For cyclic rings k is the least residue.
inline std::optional<Exponent> poly_shift_equivalent(const LaurentPoly& p, const LaurentPoly& q) {
  detail::require_same_modulus(p, q);
  if (p.is_zero() || q.is_zero()) {
    if (p.is_zero() && q.is_zero()) return Exponent{0};
    return std::nullopt;
  }
  if (p.terms().size() != q.terms().size()) return std::nullopt;
  if (p.modulus() == 0) {
    Exponent k = q.min_exponent() - p.min_exponent();
    if (poly_shift(p, k) == q) return k;
    return std::nullopt;
  }
  for (Exponent k = 0; k < p.modulus(); ++k)
    if (poly_shift(p, k) == q) return k;
  return std::nullopt;
}

inline LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) { return poly_add(p, q); }
inline LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) { return poly_sub(p, q); }
inline LaurentPoly operator-(const LaurentPoly& p) { return poly_negate(p); }
inline LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) { return poly_mul(p, q); }

/// Human-readable form, highest exponent first: "t^2 + 1", "t + t^-1 - 2".
inline std::string to_string(const LaurentPoly& p) {
  std::ostringstream os;
  if (p.is_zero()) {
    os << "0";
  } else {
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
      const auto& [e, c] = *it;
      Integer mag = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (e == 0) {
        os << mag;
        continue;
      }
      if (mag != 1) os << mag;
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  if (p.modulus() != 0) os << " (mod t^" << p.modulus() << " - 1)";
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }

}  // namespace gaussinv
