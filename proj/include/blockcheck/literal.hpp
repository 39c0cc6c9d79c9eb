#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>

namespace blockcheck {

/// Boolean variable, identified by a positive index.
class Var {
 public:
  constexpr Var() = default;
  constexpr explicit Var(std::uint32_t id) : id_(id) {}

  constexpr std::uint32_t id() const { return id_; }

  friend constexpr auto operator<=>(Var, Var) = default;

 private:
  std::uint32_t id_ = 0;
};

/// A variable together with a polarity.
///
/// Literals are packed as `2 * var + positive`, so the natural ordering of
/// codes is the canonical literal order: by variable id, with the negative
/// literal before the positive one.
class Lit {
 public:
  constexpr Lit() = default;
  constexpr Lit(Var v, bool positive)
      : code_(2 * v.id() + (positive ? 1u : 0u)) {}

  static constexpr Lit pos(Var v) { return Lit(v, true); }
  static constexpr Lit neg(Var v) { return Lit(v, false); }

  /// Converts a non-zero DIMACS integer.
  static Lit from_dimacs(int value) {
    return Lit(Var(static_cast<std::uint32_t>(std::abs(value))), value > 0);
  }
  static constexpr Lit from_code(std::uint32_t code) {
    Lit l;
    l.code_ = code;
    return l;
  }

  constexpr Var var() const { return Var(code_ >> 1); }
  constexpr bool positive() const { return (code_ & 1u) != 0; }
  constexpr bool negative() const { return !positive(); }
  constexpr std::uint32_t code() const { return code_; }

  int to_dimacs() const {
    const int v = static_cast<int>(var().id());
    return positive() ? v : -v;
  }

  /// Complement.
  constexpr Lit operator~() const { return from_code(code_ ^ 1u); }

  friend constexpr auto operator<=>(Lit, Lit) = default;

 private:
  std::uint32_t code_ = 0;
};

}  // namespace blockcheck

template <>
struct std::hash<blockcheck::Var> {
  std::size_t operator()(blockcheck::Var v) const noexcept { return v.id(); }
};

template <>
struct std::hash<blockcheck::Lit> {
  std::size_t operator()(blockcheck::Lit l) const noexcept { return l.code(); }
};
