#ifndef SEGREREG_EXTENDED_INT_HPP
#define SEGREREG_EXTENDED_INT_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace segrereg {

/// Integer extended with -inf and +inf.  Ends of graded modules live here:
/// a zero module has end -inf, a module of positive dimension has end +inf.
/// Addition of a finite offset is only defined on finite values plus the
/// absorbing rules for the infinities.
class ExtendedInt {
public:
  constexpr ExtendedInt() : state_(State::Finite), value_(0) {}
  constexpr ExtendedInt(long long v) : state_(State::Finite), value_(v) {}

  static constexpr ExtendedInt neg_inf() { return ExtendedInt(State::NegInf); }
  static constexpr ExtendedInt pos_inf() { return ExtendedInt(State::PosInf); }

  constexpr bool is_finite() const { return state_ == State::Finite; }
  constexpr bool is_neg_inf() const { return state_ == State::NegInf; }
  constexpr bool is_pos_inf() const { return state_ == State::PosInf; }

  /// Finite value; throws on an infinity.
  constexpr long long value() const {
    if (!is_finite())
      throw std::domain_error("ExtendedInt: value() on an infinity");
    return value_;
  }

  friend constexpr bool operator==(const ExtendedInt& a, const ExtendedInt& b) {
    return a.state_ == b.state_ && (a.state_ != State::Finite || a.value_ == b.value_);
  }

  friend constexpr std::strong_ordering operator<=>(const ExtendedInt& a,
                                                    const ExtendedInt& b) {
    auto key = [](const ExtendedInt& x) -> int {
      return x.state_ == State::NegInf ? -1 : (x.state_ == State::PosInf ? 1 : 0);
    };
    if (key(a) != key(b)) return key(a) <=> key(b);
    if (a.state_ != State::Finite) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  /// Shift by a finite amount; infinities absorb.
  friend constexpr ExtendedInt operator+(const ExtendedInt& a, long long off) {
    if (!a.is_finite()) return a;
    return ExtendedInt(a.value_ + off);
  }

  std::string str() const {
    if (is_neg_inf()) return "-inf";
    if (is_pos_inf()) return "+inf";
    return std::to_string(value_);
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtendedInt& x) {
    return os << x.str();
  }

private:
  enum class State : std::uint8_t { NegInf, Finite, PosInf };
  constexpr explicit ExtendedInt(State s) : state_(s), value_(0) {}

  State state_;
  long long value_;
};

inline ExtendedInt max(const ExtendedInt& a, const ExtendedInt& b) { return a < b ? b : a; }
inline ExtendedInt min(const ExtendedInt& a, const ExtendedInt& b) { return b < a ? b : a; }

} // namespace segrereg

#endif
