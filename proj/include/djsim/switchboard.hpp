#pragma once

// Classical analogue of the one-bit problem: a lamp controlled by two
// two-way switches. Each wiring connects the left switch's two positions to
// the right switch's terminals, which defines a terminal map
//
//   A: x -> x      B: x -> 1 - x      C: x -> 0      D: x -> 1
//
// and the lamp is lit when the right switch selects terminal f(left).
// Up encodes 0 and Down encodes 1.

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "djsim/deutsch.hpp"

namespace djsim::switchboard {

using deutsch::Classification;

enum class Wiring : std::uint8_t { A, B, C, D };
enum class SwitchPos : std::uint8_t { Up, Down };
enum class Parity : std::uint8_t { Even, Odd };

inline constexpr std::array<Wiring, 4> kAllWirings = {Wiring::A, Wiring::B,
                                                      Wiring::C, Wiring::D};
inline constexpr std::array<SwitchPos, 2> kAllPositions = {SwitchPos::Up,
                                                           SwitchPos::Down};

constexpr unsigned encode(SwitchPos p) noexcept {
  return p == SwitchPos::Down ? 1U : 0U;
}
constexpr SwitchPos decode(unsigned bit) noexcept {
  return bit ? SwitchPos::Down : SwitchPos::Up;
}
constexpr SwitchPos flipped(SwitchPos p) noexcept {
  return p == SwitchPos::Up ? SwitchPos::Down : SwitchPos::Up;
}

/// Terminal on the right switch reached from left position x.
constexpr unsigned terminal(Wiring w, unsigned x) noexcept {
  switch (w) {
    case Wiring::A:
      return x & 1U;
    case Wiring::B:
      return 1U - (x & 1U);
    case Wiring::C:
      return 0U;
    case Wiring::D:
      return 1U;
  }
  return 0U;
}

char letter(Wiring w) noexcept;
std::string_view to_string(SwitchPos p) noexcept;
std::string_view to_string(Parity p) noexcept;

/// Accepts a-d in either case; anything else throws ParseError.
Wiring parse_wiring(char c);
Wiring parse_wiring(std::string_view text);

struct Observation {
  SwitchPos left;
  SwitchPos right;
  bool light;

  friend bool operator==(const Observation&, const Observation&) = default;
};

/// Subset of {A, B, C, D}.
class WiringSet {
 public:
  constexpr WiringSet() = default;

  void insert(Wiring w) noexcept { bits_ |= mask(w); }
  bool contains(Wiring w) const noexcept { return (bits_ & mask(w)) != 0; }
  bool empty() const noexcept { return bits_ == 0; }
  std::size_t size() const noexcept;
  std::vector<Wiring> members() const;
  WiringSet intersect(WiringSet other) const noexcept {
    WiringSet s;
    s.bits_ = bits_ & other.bits_;
    return s;
  }
  WiringSet complement() const noexcept {
    WiringSet s;
    s.bits_ = static_cast<std::uint8_t>(~bits_ & 0x0F);
    return s;
  }
  /// Space-separated lowercase letters, e.g. "a c".
  std::string to_string() const;

  static WiringSet of(std::initializer_list<Wiring> ws) noexcept {
    WiringSet s;
    for (Wiring w : ws) s.insert(w);
    return s;
  }

  friend bool operator==(WiringSet, WiringSet) = default;

 private:
  static constexpr std::uint8_t mask(Wiring w) noexcept {
    return static_cast<std::uint8_t>(1U << static_cast<unsigned>(w));
  }
  std::uint8_t bits_ = 0;
};

/// The N-wire setup: one two-wire cable per entry.
class CableRun {
 public:
  explicit CableRun(std::vector<Wiring> cables);
  /// One letter per cable, case-insensitive over {a, b, c, d}.
  static CableRun parse(std::string_view text);

  std::span<const Wiring> cables() const noexcept { return cables_; }
  std::size_t wire_count() const noexcept { return 2 * cables_.size(); }

  /// Terminal bit of every wire end, cable by cable: f_w(0), f_w(1), ...
  std::vector<std::uint8_t> terminal_bits() const;

 private:
  std::vector<Wiring> cables_;
};

bool light_on(Wiring w, SwitchPos left, SwitchPos right) noexcept;

WiringSet consistent_wirings(const Observation& obs) noexcept;

bool is_balanced(Wiring w) noexcept;

/// Wires landing on the Down terminal: A 1, B 1, C 0, D 2.
unsigned lower_terminal_count(Wiring w) noexcept;

struct InspectionResult {
  SwitchPos final;
  Classification verdict;
};

/// The flip rule: start Up, flip on every connection to the lower terminal,
/// then read Down as Balanced and Up as Constant.
InspectionResult alice_inspect(Wiring w) noexcept;

/// True when no single (left, right, light) observation separates balanced
/// from constant wirings.
bool single_observation_insufficient() noexcept;

/// Swapping the Up/Down labels on the right switch: A <-> B, C <-> D.
Wiring relabel_right(Wiring w) noexcept;

/// Inputs x with f_w(x) != x: A 0, B 2, C 1, D 1.
unsigned flip_count(Wiring w) noexcept;

/// The one-bit FunctionTable (f_w(0), f_w(1)).
deutsch::FunctionTable to_table(Wiring w);

Parity bit_parity(std::span<const std::uint8_t> bits) noexcept;
Parity table_parity(const deutsch::FunctionTable& f) noexcept;

struct NwireResult {
  std::vector<unsigned> per_cable;
  unsigned total;
  SwitchPos final;
  Parity parity;
};

NwireResult nwire_inspect(const CableRun& run);

}  // namespace djsim::switchboard
