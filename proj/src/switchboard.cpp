#include "djsim/switchboard.hpp"

#include <bit>
#include <cctype>

#include "djsim/errors.hpp"

namespace djsim::switchboard {

char letter(Wiring w) noexcept {
  return static_cast<char>('a' + static_cast<int>(w));
}

std::string_view to_string(SwitchPos p) noexcept {
  return p == SwitchPos::Up ? "Up" : "Down";
}

std::string_view to_string(Parity p) noexcept {
  return p == Parity::Even ? "Even" : "Odd";
}

Wiring parse_wiring(char c) {
  const int lower = std::tolower(static_cast<unsigned char>(c));
  if (lower < 'a' || lower > 'd') {
    throw ParseError(std::string("wiring: invalid letter '") + c +
                     "' (expected one of a, b, c, d)");
  }
  return static_cast<Wiring>(lower - 'a');
}

Wiring parse_wiring(std::string_view text) {
  if (text.size() != 1) {
    throw ParseError("wiring: expected a single letter a-d, got \"" +
                     std::string(text) + "\"");
  }
  return parse_wiring(text.front());
}

std::size_t WiringSet::size() const noexcept {
  return static_cast<std::size_t>(std::popcount(bits_));
}

std::vector<Wiring> WiringSet::members() const {
  std::vector<Wiring> out;
  for (Wiring w : kAllWirings) {
    if (contains(w)) out.push_back(w);
  }
  return out;
}

std::string WiringSet::to_string() const {
  std::string s;
  for (Wiring w : members()) {
    if (!s.empty()) s.push_back(' ');
    s.push_back(letter(w));
  }
  return s;
}

CableRun::CableRun(std::vector<Wiring> cables) : cables_(std::move(cables)) {
  if (cables_.empty()) throw ParseError("cable run: at least one cable required");
}

CableRun CableRun::parse(std::string_view text) {
  std::vector<Wiring> cables;
  cables.reserve(text.size());
  for (char c : text) cables.push_back(parse_wiring(c));
  return CableRun(std::move(cables));
}

std::vector<std::uint8_t> CableRun::terminal_bits() const {
  std::vector<std::uint8_t> bits;
  bits.reserve(wire_count());
  for (Wiring w : cables_) {
    bits.push_back(static_cast<std::uint8_t>(terminal(w, 0)));
    bits.push_back(static_cast<std::uint8_t>(terminal(w, 1)));
  }
  return bits;
}

bool light_on(Wiring w, SwitchPos left, SwitchPos right) noexcept {
  return encode(right) == terminal(w, encode(left));
}

WiringSet consistent_wirings(const Observation& obs) noexcept {
  WiringSet s;
  for (Wiring w : kAllWirings) {
    if (light_on(w, obs.left, obs.right) == obs.light) s.insert(w);
  }
  return s;
}

bool is_balanced(Wiring w) noexcept { return terminal(w, 0) != terminal(w, 1); }

unsigned lower_terminal_count(Wiring w) noexcept {
  return terminal(w, 0) + terminal(w, 1);
}

InspectionResult alice_inspect(Wiring w) noexcept {
  SwitchPos sw = SwitchPos::Up;
  for (unsigned x = 0; x < 2; ++x) {
    if (terminal(w, x) == 1U) sw = flipped(sw);
  }
  return {sw, sw == SwitchPos::Down ? Classification::Balanced
                                    : Classification::Constant};
}

bool single_observation_insufficient() noexcept {
  for (SwitchPos left : kAllPositions) {
    for (SwitchPos right : kAllPositions) {
      for (bool light : {true, false}) {
        const WiringSet s = consistent_wirings({left, right, light});
        if (s.empty()) continue;
        bool has_balanced = false;
        bool has_constant = false;
        for (Wiring w : s.members()) {
          (is_balanced(w) ? has_balanced : has_constant) = true;
        }
        if (!has_balanced || !has_constant) return false;
      }
    }
  }
  return true;
}

Wiring relabel_right(Wiring w) noexcept {
  switch (w) {
    case Wiring::A:
      return Wiring::B;
    case Wiring::B:
      return Wiring::A;
    case Wiring::C:
      return Wiring::D;
    case Wiring::D:
      return Wiring::C;
  }
  return w;
}

unsigned flip_count(Wiring w) noexcept {
  return (terminal(w, 0) != 0U ? 1U : 0U) + (terminal(w, 1) != 1U ? 1U : 0U);
}

deutsch::FunctionTable to_table(Wiring w) {
  return {1, {static_cast<std::uint8_t>(terminal(w, 0)),
              static_cast<std::uint8_t>(terminal(w, 1))}};
}

Parity bit_parity(std::span<const std::uint8_t> bits) noexcept {
  unsigned acc = 0;
  for (std::uint8_t b : bits) acc ^= (b & 1U);
  return acc ? Parity::Odd : Parity::Even;
}

Parity table_parity(const deutsch::FunctionTable& f) noexcept {
  return bit_parity(f.values());
}

NwireResult nwire_inspect(const CableRun& run) {
  NwireResult r{{}, 0, SwitchPos::Up, Parity::Even};
  r.per_cable.reserve(run.cables().size());
  for (Wiring w : run.cables()) {
    const unsigned lower = lower_terminal_count(w);
    r.per_cable.push_back(lower);
    r.total += lower;
    for (unsigned i = 0; i < lower; ++i) r.final = flipped(r.final);
  }
  r.parity = (r.total % 2U) ? Parity::Odd : Parity::Even;
  return r;
}

}  // namespace djsim::switchboard
