#pragma once

namespace cwave {

enum class Helicity : int { Plus = 1, Minus = -1 };

/// +1 or -1; used as the upper/lower choice in the +/- formulas.
constexpr double sign(Helicity h) { return h == Helicity::Plus ? 1.0 : -1.0; }

constexpr Helicity opposite(Helicity h) {
  return h == Helicity::Plus ? Helicity::Minus : Helicity::Plus;
}

}  // namespace cwave
