#pragma once

#include <sl2branch/rational.hpp>

#include <map>

namespace sl2branch {

// A truncated formal sum of Dirac deltas on the line spanned by phi.
// Coefficients sit on the half-integer grid: entry s (0 <= s <= cap)
// carries the coefficient at exponent offset + s/2. The window [0, cap] is
// the range on which the coefficients are exact; convolutions and sums
// propagate it conservatively, so truncation error can never go unnoticed.
class DiracSeries {
 public:
  static constexpr long long kUnboundedCap = 1LL << 60;

  DiracSeries() = default;
  // A single delta at `offset`, exact everywhere.
  static DiracSeries delta(const Rational& offset);
  // The zero series based at `offset`, exact everywhere.
  static DiracSeries zero(const Rational& offset);

  const Rational& offset() const { return offset_; }
  long long cap() const { return cap_; }
  bool unbounded() const { return cap_ == kUnboundedCap; }
  const std::map<long long, Rational>& coefficients() const { return coeff_; }

  // Coefficient at half-step s from the offset. Querying beyond the exact
  // window is a usage error.
  Rational coeff_at_step(long long s) const;
  // Coefficient at an absolute exponent; zero off the grid or below the
  // offset, usage error beyond the window.
  Rational coeff_at(const Rational& exponent) const;
  // Largest exponent with an exactly known coefficient.
  Rational window_end() const;

  DiracSeries convolve(const DiracSeries& other) const;
  // Sum; offsets must differ by a half-integer so the grids align.
  DiracSeries add(const DiracSeries& other) const;
  DiracSeries scaled(const Rational& factor) const;
  DiracSeries shifted(const Rational& amount) const;
  DiracSeries truncated(long long new_cap) const;

  void set_coefficient(long long step, const Rational& value);

 private:
  Rational offset_;
  std::map<long long, Rational> coeff_;
  long long cap_ = kUnboundedCap;
};

// z_{r phi}^{*s}: coefficient C(t+s-1, s-1) at exponent t*r*phi for s >= 1;
// the empty convolution (s = 0) is the delta at zero.
DiracSeries z_series(long r, long s, long long cap);

// y_nu = delta_{nu/2} * z_nu, for nu a positive half-integer multiple of phi.
DiracSeries y_series(const Rational& nu, long long cap);

}  // namespace sl2branch
