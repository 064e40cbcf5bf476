#include <sl2branch/dirac.hpp>

#include <sl2branch/errors.hpp>

#include <algorithm>

namespace sl2branch {

DiracSeries DiracSeries::delta(const Rational& offset) {
  DiracSeries s;
  s.offset_ = offset;
  s.coeff_[0] = 1;
  return s;
}

DiracSeries DiracSeries::zero(const Rational& offset) {
  DiracSeries s;
  s.offset_ = offset;
  return s;
}

Rational DiracSeries::coeff_at_step(long long s) const {
  if (s < 0) return 0;
  if (s > cap_) {
    throw usage_error("coefficient query at step " + std::to_string(s) +
                      " beyond the exact window [0, " + std::to_string(cap_) + "]");
  }
  auto it = coeff_.find(s);
  return it == coeff_.end() ? Rational(0) : it->second;
}

Rational DiracSeries::coeff_at(const Rational& exponent) const {
  Rational rel = (exponent - offset_) * 2;
  if (!is_integer(rel)) return 0;
  Int step = to_int(rel);
  if (step < 0) return 0;
  return coeff_at_step(step.convert_to<long long>());
}

Rational DiracSeries::window_end() const {
  if (unbounded()) {
    throw usage_error("window_end on an unbounded series");
  }
  return offset_ + Rational(cap_, 2);
}

DiracSeries DiracSeries::convolve(const DiracSeries& other) const {
  DiracSeries out;
  out.offset_ = offset_ + other.offset_;
  out.cap_ = std::min(cap_, other.cap_);
  for (const auto& [sa, ca] : coeff_) {
    if (sa > out.cap_) break;
    for (const auto& [sb, cb] : other.coeff_) {
      long long s = sa + sb;
      if (s > out.cap_) break;
      Rational& slot = out.coeff_[s];
      slot += ca * cb;
      if (slot == 0) out.coeff_.erase(s);
    }
  }
  return out;
}

DiracSeries DiracSeries::add(const DiracSeries& other) const {
  Rational base = std::min(offset_, other.offset_);
  auto shift_of = [&](const DiracSeries& s) {
    Rational rel = (s.offset_ - base) * 2;
    if (!is_integer(rel)) {
      throw usage_error("cannot add series: offsets differ by a non-half-integer");
    }
    return to_int(rel).convert_to<long long>();
  };
  const long long shift_a = shift_of(*this), shift_b = shift_of(other);

  DiracSeries out;
  out.offset_ = base;
  if (unbounded() && other.unbounded()) {
    out.cap_ = kUnboundedCap;
  } else {
    long long end_a = unbounded() ? kUnboundedCap : cap_ + shift_a;
    long long end_b = other.unbounded() ? kUnboundedCap : other.cap_ + shift_b;
    out.cap_ = std::min(end_a, end_b);
  }
  for (const auto& [s, c] : coeff_) {
    if (s + shift_a > out.cap_) break;
    out.coeff_[s + shift_a] += c;
  }
  for (const auto& [s, c] : other.coeff_) {
    if (s + shift_b > out.cap_) break;
    out.coeff_[s + shift_b] += c;
  }
  std::erase_if(out.coeff_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

DiracSeries DiracSeries::scaled(const Rational& factor) const {
  DiracSeries out;
  out.offset_ = offset_;
  out.cap_ = cap_;
  if (factor == 0) return out;
  for (const auto& [s, c] : coeff_) out.coeff_[s] = c * factor;
  return out;
}

DiracSeries DiracSeries::shifted(const Rational& amount) const {
  DiracSeries out = *this;
  out.offset_ += amount;
  return out;
}

DiracSeries DiracSeries::truncated(long long new_cap) const {
  if (new_cap > cap_) {
    throw usage_error("cannot extend the exact window by truncation");
  }
  if (new_cap < 0) throw usage_error("negative truncation cap");
  DiracSeries out;
  out.offset_ = offset_;
  out.cap_ = new_cap;
  for (const auto& [s, c] : coeff_) {
    if (s > new_cap) break;
    out.coeff_[s] = c;
  }
  return out;
}

void DiracSeries::set_coefficient(long long step, const Rational& value) {
  if (step < 0) throw usage_error("negative step");
  if (step > cap_) {
    throw usage_error("coefficient at step " + std::to_string(step) +
                      " lies beyond the exact window");
  }
  if (value == 0) {
    coeff_.erase(step);
  } else {
    coeff_[step] = value;
  }
}

DiracSeries z_series(long r, long s, long long cap) {
  if (r <= 0) throw usage_error("z_series: r must be positive");
  if (s < 0) throw usage_error("z_series: s must be nonnegative");
  if (cap < 0) throw usage_error("z_series: cap must be nonnegative");
  DiracSeries out = DiracSeries::delta(0).truncated(cap);
  if (s == 0) return out;
  for (long long t = 1; 2 * r * t <= cap; ++t) {
    out.set_coefficient(2 * r * t, Rational(binomial(long(t) + s - 1, s - 1)));
  }
  return out;
}

DiracSeries y_series(const Rational& nu, long long cap) {
  if (nu == 0) throw usage_error("y_series: nu must be nonzero");
  if (nu < 0) throw usage_error("y_series: only ascending series are supported (nu > 0)");
  if (cap < 0) throw usage_error("y_series: cap must be nonnegative");
  Rational two_nu = nu * 2;
  if (!is_integer(two_nu)) {
    throw usage_error("y_series: nu must be a half-integer multiple of phi");
  }
  // Entries at nu/2 + t*nu: half-steps t*(2 nu) from the offset nu/2.
  const long long step = to_int(two_nu).convert_to<long long>();
  DiracSeries out = DiracSeries::delta(nu / 2).truncated(cap);
  for (long long t = 1; t * step <= cap; ++t) {
    out.set_coefficient(t * step, 1);
  }
  return out;
}

}  // namespace sl2branch
