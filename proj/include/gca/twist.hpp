#pragma once

#include <complex>
#include <map>
#include <vector>

#include "gca/groupoid.hpp"
#include "gca/turn.hpp"

namespace gca {

using Complex = std::complex<double>;

/// Normalized T-valued 2-cocycle on composable pairs, the twist data.
/// Angles are exact turn fractions; absent entries read as angle zero, so the
/// trivial twist is the empty cocycle. Values become complex numbers only
/// when matrices are assembled.
class Cocycle {
public:
  explicit Cocycle(GroupoidPtr g) : g_(std::move(g)) {}

  static Cocycle trivial(GroupoidPtr g) { return Cocycle(std::move(g)); }

  const GroupoidPtr& groupoid() const { return g_; }

  /// Throws if (a, b) is not composable.
  void set_angle(Arrow a, Arrow b, TurnFraction angle);

  TurnFraction angle(Arrow a, Arrow b) const;
  Complex value(Arrow a, Arrow b) const { return angle(a, b).unit(); }

  const std::map<std::pair<Arrow, Arrow>, TurnFraction>& angles() const { return angles_; }

  /// Normalization at identities plus the cocycle identity on every
  /// composable triple, decided exactly in rational-angle arithmetic.
  ValidationReport validate() const;

private:
  GroupoidPtr g_;
  std::map<std::pair<Arrow, Arrow>, TurnFraction> angles_;
};

/// Element of the twisted convolution algebra: a complex function on arrows.
/// Values are stored densely by arrow index; unkeyed arrows are exactly zero.
class Section {
public:
  explicit Section(GroupoidPtr g)
      : g_(std::move(g)), values_(g_->arrow_count(), Complex{0.0, 0.0}) {}

  static Section delta(GroupoidPtr g, Arrow a, Complex coeff = {1.0, 0.0}) {
    Section s(std::move(g));
    s.values_[a] = coeff;
    return s;
  }

  const GroupoidPtr& groupoid() const { return g_; }

  Complex operator[](Arrow a) const { return values_[a]; }
  void set(Arrow a, Complex v) { values_[a] = v; }

  Section& operator+=(const Section& o);
  Section& operator-=(const Section& o);
  Section& operator*=(Complex scalar);
  friend Section operator+(Section a, const Section& b) { return a += b; }
  friend Section operator-(Section a, const Section& b) { return a -= b; }
  friend Section operator*(Complex scalar, Section s) { return s *= scalar; }

  /// Arrows with |value| > tol; tol = 0 means exact nonzero (the default --
  /// support is a set-level notion, thresholds are the caller's decision).
  std::vector<Arrow> support(double tol = 0.0) const;

  double max_abs() const;
  bool is_zero() const { return max_abs() == 0.0; }

private:
  GroupoidPtr g_;
  std::vector<Complex> values_;
};

/// Largest |f(a) - g(a)| over all arrows; both on the same groupoid.
double max_abs_diff(const Section& f, const Section& g);

/// Twisted convolution (f * g)(c) = sum over ab = c of sigma(a, b) f(a) g(b).
Section convolve(const Section& f, const Section& g, const Cocycle& sigma);

/// Twisted adjoint f^*(c) = conj(sigma(c, c^{-1})) conj(f(c^{-1})). With the
/// trivial twist this is plain conjugate-inverse. The phase is the unique
/// normalized choice compatible with the twisted convolution, and the
/// *-algebra axioms are enforced by the property tests.
Section adjoint(const Section& f, const Cocycle& sigma);

void require_same_groupoid(const GroupoidPtr& a, const GroupoidPtr& b, const char* op);

}  // namespace gca
