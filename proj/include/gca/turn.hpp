#pragma once

#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gca {

/// Angle on the unit circle stored as an exact fraction of a full turn.
/// Always kept reduced with the representative in [0, 1), so equality and
/// the cocycle identity can be decided exactly.
class TurnFraction {
public:
  TurnFraction() = default;

  TurnFraction(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("turn fraction with zero denominator");
    normalize();
  }

  // Accepts "p/q" or a bare integer "p" (whole turns, i.e. angle zero).
  static TurnFraction parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return TurnFraction(std::stoll(text), 1);
      return TurnFraction(std::stoll(text.substr(0, slash)),
                          std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse turn fraction '" + text + "'");
    }
  }

  TurnFraction operator+(const TurnFraction& o) const {
    const long long g = std::gcd(den_, o.den_);
    const long long d = den_ / g * o.den_;
    return TurnFraction(num_ * (o.den_ / g) + o.num_ * (den_ / g), d);
  }

  TurnFraction operator-() const { return TurnFraction(-num_, den_); }

  TurnFraction operator-(const TurnFraction& o) const { return *this + (-o); }

  bool operator==(const TurnFraction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const TurnFraction& o) const { return !(*this == o); }
  bool operator<(const TurnFraction& o) const {
    return num_ * o.den_ < o.num_ * den_;
  }

  bool is_zero() const { return num_ == 0; }

  /// e^{2 pi i num/den}. Quarter-turn multiples come out bit-exact so that
  /// half-turn twists stay inside exact complex arithmetic.
  std::complex<double> unit() const {
    if (den_ == 1) return {1.0, 0.0};
    if (den_ == 2) return {-1.0, 0.0};  // num_ == 1 after reduction
    if (den_ == 4) return num_ == 1 ? std::complex<double>{0.0, 1.0}
                                    : std::complex<double>{0.0, -1.0};
    const double theta = 2.0 * 3.14159265358979323846 *
                         static_cast<double>(num_) / static_cast<double>(den_);
    return {std::cos(theta), std::sin(theta)};
  }

  std::complex<double> conj_unit() const { return std::conj(unit()); }

  std::string str() const {
    if (num_ == 0) return "0";
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

private:
  void normalize() {
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
    num_ %= den_;
    if (num_ < 0) num_ += den_;
    const long long g2 = std::gcd(num_, den_);
    if (g2 > 1) { num_ /= g2; den_ /= g2; }
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace gca
