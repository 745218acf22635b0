#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gca/twist.hpp"

namespace gca {

/// Real-valued function on arrows, total with default 0. Houses candidate
/// lengths, negative-type functions and real kernels.
class RealKernel {
public:
  explicit RealKernel(GroupoidPtr g)
      : g_(std::move(g)), values_(g_->arrow_count(), 0.0) {}

  const GroupoidPtr& groupoid() const { return g_; }
  double operator[](Arrow a) const { return values_[a]; }
  void set(Arrow a, double v) { values_[a] = v; }

private:
  GroupoidPtr g_;
  std::vector<double> values_;
};

class ComplexKernel {
public:
  explicit ComplexKernel(GroupoidPtr g)
      : g_(std::move(g)), values_(g_->arrow_count(), Complex{0.0, 0.0}) {}

  static ComplexKernel from_real(const RealKernel& k) {
    ComplexKernel c(k.groupoid());
    for (Arrow a = 0; a < k.groupoid()->arrow_count(); ++a) c.set(a, {k[a], 0.0});
    return c;
  }

  const GroupoidPtr& groupoid() const { return g_; }
  Complex operator[](Arrow a) const { return values_[a]; }
  void set(Arrow a, Complex v) { values_[a] = v; }

private:
  GroupoidPtr g_;
  std::vector<Complex> values_;
};

struct KernelWitness {
  std::string unit;                 // fiber unit id; empty for whole-domain checks
  std::vector<std::string> arrows;  // fiber arrows (or violating tuple)
  std::string method;               // which check produced it
};

struct KernelVerdict {
  bool passed = false;
  /// Extremal margin of the binding check: the minimal eigenvalue for the
  /// eigenchecks, the worst axiom slack for length checks. Pass iff
  /// min_eigenvalue >= threshold.
  double min_eigenvalue = 0.0;
  double threshold = 0.0;
  std::optional<KernelWitness> witness;
  std::string note;
  // check_cnd records both routes (they must agree on pass/fail).
  std::optional<double> projected_stat;  // min eig of -P M P over units
  std::optional<double> gram_stat;       // min eig of the Gram matrices
};

/// Scale-aware PSD slack: eigenvalues above -kPsdTol*(1 + max diagonal) count
/// as nonnegative.
inline constexpr double kPsdTol = 1e-8;
inline constexpr double kLengthTol = 1e-12;

/// Length axioms: zero on identities, symmetric, subadditive, nonnegative.
/// Exhaustive over arrows and composable pairs; witness is the first violation.
KernelVerdict check_length(const RealKernel& candidate);

/// Validated length function. `checked` re-runs check_length and throws on
/// failure, so downstream code can rely on the axioms.
class LengthFunction {
public:
  static LengthFunction checked(const RealKernel& values);

  const GroupoidPtr& groupoid() const { return values_.groupoid(); }
  double operator[](Arrow a) const { return values_[a]; }
  const RealKernel& kernel() const { return values_; }

private:
  explicit LengthFunction(RealKernel values) : values_(std::move(values)) {}
  RealKernel values_;
};

/// Positive definiteness via the full fiber matrices [k(gamma eta^{-1})] per
/// unit; for a finite groupoid the full fiber dominates every finite subset.
KernelVerdict check_positive_definite(const ComplexKernel& k);
KernelVerdict check_positive_definite(const RealKernel& k);

/// Conditional negative definiteness, two independent routes per unit:
/// (a) the fiber matrix projected onto the sum-zero hyperplane is NSD;
/// (b) the Gram matrix [psi(g_i) + psi(g_j) - psi(g_i g_j^{-1})] is PSD.
/// Throws std::invalid_argument when psi is not symmetric or not normalized
/// (distinct from a definiteness failure).
KernelVerdict check_cnd(const RealKernel& psi);

/// Locally proper negative type: normalized, symmetric, CND; properness is
/// vacuous at finite scale and reported as such.
struct NegativeTypeReport {
  bool normalized = false;
  bool symmetric = false;
  KernelVerdict cnd;
  std::string properness_note;
  bool passed = false;
};
NegativeTypeReport check_negative_type(const RealKernel& psi);

/// L = sqrt(psi) for CND psi >= 0; re-verifies the length axioms and throws
/// if they fail beyond tolerance.
LengthFunction sqrt_length(const RealKernel& psi);

/// k(gamma) = exp(-t psi(gamma)). For CND psi the result is positive-definite
/// (Schoenberg direction); k is 1 on units whenever psi is normalized.
RealKernel schoenberg(const RealKernel& psi, double t);

/// max over arrows of exp(-L/n) (1 + L)^p, the Schwartz-norm budget of the
/// n-th Schoenberg kernel.
double bn_bound(const LengthFunction& length, int p, long n);

/// Same budget for an arbitrary multiplier kernel: max |k| (1 + L)^p.
double multiplier_schwartz_bound(const RealKernel& k, const LengthFunction& length, int p);

struct HaagerupReport {
  bool passed = false;
  std::vector<bool> kernel_pd;          // per kernel
  std::vector<bool> kernel_normalized;  // per kernel
  std::vector<double> deviation;        // max |k_i - 1| per kernel
  bool nonincreasing = false;
  std::optional<size_t> first_within_eps;
  double eps = 0.0;
  std::string locally_c0_note;          // vacuous at finite scale
  std::optional<size_t> failing_index;
};

/// Finite-scale Haagerup sequence check: each kernel PD and normalized,
/// deviation from 1 nonincreasing and eventually below eps.
HaagerupReport check_haagerup_sequence(const std::vector<ComplexKernel>& ks, double eps);

// ---------------------------------------------------------------------------
// Integer windows: the ball [-radius, radius] in the integers with addition
// defined when the sum stays in the window. Kernels on a window are given by
// rules on the integers so fiber differences (up to twice the radius) are
// always defined; verdicts quantify over the in-window fiber.
// ---------------------------------------------------------------------------

struct IntegerWindow {
  int radius = 0;
};

using IntegerRule = std::function<double(long)>;

/// Named rules: "abs", "square", "sqrt_abs", "zero".
IntegerRule integer_rule(const std::string& name);

KernelVerdict window_check_length(const IntegerWindow& w, const IntegerRule& candidate);
KernelVerdict window_check_positive_definite(const IntegerWindow& w, const IntegerRule& k);
KernelVerdict window_check_cnd(const IntegerWindow& w, const IntegerRule& psi);
double window_bn_bound(const IntegerWindow& w, const IntegerRule& length, int p, long n);

inline IntegerRule schoenberg_rule(const IntegerRule& psi, double t) {
  return [psi, t](long m) { return std::exp(-t * psi(m)); };
}

HaagerupReport window_check_haagerup_sequence(const IntegerWindow& w,
                                              const std::vector<IntegerRule>& ks,
                                              double eps);

/// Integer power (1 + x)^p without pow() drift at p = 0.
double weight_pow(double base, int p);

}  // namespace gca
