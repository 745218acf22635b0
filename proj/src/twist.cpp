#include "gca/twist.hpp"

#include <algorithm>
#include <stdexcept>

namespace gca {

void require_same_groupoid(const GroupoidPtr& a, const GroupoidPtr& b, const char* op) {
  if (a.get() != b.get())
    throw std::invalid_argument(std::string(op) + ": operands live on different groupoids");
}

void Cocycle::set_angle(Arrow a, Arrow b, TurnFraction angle) {
  if (!g_->composable(a, b))
    throw std::invalid_argument("cocycle angle on non-composable pair (" +
                                g_->arrow_id(a) + ", " + g_->arrow_id(b) + ")");
  if (angle.is_zero())
    angles_.erase({a, b});
  else
    angles_[{a, b}] = angle;
}

TurnFraction Cocycle::angle(Arrow a, Arrow b) const {
  if (!g_->composable(a, b))
    throw std::invalid_argument("cocycle evaluated on non-composable pair (" +
                                g_->arrow_id(a) + ", " + g_->arrow_id(b) + ")");
  auto it = angles_.find({a, b});
  return it == angles_.end() ? TurnFraction() : it->second;
}

ValidationReport Cocycle::validate() const {
  ValidationReport rep;
  const auto& g = *g_;
  const int n = g.arrow_count();

  for (Arrow a = 0; a < n; ++a) {
    if (!angle(g.range(a), a).is_zero())
      rep.violations.push_back({"normalization", {g.arrow_id(a)}, "sigma(r(a), a) != 1"});
    if (!angle(a, g.source(a)).is_zero())
      rep.violations.push_back({"normalization", {g.arrow_id(a)}, "sigma(a, s(a)) != 1"});
  }

  // sigma(a,b) sigma(ab,c) = sigma(b,c) sigma(a,bc), exact in turn fractions
  for (Arrow a = 0; a < n; ++a)
    for (Arrow b = 0; b < n; ++b) {
      if (!g.composable(a, b)) continue;
      const auto ab = g.compose(a, b);
      if (!ab) continue;
      for (Arrow c = 0; c < n; ++c) {
        if (!g.composable(b, c)) continue;
        const auto bc = g.compose(b, c);
        if (!bc) continue;
        const TurnFraction lhs = angle(a, b) + angle(*ab, c);
        const TurnFraction rhs = angle(b, c) + angle(a, *bc);
        if (lhs != rhs)
          rep.violations.push_back({"cocycle-identity",
                                    {g.arrow_id(a), g.arrow_id(b), g.arrow_id(c)},
                                    "sigma(a,b)sigma(ab,c) != sigma(b,c)sigma(a,bc)"});
      }
    }
  return rep;
}

Section& Section::operator+=(const Section& o) {
  require_same_groupoid(g_, o.g_, "section sum");
  for (size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

Section& Section::operator-=(const Section& o) {
  require_same_groupoid(g_, o.g_, "section difference");
  for (size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

Section& Section::operator*=(Complex scalar) {
  for (auto& v : values_) v *= scalar;
  return *this;
}

std::vector<Arrow> Section::support(double tol) const {
  std::vector<Arrow> supp;
  for (Arrow a = 0; a < static_cast<Arrow>(values_.size()); ++a)
    if (std::abs(values_[a]) > tol) supp.push_back(a);
  return supp;
}

double Section::max_abs() const {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const Section& f, const Section& g) {
  require_same_groupoid(f.groupoid(), g.groupoid(), "section comparison");
  double m = 0.0;
  for (Arrow a = 0; a < f.groupoid()->arrow_count(); ++a)
    m = std::max(m, std::abs(f[a] - g[a]));
  return m;
}

Section convolve(const Section& f, const Section& g, const Cocycle& sigma) {
  require_same_groupoid(f.groupoid(), g.groupoid(), "convolve");
  require_same_groupoid(f.groupoid(), sigma.groupoid(), "convolve");
  const auto& grp = *f.groupoid();

  Section out(f.groupoid());
  const auto fs = f.support();
  const auto gs = g.support();
  for (Arrow a : fs)
    for (Arrow b : gs) {
      const auto c = grp.compose(a, b);
      if (!c) continue;
      out.set(*c, out[*c] + sigma.value(a, b) * f[a] * g[b]);
    }
  return out;
}

Section adjoint(const Section& f, const Cocycle& sigma) {
  require_same_groupoid(f.groupoid(), sigma.groupoid(), "adjoint");
  const auto& grp = *f.groupoid();
  Section out(f.groupoid());
  for (Arrow a = 0; a < grp.arrow_count(); ++a) {
    const Arrow ia = grp.inverse(a);
    const Complex v = f[ia];
    if (v == Complex{0.0, 0.0}) continue;
    out.set(a, sigma.angle(a, ia).conj_unit() * std::conj(v));
  }
  return out;
}

}  // namespace gca
