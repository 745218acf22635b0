#include "gca/groupoid.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gca {

namespace {

std::uint64_t pair_key(Arrow a, Arrow b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

}  // namespace

FiniteGroupoid FiniteGroupoid::from_parts(
    const std::vector<std::string>& unit_ids,
    const std::vector<ArrowData>& arrows,
    const std::map<std::string, std::string>& inverse,
    const std::vector<std::array<std::string, 3>>& compose) {
  FiniteGroupoid g;

  for (const auto& a : arrows) g.ids_.push_back(a.id);
  std::sort(g.ids_.begin(), g.ids_.end());
  if (std::adjacent_find(g.ids_.begin(), g.ids_.end()) != g.ids_.end())
    throw std::invalid_argument("duplicate arrow id");
  for (int i = 0; i < static_cast<int>(g.ids_.size()); ++i) g.index_[g.ids_[i]] = i;

  const int n = g.arrow_count();
  g.src_.assign(n, -1);
  g.rng_.assign(n, -1);
  g.inv_.assign(n, -1);
  g.unit_pos_.assign(n, -1);

  std::set<std::string> unit_set(unit_ids.begin(), unit_ids.end());
  for (const auto& u : unit_set) {
    auto it = g.index_.find(u);
    if (it == g.index_.end())
      throw std::invalid_argument("unit '" + u + "' has no identity arrow entry");
    g.units_.push_back(it->second);
  }
  std::sort(g.units_.begin(), g.units_.end());
  for (int p = 0; p < static_cast<int>(g.units_.size()); ++p)
    g.unit_pos_[g.units_[p]] = p;

  for (const auto& a : arrows) {
    const Arrow idx = g.index_.at(a.id);
    auto s = g.index_.find(a.src);
    auto r = g.index_.find(a.rng);
    if (s == g.index_.end() || g.unit_pos_[s->second] < 0)
      throw std::invalid_argument("arrow '" + a.id + "' has unknown source unit '" + a.src + "'");
    if (r == g.index_.end() || g.unit_pos_[r->second] < 0)
      throw std::invalid_argument("arrow '" + a.id + "' has unknown range unit '" + a.rng + "'");
    g.src_[idx] = s->second;
    g.rng_[idx] = r->second;
  }

  for (const auto& [from, to] : inverse) {
    auto f = g.index_.find(from);
    auto t = g.index_.find(to);
    if (f == g.index_.end() || t == g.index_.end())
      throw std::invalid_argument("inverse entry references unknown arrow '" +
                                  (f == g.index_.end() ? from : to) + "'");
    g.inv_[f->second] = t->second;
  }
  for (int i = 0; i < n; ++i)
    if (g.inv_[i] < 0)
      throw std::invalid_argument("arrow '" + g.ids_[i] + "' has no inverse entry");

  for (const auto& triple : compose) {
    Arrow a, b, c;
    auto look = [&](const std::string& id) {
      auto it = g.index_.find(id);
      if (it == g.index_.end())
        throw std::invalid_argument("compose entry references unknown arrow '" + id + "'");
      return it->second;
    };
    a = look(triple[0]); b = look(triple[1]); c = look(triple[2]);
    g.compose_[pair_key(a, b)] = c;
  }

  g.source_fibers_.resize(g.units_.size());
  g.range_fibers_.resize(g.units_.size());
  for (Arrow a = 0; a < n; ++a) {
    g.source_fibers_[g.unit_pos_[g.src_[a]]].push_back(a);
    g.range_fibers_[g.unit_pos_[g.rng_[a]]].push_back(a);
  }
  return g;
}

Arrow FiniteGroupoid::arrow_index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::invalid_argument("unknown arrow id '" + id + "'");
  return it->second;
}

std::optional<Arrow> FiniteGroupoid::find_arrow(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<Arrow> FiniteGroupoid::compose(Arrow a, Arrow b) const {
  auto it = compose_.find(pair_key(a, b));
  if (it == compose_.end()) return std::nullopt;
  return it->second;
}

void FiniteGroupoid::check_unit(Arrow a, const char* what) const {
  if (a < 0 || a >= arrow_count() || unit_pos_[a] < 0)
    throw std::invalid_argument(std::string(what) + ": not a unit");
}

const std::vector<Arrow>& FiniteGroupoid::source_fiber(Arrow unit) const {
  check_unit(unit, "source_fiber");
  return source_fibers_[unit_pos_[unit]];
}

const std::vector<Arrow>& FiniteGroupoid::range_fiber(Arrow unit) const {
  check_unit(unit, "range_fiber");
  return range_fibers_[unit_pos_[unit]];
}

std::vector<Arrow> FiniteGroupoid::isotropy_fiber(Arrow unit) const {
  check_unit(unit, "isotropy_fiber");
  std::vector<Arrow> iso;
  for (Arrow a : source_fibers_[unit_pos_[unit]])
    if (rng_[a] == unit) iso.push_back(a);
  return iso;
}

ValidationReport FiniteGroupoid::validate() const {
  ValidationReport rep;
  const int n = arrow_count();
  auto add = [&](const std::string& axiom, std::vector<std::string> w, std::string detail) {
    rep.violations.push_back({axiom, std::move(w), std::move(detail)});
  };

  for (Arrow u : units_) {
    if (src_[u] != u || rng_[u] != u)
      add("unit-self-loop", {ids_[u]}, "identity arrow must have src = rng = itself");
  }

  // compose defined exactly on composable pairs, with the right endpoints
  for (Arrow a = 0; a < n; ++a) {
    for (Arrow b = 0; b < n; ++b) {
      const auto c = compose(a, b);
      if (composable(a, b)) {
        if (!c) {
          add("compose-missing", {ids_[a], ids_[b]}, "composable pair has no product");
          continue;
        }
        if (rng_[*c] != rng_[a])
          add("range-of-product", {ids_[a], ids_[b], ids_[*c]}, "r(ab) != r(a)");
        if (src_[*c] != src_[b])
          add("source-of-product", {ids_[a], ids_[b], ids_[*c]}, "s(ab) != s(b)");
      } else if (c) {
        add("compose-spurious", {ids_[a], ids_[b]}, "product defined on non-composable pair");
      }
    }
  }

  // identities compose neutrally
  for (Arrow a = 0; a < n; ++a) {
    const auto left = compose(rng_[a], a);
    if (left && *left != a)
      add("left-identity", {ids_[a]}, "r(a)*a != a");
    const auto right = compose(a, src_[a]);
    if (right && *right != a)
      add("right-identity", {ids_[a]}, "a*s(a) != a");
  }

  // inverses
  for (Arrow a = 0; a < n; ++a) {
    const Arrow ia = inv_[a];
    if (inv_[ia] != a)
      add("inverse-involution", {ids_[a], ids_[ia]}, "inv(inv(a)) != a");
    if (src_[ia] != rng_[a] || rng_[ia] != src_[a])
      add("inverse-endpoints", {ids_[a], ids_[ia]}, "s(inv a) != r(a) or r(inv a) != s(a)");
    const auto ai = compose(a, ia);
    if (ai && *ai != rng_[a])
      add("right-inverse", {ids_[a]}, "a*inv(a) != r(a)");
    const auto ia_a = compose(ia, a);
    if (ia_a && *ia_a != src_[a])
      add("left-inverse", {ids_[a]}, "inv(a)*a != s(a)");
  }

  // associativity over all composable triples
  for (Arrow a = 0; a < n; ++a) {
    for (Arrow b = 0; b < n; ++b) {
      if (!composable(a, b)) continue;
      const auto ab = compose(a, b);
      if (!ab) continue;
      for (Arrow c = 0; c < n; ++c) {
        if (!composable(b, c)) continue;
        const auto bc = compose(b, c);
        if (!bc) continue;
        const auto l = compose(*ab, c);
        const auto r = compose(a, *bc);
        if (l && r && *l != *r)
          add("associativity", {ids_[a], ids_[b], ids_[c]}, "(ab)c != a(bc)");
      }
    }
  }
  return rep;
}

bool FiniteGroupoid::topologically_principal() const {
  for (Arrow u : units_)
    if (isotropy_fiber(u).size() != 1) return false;
  return true;
}

bool FiniteGroupoid::principal() const {
  for (Arrow a = 0; a < arrow_count(); ++a)
    if (src_[a] == rng_[a] && !is_unit(a)) return false;
  return true;
}

UnitSubset unit_subset_from_ids(const FiniteGroupoid& g,
                                const std::vector<std::string>& ids) {
  UnitSubset u;
  for (const auto& id : ids) {
    const Arrow a = g.arrow_index(id);
    if (!g.is_unit(a)) throw std::invalid_argument("'" + id + "' is not a unit");
    u.members.push_back(a);
  }
  std::sort(u.members.begin(), u.members.end());
  u.members.erase(std::unique(u.members.begin(), u.members.end()), u.members.end());
  return u;
}

bool is_invariant(const FiniteGroupoid& g, const UnitSubset& u) {
  std::vector<bool> in(g.arrow_count(), false);
  for (Arrow m : u.members) in[m] = true;
  for (Arrow a = 0; a < g.arrow_count(); ++a)
    if (in[g.range(a)] && !in[g.source(a)]) return false;
  return true;
}

std::vector<Arrow> fiber(const FiniteGroupoid& g, Arrow unit, FiberDirection d) {
  switch (d) {
    case FiberDirection::Source: return g.source_fiber(unit);
    case FiberDirection::Range: return g.range_fiber(unit);
    case FiberDirection::Isotropy: return g.isotropy_fiber(unit);
  }
  throw std::logic_error("bad fiber direction");
}

namespace {

FiniteGroupoid subgroupoid_on(const FiniteGroupoid& g, const std::vector<Arrow>& keep) {
  std::vector<bool> in(g.arrow_count(), false);
  for (Arrow a : keep) in[a] = true;

  std::vector<std::string> unit_ids;
  std::vector<ArrowData> arrows;
  std::map<std::string, std::string> inverse;
  std::vector<std::array<std::string, 3>> compose;
  for (Arrow a : keep) {
    arrows.push_back({g.arrow_id(a), g.arrow_id(g.source(a)), g.arrow_id(g.range(a))});
    inverse[g.arrow_id(a)] = g.arrow_id(g.inverse(a));
    if (g.is_unit(a)) unit_ids.push_back(g.arrow_id(a));
  }
  for (Arrow a : keep)
    for (Arrow b : keep)
      if (auto c = g.compose(a, b); c && in[*c])
        compose.push_back({g.arrow_id(a), g.arrow_id(b), g.arrow_id(*c)});
  return FiniteGroupoid::from_parts(unit_ids, arrows, inverse, compose);
}

}  // namespace

FiniteGroupoid invariant_restrict(const FiniteGroupoid& g, const UnitSubset& u) {
  if (!is_invariant(g, u))
    throw std::invalid_argument(
        "unit subset is not invariant; restrict to an arrow subset with open_restrict");
  std::vector<bool> in(g.arrow_count(), false);
  for (Arrow m : u.members) in[m] = true;
  std::vector<Arrow> keep;
  for (Arrow a = 0; a < g.arrow_count(); ++a)
    if (in[g.range(a)]) keep.push_back(a);
  return subgroupoid_on(g, keep);
}

std::variant<FiniteGroupoid, RestrictFailure>
open_restrict(const FiniteGroupoid& g, const std::vector<Arrow>& arrows) {
  std::vector<bool> in(g.arrow_count(), false);
  for (Arrow a : arrows) in[a] = true;

  for (Arrow a : arrows) {
    if (!in[g.inverse(a)])
      return RestrictFailure{"inverse", {g.arrow_id(a), g.arrow_id(g.inverse(a))}};
    if (!in[g.source(a)])
      return RestrictFailure{"identity", {g.arrow_id(a), g.arrow_id(g.source(a))}};
    if (!in[g.range(a)])
      return RestrictFailure{"identity", {g.arrow_id(a), g.arrow_id(g.range(a))}};
  }
  for (Arrow a : arrows)
    for (Arrow b : arrows)
      if (auto c = g.compose(a, b); c && !in[*c])
        return RestrictFailure{"composition", {g.arrow_id(a), g.arrow_id(b), g.arrow_id(*c)}};

  std::vector<Arrow> keep(arrows);
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  return subgroupoid_on(g, keep);
}

}  // namespace gca
