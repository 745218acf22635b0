#include "gca/builders.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace gca {

namespace {

constexpr int kMaxExplicitArrows = 4096;

struct RawParts {
  std::vector<std::string> units;
  std::vector<ArrowData> arrows;
  std::map<std::string, std::string> inverse;
  std::vector<std::array<std::string, 3>> compose;
};

GroupoidPtr finish(RawParts parts) {
  auto g = std::make_shared<FiniteGroupoid>(FiniteGroupoid::from_parts(
      parts.units, parts.arrows, parts.inverse, parts.compose));
  if (auto rep = g->validate(); !rep.ok()) {
    const auto& v = rep.violations.front();
    throw std::logic_error("builder produced an invalid groupoid: " + v.axiom +
                           " (" + v.detail + ")");
  }
  return g;
}

int table_identity(const GroupTableSpec& s) {
  const int n = static_cast<int>(s.elements.size());
  if (static_cast<int>(s.table.size()) != n)
    throw std::invalid_argument("group table is not square");
  for (const auto& row : s.table) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("group table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("group table entry out of range");
  }
  for (int e = 0; e < n; ++e) {
    bool neutral = true;
    for (int j = 0; j < n && neutral; ++j)
      neutral = s.table[e][j] == j && s.table[j][e] == j;
    if (neutral) return e;
  }
  throw std::invalid_argument("group table has no identity element");
}

std::vector<int> table_inverses(const GroupTableSpec& s, int e) {
  const int n = static_cast<int>(s.elements.size());
  std::vector<int> inv(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (s.table[i][j] == e && s.table[j][i] == e) { inv[i] = j; break; }
    if (inv[i] < 0)
      throw std::invalid_argument("group table element '" + s.elements[i] + "' has no inverse");
  }
  return inv;
}

RawParts build_group_table(const GroupTableSpec& s) {
  const int n = static_cast<int>(s.elements.size());
  if (n == 0) throw std::invalid_argument("group table with no elements");
  std::set<std::string> names(s.elements.begin(), s.elements.end());
  if (static_cast<int>(names.size()) != n)
    throw std::invalid_argument("duplicate element name in group table");
  const int e = table_identity(s);
  const auto inv = table_inverses(s, e);

  RawParts p;
  p.units.push_back(s.elements[e]);
  for (int i = 0; i < n; ++i) {
    p.arrows.push_back({s.elements[i], s.elements[e], s.elements[e]});
    p.inverse[s.elements[i]] = s.elements[inv[i]];
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      p.compose.push_back({s.elements[i], s.elements[j], s.elements[s.table[i][j]]});
  return p;
}

std::string perm_name(const std::vector<int>& p) {
  std::string s = "p";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(p[i]);
  }
  return s;
}

std::vector<int> perm_mul(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];  // (a*b)(x) = a(b(x))
  return c;
}

GroupTableSpec permutation_closure_table(const PermutationQuotientSpec& s) {
  if (s.degree <= 0) throw std::invalid_argument("permutation degree must be positive");
  for (const auto& gen : s.generators) {
    if (static_cast<int>(gen.size()) != s.degree)
      throw std::invalid_argument("generator degree mismatch");
    std::vector<bool> hit(s.degree, false);
    for (int v : gen) {
      if (v < 0 || v >= s.degree || hit[v])
        throw std::invalid_argument("generator is not a bijection of the stated degree");
      hit[v] = true;
    }
  }

  std::vector<int> identity(s.degree);
  for (int i = 0; i < s.degree; ++i) identity[i] = i;

  std::map<std::vector<int>, int> seen;
  std::vector<std::vector<int>> elements;
  std::deque<std::vector<int>> queue;
  seen[identity] = 0;
  elements.push_back(identity);
  queue.push_back(identity);
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (const auto& gen : s.generators) {
      auto next = perm_mul(cur, gen);
      if (seen.emplace(next, static_cast<int>(elements.size())).second) {
        elements.push_back(next);
        queue.push_back(next);
        if (elements.size() > static_cast<size_t>(kMaxExplicitArrows))
          throw std::invalid_argument("permutation quotient too large for an explicit groupoid");
      }
    }
  }

  GroupTableSpec table_spec;
  const int n = static_cast<int>(elements.size());
  for (const auto& el : elements) table_spec.elements.push_back(perm_name(el));
  table_spec.table.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table_spec.table[i][j] = seen.at(perm_mul(elements[i], elements[j]));
  return table_spec;
}

RawParts build_transformation(const TransformationSpec& s) {
  const int n = static_cast<int>(s.group.elements.size());
  const int e = table_identity(s.group);
  const auto inv = table_inverses(s.group, e);
  std::set<std::string> point_set(s.points.begin(), s.points.end());
  if (point_set.size() != s.points.size() || s.points.empty())
    throw std::invalid_argument("transformation points must be nonempty and distinct");

  // act[g][x] = point index of g.x
  const int m = static_cast<int>(s.points.size());
  std::map<std::string, int> point_index;
  for (int x = 0; x < m; ++x) point_index[s.points[x]] = x;
  std::vector<std::vector<int>> act(n, std::vector<int>(m, -1));
  for (int x = 0; x < m; ++x) act[e][x] = x;
  for (int g = 0; g < n; ++g) {
    auto row = s.action.find(s.group.elements[g]);
    if (row == s.action.end()) {
      if (g == e) continue;
      throw std::invalid_argument("action missing row for element '" + s.group.elements[g] + "'");
    }
    for (int x = 0; x < m; ++x) {
      auto it = row->second.find(s.points[x]);
      if (it == row->second.end())
        throw std::invalid_argument("action missing value for point '" + s.points[x] + "'");
      auto target = point_index.find(it->second);
      if (target == point_index.end())
        throw std::invalid_argument("action maps to unknown point '" + it->second + "'");
      act[g][x] = target->second;
    }
  }
  for (int x = 0; x < m; ++x)
    if (act[e][x] != x)
      throw std::invalid_argument("action is not a homomorphism: identity must act trivially");
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int x = 0; x < m; ++x)
        if (act[g][act[h][x]] != act[s.group.table[g][h]][x])
          throw std::invalid_argument("action is not a homomorphism: (" +
                                      s.group.elements[g] + ", " + s.group.elements[h] +
                                      ") fails at point '" + s.points[x] + "'");

  auto arrow_name = [&](int g, int x) {
    return g == e ? s.points[x] : s.group.elements[g] + "@" + s.points[x];
  };

  RawParts p;
  for (int x = 0; x < m; ++x) p.units.push_back(s.points[x]);
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < m; ++x) {
      p.arrows.push_back({arrow_name(g, x), s.points[x], s.points[act[g][x]]});
      p.inverse[arrow_name(g, x)] = arrow_name(inv[g], act[g][x]);
    }
  // (g, h.x) * (h, x) = (gh, x)
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int x = 0; x < m; ++x)
        p.compose.push_back({arrow_name(g, act[h][x]), arrow_name(h, x),
                             arrow_name(s.group.table[g][h], x)});
  return p;
}

RawParts raw_parts_of(const GroupoidSpec& spec, std::map<std::string, double>* lifted);

RawParts build_disjoint_union(const DisjointUnionSpec& s,
                              std::map<std::string, double>* lifted) {
  RawParts p;
  for (size_t k = 0; k < s.parts.size(); ++k) {
    const std::string prefix = "L" + std::to_string(k) + ":";
    std::map<std::string, double> part_lift;
    RawParts part = raw_parts_of(s.parts[k], &part_lift);
    for (auto& u : part.units) p.units.push_back(prefix + u);
    for (auto& a : part.arrows)
      p.arrows.push_back({prefix + a.id, prefix + a.src, prefix + a.rng});
    for (auto& [from, to] : part.inverse) p.inverse[prefix + from] = prefix + to;
    for (auto& t : part.compose)
      p.compose.push_back({prefix + t[0], prefix + t[1], prefix + t[2]});
    if (lifted)
      for (auto& [id, v] : part_lift) (*lifted)[prefix + id] = v;
  }
  return p;
}

RawParts build_product(const ProductSpec& s, std::map<std::string, double>* lifted) {
  if (s.left.size() != 1 || s.right.size() != 1)
    throw std::invalid_argument("product spec must have exactly one factor per side");
  RawParts l = raw_parts_of(s.left.front(), nullptr);
  RawParts r = raw_parts_of(s.right.front(), nullptr);
  auto name = [](const std::string& a, const std::string& b) {
    return "(" + a + "|" + b + ")";
  };

  std::map<std::string, std::pair<std::string, std::string>> l_ends, r_ends;
  for (const auto& a : l.arrows) l_ends[a.id] = {a.src, a.rng};
  for (const auto& b : r.arrows) r_ends[b.id] = {b.src, b.rng};

  RawParts p;
  for (const auto& lu : l.units)
    for (const auto& ru : r.units) p.units.push_back(name(lu, ru));
  for (const auto& a : l.arrows)
    for (const auto& b : r.arrows) {
      p.arrows.push_back({name(a.id, b.id), name(a.src, b.src), name(a.rng, b.rng)});
      p.inverse[name(a.id, b.id)] = name(l.inverse.at(a.id), r.inverse.at(b.id));
      if (lifted && s.lift_length) {
        auto it = s.lift_length->find(a.id);
        (*lifted)[name(a.id, b.id)] = it == s.lift_length->end() ? 0.0 : it->second;
      }
    }
  if (p.arrows.size() > static_cast<size_t>(kMaxExplicitArrows))
    throw std::invalid_argument("product groupoid too large for an explicit table");
  for (const auto& tl : l.compose)
    for (const auto& tr : r.compose)
      p.compose.push_back({name(tl[0], tr[0]), name(tl[1], tr[1]), name(tl[2], tr[2])});
  return p;
}

RawParts raw_parts_of(const GroupoidSpec& spec, std::map<std::string, double>* lifted) {
  return std::visit(
      [&](const auto& payload) -> RawParts {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, GroupTableSpec>) {
          return build_group_table(payload);
        } else if constexpr (std::is_same_v<T, PermutationQuotientSpec>) {
          return build_group_table(permutation_closure_table(payload));
        } else if constexpr (std::is_same_v<T, TransformationSpec>) {
          return build_transformation(payload);
        } else if constexpr (std::is_same_v<T, DisjointUnionSpec>) {
          return build_disjoint_union(payload, lifted);
        } else {
          return build_product(payload, lifted);
        }
      },
      spec.payload);
}

}  // namespace

BuildResult build(const GroupoidSpec& spec) {
  BuildResult result;
  RawParts parts = raw_parts_of(spec, &result.lifted_length);
  result.groupoid = finish(std::move(parts));
  return result;
}

GroupTableSpec cyclic_group_spec(int n) {
  if (n <= 0) throw std::invalid_argument("cyclic group order must be positive");
  GroupTableSpec s;
  for (int i = 0; i < n; ++i) s.elements.push_back(std::to_string(i));
  s.table.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s.table[i][j] = (i + j) % n;
  return s;
}

GroupTableSpec klein_four_spec() {
  GroupTableSpec s;
  s.elements = {"e", "a", "b", "ab"};
  s.table.assign(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s.table[i][j] = i ^ j;
  return s;
}

GroupoidSpec pair_groupoid_spec(const std::vector<std::string>& points) {
  // The pair groupoid is the transformation groupoid of Z/n translating itself.
  const int n = static_cast<int>(points.size());
  TransformationSpec t;
  t.group = cyclic_group_spec(n);
  t.points = points;
  for (int g = 1; g < n; ++g) {
    auto& row = t.action[std::to_string(g)];
    for (int x = 0; x < n; ++x) row[points[x]] = points[(x + g) % n];
  }
  return GroupoidSpec{t};
}

}  // namespace gca
