#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gca/groupoid.hpp"

namespace gca {

struct GroupoidSpec;

/// Group given by an explicit Cayley table: table[i][j] = index of e_i * e_j.
struct GroupTableSpec {
  std::vector<std::string> elements;
  std::vector<std::vector<int>> table;
};

/// Finite quotient of a free group: generator images as permutations
/// (one-line notation, 0-based) of the stated degree. The group is the
/// closure of the generators under composition.
struct PermutationQuotientSpec {
  int degree = 0;
  std::vector<std::vector<int>> generators;
};

/// Left action of a finite group on a finite point set. Arrows are pairs
/// (g, x) with s = x and r = g.x.
struct TransformationSpec {
  GroupTableSpec group;
  std::vector<std::string> points;
  // action[g][x] = g.x; the identity row may be omitted.
  std::map<std::string, std::map<std::string, std::string>> action;
};

struct DisjointUnionSpec {
  std::vector<GroupoidSpec> parts;
};

/// Componentwise product. When lift_length carries a length on the left
/// factor (by left arrow id), build() also returns the lifted length
/// (gamma, eta) -> L(gamma) on the product arrows.
struct ProductSpec {
  std::vector<GroupoidSpec> left;   // exactly one entry; vector for layout of the recursive type
  std::vector<GroupoidSpec> right;  // exactly one entry
  std::optional<std::map<std::string, double>> lift_length;
};

struct GroupoidSpec {
  std::variant<GroupTableSpec, PermutationQuotientSpec, TransformationSpec,
               DisjointUnionSpec, ProductSpec>
      payload;
};

struct BuildResult {
  GroupoidPtr groupoid;
  /// Present only for product specs with lift_length: values by product arrow id.
  std::map<std::string, double> lifted_length;
};

/// Constructs and validates the groupoid described by the spec. Throws
/// std::invalid_argument on malformed payloads (non-bijective generators,
/// action not a homomorphism, table without identity, ...).
BuildResult build(const GroupoidSpec& spec);

// Ready-made table specs used all over the tests and fixtures.
GroupTableSpec cyclic_group_spec(int n);                  // Z/n, elements "0".."n-1"
GroupTableSpec klein_four_spec();                         // e, a, b, ab
GroupoidSpec pair_groupoid_spec(const std::vector<std::string>& points);

}  // namespace gca
