#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace gca {

/// Index into a groupoid's arrow table. Units are the identity arrows and
/// live in the same table, so a unit is addressed by its arrow index.
using Arrow = int;

struct Violation {
  std::string axiom;                 // short code, e.g. "range-of-product"
  std::vector<std::string> arrows;   // witnessing arrow ids
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

struct ArrowData {
  std::string id;
  std::string src;  // unit id
  std::string rng;  // unit id
};

/// Finite groupoid with the discrete topology. Arrows carry string ids;
/// internally everything is indexed by position in the sorted id table, so
/// fibers, matrices and reports come out in a reproducible order.
///
/// Composition follows s(a) = r(b) => ab defined, r(ab) = r(a), s(ab) = s(b).
/// Immutable after construction; all queries are const and thread-safe.
class FiniteGroupoid {
public:
  /// Assembles a groupoid from raw parts. Unknown ids and missing identity
  /// arrows are structural errors and throw; algebraic defects (broken
  /// associativity, bad inverses, ...) are left for validate() to report.
  static FiniteGroupoid from_parts(const std::vector<std::string>& unit_ids,
                                   const std::vector<ArrowData>& arrows,
                                   const std::map<std::string, std::string>& inverse,
                                   const std::vector<std::array<std::string, 3>>& compose);

  int arrow_count() const { return static_cast<int>(ids_.size()); }
  int unit_count() const { return static_cast<int>(units_.size()); }

  const std::string& arrow_id(Arrow a) const { return ids_[a]; }
  Arrow arrow_index(const std::string& id) const;
  std::optional<Arrow> find_arrow(const std::string& id) const;

  Arrow source(Arrow a) const { return src_[a]; }
  Arrow range(Arrow a) const { return rng_[a]; }
  Arrow inverse(Arrow a) const { return inv_[a]; }
  bool is_unit(Arrow a) const { return unit_pos_[a] >= 0; }

  bool composable(Arrow a, Arrow b) const { return src_[a] == rng_[b]; }
  std::optional<Arrow> compose(Arrow a, Arrow b) const;

  /// Sorted arrow indices of the identity arrows.
  const std::vector<Arrow>& units() const { return units_; }
  /// Position of a unit inside units(), or -1 for non-units.
  int unit_position(Arrow a) const { return unit_pos_[a]; }

  /// G_x = {a : s(a) = x}, sorted by arrow id.
  const std::vector<Arrow>& source_fiber(Arrow unit) const;
  /// G^x = {a : r(a) = x}, sorted by arrow id.
  const std::vector<Arrow>& range_fiber(Arrow unit) const;
  /// G_x^x, sorted.
  std::vector<Arrow> isotropy_fiber(Arrow unit) const;

  /// Checks every groupoid axiom over the whole table; violations are data.
  ValidationReport validate() const;

  /// In the finite discrete model: every isotropy fiber is a single identity.
  bool topologically_principal() const;
  /// {a : s(a) = r(a)} equals the unit space.
  bool principal() const;

private:
  FiniteGroupoid() = default;
  void check_unit(Arrow a, const char* what) const;

  std::vector<std::string> ids_;            // sorted
  std::vector<Arrow> src_, rng_, inv_;
  std::vector<int> unit_pos_;               // -1 for non-units
  std::vector<Arrow> units_;
  std::vector<std::vector<Arrow>> source_fibers_;  // by unit position
  std::vector<std::vector<Arrow>> range_fibers_;
  std::unordered_map<std::uint64_t, Arrow> compose_;
  std::map<std::string, Arrow> index_;
};

using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

struct UnitSubset {
  std::vector<Arrow> members;  // unit arrow indices, sorted
};

UnitSubset unit_subset_from_ids(const FiniteGroupoid& g,
                                const std::vector<std::string>& ids);

/// U is invariant iff r(a) in U implies s(a) in U for every arrow.
bool is_invariant(const FiniteGroupoid& g, const UnitSubset& u);

enum class FiberDirection { Source, Range, Isotropy };

std::vector<Arrow> fiber(const FiniteGroupoid& g, Arrow unit, FiberDirection d);

/// Subgroupoid G_U on the arrows with range (equivalently source) in U.
/// Throws std::invalid_argument when U is not invariant; use open_restrict
/// for arbitrary arrow subsets.
FiniteGroupoid invariant_restrict(const FiniteGroupoid& g, const UnitSubset& u);

struct RestrictFailure {
  std::string reason;                 // "inverse", "composition", "identity"
  std::vector<std::string> witness;   // offending arrow ids
};

/// Restriction to an arbitrary arrow subset (every subset is open here).
/// Succeeds iff the subset is closed under inverse and composition and
/// contains the source/range identities of its members.
std::variant<FiniteGroupoid, RestrictFailure>
open_restrict(const FiniteGroupoid& g, const std::vector<Arrow>& arrows);

}  // namespace gca
