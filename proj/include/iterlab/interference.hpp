#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "iterlab/finpar.hpp"

namespace iterlab {

enum class RelKind { maximal, minimal, custom };

// Disjointness relation on parallel maps. Custom relations are stored on
// restriction idempotents (subset bitmasks), per object size, as unordered pairs;
// two maps are related iff their restrictions are.
class InterferenceRel {
 public:
  using Mask = std::uint32_t;
  using PairList = std::vector<std::pair<Mask, Mask>>;

  static constexpr int kMaxCustomSize = 12;

  static InterferenceRel maximal();
  static InterferenceRel minimal();
  // Unvalidated until passed through validated().
  static InterferenceRel custom(const std::map<int, PairList>& pairs_by_size);

  RelKind kind() const { return kind_; }
  bool is_validated() const { return validated_; }
  std::string name() const;

  // Idempotent-level membership, ignoring the validation flag.
  bool relates(int obj_size, Mask a, Mask b) const;
  bool defined_on(int obj_size) const;
  std::vector<int> custom_sizes() const;
  PairList pairs(int obj_size) const;

  // Copy marked as validated after validate_interference(*this, obj_bound) passes;
  // throws PreconditionError naming the violated axiom otherwise.
  InterferenceRel validated(int obj_bound) const;
  // Copy marked as validated without checking. For exploring relations that only
  // satisfy part of the axioms.
  InterferenceRel assume_valid() const;

  friend bool operator==(const InterferenceRel& a, const InterferenceRel& b);

 private:
  struct Table {
    std::map<int, std::set<std::uint64_t>> pairs;  // key = min << 32 | max
  };
  static std::uint64_t key(Mask a, Mask b);

  RelKind kind_ = RelKind::maximal;
  bool validated_ = true;
  std::shared_ptr<const Table> table_;
};

struct ValidationReport {
  bool ok = true;
  std::string axiom;    // e.g. "O-perp.2"
  std::string witness;  // human readable
  int object_size = -1;
};

// Exhaustive check of the idempotent-level axioms (zero, symmetry, anti-reflexivity,
// downward closure, pre-composition closure) on every object up to obj_bound.
// obj_bound > 12 raises CapacityError.
ValidationReport validate_interference(const InterferenceRel& rel, int obj_bound);

// Map-level relation: f and g must share a domain.
bool perp(const InterferenceRel& rel, const PartialMap& f, const PartialMap& g);

// First pair of members (by index) that are not disjoint, if any.
std::optional<std::pair<std::size_t, std::size_t>> first_clash(const InterferenceRel& rel,
                                                               std::span<const PartialMap> fam);

// Join of a pairwise disjoint family; the empty family joins to zero(dom, cod).
PartialMap join(const InterferenceRel& rel, std::span<const PartialMap> fam, const FinObj& dom, const FinObj& cod);
PartialMap join(const InterferenceRel& rel, const PartialMap& f, const PartialMap& g);
// Join under the maximal relation.
PartialMap join(const PartialMap& f, const PartialMap& g);

// True iff join(fam) is disjoint from h; every member must already be disjoint from h.
bool is_strong_join(const InterferenceRel& rel, std::span<const PartialMap> fam, const PartialMap& h,
                    const FinObj& dom, const FinObj& cod);

struct StrongnessWitness {
  int object_size = 0;
  std::vector<InterferenceRel::Mask> family;
  InterferenceRel::Mask h = 0;
};

// Exhaustive search, on restriction idempotents of one object, for a family of at most
// max_family pairwise related subsets whose union is not related to some h that each
// member is related to.
std::optional<StrongnessWitness> find_non_strong_join(const InterferenceRel& rel, int obj_size, int max_family);

}  // namespace iterlab
