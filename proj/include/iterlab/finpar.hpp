#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace iterlab {

// A finite carrier {0, ..., size-1}, optionally with display labels.
class FinObj {
 public:
  FinObj() = default;
  explicit FinObj(int size);
  explicit FinObj(std::vector<std::string> labels);

  int size() const { return size_; }
  bool labeled() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

  // Label of element i, or its index when unlabeled.
  std::string label(int i) const;
  std::optional<int> index_of(std::string_view label) const;
  std::string describe() const;

  // Size must agree; labels are compared only when both sides carry them.
  friend bool operator==(const FinObj& a, const FinObj& b);

 private:
  int size_ = 0;
  std::vector<std::string> labels_;
};

inline constexpr int kUndef = -1;

// Extensional partial function dom -> cod. table[x] is a codomain index or kUndef.
class PartialMap {
 public:
  PartialMap() = default;
  PartialMap(FinObj dom, FinObj cod, std::vector<int> table);

  static PartialMap zero(const FinObj& dom, const FinObj& cod);
  static PartialMap identity(const FinObj& obj);
  // Restriction idempotent on the subset given by mask (bit x set = x kept).
  static PartialMap idempotent(const FinObj& obj, std::uint64_t mask);

  const FinObj& dom() const { return dom_; }
  const FinObj& cod() const { return cod_; }
  const std::vector<int>& table() const { return table_; }

  std::optional<int> operator()(int x) const;
  bool defined_at(int x) const { return table_[static_cast<std::size_t>(x)] != kUndef; }

  bool is_zero() const;
  bool is_total() const;
  bool is_endo() const { return dom_ == cod_; }
  bool is_rest_idem() const;
  // Domain of definition as a bitmask. Requires dom().size() <= 64.
  std::uint64_t support() const;

  friend bool operator==(const PartialMap& f, const PartialMap& g);
  // Total order used for canonical sorting of generator sets.
  friend bool operator<(const PartialMap& f, const PartialMap& g);

 private:
  FinObj dom_;
  FinObj cod_;
  std::vector<int> table_;
};

// Diagrammatic order: (fg)(x) = g(f(x)).
PartialMap compose(const PartialMap& f, const PartialMap& g);
PartialMap compose(std::initializer_list<PartialMap> chain);
PartialMap restriction(const PartialMap& f);
// f <= g iff restriction(f) g = f.
bool leq(const PartialMap& f, const PartialMap& g);

inline bool is_total(const PartialMap& f) { return f.is_total(); }
inline bool is_rest_idem(const PartialMap& f) { return f.is_rest_idem(); }
inline PartialMap zero(const FinObj& dom, const FinObj& cod) { return PartialMap::zero(dom, cod); }
inline PartialMap identity(const FinObj& obj) { return PartialMap::identity(obj); }

// f^n for an endomorphism, with f^0 = identity.
PartialMap power(const PartialMap& f, int n);

// "{0->1, 2->0}", using labels where present.
std::string to_string(const PartialMap& f);

void require_same_dom(const PartialMap& f, const PartialMap& g, std::string_view what);
void require_parallel(const PartialMap& f, const PartialMap& g, std::string_view what);

}  // namespace iterlab
