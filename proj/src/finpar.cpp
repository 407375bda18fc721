#include "iterlab/finpar.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "iterlab/errors.hpp"

namespace iterlab {

FinObj::FinObj(int size) : size_(size) {
  if (size < 0) throw ShapeError("object size must be nonnegative, got " + std::to_string(size));
}

FinObj::FinObj(std::vector<std::string> labels)
    : size_(static_cast<int>(labels.size())), labels_(std::move(labels)) {
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw ShapeError("duplicate label '" + l + "'");
  }
}

std::string FinObj::label(int i) const {
  if (labeled()) return labels_[static_cast<std::size_t>(i)];
  return std::to_string(i);
}

std::optional<int> FinObj::index_of(std::string_view label) const {
  if (labeled()) {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<int>(it - labels_.begin());
  }
  int v = 0;
  if (label.empty()) return std::nullopt;
  for (char c : label) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + (c - '0');
    if (v >= size_) return std::nullopt;
  }
  return v;
}

std::string FinObj::describe() const {
  if (!labeled()) return "X" + std::to_string(size_);
  std::string s = "{";
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) s += ' ';
    s += labels_[i];
  }
  return s + "}";
}

bool operator==(const FinObj& a, const FinObj& b) {
  if (a.size_ != b.size_) return false;
  if (a.labeled() && b.labeled()) return a.labels_ == b.labels_;
  return true;
}

PartialMap::PartialMap(FinObj dom, FinObj cod, std::vector<int> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (static_cast<int>(table_.size()) != dom_.size()) {
    throw ShapeError("table length " + std::to_string(table_.size()) + " does not match domain size " +
                     std::to_string(dom_.size()));
  }
  for (std::size_t x = 0; x < table_.size(); ++x) {
    int y = table_[x];
    if (y != kUndef && (y < 0 || y >= cod_.size())) {
      throw ShapeError("entry " + std::to_string(x) + " -> " + std::to_string(y) + " is outside codomain " +
                       cod_.describe());
    }
  }
}

PartialMap PartialMap::zero(const FinObj& dom, const FinObj& cod) {
  return PartialMap(dom, cod, std::vector<int>(static_cast<std::size_t>(dom.size()), kUndef));
}

PartialMap PartialMap::identity(const FinObj& obj) {
  std::vector<int> t(static_cast<std::size_t>(obj.size()));
  for (int x = 0; x < obj.size(); ++x) t[static_cast<std::size_t>(x)] = x;
  return PartialMap(obj, obj, std::move(t));
}

PartialMap PartialMap::idempotent(const FinObj& obj, std::uint64_t mask) {
  std::vector<int> t(static_cast<std::size_t>(obj.size()), kUndef);
  for (int x = 0; x < obj.size(); ++x) {
    if ((mask >> x) & 1U) t[static_cast<std::size_t>(x)] = x;
  }
  return PartialMap(obj, obj, std::move(t));
}

std::optional<int> PartialMap::operator()(int x) const {
  if (x < 0 || x >= dom_.size()) throw ShapeError("point " + std::to_string(x) + " outside " + dom_.describe());
  int y = table_[static_cast<std::size_t>(x)];
  if (y == kUndef) return std::nullopt;
  return y;
}

bool PartialMap::is_zero() const {
  return std::all_of(table_.begin(), table_.end(), [](int y) { return y == kUndef; });
}

bool PartialMap::is_total() const {
  return std::none_of(table_.begin(), table_.end(), [](int y) { return y == kUndef; });
}

bool PartialMap::is_rest_idem() const {
  if (!is_endo()) return false;
  for (std::size_t x = 0; x < table_.size(); ++x) {
    if (table_[x] != kUndef && table_[x] != static_cast<int>(x)) return false;
  }
  return true;
}

std::uint64_t PartialMap::support() const {
  if (dom_.size() > 64) throw CapacityError("support mask needs a carrier of at most 64 elements");
  std::uint64_t m = 0;
  for (std::size_t x = 0; x < table_.size(); ++x) {
    if (table_[x] != kUndef) m |= std::uint64_t{1} << x;
  }
  return m;
}

bool operator==(const PartialMap& f, const PartialMap& g) {
  return f.dom_ == g.dom_ && f.cod_ == g.cod_ && f.table_ == g.table_;
}

bool operator<(const PartialMap& f, const PartialMap& g) {
  if (f.dom_.size() != g.dom_.size()) return f.dom_.size() < g.dom_.size();
  if (f.cod_.size() != g.cod_.size()) return f.cod_.size() < g.cod_.size();
  return f.table_ < g.table_;
}

void require_same_dom(const PartialMap& f, const PartialMap& g, std::string_view what) {
  if (!(f.dom() == g.dom())) {
    throw ShapeError(std::string(what) + ": domains differ (" + f.dom().describe() + " vs " + g.dom().describe() +
                     ")");
  }
}

void require_parallel(const PartialMap& f, const PartialMap& g, std::string_view what) {
  require_same_dom(f, g, what);
  if (!(f.cod() == g.cod())) {
    throw ShapeError(std::string(what) + ": codomains differ (" + f.cod().describe() + " vs " +
                     g.cod().describe() + ")");
  }
}

PartialMap compose(const PartialMap& f, const PartialMap& g) {
  if (!(f.cod() == g.dom())) {
    throw ShapeError("cannot compose: codomain " + f.cod().describe() + " of the first map differs from domain " +
                     g.dom().describe() + " of the second");
  }
  std::vector<int> t(f.table().size(), kUndef);
  const auto& gt = g.table();
  for (std::size_t x = 0; x < t.size(); ++x) {
    int y = f.table()[x];
    if (y != kUndef) t[x] = gt[static_cast<std::size_t>(y)];
  }
  return PartialMap(f.dom(), g.cod(), std::move(t));
}

PartialMap compose(std::initializer_list<PartialMap> chain) {
  if (chain.size() == 0) throw ShapeError("empty composition chain");
  auto it = chain.begin();
  PartialMap acc = *it;
  for (++it; it != chain.end(); ++it) acc = compose(acc, *it);
  return acc;
}

PartialMap restriction(const PartialMap& f) {
  std::vector<int> t(f.table().size(), kUndef);
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (f.table()[x] != kUndef) t[x] = static_cast<int>(x);
  }
  return PartialMap(f.dom(), f.dom(), std::move(t));
}

bool leq(const PartialMap& f, const PartialMap& g) {
  require_parallel(f, g, "leq");
  return compose(restriction(f), g) == f;
}

PartialMap power(const PartialMap& f, int n) {
  if (!f.is_endo()) throw ShapeError("power of a non-endomorphism");
  PartialMap acc = PartialMap::identity(f.dom());
  for (int i = 0; i < n; ++i) acc = compose(acc, f);
  return acc;
}

std::string to_string(const PartialMap& f) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int x = 0; x < f.dom().size(); ++x) {
    int y = f.table()[static_cast<std::size_t>(x)];
    if (y == kUndef) continue;
    if (!first) os << ", ";
    first = false;
    os << f.dom().label(x) << "->" << f.cod().label(y);
  }
  os << '}';
  return os.str();
}

}  // namespace iterlab
