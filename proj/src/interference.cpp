#include "iterlab/interference.hpp"

#include <array>
#include <bit>
#include <sstream>

#include "iterlab/errors.hpp"

namespace iterlab {

namespace {

std::string mask_str(std::uint64_t m, int n) {
  std::string s = "{";
  bool first = true;
  for (int x = 0; x < n; ++x) {
    if ((m >> x) & 1U) {
      if (!first) s += ',';
      first = false;
      s += std::to_string(x);
    }
  }
  return s + "}";
}

// Which of the regions a\b, b\a, a&b are inhabited.
unsigned pattern(std::uint64_t a, std::uint64_t b) {
  unsigned p = 0;
  if (a & ~b) p |= 1U;
  if (b & ~a) p |= 2U;
  if (a & b) p |= 4U;
  return p;
}

}  // namespace

std::uint64_t InterferenceRel::key(Mask a, Mask b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

InterferenceRel InterferenceRel::maximal() {
  InterferenceRel r;
  r.kind_ = RelKind::maximal;
  return r;
}

InterferenceRel InterferenceRel::minimal() {
  InterferenceRel r;
  r.kind_ = RelKind::minimal;
  return r;
}

InterferenceRel InterferenceRel::custom(const std::map<int, PairList>& pairs_by_size) {
  auto t = std::make_shared<Table>();
  for (const auto& [n, list] : pairs_by_size) {
    if (n < 0 || n > kMaxCustomSize) {
      throw CapacityError("custom relations are limited to objects of size <= " + std::to_string(kMaxCustomSize));
    }
    auto& s = t->pairs[n];
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (auto [a, b] : list) {
      if (a >= limit || b >= limit) {
        throw ShapeError("subset mask " + std::to_string(a >= limit ? a : b) + " does not fit an object of size " +
                         std::to_string(n));
      }
      s.insert(key(a, b));
    }
  }
  InterferenceRel r;
  r.kind_ = RelKind::custom;
  r.validated_ = false;
  r.table_ = std::move(t);
  return r;
}

std::string InterferenceRel::name() const {
  switch (kind_) {
    case RelKind::maximal:
      return "maximal";
    case RelKind::minimal:
      return "minimal";
    case RelKind::custom:
      return "custom";
  }
  return "?";
}

bool InterferenceRel::defined_on(int obj_size) const {
  if (kind_ != RelKind::custom) return true;
  return table_->pairs.count(obj_size) != 0;
}

std::vector<int> InterferenceRel::custom_sizes() const {
  std::vector<int> out;
  if (kind_ == RelKind::custom) {
    for (const auto& [n, s] : table_->pairs) out.push_back(n);
  }
  return out;
}

InterferenceRel::PairList InterferenceRel::pairs(int obj_size) const {
  PairList out;
  if (kind_ != RelKind::custom) {
    const Mask full = obj_size >= 32 ? ~Mask{0} : ((Mask{1} << obj_size) - 1);
    for (Mask a = 0; a <= full; ++a) {
      for (Mask b = a; b <= full; ++b) {
        if (relates(obj_size, a, b)) out.emplace_back(a, b);
      }
    }
    return out;
  }
  auto it = table_->pairs.find(obj_size);
  if (it == table_->pairs.end()) return out;
  for (std::uint64_t k : it->second) out.emplace_back(static_cast<Mask>(k >> 32), static_cast<Mask>(k));
  return out;
}

bool InterferenceRel::relates(int obj_size, Mask a, Mask b) const {
  switch (kind_) {
    case RelKind::maximal:
      return (a & b) == 0;
    case RelKind::minimal:
      return a == 0 || b == 0;
    case RelKind::custom: {
      auto it = table_->pairs.find(obj_size);
      if (it == table_->pairs.end()) return false;
      return it->second.count(key(a, b)) != 0;
    }
  }
  return false;
}

InterferenceRel InterferenceRel::validated(int obj_bound) const {
  ValidationReport rep = validate_interference(*this, obj_bound);
  if (!rep.ok) {
    throw PreconditionError("interference relation violates " + rep.axiom + ": " + rep.witness);
  }
  InterferenceRel r = *this;
  r.validated_ = true;
  return r;
}

InterferenceRel InterferenceRel::assume_valid() const {
  InterferenceRel r = *this;
  r.validated_ = true;
  return r;
}

bool operator==(const InterferenceRel& a, const InterferenceRel& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != RelKind::custom) return true;
  return a.table_ == b.table_ || a.table_->pairs == b.table_->pairs;
}

ValidationReport validate_interference(const InterferenceRel& rel, int obj_bound) {
  if (obj_bound > InterferenceRel::kMaxCustomSize) {
    throw CapacityError("exhaustive interference validation is capped at object size " +
                        std::to_string(InterferenceRel::kMaxCustomSize) + ", requested " + std::to_string(obj_bound));
  }
  std::vector<int> sizes;
  if (rel.kind() == RelKind::custom) {
    for (int n : rel.custom_sizes()) {
      if (n > obj_bound) {
        throw CapacityError("custom relation lists an object of size " + std::to_string(n) +
                            ", above the validation bound " + std::to_string(obj_bound));
      }
      sizes.push_back(n);
    }
  } else {
    for (int n = 0; n <= obj_bound; ++n) sizes.push_back(n);
  }

  using Mask = InterferenceRel::Mask;
  auto fail = [](std::string axiom, int n, std::string witness) {
    ValidationReport r;
    r.ok = false;
    r.axiom = std::move(axiom);
    r.object_size = n;
    r.witness = std::move(witness);
    return r;
  };

  // Region patterns realised by related pairs, with one example each.
  struct Example {
    int n;
    Mask a, b;
  };
  std::array<std::optional<Example>, 8> present;

  for (int n : sizes) {
    const Mask full = (Mask{1} << n) - 1;
    if (!rel.relates(n, full, 0)) {
      return fail("O-perp.0", n, "identity is not related to zero on X" + std::to_string(n));
    }
    for (Mask a = 0; a <= full; ++a) {
      if (a != 0 && rel.relates(n, a, a)) {
        return fail("O-perp.2", n, "e = " + mask_str(a, n) + " is related to itself but nonzero");
      }
      for (Mask b = 0; b <= full; ++b) {
        const bool r = rel.relates(n, a, b);
        if (r != rel.relates(n, b, a)) {
          return fail("O-perp.1", n, "(" + mask_str(a, n) + ", " + mask_str(b, n) + ") is not symmetric");
        }
        if (!r) continue;
        for (int x = 0; x < n; ++x) {
          const Mask bit = Mask{1} << x;
          if ((a & bit) && !rel.relates(n, a & ~bit, b)) {
            return fail("O-perp.3", n,
                        "(" + mask_str(a, n) + ", " + mask_str(b, n) + ") is related but its restriction (" +
                            mask_str(a & ~bit, n) + ", " + mask_str(b, n) + ") is not");
          }
          if ((b & bit) && !rel.relates(n, a, b & ~bit)) {
            return fail("O-perp.3", n,
                        "(" + mask_str(a, n) + ", " + mask_str(b, n) + ") is related but its restriction (" +
                            mask_str(a, n) + ", " + mask_str(b & ~bit, n) + ") is not");
          }
        }
        auto& slot = present[pattern(a, b)];
        if (!slot) slot = Example{n, a, b};
      }
    }
  }

  // Pre-composition: the preimages of (a, b) under maps h: B -> A are exactly the
  // pairs (a', b') on B whose inhabited regions are among those of (a, b).
  for (int m : sizes) {
    const Mask full = (Mask{1} << m) - 1;
    for (Mask a = 0; a <= full; ++a) {
      for (Mask b = 0; b <= full; ++b) {
        const unsigned p = pattern(a, b);
        const Example* src = nullptr;
        for (unsigned q = 0; q < 8; ++q) {
          if (present[q] && (p & ~q) == 0) {
            src = &*present[q];
            break;
          }
        }
        if (!src || rel.relates(m, a, b)) continue;
        auto pick = [](std::uint64_t s) { return std::countr_zero(s); };
        std::vector<int> table(static_cast<std::size_t>(m), kUndef);
        for (int x = 0; x < m; ++x) {
          const bool in_a = (a >> x) & 1U, in_b = (b >> x) & 1U;
          if (in_a && !in_b) table[static_cast<std::size_t>(x)] = pick(src->a & ~src->b);
          if (!in_a && in_b) table[static_cast<std::size_t>(x)] = pick(src->b & ~src->a);
          if (in_a && in_b) table[static_cast<std::size_t>(x)] = pick(src->a & src->b);
        }
        PartialMap h(FinObj(m), FinObj(src->n), table);
        return fail("O-perp.4", m,
                    "(" + mask_str(src->a, src->n) + ", " + mask_str(src->b, src->n) + ") on X" +
                        std::to_string(src->n) + " is related, but its preimages (" + mask_str(a, m) + ", " +
                        mask_str(b, m) + ") under h = " + to_string(h) + " are not");
      }
    }
  }
  return {};
}

bool perp(const InterferenceRel& rel, const PartialMap& f, const PartialMap& g) {
  require_same_dom(f, g, "perp");
  switch (rel.kind()) {
    case RelKind::maximal: {
      const auto& a = f.table();
      const auto& b = g.table();
      for (std::size_t x = 0; x < a.size(); ++x) {
        if (a[x] != kUndef && b[x] != kUndef) return false;
      }
      return true;
    }
    case RelKind::minimal:
      return f.is_zero() || g.is_zero();
    case RelKind::custom: {
      if (!rel.is_validated()) throw PreconditionError("custom interference relation has not been validated");
      const int n = f.dom().size();
      if (!rel.defined_on(n)) {
        throw ShapeError("custom interference relation says nothing about objects of size " + std::to_string(n));
      }
      return rel.relates(n, static_cast<InterferenceRel::Mask>(f.support()),
                         static_cast<InterferenceRel::Mask>(g.support()));
    }
  }
  return false;
}

std::optional<std::pair<std::size_t, std::size_t>> first_clash(const InterferenceRel& rel,
                                                               std::span<const PartialMap> fam) {
  for (std::size_t i = 0; i < fam.size(); ++i) {
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      if (!perp(rel, fam[i], fam[j])) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

PartialMap join(const InterferenceRel& rel, std::span<const PartialMap> fam, const FinObj& dom, const FinObj& cod) {
  for (const auto& f : fam) {
    if (!(f.dom() == dom) || !(f.cod() == cod)) {
      throw ShapeError("join: member " + to_string(f) + " is not a map " + dom.describe() + " -> " + cod.describe());
    }
  }
  if (auto c = first_clash(rel, fam)) {
    throw PreconditionError("join: members " + std::to_string(c->first) + " and " + std::to_string(c->second) +
                            " are not disjoint under the " + rel.name() + " relation (" + to_string(fam[c->first]) +
                            " and " + to_string(fam[c->second]) + ")");
  }
  std::vector<int> t(static_cast<std::size_t>(dom.size()), kUndef);
  for (const auto& f : fam) {
    for (std::size_t x = 0; x < t.size(); ++x) {
      int y = f.table()[x];
      if (y == kUndef) continue;
      if (t[x] != kUndef) {
        throw PreconditionError("join: members overlap at point " + dom.label(static_cast<int>(x)));
      }
      t[x] = y;
    }
  }
  return PartialMap(dom, cod, std::move(t));
}

PartialMap join(const InterferenceRel& rel, const PartialMap& f, const PartialMap& g) {
  require_parallel(f, g, "join");
  const PartialMap fam[] = {f, g};
  return join(rel, fam, f.dom(), f.cod());
}

PartialMap join(const PartialMap& f, const PartialMap& g) { return join(InterferenceRel::maximal(), f, g); }

bool is_strong_join(const InterferenceRel& rel, std::span<const PartialMap> fam, const PartialMap& h,
                    const FinObj& dom, const FinObj& cod) {
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (!perp(rel, fam[i], h)) {
      throw PreconditionError("is_strong_join: member " + std::to_string(i) + " is not disjoint from h");
    }
  }
  return perp(rel, join(rel, fam, dom, cod), h);
}

std::optional<StrongnessWitness> find_non_strong_join(const InterferenceRel& rel, int obj_size, int max_family) {
  if (obj_size > InterferenceRel::kMaxCustomSize) {
    throw CapacityError("strongness search is capped at object size " +
                        std::to_string(InterferenceRel::kMaxCustomSize));
  }
  using Mask = InterferenceRel::Mask;
  const Mask full = (Mask{1} << obj_size) - 1;
  std::vector<Mask> fam;
  std::optional<StrongnessWitness> found;

  // Families are built in increasing mask order so each is visited once.
  auto check = [&]() {
    if (fam.size() < 2) return;
    Mask u = 0;
    for (Mask m : fam) u |= m;
    for (Mask h = 1; h <= full; ++h) {
      bool all = true;
      for (Mask m : fam) all = all && rel.relates(obj_size, m, h);
      if (all && !rel.relates(obj_size, u, h)) {
        found = StrongnessWitness{obj_size, fam, h};
        return;
      }
    }
  };
  auto rec = [&](auto&& self, Mask start, Mask used) -> void {
    check();
    if (found || static_cast<int>(fam.size()) >= max_family) return;
    for (Mask m = start; m <= full && !found; ++m) {
      if (m == 0 || (m & used)) continue;
      bool ok = true;
      for (Mask o : fam) ok = ok && rel.relates(obj_size, o, m);
      if (!ok) continue;
      fam.push_back(m);
      self(self, m + 1, used | m);
      fam.pop_back();
    }
  };
  rec(rec, 1, 0);
  return found;
}

}  // namespace iterlab
