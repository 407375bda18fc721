#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "iterlab/djcomp.hpp"
#include "iterlab/errors.hpp"
#include "iterlab/finpar.hpp"
#include "iterlab/interference.hpp"
#include "iterlab/wand.hpp"

namespace iterlab {

// Base category operations for the matrix construction.
struct ParBase {
  using Map = PartialMap;
  static Map compose(const Map& f, const Map& g) { return iterlab::compose(f, g); }
  static Map restriction(const Map& f) { return iterlab::restriction(f); }
  static Map zero(const FinObj& a, const FinObj& b) { return PartialMap::zero(a, b); }
  static Map identity(const FinObj& a) { return PartialMap::identity(a); }
  static bool perp(const Map& f, const Map& g) { return iterlab::perp(InterferenceRel::maximal(), f, g); }
  static Map join(const Map& f, const Map& g) { return iterlab::join(f, g); }
  static bool is_zero(const Map& f) { return f.is_zero(); }
  static Map wand(const Map& f, const Map& g) { return kleene_wand(f, g); }
  static const FinObj& dom(const Map& f) { return f.dom(); }
  static const FinObj& cod(const Map& f) { return f.cod(); }
  static std::string str(const Map& f) { return to_string(f); }
};

struct DjBase {
  using Map = DjMap;
  static Map compose(const Map& f, const Map& g) { return dj_compose(f, g); }
  static Map restriction(const Map& f) { return dj_restriction(f); }
  static Map zero(const FinObj& a, const FinObj& b) { return DjMap::zero(a, b); }
  static Map identity(const FinObj& a) { return DjMap::identity(a); }
  static bool perp(const Map& f, const Map& g) { return dj_perp(f, g); }
  static Map join(const Map& f, const Map& g) { return dj_join(f, g); }
  static bool is_zero(const Map& f) { return f.is_zero(); }
  static Map wand(const Map& f, const Map& g) { return dj_wand(f, g); }
  static const FinObj& dom(const Map& f) { return f.dom(); }
  static const FinObj& cod(const Map& f) { return f.cod(); }
  static std::string str(const Map& f) { return to_string(f); }
};

// Finite list of base objects; the coproduct is concatenation.
using MatObj = std::vector<FinObj>;

inline MatObj concat(const MatObj& a, const MatObj& b) {
  MatObj out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline MatObj repeat(const MatObj& a, std::size_t n) {
  MatObj out;
  for (std::size_t i = 0; i < n; ++i) out.insert(out.end(), a.begin(), a.end());
  return out;
}

inline MatObj slice(const MatObj& a, std::size_t from, std::size_t to) {
  return MatObj(a.begin() + static_cast<std::ptrdiff_t>(from), a.begin() + static_cast<std::ptrdiff_t>(to));
}

inline bool same_obj(const MatObj& a, const MatObj& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] == b[i])) return false;
  }
  return true;
}

inline std::string describe(const MatObj& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ", ";
    s += a[i].describe();
  }
  return s + ")";
}

inline int total_size(const MatObj& a) {
  int n = 0;
  for (const auto& o : a) n += o.size();
  return n;
}

// n x m grid of base maps, entry (i, j): dom[i] -> cod[j], each row pairwise disjoint.
template <class B>
class BasicMatrix {
 public:
  using Map = typename B::Map;

  BasicMatrix() = default;
  BasicMatrix(MatObj dom, MatObj cod, std::vector<Map> entries)
      : dom_(std::move(dom)), cod_(std::move(cod)), entries_(std::move(entries)) {
    if (entries_.size() != dom_.size() * cod_.size()) {
      throw ShapeError("matrix " + describe(dom_) + " -> " + describe(cod_) + " needs " +
                       std::to_string(dom_.size() * cod_.size()) + " entries, got " + std::to_string(entries_.size()));
    }
    for (std::size_t i = 0; i < rows(); ++i) {
      for (std::size_t j = 0; j < cols(); ++j) {
        const Map& e = at(i, j);
        if (!(B::dom(e) == dom_[i]) || !(B::cod(e) == cod_[j])) {
          throw ShapeError("entry (" + std::to_string(i) + ", " + std::to_string(j) + ") is not a map " +
                           dom_[i].describe() + " -> " + cod_[j].describe());
        }
      }
      for (std::size_t j = 0; j < cols(); ++j) {
        for (std::size_t k = j + 1; k < cols(); ++k) {
          if (!B::perp(at(i, j), at(i, k))) {
            throw PreconditionError("row " + std::to_string(i) + " is not disjoint: entries " + std::to_string(j) +
                                    " and " + std::to_string(k) + " overlap (" + B::str(at(i, j)) + ", " +
                                    B::str(at(i, k)) + ")");
          }
        }
      }
    }
  }

  static BasicMatrix zero(const MatObj& dom, const MatObj& cod) {
    std::vector<Map> e;
    e.reserve(dom.size() * cod.size());
    for (const auto& a : dom) {
      for (const auto& b : cod) e.push_back(B::zero(a, b));
    }
    return BasicMatrix(dom, cod, std::move(e), Unchecked{});
  }

  static BasicMatrix identity(const MatObj& obj) {
    std::vector<Map> e;
    for (std::size_t i = 0; i < obj.size(); ++i) {
      for (std::size_t j = 0; j < obj.size(); ++j) e.push_back(i == j ? B::identity(obj[i]) : B::zero(obj[i], obj[j]));
    }
    return BasicMatrix(obj, obj, std::move(e), Unchecked{});
  }

  // A single base map as a 1x1 matrix.
  static BasicMatrix single(const Map& f) { return BasicMatrix({B::dom(f)}, {B::cod(f)}, {f}); }

  const MatObj& dom() const { return dom_; }
  const MatObj& cod() const { return cod_; }
  std::size_t rows() const { return dom_.size(); }
  std::size_t cols() const { return cod_.size(); }
  const Map& at(std::size_t i, std::size_t j) const { return entries_[i * cod_.size() + j]; }
  const std::vector<Map>& entries() const { return entries_; }

  bool is_zero() const {
    for (const auto& e : entries_) {
      if (!B::is_zero(e)) return false;
    }
    return true;
  }

  friend bool operator==(const BasicMatrix& a, const BasicMatrix& b) {
    return same_obj(a.dom_, b.dom_) && same_obj(a.cod_, b.cod_) && a.entries_ == b.entries_;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i) s += "; ";
      for (std::size_t j = 0; j < cols(); ++j) {
        if (j) s += ' ';
        s += B::str(at(i, j));
      }
    }
    return s + "]";
  }

  struct Unchecked {};
  // Skips the disjointness scan for results that are disjoint by construction.
  BasicMatrix(MatObj dom, MatObj cod, std::vector<Map> entries, Unchecked)
      : dom_(std::move(dom)), cod_(std::move(cod)), entries_(std::move(entries)) {}

 private:
  MatObj dom_;
  MatObj cod_;
  std::vector<Map> entries_;
};

using Matrix = BasicMatrix<ParBase>;
using DjMatrix = BasicMatrix<DjBase>;

// Number of parts in each consecutive block.
using Partition = std::vector<std::size_t>;

inline std::vector<std::size_t> block_offsets(const Partition& p, std::size_t total) {
  std::vector<std::size_t> off{0};
  for (std::size_t c : p) off.push_back(off.back() + c);
  if (off.back() != total) {
    throw ShapeError("partition covers " + std::to_string(off.back()) + " parts but the object has " +
                     std::to_string(total));
  }
  return off;
}

template <class B>
BasicMatrix<B> mat_compose(const BasicMatrix<B>& f, const BasicMatrix<B>& g) {
  if (!same_obj(f.cod(), g.dom())) {
    throw ShapeError("cannot compose matrices: " + describe(f.cod()) + " vs " + describe(g.dom()));
  }
  using Map = typename B::Map;
  std::vector<Map> e;
  e.reserve(f.rows() * g.cols());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t k = 0; k < g.cols(); ++k) {
      Map acc = B::zero(f.dom()[i], g.cod()[k]);
      for (std::size_t j = 0; j < f.cols(); ++j) acc = B::join(acc, B::compose(f.at(i, j), g.at(j, k)));
      e.push_back(std::move(acc));
    }
  }
  return BasicMatrix<B>(f.dom(), g.cod(), std::move(e));
}

template <class B>
BasicMatrix<B> mat_compose(std::initializer_list<BasicMatrix<B>> chain) {
  auto it = chain.begin();
  BasicMatrix<B> acc = *it;
  for (++it; it != chain.end(); ++it) acc = mat_compose(acc, *it);
  return acc;
}

template <class B>
BasicMatrix<B> mat_restriction(const BasicMatrix<B>& f) {
  using Map = typename B::Map;
  std::vector<Map> e;
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t k = 0; k < f.rows(); ++k) {
      if (i != k) {
        e.push_back(B::zero(f.dom()[i], f.dom()[k]));
        continue;
      }
      Map acc = B::zero(f.dom()[i], f.dom()[i]);
      for (std::size_t j = 0; j < f.cols(); ++j) acc = B::join(acc, B::restriction(f.at(i, j)));
      e.push_back(std::move(acc));
    }
  }
  return BasicMatrix<B>(f.dom(), f.dom(), std::move(e), typename BasicMatrix<B>::Unchecked{});
}

template <class B>
bool mat_leq(const BasicMatrix<B>& f, const BasicMatrix<B>& g) {
  if (!same_obj(f.dom(), g.dom()) || !same_obj(f.cod(), g.cod())) throw ShapeError("mat_leq: matrices not parallel");
  return mat_compose(mat_restriction(f), g) == f;
}

// Decision-disjointness, decided entrywise: every F(i, j) is disjoint from every G(i, k).
template <class B>
bool perp_d(const BasicMatrix<B>& f, const BasicMatrix<B>& g) {
  if (!same_obj(f.dom(), g.dom())) throw ShapeError("perp_d: domains differ");
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      for (std::size_t k = 0; k < g.cols(); ++k) {
        if (!B::perp(f.at(i, j), g.at(i, k))) return false;
      }
    }
  }
  return true;
}

template <class B>
BasicMatrix<B> mat_join(const BasicMatrix<B>& f, const BasicMatrix<B>& g) {
  if (!same_obj(f.dom(), g.dom()) || !same_obj(f.cod(), g.cod())) throw ShapeError("mat_join: matrices not parallel");
  if (!perp_d(f, g)) throw PreconditionError("mat_join: matrices are not decision-disjoint");
  using Map = typename B::Map;
  std::vector<Map> e;
  for (std::size_t n = 0; n < f.entries().size(); ++n) e.push_back(B::join(f.entries()[n], g.entries()[n]));
  return BasicMatrix<B>(f.dom(), f.cod(), std::move(e));
}

// Block-diagonal sum f + g.
template <class B>
BasicMatrix<B> direct_sum(const BasicMatrix<B>& f, const BasicMatrix<B>& g) {
  MatObj dom = concat(f.dom(), g.dom());
  MatObj cod = concat(f.cod(), g.cod());
  using Map = typename B::Map;
  std::vector<Map> e;
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (std::size_t j = 0; j < cod.size(); ++j) {
      const bool top = i < f.rows(), left = j < f.cols();
      if (top && left) {
        e.push_back(f.at(i, j));
      } else if (!top && !left) {
        e.push_back(g.at(i - f.rows(), j - f.cols()));
      } else {
        e.push_back(B::zero(dom[i], cod[j]));
      }
    }
  }
  return BasicMatrix<B>(std::move(dom), std::move(cod), std::move(e), typename BasicMatrix<B>::Unchecked{});
}

template <class B>
BasicMatrix<B> direct_sum(const std::vector<BasicMatrix<B>>& fs) {
  if (fs.empty()) return BasicMatrix<B>::zero({}, {});
  BasicMatrix<B> acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = direct_sum(acc, fs[i]);
  return acc;
}

// Sub-matrix on part ranges [r0, r1) x [c0, c1).
template <class B>
BasicMatrix<B> submatrix(const BasicMatrix<B>& f, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
  if (r0 > r1 || r1 > f.rows() || c0 > c1 || c1 > f.cols()) throw ShapeError("submatrix: range out of bounds");
  using Map = typename B::Map;
  std::vector<Map> e;
  for (std::size_t i = r0; i < r1; ++i) {
    for (std::size_t j = c0; j < c1; ++j) e.push_back(f.at(i, j));
  }
  return BasicMatrix<B>(slice(f.dom(), r0, r1), slice(f.cod(), c0, c1), std::move(e),
                        typename BasicMatrix<B>::Unchecked{});
}

// [f_1 ... f_k]: A -> B_1 + ... + B_k. Rows must stay disjoint.
template <class B>
BasicMatrix<B> tuple_row(const std::vector<BasicMatrix<B>>& fs, const MatObj& dom) {
  MatObj cod;
  for (const auto& f : fs) {
    if (!same_obj(f.dom(), dom)) throw ShapeError("tuple_row: blocks have different domains");
    cod = concat(cod, f.cod());
  }
  using Map = typename B::Map;
  std::vector<Map> e;
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (const auto& f : fs) {
      for (std::size_t j = 0; j < f.cols(); ++j) e.push_back(f.at(i, j));
    }
  }
  return BasicMatrix<B>(dom, std::move(cod), std::move(e));
}

// Copairing [f_1; ...; f_k]: A_1 + ... + A_k -> C.
template <class B>
BasicMatrix<B> copair(const std::vector<BasicMatrix<B>>& fs, const MatObj& cod) {
  MatObj dom;
  using Map = typename B::Map;
  std::vector<Map> e;
  for (const auto& f : fs) {
    if (!same_obj(f.cod(), cod)) throw ShapeError("copair: blocks have different codomains");
    dom = concat(dom, f.dom());
    e.insert(e.end(), f.entries().begin(), f.entries().end());
  }
  return BasicMatrix<B>(std::move(dom), cod, std::move(e), typename BasicMatrix<B>::Unchecked{});
}

// Injection of summand j into the coproduct of all summands.
template <class B>
BasicMatrix<B> injection(const std::vector<MatObj>& summands, std::size_t j) {
  if (j >= summands.size()) throw ShapeError("injection index out of range");
  std::vector<BasicMatrix<B>> blocks;
  for (std::size_t k = 0; k < summands.size(); ++k) {
    blocks.push_back(k == j ? BasicMatrix<B>::identity(summands[j]) : BasicMatrix<B>::zero(summands[j], summands[k]));
  }
  return tuple_row(blocks, summands[j]);
}

template <class B>
BasicMatrix<B> quasi_projection(const std::vector<MatObj>& summands, std::size_t j) {
  if (j >= summands.size()) throw ShapeError("quasi-projection index out of range");
  std::vector<BasicMatrix<B>> blocks;
  for (std::size_t k = 0; k < summands.size(); ++k) {
    blocks.push_back(k == j ? BasicMatrix<B>::identity(summands[j]) : BasicMatrix<B>::zero(summands[k], summands[j]));
  }
  return copair(blocks, summands[j]);
}

// A + ... + A (n copies) -> A.
template <class B>
BasicMatrix<B> codiagonal(const MatObj& a, std::size_t n) {
  return copair(std::vector<BasicMatrix<B>>(n, BasicMatrix<B>::identity(a)), a);
}

// A + B -> B + A.
template <class B>
BasicMatrix<B> symmetry(const MatObj& a, const MatObj& b) {
  return copair(std::vector<BasicMatrix<B>>{injection<B>({b, a}, 1), injection<B>({b, a}, 0)}, concat(b, a));
}

// The sum of injections i_1 + ... + i_k: B_1 + ... + B_k -> B + ... + B (k copies),
// where B is the concatenation of the blocks.
template <class B>
BasicMatrix<B> sum_of_injections(const std::vector<MatObj>& blocks) {
  std::vector<BasicMatrix<B>> parts;
  for (std::size_t j = 0; j < blocks.size(); ++j) parts.push_back(injection<B>(blocks, j));
  return direct_sum(parts);
}

template <class B>
std::vector<MatObj> split_obj(const MatObj& obj, const Partition& p) {
  auto off = block_offsets(p, obj.size());
  std::vector<MatObj> out;
  for (std::size_t b = 0; b + 1 < off.size(); ++b) out.push_back(slice(obj, off[b], off[b + 1]));
  return out;
}

// The decision of f: A -> B_1 + ... + B_k (cod split by the partition):
// an A -> A + ... + A matrix whose block b is diagonal with entries
// the join of the restrictions of f's row over block b.
template <class B>
BasicMatrix<B> decision_of(const BasicMatrix<B>& f, const Partition& cod_blocks) {
  auto off = block_offsets(cod_blocks, f.cols());
  const std::size_t k = cod_blocks.size();
  const std::size_t n = f.rows();
  using Map = typename B::Map;
  MatObj cod = repeat(f.dom(), k);
  std::vector<Map> e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < n * k; ++c) {
      const std::size_t b = c / n, i2 = c % n;
      Map acc = B::zero(f.dom()[i], cod[c]);
      if (i2 == i) {
        for (std::size_t j = off[b]; j < off[b + 1]; ++j) acc = B::join(acc, B::restriction(f.at(i, j)));
      }
      e.push_back(std::move(acc));
    }
  }
  return BasicMatrix<B>(f.dom(), std::move(cod), std::move(e));
}

// Candidate separating decision [restr(f_1) ... restr(f_k)]: A -> A + ... + A, or nothing
// when the restrictions overlap (the family is not decision-separated).
template <class B>
std::optional<BasicMatrix<B>> try_separating_decision(const std::vector<BasicMatrix<B>>& fs, const MatObj& dom) {
  std::vector<BasicMatrix<B>> blocks;
  for (const auto& f : fs) {
    if (!same_obj(f.dom(), dom)) throw ShapeError("separating decision: maps have different domains");
    blocks.push_back(mat_restriction(f));
  }
  try {
    return tuple_row(blocks, dom);
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
}

template <class B>
BasicMatrix<B> separating_decision(const std::vector<BasicMatrix<B>>& fs, const MatObj& dom) {
  for (std::size_t a = 0; a < fs.size(); ++a) {
    for (std::size_t b = a + 1; b < fs.size(); ++b) {
      if (!perp_d(fs[a], fs[b])) {
        for (std::size_t i = 0; i < fs[a].rows(); ++i) {
          for (std::size_t j = 0; j < fs[a].cols(); ++j) {
            for (std::size_t k = 0; k < fs[b].cols(); ++k) {
              if (!B::perp(fs[a].at(i, j), fs[b].at(i, k))) {
                throw PreconditionError("no separating decision: entry (" + std::to_string(i) + ", " +
                                        std::to_string(j) + ") of map " + std::to_string(a) + " overlaps entry (" +
                                        std::to_string(i) + ", " + std::to_string(k) + ") of map " +
                                        std::to_string(b));
              }
            }
          }
        }
      }
    }
  }
  return *try_separating_decision(fs, dom);
}

template <class B>
BasicMatrix<B> separating_decision(const BasicMatrix<B>& f, const BasicMatrix<B>& g) {
  return separating_decision(std::vector<BasicMatrix<B>>{f, g}, f.dom());
}

// The two decision equations for d: A -> A + ... + A (k copies).
template <class B>
bool is_decision(const BasicMatrix<B>& d, std::size_t k) {
  const MatObj& a = d.dom();
  if (!same_obj(d.cod(), repeat(a, k))) return false;
  if (!(mat_restriction(d) == mat_compose(d, codiagonal<B>(a, k)))) return false;
  std::vector<MatObj> copies(k, a);
  std::vector<BasicMatrix<B>> ds(k, d);
  std::vector<BasicMatrix<B>> injs;
  for (std::size_t j = 0; j < k; ++j) injs.push_back(injection<B>(copies, j));
  return mat_compose(d, direct_sum(ds)) == mat_compose(d, direct_sum(injs));
}

// Column of d's blocks: A + ... + A -> A.
template <class B>
BasicMatrix<B> decision_inverse(const BasicMatrix<B>& d, std::size_t k) {
  std::vector<MatObj> copies(k, d.dom());
  std::vector<BasicMatrix<B>> blocks;
  for (std::size_t j = 0; j < k; ++j) blocks.push_back(mat_compose(d, quasi_projection<B>(copies, j)));
  return copair(blocks, d.dom());
}

// The equations making inv a restriction inverse of m.
template <class B>
bool is_restriction_inverse(const BasicMatrix<B>& m, const BasicMatrix<B>& inv) {
  return mat_compose(m, inv) == mat_restriction(m) && mat_compose(inv, m) == mat_restriction(inv);
}

// Flat view of a matrix over the base model: a partial map between the disjoint unions.
Matrix unflatten(const PartialMap& f, const MatObj& dom, const MatObj& cod);
PartialMap flatten(const Matrix& f);
std::vector<int> part_offsets(const MatObj& obj);

// Restriction inverse of m when m is injective on its domain of definition.
std::optional<Matrix> restriction_inverse(const Matrix& m);

}  // namespace iterlab
