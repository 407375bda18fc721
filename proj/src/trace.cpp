#include "iterlab/trace.hpp"

namespace iterlab {

Matrix flat_matrix_wand(const Matrix& f, const Matrix& g) {
  return unflatten(kleene_wand(flatten(f), flatten(g)), f.dom(), g.cod());
}

}  // namespace iterlab
