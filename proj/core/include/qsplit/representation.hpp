#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qsplit/matrix.hpp"
#include "qsplit/presentation.hpp"

namespace qsplit {

// A finite-dimensional right module as a quiver representation: one exact
// space per vertex and one matrix per arrow, acting on row vectors so that
// the action of a path multiplies its arrow matrices left-to-right.
// Construction checks shapes and that every relation annihilates.
class Representation {
 public:
  Representation(PresentationPtr pres, std::vector<int> dims,
                 std::vector<Matrix> arrow_action);

  const PresentationPtr& presentation() const { return pres_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim_at(int vertex_index) const { return dims_[vertex_index]; }
  int total_dim() const;
  const Matrix& action(int arrow_index) const { return action_[arrow_index]; }
  const std::vector<Matrix>& actions() const { return action_; }

  Matrix path_action(const Path& p) const;

  bool operator==(const Representation& o) const {
    return dims_ == o.dims_ && action_ == o.action_;
  }

 private:
  PresentationPtr pres_;
  std::vector<int> dims_;
  std::vector<Matrix> action_;  // indexed like quiver().arrows()
};

// String module M(p) of a basis path p: one basis vector per position along
// the path. Throws NotBasisPath, or RelationViolated when a non-monomial
// relation fails to annihilate the result.
Representation uniserial_module(PresentationPtr pres, const Path& p);

// Indecomposable projectives e_v·A, one per vertex in vertex order.
std::vector<Representation> projective_modules(PresentationPtr pres);

// Indecomposable injectives D(A·e_v), one per vertex in vertex order.
std::vector<Representation> injective_modules(PresentationPtr pres);

struct SplittingDatum;  // splitting.hpp

// Pulls a module over split(base, datum) back to base: the two halves of the
// split vertex are glued by direct sum, arrow matrices carried blockwise.
Representation restrict_module(PresentationPtr base, const SplittingDatum& sp,
                               const Representation& m);

// A module homomorphism as one matrix per vertex (rows = source fiber,
// columns = target fiber).
struct ModuleMap {
  std::vector<Matrix> maps;

  static ModuleMap identity(const Representation& m);
};

ModuleMap compose(const ModuleMap& f, const ModuleMap& g);  // f then g
bool is_invertible(const ModuleMap& f);

// Basis of Hom(m, n), canonical and deterministic.
std::vector<ModuleMap> hom(const Representation& m, const Representation& n);

int hom_dim(const Representation& m, const Representation& n);

// Exact isomorphism test by bounded deterministic search for an invertible
// homomorphism; the fallback grid is exhaustive (decisive) whenever its size
// is within budget, otherwise the test throws Inconclusive.
bool is_isomorphic(const Representation& m, const Representation& n);

class StructureConstantAlgebra;  // endalgebra.hpp

// End(M_1 ⊕ … ⊕ M_k)^op as a structure-constant algebra over the union of
// the pairwise hom bases. "Opposite" is realized by apply-then order.
StructureConstantAlgebra end_algebra(const std::vector<Representation>& summands);

}  // namespace qsplit
