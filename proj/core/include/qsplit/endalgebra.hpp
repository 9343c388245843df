#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsplit/matrix.hpp"
#include "qsplit/scalar.hpp"

namespace qsplit {

// A finite-dimensional unital algebra given by a basis and its full
// multiplication table. Associativity and the identity laws are checked on
// construction: on all basis triples up to dimension 64, on a deterministic
// sample above that.
class StructureConstantAlgebra {
 public:
  using Vec = std::vector<Scalar>;
  using SparseVec = std::map<int, Scalar>;

  StructureConstantAlgebra(int dim, std::vector<std::vector<SparseVec>> table,
                           Vec identity);

  int dim() const { return dim_; }
  const SparseVec& basis_product(int i, int j) const { return table_[i][j]; }
  const Vec& identity() const { return identity_; }

  Vec multiply(const Vec& x, const Vec& y) const;
  // Matrix of y ↦ x·y on row vectors.
  Matrix left_mult_matrix(const Vec& x) const;
  // Matrix of x ↦ x·y on row vectors.
  Matrix right_mult_matrix(const Vec& y) const;

  Vec basis_vec(int i) const;

 private:
  void check_axioms() const;

  int dim_;
  std::vector<std::vector<SparseVec>> table_;  // table_[i][j] = e_i · e_j
  Vec identity_;
};

struct RadicalResult {
  Subspace radical;       // Jacobson radical as a subspace of the algebra
  int nilpotency_index;   // smallest k with radical^k = 0
};

// Radical via the regular trace form (characteristic zero). The result is
// verified nilpotent and the semisimple quotient's trace form nondegenerate.
RadicalResult radical(const StructureConstantAlgebra& alg);

// Complete orthogonal set of primitive idempotents. Requires the semisimple
// quotient to split over Q; throws NonSplitQuotient when it provably does
// not, LiftingExhausted when the deterministic trial budget runs out.
std::vector<StructureConstantAlgebra::Vec> primitive_idempotents(
    const StructureConstantAlgebra& alg);

struct GldimReport {
  int radical_nilpotency = 0;
  int num_simples = 0;
  // Projective dimension per simple; nullopt = resolution passed the bound.
  std::vector<std::optional<int>> pd_by_simple;
  std::optional<int> gldim;
  int bound = 0;
};

// Global dimension by minimal projective resolutions of the simple right
// modules, exact over Q. Resolutions longer than `bound` report ExceedsBound.
GldimReport global_dimension(const StructureConstantAlgebra& alg,
                             int bound = 5);

}  // namespace qsplit
