#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qsplit/matrix.hpp"
#include "qsplit/quiver.hpp"
#include "qsplit/scalar.hpp"

namespace qsplit {

inline constexpr int kDefaultMaxLen = 64;

struct RelationTerm {
  Scalar coeff;
  Path path;

  bool operator==(const RelationTerm& o) const = default;
};

// A uniform element of the path algebra: a nonempty scalar combination of
// parallel paths. Normalized on construction by Presentation: duplicate paths
// merged, zero terms dropped, leading coefficient 1.
struct Relation {
  std::vector<RelationTerm> terms;

  bool is_monomial() const { return terms.size() == 1; }
  bool operator==(const Relation& o) const = default;
};

// Linear combination of basis paths, keyed by dense basis index.
using LinComb = std::map<int, Scalar>;

struct BasisReport {
  int dimension = 0;
  int radical_dimension = 0;
  int nilpotency_index = 0;  // smallest L with J^L inside the ideal
  bool monomial = false;
  std::vector<std::vector<Path>> by_length;  // index = path length
};

struct AdmissibilityReport {
  bool admissible = false;
  int nilpotency_index = 0;  // valid when admissible
  std::string diagnostics;
};

struct ConditionSWitness {
  std::string arrow;
  bool successor_side;  // true: two continuations; false: two predecessors
  std::string first;
  std::string second;
};

struct ConditionSReport {
  bool holds = false;
  std::vector<ConditionSWitness> witnesses;
};

enum class RelationClass { monomial, socle_combination, violation };
const char* relation_class_name(RelationClass c);

enum class Side { left, right };

// An algebra presentation KQ/I with exact rational coefficients. The path
// basis, normal forms, socle and all verdicts are computed lazily on first
// use and cached; after that the object is immutable and safe to share.
class Presentation {
 public:
  Presentation(Quiver quiver, std::vector<Relation> relations,
               std::string name = "A");

  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const std::string& name() const { return name_; }

  bool is_monomial() const;

  // Basis machinery. Throws NonAdmissibleGenerator if a relation term is
  // shorter than 2, NotFiniteDimensional if paths survive past max_len.
  const BasisReport& compute_basis(int max_len = kDefaultMaxLen) const;
  bool basis_ready() const { return table_ != nullptr; }

  const std::vector<Path>& basis_paths() const;  // degree-major order
  int dimension() const;
  int radical_dimension() const;
  int nilpotency_index() const;

  // Canonical image of a path (or combination) in the chosen path basis.
  // The path must be a valid path of the quiver; the result is empty when the
  // element lies in the ideal.
  LinComb normal_form(const Path& p) const;
  LinComb normal_form(const std::vector<RelationTerm>& combo) const;
  bool is_zero_mod_ideal(const Path& p) const;

  AdmissibilityReport is_admissible(int max_len = kDefaultMaxLen) const;
  ConditionSReport check_condition_S() const;
  bool is_special_multiserial(int max_len = kDefaultMaxLen) const;

  // Per-path socle test: every arrow continuation on the given side lands in
  // the ideal. p must be a basis path (throws UnknownBasisPath).
  bool socle_membership(const Path& p, Side side) const;

  std::vector<RelationClass> classify_relations() const;

  // Right socle of the algebra as a subspace over the path basis.
  const Subspace& right_socle() const;
  int socle_dimension() const;

  // Presents A/soc(A) for the right socle. Monomial output whenever the input
  // is special multiserial.
  Presentation socle_quotient() const;

  bool operator==(const Presentation& o) const {
    return quiver_ == o.quiver_ && relations_ == o.relations_;
  }

 private:
  struct Table;
  const Table& table(int max_len) const;

  Quiver quiver_;
  std::vector<Relation> relations_;
  std::string name_;

  mutable std::shared_ptr<const Table> table_;
  mutable std::shared_ptr<const Subspace> socle_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

inline PresentationPtr make_presentation(Quiver q, std::vector<Relation> rels,
                                         std::string name = "A") {
  return std::make_shared<Presentation>(std::move(q), std::move(rels),
                                        std::move(name));
}

}  // namespace qsplit
