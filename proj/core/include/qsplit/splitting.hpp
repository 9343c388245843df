#pragma once

#include <string>
#include <vector>

#include "qsplit/presentation.hpp"

namespace qsplit {

// Partition of the arrows around one vertex: S(v) = s1 ⊔ s2 (arrows out),
// E(v) = e1 ⊔ e2 (arrows in). A loop at v appears on both sides.
struct SplittingDatum {
  std::string vertex;
  std::vector<std::string> s1, s2, e1, e2;
};

struct SplitValidation {
  bool valid = false;
  std::vector<std::string> violations;
};

// Checks that the datum is a partition and satisfies the two splitting
// conditions: (1) every cross product a·b with a ∈ e_i, b ∈ s_j, i ≠ j lies
// in the ideal; (2) every non-monomial relation stays uniform and composable
// after the split (checked per crossing of v, plus endpoint coherence across
// terms — the strictest syntactic reading).
SplitValidation validate_splitting_datum(const Presentation& pres,
                                         const SplittingDatum& sp);

// Names given to the two halves of a split vertex.
std::string split_vertex_name(const Quiver& q, const std::string& v, int half);

// The split presentation: v becomes v.1/v.2, arrows keep their names, sources
// and targets follow the partition, and relations that stop being composable
// are dropped (they are non-paths in the new quiver). Throws
// InvalidSplittingDatum if validation fails.
Presentation split(const Presentation& pres, const SplittingDatum& sp);

// Certificate for the radical-preserving embedding A -> A^sp: the basis paths
// of length >= 1 coincide on both sides as arrow sequences.
struct EmbeddingWitness {
  std::string vertex;         // the vertex that was split
  std::string half1, half2;   // its two halves in the target
  int radical_dimension = 0;  // shared dim of J on both sides
  std::vector<Path> shared_basis;  // paths of the source presentation
};

// Verifies the bijection; throws WitnessFailure naming an offending path if
// any basis path fails to transfer (an internal-consistency error for data
// that passed validation).
EmbeddingWitness embedding_witness(const Presentation& before,
                                   const Presentation& after,
                                   const SplittingDatum& sp);

// The constructive splitting data used by the monomialization pipeline:
// isolate the first outgoing arrow (respectively incoming arrow) of a
// branching vertex. Requires a monomial special multiserial presentation and
// |S(v)| > 1 (respectively |E(v)| > 1); throws PreconditionFailed otherwise.
SplittingDatum auto_split_datum_S(const Presentation& pres,
                                  const std::string& v);
SplittingDatum auto_split_datum_E(const Presentation& pres,
                                  const std::string& v);

}  // namespace qsplit
