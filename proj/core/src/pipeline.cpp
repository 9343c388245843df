#include "qsplit/pipeline.hpp"

#include <algorithm>

#include "qsplit/endalgebra.hpp"

namespace qsplit {

int complexity_c(const Quiver& q) {
  int c = 0;
  for (const std::string& v : q.vertices()) {
    if (q.arrows_from(v).size() > 1) ++c;
    if (q.arrows_into(v).size() > 1) ++c;
  }
  return c;
}

int complexity_c(const Presentation& pres) { return complexity_c(pres.quiver()); }

int PipelineTrace::elementary_split_count() const {
  int n = 0;
  for (const PipelineStep& s : steps) n += static_cast<int>(s.splits.size());
  return n;
}

std::vector<std::pair<PresentationPtr, const SplitRecord*>>
PipelineTrace::split_chain() const {
  std::vector<std::pair<PresentationPtr, const SplitRecord*>> out;
  PresentationPtr before = input;
  for (const PipelineStep& s : steps)
    for (const SplitRecord& r : s.splits) {
      out.push_back({before, &r});
      before = r.result;
    }
  return out;
}

PipelineTrace run_pipeline(PresentationPtr pres) {
  require(pres->is_monomial(), errc::not_monomial,
          "the splitting pipeline handles monomial presentations; factor out "
          "the socle first");
  require(pres->is_special_multiserial(), errc::not_special_multiserial,
          "input is not special multiserial");

  PipelineTrace trace;
  trace.input = pres;
  trace.initial_c = complexity_c(*pres);
  for (const std::string& v : pres->quiver().vertices())
    trace.vertex_origin[v] = v;

  const int dim_radical = pres->radical_dimension();
  PresentationPtr cur = pres;
  int c = trace.initial_c;
  while (c > 0) {
    // Smallest vertex with outgoing branching first, then incoming.
    std::string vertex;
    char side = 'S';
    for (const std::string& v : cur->quiver().vertices())
      if (cur->quiver().arrows_from(v).size() > 1) {
        vertex = v;
        break;
      }
    if (vertex.empty()) {
      side = 'E';
      for (const std::string& v : cur->quiver().vertices())
        if (cur->quiver().arrows_into(v).size() > 1) {
          vertex = v;
          break;
        }
    }
    require(!vertex.empty(), errc::internal_invariant_violation,
            "positive complexity but no branching vertex");

    PipelineStep step;
    step.vertex = vertex;
    step.side = side;
    // Resolve this side of the vertex completely; each elementary split
    // isolates one arrow, and the remainder half inherits what is left.
    std::string target = vertex;
    for (;;) {
      SplittingDatum datum = (side == 'S') ? auto_split_datum_S(*cur, target)
                                           : auto_split_datum_E(*cur, target);
      auto next = std::make_shared<Presentation>(split(*cur, datum));
      EmbeddingWitness witness = embedding_witness(*cur, *next, datum);
      require(witness.radical_dimension == dim_radical,
              errc::internal_invariant_violation,
              "radical dimension drifted along the pipeline");
      require(next->is_monomial() && next->is_special_multiserial(),
              errc::internal_invariant_violation,
              "split presentation lost the special multiserial property");
      const std::string origin = trace.vertex_origin.at(target);
      trace.vertex_origin.erase(target);
      trace.vertex_origin[witness.half1] = origin;
      trace.vertex_origin[witness.half2] = origin;
      const std::string remainder = witness.half2;
      step.splits.push_back({std::move(datum), next, std::move(witness)});
      cur = next;
      if (side == 'S' && cur->quiver().arrows_from(remainder).size() > 1) {
        target = remainder;
        continue;
      }
      if (side == 'E' && cur->quiver().arrows_into(remainder).size() > 1) {
        target = remainder;
        continue;
      }
      break;
    }
    step.c_after = complexity_c(*cur);
    require(step.c_after < c, errc::internal_invariant_violation,
            "complexity failed to decrease at vertex '" + vertex + "'");
    c = step.c_after;
    trace.steps.push_back(std::move(step));
    require(static_cast<int>(trace.steps.size()) <= trace.initial_c,
            errc::internal_invariant_violation, "pipeline overran its budget");
  }

  trace.final_presentation = cur;
  for (const Quiver& comp : connected_components(cur->quiver())) {
    ShapeResult shape = classify_shape(comp);
    require(shape.shape != QuiverShape::other,
            errc::internal_invariant_violation,
            "final component is neither a line nor a cycle");
    if (shape.shape == QuiverShape::cycle_a_tilde) {
      // A cycle with no relation would not be finite dimensional.
      bool has_relation = false;
      for (const Relation& r : cur->relations())
        if (comp.has_vertex(r.terms.front().path.source)) {
          has_relation = true;
          break;
        }
      require(has_relation, errc::internal_invariant_violation,
              "cyclic component without a relation");
    }
    trace.component_shapes.push_back(shape);
  }
  return trace;
}

std::vector<Path> uniserials_of_target(const PipelineTrace& trace) {
  return trace.final_presentation->basis_paths();
}

Representation pull_back(const PipelineTrace& trace, const Representation& m) {
  auto chain = trace.split_chain();
  Representation cur = m;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it)
    cur = restrict_module(it->first, it->second->datum, cur);
  return cur;
}

GeneratorResult auslander_generator(PresentationPtr pres) {
  GeneratorResult out;
  out.trace = run_pipeline(pres);
  pres->compute_basis();

  std::vector<Representation> projs = projective_modules(pres);
  for (size_t i = 0; i < projs.size(); ++i)
    out.summands.push_back(
        {std::move(projs[i]), "P(" + pres->quiver().vertices()[i] + ")"});
  std::vector<Representation> injs = injective_modules(pres);
  for (size_t i = 0; i < injs.size(); ++i) {
    bool dup = false;
    for (const GeneratorSummand& s : out.summands)
      if (is_isomorphic(s.rep, injs[i])) {
        dup = true;
        break;
      }
    if (!dup)
      out.summands.push_back(
          {std::move(injs[i]), "I(" + pres->quiver().vertices()[i] + ")"});
  }

  // Uniserials of the target pulled back along the chain; identified by
  // their path downstairs, then checked against the projectives/injectives.
  std::vector<Path> seen;
  for (const Path& pb : uniserials_of_target(out.trace)) {
    Path pa;
    pa.arrows = pb.arrows;
    if (pb.trivial())
      pa.source = out.trace.vertex_origin.at(pb.source);
    else
      pa.source = pres->quiver().arrow(pb.arrows.front()).source;
    if (std::find(seen.begin(), seen.end(), pa) != seen.end()) continue;
    seen.push_back(pa);
    Representation rep = pull_back(
        out.trace, uniserial_module(out.trace.final_presentation, pb));
    bool dup = false;
    for (const GeneratorSummand& s : out.summands)
      if (is_isomorphic(s.rep, rep)) {
        dup = true;
        break;
      }
    if (!dup) out.summands.push_back({std::move(rep), "M(" + pa.str() + ")"});
  }
  return out;
}

VerifyReport verify_repdim_le_3(PresentationPtr pres, int bound) {
  VerifyReport out;
  GeneratorResult gen = auslander_generator(pres);
  out.trace = std::move(gen.trace);
  out.num_summands = static_cast<int>(gen.summands.size());
  std::vector<Representation> reps;
  for (GeneratorSummand& s : gen.summands) reps.push_back(std::move(s.rep));
  StructureConstantAlgebra endo = end_algebra(reps);
  out.end_dim = endo.dim();
  out.gldim = global_dimension(endo, bound);
  out.ok = out.gldim.gldim.has_value() && *out.gldim.gldim <= 3;
  return out;
}

}  // namespace qsplit
