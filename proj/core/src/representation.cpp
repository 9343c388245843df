#include "qsplit/representation.hpp"

#include <algorithm>

#include "qsplit/endalgebra.hpp"
#include "qsplit/splitting.hpp"

namespace qsplit {

Representation::Representation(PresentationPtr pres, std::vector<int> dims,
                               std::vector<Matrix> arrow_action)
    : pres_(std::move(pres)), dims_(std::move(dims)),
      action_(std::move(arrow_action)) {
  const Quiver& q = pres_->quiver();
  require(dims_.size() == q.vertices().size(),
          errc::internal_invariant_violation, "dimension vector length");
  require(action_.size() == q.arrows().size(),
          errc::internal_invariant_violation, "one matrix per arrow required");
  for (size_t i = 0; i < action_.size(); ++i) {
    const Arrow& a = q.arrows()[i];
    require(action_[i].rows() == dims_[q.vertex_index(a.source)] &&
                action_[i].cols() == dims_[q.vertex_index(a.target)],
            errc::internal_invariant_violation,
            "matrix shape mismatch on arrow '" + a.name + "'");
  }
  for (const Relation& r : pres_->relations()) {
    const Path& first = r.terms.front().path;
    Matrix sum(dims_[q.vertex_index(first.source)],
               dims_[q.vertex_index(path_end(q, first))]);
    for (const RelationTerm& term : r.terms)
      sum = sum + path_action(term.path).scaled(term.coeff);
    require(sum.is_zero(), errc::relation_violated,
            "relation with leading term " + first.str() +
              " does not annihilate the module");
  }
}

int Representation::total_dim() const {
  int n = 0;
  for (int d : dims_) n += d;
  return n;
}

Matrix Representation::path_action(const Path& p) const {
  const Quiver& q = pres_->quiver();
  validate_path(q, p);
  Matrix m = Matrix::identity(dims_[q.vertex_index(p.source)]);
  for (const std::string& name : p.arrows) m = m * action_[q.arrow_index(name)];
  return m;
}

Representation uniserial_module(PresentationPtr pres, const Path& p) {
  const Quiver& q = pres->quiver();
  const auto& basis = pres->basis_paths();
  require(std::find(basis.begin(), basis.end(), p) != basis.end(),
          errc::not_basis_path, p.str() + " is not a basis path");
  // Vertex visited at each position along the path.
  std::vector<int> vertex_at(p.length() + 1);
  vertex_at[0] = q.vertex_index(p.source);
  for (int i = 0; i < p.length(); ++i)
    vertex_at[i + 1] = q.vertex_index(q.arrow(p.arrows[i]).target);

  std::vector<int> dims(q.vertices().size(), 0);
  std::vector<int> slot(p.length() + 1);  // index inside the vertex fiber
  for (int i = 0; i <= p.length(); ++i) slot[i] = dims[vertex_at[i]]++;

  std::vector<Matrix> action;
  for (const Arrow& a : q.arrows()) {
    Matrix m(dims[q.vertex_index(a.source)], dims[q.vertex_index(a.target)]);
    for (int i = 1; i <= p.length(); ++i)
      if (p.arrows[i - 1] == a.name) m.at(slot[i - 1], slot[i]) = 1;
    action.push_back(std::move(m));
  }
  return Representation(pres, std::move(dims), std::move(action));
}

namespace {

// Per-vertex fiber layout for a family of basis paths: global basis index ->
// position inside its vertex fiber.
struct FiberLayout {
  std::vector<int> dims;                 // per vertex
  std::map<int, int> slot_of_basis;      // global basis index -> fiber slot
  std::map<int, int> vertex_of_basis;    // global basis index -> vertex index
};

FiberLayout layout(const Presentation& pres,
                   const std::vector<int>& basis_indices, bool by_source) {
  const Quiver& q = pres.quiver();
  FiberLayout out;
  out.dims.assign(q.vertices().size(), 0);
  for (int bi : basis_indices) {
    const Path& p = pres.basis_paths()[bi];
    int v = q.vertex_index(by_source ? p.source : path_end(q, p));
    out.vertex_of_basis[bi] = v;
    out.slot_of_basis[bi] = out.dims[v]++;
  }
  return out;
}

}  // namespace

std::vector<Representation> projective_modules(PresentationPtr pres) {
  const Quiver& q = pres->quiver();
  const auto& basis = pres->basis_paths();
  std::vector<Representation> out;
  for (const std::string& v : q.vertices()) {
    std::vector<int> mine;
    for (size_t bi = 0; bi < basis.size(); ++bi)
      if (basis[bi].source == v) mine.push_back(static_cast<int>(bi));
    // Fiber at w: paths from v ending at w; arrows act by right concatenation.
    FiberLayout lay = layout(*pres, mine, /*by_source=*/false);
    std::vector<Matrix> action;
    for (const Arrow& a : q.arrows()) {
      Matrix m(lay.dims[q.vertex_index(a.source)],
               lay.dims[q.vertex_index(a.target)]);
      for (int bi : mine) {
        if (lay.vertex_of_basis[bi] != q.vertex_index(a.source)) continue;
        Path ext = basis[bi];
        ext.arrows.push_back(a.name);
        for (const auto& [ui, c] : pres->normal_form(ext))
          m.at(lay.slot_of_basis[bi], lay.slot_of_basis[ui]) = c;
      }
      action.push_back(std::move(m));
    }
    out.emplace_back(pres, lay.dims, std::move(action));
  }
  return out;
}

std::vector<Representation> injective_modules(PresentationPtr pres) {
  const Quiver& q = pres->quiver();
  const auto& basis = pres->basis_paths();
  std::vector<Representation> out;
  for (const std::string& v : q.vertices()) {
    std::vector<int> mine;  // paths ending at v; duals indexed by source
    for (size_t bi = 0; bi < basis.size(); ++bi)
      if (path_end(q, basis[bi]) == v) mine.push_back(static_cast<int>(bi));
    FiberLayout lay = layout(*pres, mine, /*by_source=*/true);
    std::vector<Matrix> action;
    for (const Arrow& a : q.arrows()) {
      int sv = q.vertex_index(a.source), tv = q.vertex_index(a.target);
      Matrix m(lay.dims[sv], lay.dims[tv]);
      // q*·a = Σ_u ⟨q, nf(a·u)⟩ u*: transpose of left concatenation by a.
      for (int ui : mine) {
        if (lay.vertex_of_basis[ui] != tv) continue;
        Path ext{a.source, {a.name}};
        ext.arrows.insert(ext.arrows.end(), basis[ui].arrows.begin(),
                          basis[ui].arrows.end());
        for (const auto& [qi, c] : pres->normal_form(ext)) {
          auto it = lay.slot_of_basis.find(qi);
          if (it == lay.slot_of_basis.end()) continue;  // lands outside D(Ae_v)
          if (lay.vertex_of_basis[qi] != sv) continue;
          m.at(it->second, lay.slot_of_basis[ui]) = c;
        }
      }
      action.push_back(std::move(m));
    }
    out.emplace_back(pres, lay.dims, std::move(action));
  }
  return out;
}

Representation restrict_module(PresentationPtr base, const SplittingDatum& sp,
                               const Representation& m) {
  const Quiver& bq = base->quiver();
  const Quiver& sq = m.presentation()->quiver();
  const std::string v1 = split_vertex_name(bq, sp.vertex, 1);
  const std::string v2 = split_vertex_name(bq, sp.vertex, 2);
  require(sq.has_vertex(v1) && sq.has_vertex(v2), errc::precondition_failed,
          "module does not live over the split of '" + sp.vertex + "'");

  auto split_dim = [&](const std::string& v) {
    return m.dim_at(sq.vertex_index(v));
  };
  std::vector<int> dims;
  for (const std::string& v : bq.vertices())
    dims.push_back(v == sp.vertex ? split_dim(v1) + split_dim(v2)
                                  : split_dim(v));
  // Row/column offset of a split-quiver vertex inside the glued fiber.
  auto offset = [&](const std::string& split_vertex) {
    return split_vertex == v2 ? split_dim(v1) : 0;
  };
  std::vector<Matrix> action;
  for (const Arrow& a : bq.arrows()) {
    const Arrow& sa = sq.arrow(a.name);
    Matrix out(dims[bq.vertex_index(a.source)],
               dims[bq.vertex_index(a.target)]);
    const Matrix& in = m.action(sq.arrow_index(a.name));
    int ro = (a.source == sp.vertex) ? offset(sa.source) : 0;
    int co = (a.target == sp.vertex) ? offset(sa.target) : 0;
    for (int i = 0; i < in.rows(); ++i)
      for (int j = 0; j < in.cols(); ++j) out.at(ro + i, co + j) = in.at(i, j);
    action.push_back(std::move(out));
  }
  return Representation(base, std::move(dims), std::move(action));
}

ModuleMap ModuleMap::identity(const Representation& m) {
  ModuleMap f;
  for (int d : m.dims()) f.maps.push_back(Matrix::identity(d));
  return f;
}

ModuleMap compose(const ModuleMap& f, const ModuleMap& g) {
  require(f.maps.size() == g.maps.size(), errc::internal_invariant_violation,
          "module map composition shape mismatch");
  ModuleMap out;
  for (size_t v = 0; v < f.maps.size(); ++v)
    out.maps.push_back(f.maps[v] * g.maps[v]);
  return out;
}

bool is_invertible(const ModuleMap& f) {
  return std::all_of(f.maps.begin(), f.maps.end(),
                     [](const Matrix& m) { return m.invertible(); });
}

std::vector<ModuleMap> hom(const Representation& m, const Representation& n) {
  require(m.presentation() == n.presentation() ||
              *m.presentation() == *n.presentation(),
          errc::precondition_failed, "hom needs a common presentation");
  const Quiver& q = m.presentation()->quiver();
  int nv = static_cast<int>(q.vertices().size());
  std::vector<int> unknown_offset(nv + 1, 0);
  for (int v = 0; v < nv; ++v)
    unknown_offset[v + 1] = unknown_offset[v] + m.dims()[v] * n.dims()[v];
  int unknowns = unknown_offset[nv];
  auto idx = [&](int v, int r, int c) {
    return unknown_offset[v] + r * n.dims()[v] + c;
  };
  int equations = 0;
  for (const Arrow& a : q.arrows())
    equations +=
        m.dims()[q.vertex_index(a.source)] * n.dims()[q.vertex_index(a.target)];

  // Intertwining conditions M_a·φ_e = φ_s·N_a, assembled as x·C = 0 over the
  // flattened unknowns.
  Matrix c(unknowns, std::max(equations, 1));
  int eq = 0;
  for (size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const Arrow& a = q.arrows()[ai];
    int s = q.vertex_index(a.source), e = q.vertex_index(a.target);
    const Matrix& ma = m.action(static_cast<int>(ai));
    const Matrix& na = n.action(static_cast<int>(ai));
    for (int i = 0; i < m.dims()[s]; ++i)
      for (int j = 0; j < n.dims()[e]; ++j) {
        for (int t = 0; t < m.dims()[e]; ++t)
          if (!is_zero(ma.at(i, t))) c.at(idx(e, t, j), eq) += ma.at(i, t);
        for (int p = 0; p < n.dims()[s]; ++p)
          if (!is_zero(na.at(p, j))) c.at(idx(s, i, p), eq) -= na.at(p, j);
        ++eq;
      }
  }
  Matrix ker = left_nullspace(c);
  std::vector<ModuleMap> out;
  for (int r = 0; r < ker.rows(); ++r) {
    ModuleMap f;
    for (int v = 0; v < nv; ++v) {
      Matrix fv(m.dims()[v], n.dims()[v]);
      for (int i = 0; i < m.dims()[v]; ++i)
        for (int j = 0; j < n.dims()[v]; ++j)
          fv.at(i, j) = ker.at(r, idx(v, i, j));
      f.maps.push_back(std::move(fv));
    }
    out.push_back(std::move(f));
  }
  return out;
}

int hom_dim(const Representation& m, const Representation& n) {
  return static_cast<int>(hom(m, n).size());
}

bool is_isomorphic(const Representation& m, const Representation& n) {
  if (m.dims() != n.dims()) return false;
  if (m.total_dim() == 0) return true;
  std::vector<ModuleMap> h = hom(m, n);
  if (h.empty()) return false;
  for (const ModuleMap& f : h)
    if (is_invertible(f)) return true;
  int k = static_cast<int>(h.size());
  // An invertible map exists iff the product of the fiber determinants is a
  // nonzero polynomial in the coordinates; its degree per variable is at most
  // the total dimension, so the grid {0..N}^k decides exactly.
  long long total = m.total_dim();
  long long grid = 1;
  bool decisive = true;
  for (int i = 0; i < k; ++i) {
    grid *= total + 1;
    if (grid > 200000) {
      decisive = false;
      break;
    }
  }
  if (decisive) {
    std::vector<int> coeff(k, 0);
    for (;;) {
      int pos = 0;
      while (pos < k && coeff[pos] == total) coeff[pos++] = 0;
      if (pos == k) break;
      ++coeff[pos];
      ModuleMap cand = h.front();
      for (size_t v = 0; v < cand.maps.size(); ++v) {
        Matrix sum(cand.maps[v].rows(), cand.maps[v].cols());
        for (int i = 0; i < k; ++i)
          if (coeff[i] != 0)
            sum = sum + h[i].maps[v].scaled(Scalar(coeff[i]));
        cand.maps[v] = std::move(sum);
      }
      if (is_invertible(cand)) return true;
    }
    return false;
  }
  if (hom_dim(m, n) != hom_dim(n, m)) return false;
  fail(errc::inconclusive,
       "isomorphism search space too large for the exhaustive grid");
}

StructureConstantAlgebra end_algebra(
    const std::vector<Representation>& summands) {
  require(!summands.empty(), errc::precondition_failed,
          "end_algebra needs at least one summand");
  int k = static_cast<int>(summands.size());
  for (const Representation& r : summands)
    require(r.presentation() == summands.front().presentation() ||
                *r.presentation() == *summands.front().presentation(),
            errc::precondition_failed,
            "end_algebra summands over different presentations");

  // Hom bases for all ordered pairs, flattened for coordinate solves.
  std::vector<std::vector<std::vector<ModuleMap>>> homs(
      k, std::vector<std::vector<ModuleMap>>(k));
  std::vector<std::vector<Matrix>> flat(k, std::vector<Matrix>(k));
  auto flatten = [&](const ModuleMap& f) {
    std::vector<Scalar> v;
    for (const Matrix& mv : f.maps)
      for (int i = 0; i < mv.rows(); ++i)
        for (int j = 0; j < mv.cols(); ++j) v.push_back(mv.at(i, j));
    if (v.empty()) v.push_back(Scalar(0));  // keep solve shapes nonempty
    return v;
  };
  int dim = 0;
  std::vector<std::vector<int>> offset(k, std::vector<int>(k, 0));
  const auto& vdims = summands.front().presentation()->quiver().vertices();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      homs[i][j] = hom(summands[i], summands[j]);
      offset[i][j] = dim;
      dim += static_cast<int>(homs[i][j].size());
      int fdim = 0;
      for (size_t v = 0; v < vdims.size(); ++v)
        fdim += summands[i].dims()[v] * summands[j].dims()[v];
      Matrix b(static_cast<int>(homs[i][j].size()), std::max(fdim, 1));
      for (size_t r = 0; r < homs[i][j].size(); ++r)
        b.set_row(static_cast<int>(r), flatten(homs[i][j][r]));
      flat[i][j] = std::move(b);
    }

  auto coords = [&](int i, int j, const ModuleMap& f) {
    auto c = solve_left(flat[i][j], flatten(f));
    require(c.has_value(), errc::internal_invariant_violation,
            "composite map escapes its hom space");
    return *c;
  };

  using SparseVec = StructureConstantAlgebra::SparseVec;
  std::vector<std::vector<SparseVec>> table(
      dim, std::vector<SparseVec>(dim));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (size_t t = 0; t < homs[i][j].size(); ++t)
        for (int l = 0; l < k; ++l)
          for (size_t s = 0; s < homs[j][l].size(); ++s) {
            // Apply-then composition realizes the opposite algebra.
            ModuleMap prod = compose(homs[i][j][t], homs[j][l][s]);
            std::vector<Scalar> c = coords(i, l, prod);
            SparseVec& cell =
                table[offset[i][j] + static_cast<int>(t)]
                     [offset[j][l] + static_cast<int>(s)];
            for (size_t idx = 0; idx < c.size(); ++idx)
              if (!is_zero(c[idx]))
                cell[offset[i][l] + static_cast<int>(idx)] = c[idx];
          }

  std::vector<Scalar> identity(dim);
  for (int i = 0; i < k; ++i) {
    std::vector<Scalar> c = coords(i, i, ModuleMap::identity(summands[i]));
    for (size_t idx = 0; idx < c.size(); ++idx)
      identity[offset[i][i] + static_cast<int>(idx)] = c[idx];
  }
  return StructureConstantAlgebra(dim, std::move(table), std::move(identity));
}

}  // namespace qsplit
