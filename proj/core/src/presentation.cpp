#include "qsplit/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace qsplit {

namespace {

// Enumerated-path budget; a presentation whose path count passes this without
// reaching a zero layer is rejected as not finite dimensional.
constexpr size_t kPathBudget = 500000;

std::string path_list(const std::vector<std::string>& arrows) {
  std::string s;
  for (size_t i = 0; i < arrows.size(); ++i) {
    if (i) s += '.';
    s += arrows[i];
  }
  return s;
}

}  // namespace

const char* relation_class_name(RelationClass c) {
  switch (c) {
    case RelationClass::monomial: return "Monomial";
    case RelationClass::socle_combination: return "SocleCombination";
    case RelationClass::violation: return "Violation";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Construction and normalization

Presentation::Presentation(Quiver quiver, std::vector<Relation> relations,
                           std::string name)
    : quiver_(std::move(quiver)), name_(std::move(name)) {
  for (Relation& r : relations) {
    require(!r.terms.empty(), errc::non_uniform_relation, "empty relation");
    for (const RelationTerm& t : r.terms) validate_path(quiver_, t.path);
    const std::string& src = r.terms.front().path.source;
    const std::string tgt = path_end(quiver_, r.terms.front().path);
    for (const RelationTerm& t : r.terms) {
      require(t.path.source == src && path_end(quiver_, t.path) == tgt,
              errc::non_uniform_relation,
              "relation mixes paths from '" + src + "' to '" + tgt +
                "' with " + t.path.str());
    }
    // Merge duplicate paths in first-occurrence order, drop zero terms.
    Relation merged;
    for (const RelationTerm& t : r.terms) {
      auto it = std::find_if(
          merged.terms.begin(), merged.terms.end(),
          [&](const RelationTerm& m) { return m.path == t.path; });
      if (it == merged.terms.end())
        merged.terms.push_back(t);
      else
        it->coeff += t.coeff;
    }
    merged.terms.erase(
        std::remove_if(merged.terms.begin(), merged.terms.end(),
                       [](const RelationTerm& t) { return is_zero(t.coeff); }),
        merged.terms.end());
    if (merged.terms.empty()) continue;  // relation was zero
    Scalar lead = merged.terms.front().coeff;
    for (RelationTerm& t : merged.terms) t.coeff /= lead;
    relations_.push_back(std::move(merged));
  }
}

bool Presentation::is_monomial() const {
  return std::all_of(relations_.begin(), relations_.end(),
                     [](const Relation& r) { return r.is_monomial(); });
}

// ---------------------------------------------------------------------------
// Basis engine.
//
// Works degree by degree in the quotient of the path algebra by the monomial
// relations: paths containing a monomial relation are pruned during
// enumeration, and the remaining relations contribute rows u·r·w to an exact
// reduced echelon form whose columns are the surviving paths ordered by
// (degree ascending, enumeration order descending within a degree). A path is
// a basis path iff its column never becomes a pivot. The run stops at the
// first length with no basis paths: from that layer on every path lies in the
// ideal, so for an admissible ideal the collected paths are a basis of KQ/I
// and pivot rows give canonical normal forms.

namespace {

// Column key: (degree, -id). Within a degree later paths reduce to earlier
// ones, so normal forms prefer the first-enumerated path.
using ColKey = std::pair<int, int>;
using SparseRow = std::map<ColKey, Scalar>;

void row_axpy(SparseRow& dst, const Scalar& f, const SparseRow& src) {
  for (const auto& [k, c] : src) {
    auto it = dst.find(k);
    if (it == dst.end()) {
      Scalar v = f * c;
      if (!is_zero(v)) dst.emplace(k, std::move(v));
    } else {
      it->second += f * c;
      if (is_zero(it->second)) dst.erase(it);
    }
  }
}

struct Echelon {
  std::map<ColKey, SparseRow> pivot_rows;  // fully inter-reduced, pivots 1

  void insert(SparseRow row) {
    for (;;) {
      auto hit = pivot_rows.end();
      ColKey key{};
      for (const auto& [k, c] : row) {
        auto it = pivot_rows.find(k);
        if (it != pivot_rows.end()) {
          hit = it;
          key = k;
          break;
        }
      }
      if (hit == pivot_rows.end()) break;
      Scalar f = -row.at(key);
      row_axpy(row, f, hit->second);
    }
    if (row.empty()) return;
    ColKey lead = row.begin()->first;
    Scalar inv = 1 / row.begin()->second;
    for (auto& [k, c] : row) c *= inv;
    for (auto& [k, pr] : pivot_rows) {
      auto it = pr.find(lead);
      if (it == pr.end()) continue;
      Scalar f = -it->second;
      row_axpy(pr, f, row);
    }
    pivot_rows.emplace(lead, std::move(row));
  }

  bool is_pivot(const ColKey& k) const { return pivot_rows.count(k) != 0; }
};

}  // namespace

struct Presentation::Table {
  int cutoff = 0;  // nilpotency index: first length with no basis paths
  std::vector<Path> paths;  // surviving paths, degree-major enumeration order
  std::map<Path, int> id_of;
  std::vector<int> degree_of;
  std::vector<std::vector<int>> ids_by_degree;
  std::vector<int> basis_index_of;  // id -> dense basis index, or -1
  std::vector<Path> basis;
  std::vector<LinComb> nf_of_id;  // normal form per id (empty past cutoff)
  BasisReport report;

  int lookup(const Path& p) const {
    auto it = id_of.find(p);
    return it == id_of.end() ? -1 : it->second;
  }
};

const Presentation::Table& Presentation::table(int max_len) const {
  if (table_) return *table_;

  for (const Relation& r : relations_)
    for (const RelationTerm& t : r.terms)
      require(t.path.length() >= 2, errc::non_admissible_generator,
              "relation term " + t.path.str() +
                " has length < 2, so the ideal is not inside J^2");

  auto tbl = std::make_shared<Table>();
  Table& t = *tbl;

  std::vector<std::vector<std::string>> mono;
  std::vector<const Relation*> general;
  for (const Relation& r : relations_) {
    if (r.is_monomial())
      mono.push_back(r.terms.front().path.arrows);
    else
      general.push_back(&r);
  }
  int delta = 0;
  for (const Relation* r : general) {
    int lo = r->terms.front().path.length(), hi = lo;
    for (const RelationTerm& term : r->terms) {
      lo = std::min(lo, term.path.length());
      hi = std::max(hi, term.path.length());
    }
    delta = std::max(delta, hi - lo);
  }

  auto add_path = [&](Path p, int deg) {
    int id = static_cast<int>(t.paths.size());
    t.id_of.emplace(p, id);
    t.paths.push_back(std::move(p));
    t.degree_of.push_back(deg);
    t.ids_by_degree[deg].push_back(id);
    require(t.paths.size() <= kPathBudget, errc::not_finite_dimensional,
            "path budget exceeded at length " + std::to_string(deg) +
              "; the ideal does not look admissible");
  };

  int enumerated_to = -1;
  auto ensure_enumerated = [&](int upto) {
    while (enumerated_to < upto) {
      int d = ++enumerated_to;
      if (static_cast<int>(t.ids_by_degree.size()) <= d)
        t.ids_by_degree.resize(d + 1);
      if (d == 0) {
        for (const std::string& v : quiver_.vertices())
          add_path(trivial_path(v), 0);
        continue;
      }
      // Extend every surviving path of length d-1 by composable arrows,
      // pruning any extension ending in a monomial relation.
      std::vector<int> prev = t.ids_by_degree[d - 1];
      for (int id : prev) {
        const Path base = t.paths[id];
        const std::string at = path_end(quiver_, base);
        for (const Arrow& a : quiver_.arrows()) {
          if (a.source != at) continue;
          Path np = base;
          np.arrows.push_back(a.name);
          bool pruned = false;
          for (const auto& m : mono)
            if (is_suffix_of(m, np.arrows)) {
              pruned = true;
              break;
            }
          if (!pruned) add_path(std::move(np), d);
        }
      }
    }
  };

  Echelon ech;
  auto key_of = [](int deg, int id) { return ColKey{deg, -id}; };

  int cutoff = -1;
  for (int d = 0; d <= max_len; ++d) {
    ensure_enumerated(general.empty() ? d : d + delta);
    // Rows u·r·w whose shortest term has length exactly d.
    for (const Relation* r : general) {
      int minlen = r->terms.front().path.length();
      for (const RelationTerm& term : r->terms)
        minlen = std::min(minlen, term.path.length());
      if (minlen > d) continue;
      const std::string rsrc = r->terms.front().path.source;
      const std::string rtgt = path_end(quiver_, r->terms.front().path);
      int budget = d - minlen;
      for (int lu = 0; lu <= budget; ++lu) {
        int lw = budget - lu;
        if (lu >= static_cast<int>(t.ids_by_degree.size())) break;
        for (int uid : t.ids_by_degree[lu]) {
          if (path_end(quiver_, t.paths[uid]) != rsrc) continue;
          if (lw >= static_cast<int>(t.ids_by_degree.size())) continue;
          for (int wid : t.ids_by_degree[lw]) {
            if (t.paths[wid].source != rtgt) continue;
            SparseRow row;
            for (const RelationTerm& term : r->terms) {
              Path full = t.paths[uid];
              full.arrows.insert(full.arrows.end(), term.path.arrows.begin(),
                                 term.path.arrows.end());
              full.arrows.insert(full.arrows.end(),
                                 t.paths[wid].arrows.begin(),
                                 t.paths[wid].arrows.end());
              int deg = full.length();
              int id = t.lookup(full);
              if (id < 0) continue;  // pruned: already in the monomial part
              auto k = key_of(deg, id);
              auto it = row.find(k);
              if (it == row.end())
                row.emplace(k, term.coeff);
              else {
                it->second += term.coeff;
                if (is_zero(it->second)) row.erase(it);
              }
            }
            if (!row.empty()) ech.insert(std::move(row));
          }
        }
      }
    }
    bool any_basis = false;
    if (d < static_cast<int>(t.ids_by_degree.size()))
      for (int id : t.ids_by_degree[d])
        if (!ech.is_pivot(key_of(d, id))) {
          any_basis = true;
          break;
        }
    if (!any_basis) {
      cutoff = d;
      break;
    }
  }
  require(cutoff >= 0, errc::not_finite_dimensional,
          "basis paths still present at length " + std::to_string(max_len) +
            "; raise --max-length or fix the relations");
  t.cutoff = cutoff;

  // Dense basis and normal forms.
  t.basis_index_of.assign(t.paths.size(), -1);
  for (int d = 0; d < cutoff; ++d)
    for (int id : t.ids_by_degree[d])
      if (!ech.is_pivot(key_of(d, id))) {
        t.basis_index_of[id] = static_cast<int>(t.basis.size());
        t.basis.push_back(t.paths[id]);
      }
  t.nf_of_id.assign(t.paths.size(), {});
  for (size_t id = 0; id < t.paths.size(); ++id) {
    int deg = t.degree_of[id];
    if (deg >= cutoff) continue;
    int bi = t.basis_index_of[id];
    if (bi >= 0) {
      t.nf_of_id[id] = {{bi, Scalar(1)}};
      continue;
    }
    const SparseRow& row = ech.pivot_rows.at(key_of(deg, static_cast<int>(id)));
    LinComb nf;
    for (const auto& [k, c] : row) {
      int oid = -k.second;
      if (oid == static_cast<int>(id)) continue;
      if (t.degree_of[oid] >= cutoff) continue;  // zero past the cutoff
      int obi = t.basis_index_of[oid];
      require(obi >= 0, errc::internal_invariant_violation,
              "echelon tail touches a non-basis column");
      nf[obi] = -c;
    }
    t.nf_of_id[id] = std::move(nf);
  }

  BasisReport& rep = t.report;
  rep.monomial = is_monomial();
  rep.nilpotency_index = cutoff;
  rep.dimension = static_cast<int>(t.basis.size());
  rep.by_length.assign(std::max(cutoff, 1), {});
  if (cutoff == 0) rep.by_length.clear();
  for (const Path& p : t.basis) rep.by_length[p.length()].push_back(p);
  rep.radical_dimension = 0;
  for (const Path& p : t.basis)
    if (p.length() >= 1) ++rep.radical_dimension;

  table_ = std::move(tbl);
  return *table_;
}

const BasisReport& Presentation::compute_basis(int max_len) const {
  return table(max_len).report;
}

const std::vector<Path>& Presentation::basis_paths() const {
  return table(kDefaultMaxLen).basis;
}

int Presentation::dimension() const {
  return table(kDefaultMaxLen).report.dimension;
}

int Presentation::radical_dimension() const {
  return table(kDefaultMaxLen).report.radical_dimension;
}

int Presentation::nilpotency_index() const {
  return table(kDefaultMaxLen).cutoff;
}

LinComb Presentation::normal_form(const Path& p) const {
  validate_path(quiver_, p);
  const Table& t = table(kDefaultMaxLen);
  if (p.length() >= t.cutoff) return {};
  int id = t.lookup(p);
  if (id < 0) return {};  // pruned by a monomial relation
  return t.nf_of_id[id];
}

LinComb Presentation::normal_form(const std::vector<RelationTerm>& combo) const {
  LinComb out;
  for (const RelationTerm& term : combo) {
    LinComb nf = normal_form(term.path);
    for (const auto& [bi, c] : nf) {
      out[bi] += term.coeff * c;
      if (is_zero(out[bi])) out.erase(bi);
    }
  }
  return out;
}

bool Presentation::is_zero_mod_ideal(const Path& p) const {
  return normal_form(p).empty();
}

AdmissibilityReport Presentation::is_admissible(int max_len) const {
  AdmissibilityReport rep;
  for (const Relation& r : relations_)
    for (const RelationTerm& term : r.terms)
      if (term.path.length() < 2) {
        rep.diagnostics = "relation term " + term.path.str() +
                          " has length < 2 (ideal not inside J^2)";
        return rep;
      }
  try {
    compute_basis(max_len);
  } catch (const error& e) {
    if (e.code() == errc::not_finite_dimensional) {
      rep.diagnostics = e.what();
      return rep;
    }
    throw;
  }
  rep.admissible = true;
  rep.nilpotency_index = table_->cutoff;
  return rep;
}

ConditionSReport Presentation::check_condition_S() const {
  table(kDefaultMaxLen);
  ConditionSReport rep;
  for (const Arrow& a : quiver_.arrows()) {
    std::vector<std::string> succ;
    for (const Arrow& b : quiver_.arrows()) {
      if (b.source != a.target) continue;
      if (!is_zero_mod_ideal(Path{a.source, {a.name, b.name}}))
        succ.push_back(b.name);
    }
    for (size_t i = 0; i + 1 < succ.size(); ++i)
      for (size_t j = i + 1; j < succ.size(); ++j)
        rep.witnesses.push_back({a.name, true, succ[i], succ[j]});
    std::vector<std::string> pred;
    for (const Arrow& c : quiver_.arrows()) {
      if (c.target != a.source) continue;
      if (!is_zero_mod_ideal(Path{c.source, {c.name, a.name}}))
        pred.push_back(c.name);
    }
    for (size_t i = 0; i + 1 < pred.size(); ++i)
      for (size_t j = i + 1; j < pred.size(); ++j)
        rep.witnesses.push_back({a.name, false, pred[i], pred[j]});
  }
  rep.holds = rep.witnesses.empty();
  return rep;
}

bool Presentation::is_special_multiserial(int max_len) const {
  if (!is_admissible(max_len).admissible) return false;
  return check_condition_S().holds;
}

bool Presentation::socle_membership(const Path& p, Side side) const {
  const Table& t = table(kDefaultMaxLen);
  int id = t.lookup(p);
  require(id >= 0 && t.basis_index_of[id] >= 0, errc::unknown_basis_path,
          p.str() + " is not a basis path");
  if (side == Side::right) {
    const std::string at = path_end(quiver_, p);
    for (const Arrow& a : quiver_.arrows()) {
      if (a.source != at) continue;
      Path q = p;
      q.arrows.push_back(a.name);
      if (!is_zero_mod_ideal(q)) return false;
    }
    return true;
  }
  for (const Arrow& a : quiver_.arrows()) {
    if (a.target != p.source) continue;
    Path q{a.source, {a.name}};
    q.arrows.insert(q.arrows.end(), p.arrows.begin(), p.arrows.end());
    if (!is_zero_mod_ideal(q)) return false;
  }
  return true;
}

namespace {

// Element-level two-sided socle test for an arbitrary path: every arrow
// continuation on either side lands in the ideal.
bool path_in_two_sided_socle(const Presentation& pres, const Path& p) {
  const Quiver& q = pres.quiver();
  const std::string at = path_end(q, p);
  for (const Arrow& a : q.arrows()) {
    if (a.source == at) {
      Path r = p;
      r.arrows.push_back(a.name);
      if (!pres.is_zero_mod_ideal(r)) return false;
    }
    if (a.target == p.source) {
      Path r{a.source, {a.name}};
      r.arrows.insert(r.arrows.end(), p.arrows.begin(), p.arrows.end());
      if (!pres.is_zero_mod_ideal(r)) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<RelationClass> Presentation::classify_relations() const {
  table(kDefaultMaxLen);
  std::vector<RelationClass> out;
  for (const Relation& r : relations_) {
    if (r.is_monomial()) {
      out.push_back(RelationClass::monomial);
      continue;
    }
    bool all_socle = true;
    for (const RelationTerm& term : r.terms)
      if (!path_in_two_sided_socle(*this, term.path)) {
        all_socle = false;
        break;
      }
    out.push_back(all_socle ? RelationClass::socle_combination
                            : RelationClass::violation);
  }
  return out;
}

const Subspace& Presentation::right_socle() const {
  if (socle_) return *socle_;
  const Table& t = table(kDefaultMaxLen);
  int n = static_cast<int>(t.basis.size());
  int na = static_cast<int>(quiver_.arrows().size());
  // x in soc  <=>  x·a = 0 for every arrow a; columns of the constraint
  // matrix are (arrow, basis path) pairs.
  Matrix c(n, n * std::max(na, 1));
  for (int q = 0; q < n; ++q) {
    const Path& p = t.basis[q];
    const std::string at = path_end(quiver_, p);
    for (int ai = 0; ai < na; ++ai) {
      const Arrow& a = quiver_.arrows()[ai];
      if (a.source != at) continue;
      Path ext = p;
      ext.arrows.push_back(a.name);
      for (const auto& [bi, coeff] : normal_form(ext))
        c.at(q, ai * n + bi) = coeff;
    }
  }
  Matrix ker = left_nullspace(c);
  auto soc = std::make_shared<Subspace>(n);
  for (int i = 0; i < ker.rows(); ++i) soc->add(ker.row(i));
  socle_ = std::move(soc);
  return *socle_;
}

int Presentation::socle_dimension() const { return right_socle().dim(); }

Presentation Presentation::socle_quotient() const {
  const Table& t = table(kDefaultMaxLen);
  const Subspace& soc = right_socle();
  int n = static_cast<int>(t.basis.size());

  auto in_socle = [&](const LinComb& nf) {
    std::vector<Scalar> v(n);
    for (const auto& [bi, c] : nf) v[bi] = c;
    return soc.contains(v);
  };

  std::vector<std::string> dead_vertices;
  for (const std::string& v : quiver_.vertices())
    if (quiver_.arrows_from(v).empty()) dead_vertices.push_back(v);
  auto vertex_dead = [&](const std::string& v) {
    return std::find(dead_vertices.begin(), dead_vertices.end(), v) !=
           dead_vertices.end();
  };

  std::vector<std::string> dead_arrows;
  for (const Arrow& a : quiver_.arrows()) {
    Path p{a.source, {a.name}};
    if (vertex_dead(a.source) || vertex_dead(a.target) ||
        in_socle(normal_form(p)))
      dead_arrows.push_back(a.name);
  }
  auto arrow_dead = [&](const std::string& a) {
    return std::find(dead_arrows.begin(), dead_arrows.end(), a) !=
           dead_arrows.end();
  };

  Quiver nq;
  for (const std::string& v : quiver_.vertices())
    if (!vertex_dead(v)) nq.add_vertex(v);
  for (const Arrow& a : quiver_.arrows())
    if (!arrow_dead(a.name)) nq.add_arrow(a.name, a.source, a.target);

  // Monomial generators of the quotient ideal: surviving old monomial
  // relations plus every surviving path whose class falls into the socle.
  std::vector<Path> gens;
  auto subsumed = [&](const std::vector<std::string>& arrows) {
    for (const Path& g : gens)
      if (is_suffix_of(g.arrows, arrows)) return true;
    return false;
  };
  for (const Relation& r : relations_) {
    if (!r.is_monomial()) continue;
    const Path& p = r.terms.front().path;
    if (std::any_of(p.arrows.begin(), p.arrows.end(), arrow_dead)) continue;
    gens.push_back(p);
  }
  // Walk all paths of the new quiver up to the old nilpotency cutoff.
  std::vector<Path> frontier;
  for (const std::string& v : nq.vertices()) frontier.push_back(trivial_path(v));
  for (int d = 1; d <= t.cutoff && !frontier.empty(); ++d) {
    std::vector<Path> next;
    for (const Path& base : frontier) {
      const std::string at = path_end(nq, base);
      for (const Arrow& a : nq.arrows()) {
        if (a.source != at) continue;
        Path np = base;
        np.arrows.push_back(a.name);
        if (subsumed(np.arrows)) continue;
        if (np.length() >= 2 && in_socle(normal_form(np))) {
          gens.push_back(np);
          continue;
        }
        next.push_back(std::move(np));
      }
    }
    frontier = std::move(next);
  }
  // Drop generators containing another generator as a strict subpath.
  std::vector<Path> kept;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j) continue;
      if (gens[j].arrows == gens[i].arrows) {
        redundant = j < i;  // exact duplicates keep the first copy
      } else if (contains_subpath(gens[i], gens[j])) {
        redundant = true;
      }
    }
    if (!redundant) kept.push_back(gens[i]);
  }

  std::vector<Relation> nrels;
  for (const Path& g : kept) nrels.push_back({{{Scalar(1), g}}});
  // Non-monomial relations: drop terms that die in the quotient, keep the rest.
  for (const Relation& r : relations_) {
    if (r.is_monomial()) continue;
    Relation keep;
    for (const RelationTerm& term : r.terms) {
      bool dead =
          std::any_of(term.path.arrows.begin(), term.path.arrows.end(),
                      arrow_dead) ||
          term.path.length() > t.cutoff || in_socle(normal_form(term.path));
      if (!dead) keep.terms.push_back(term);
    }
    if (!keep.terms.empty()) nrels.push_back(std::move(keep));
  }

  return Presentation(std::move(nq), std::move(nrels), name_ + "/soc");
}

}  // namespace qsplit
