#include "qsplit/splitting.hpp"

#include <algorithm>
#include <set>

namespace qsplit {

namespace {

bool member(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

// 0 = not around this vertex on that side, 1/2 = partition half.
int half_of(const SplittingDatum& sp, const std::string& arrow, bool out_side) {
  const auto& h1 = out_side ? sp.s1 : sp.e1;
  const auto& h2 = out_side ? sp.s2 : sp.e2;
  if (member(h1, arrow)) return 1;
  if (member(h2, arrow)) return 2;
  return 0;
}

}  // namespace

SplitValidation validate_splitting_datum(const Presentation& pres,
                                         const SplittingDatum& sp) {
  SplitValidation out;
  const Quiver& q = pres.quiver();
  if (!q.has_vertex(sp.vertex)) {
    out.violations.push_back("unknown vertex '" + sp.vertex + "'");
    return out;
  }
  auto check_partition = [&](const std::vector<std::string>& h1,
                             const std::vector<std::string>& h2,
                             const std::vector<std::string>& whole,
                             const char* what) {
    std::set<std::string> seen;
    for (const auto& part : {h1, h2})
      for (const std::string& a : part) {
        if (!member(whole, a))
          out.violations.push_back("arrow '" + a + "' is not in " +
                                   std::string(what) + "(" + sp.vertex + ")");
        else if (!seen.insert(a).second)
          out.violations.push_back("arrow '" + a + "' listed twice in the " +
                                   std::string(what) + "-partition");
      }
    for (const std::string& a : whole)
      if (!seen.count(a))
        out.violations.push_back("arrow '" + a + "' of " + std::string(what) +
                                 "(" + sp.vertex + ") is not assigned");
  };
  check_partition(sp.s1, sp.s2, q.arrows_from(sp.vertex), "S");
  check_partition(sp.e1, sp.e2, q.arrows_into(sp.vertex), "E");
  if (!out.violations.empty()) return out;

  pres.compute_basis();

  // Condition (1): crossing products must lie in the ideal.
  for (const std::string& a : q.arrows_into(sp.vertex))
    for (const std::string& b : q.arrows_from(sp.vertex)) {
      int ia = half_of(sp, a, false), ib = half_of(sp, b, true);
      if (ia == ib) continue;
      Path p{q.arrow(a).source, {a, b}};
      if (!pres.is_zero_mod_ideal(p))
        out.violations.push_back("condition (1): " + a + "." + b +
                                 " is nonzero but crosses from E" +
                                 std::to_string(ia) + " to S" +
                                 std::to_string(ib));
    }

  // Condition (2), strictest reading: every term of a non-monomial relation
  // must keep matching halves at each interior crossing of v, and the terms
  // of one relation must enter the same half and leave from the same half
  // when the relation starts or ends at v.
  for (size_t ri = 0; ri < pres.relations().size(); ++ri) {
    const Relation& r = pres.relations()[ri];
    if (r.is_monomial()) continue;
    std::set<int> first_halves, last_halves;
    for (const RelationTerm& term : r.terms) {
      const Path& p = term.path;
      for (int i = 0; i + 1 < p.length(); ++i) {
        const Arrow& in = q.arrow(p.arrows[i]);
        if (in.target != sp.vertex) continue;
        int hin = half_of(sp, in.name, false);
        int hout = half_of(sp, p.arrows[i + 1], true);
        if (hin != hout)
          out.violations.push_back(
              "condition (2): relation " + std::to_string(ri + 1) + " term " +
              p.str() + " crosses " + sp.vertex + " from E" +
              std::to_string(hin) + " into S" + std::to_string(hout));
      }
      if (p.source == sp.vertex)
        first_halves.insert(half_of(sp, p.arrows.front(), true));
      if (path_end(q, p) == sp.vertex)
        last_halves.insert(half_of(sp, p.arrows.back(), false));
    }
    if (first_halves.size() > 1)
      out.violations.push_back("condition (2): relation " +
                               std::to_string(ri + 1) +
                               " starts at both halves of " + sp.vertex);
    if (last_halves.size() > 1)
      out.violations.push_back("condition (2): relation " +
                               std::to_string(ri + 1) +
                               " ends at both halves of " + sp.vertex);
  }

  out.valid = out.violations.empty();
  return out;
}

std::string split_vertex_name(const Quiver& q, const std::string& v, int half) {
  std::string name = v + "." + std::to_string(half);
  while (q.has_vertex(name)) name += "_";
  return name;
}

Presentation split(const Presentation& pres, const SplittingDatum& sp) {
  SplitValidation check = validate_splitting_datum(pres, sp);
  if (!check.valid) {
    std::string msg = "splitting datum at '" + sp.vertex + "' is invalid";
    for (const std::string& v : check.violations) msg += "; " + v;
    fail(errc::invalid_splitting_datum, msg);
  }
  const Quiver& q = pres.quiver();
  const std::string v1 = split_vertex_name(q, sp.vertex, 1);
  const std::string v2 = split_vertex_name(q, sp.vertex, 2);

  Quiver nq;
  for (const std::string& v : q.vertices()) {
    if (v == sp.vertex) {
      nq.add_vertex(v1);
      nq.add_vertex(v2);
    } else {
      nq.add_vertex(v);
    }
  }
  auto new_source = [&](const std::string& arrow, const std::string& old) {
    int h = half_of(sp, arrow, true);
    return h == 0 ? old : (h == 1 ? v1 : v2);
  };
  auto new_target = [&](const std::string& arrow, const std::string& old) {
    int h = half_of(sp, arrow, false);
    return h == 0 ? old : (h == 1 ? v1 : v2);
  };
  for (const Arrow& a : q.arrows())
    nq.add_arrow(a.name, new_source(a.name, a.source),
                 new_target(a.name, a.target));

  auto transfer = [&](const Path& p) -> std::optional<Path> {
    Path np{new_source(p.arrows.front(), p.source), p.arrows};
    std::string at = np.source;
    for (const std::string& name : np.arrows) {
      const Arrow& a = nq.arrow(name);
      if (a.source != at) return std::nullopt;  // crossing became incomposable
      at = a.target;
    }
    return np;
  };

  std::vector<Relation> nrels;
  for (const Relation& r : pres.relations()) {
    Relation nr;
    bool dropped = false;
    for (const RelationTerm& term : r.terms) {
      auto np = transfer(term.path);
      if (!np) {
        dropped = true;
        continue;
      }
      nr.terms.push_back({term.coeff, *np});
    }
    if (nr.terms.empty()) continue;  // relation is a non-path now: vacuous
    require(!dropped, errc::internal_invariant_violation,
            "non-monomial relation lost only part of its terms in a split");
    nrels.push_back(std::move(nr));
  }
  return Presentation(std::move(nq), std::move(nrels), pres.name() + "'");
}

EmbeddingWitness embedding_witness(const Presentation& before,
                                   const Presentation& after,
                                   const SplittingDatum& sp) {
  before.compute_basis();
  after.compute_basis();
  std::set<std::vector<std::string>> lhs, rhs;
  for (const Path& p : before.basis_paths())
    if (p.length() >= 1) lhs.insert(p.arrows);
  for (const Path& p : after.basis_paths())
    if (p.length() >= 1) rhs.insert(p.arrows);
  for (const auto& arrows : lhs)
    require(rhs.count(arrows), errc::witness_failure,
            "basis path " + Path{"", arrows}.str() +
              " of the source is zero or incomposable after the split");
  for (const auto& arrows : rhs)
    require(lhs.count(arrows), errc::witness_failure,
            "basis path " + Path{"", arrows}.str() +
              " of the split algebra is zero in the source");
  EmbeddingWitness w;
  w.vertex = sp.vertex;
  w.half1 = split_vertex_name(before.quiver(), sp.vertex, 1);
  w.half2 = split_vertex_name(before.quiver(), sp.vertex, 2);
  w.radical_dimension = before.radical_dimension();
  require(w.radical_dimension == after.radical_dimension(),
          errc::witness_failure, "radical dimensions differ across the split");
  for (const Path& p : before.basis_paths())
    if (p.length() >= 1) w.shared_basis.push_back(p);
  return w;
}

namespace {

void require_monomial_sm(const Presentation& pres) {
  require(pres.is_monomial(), errc::precondition_failed,
          "splitting constructor needs a monomial presentation");
  require(pres.is_special_multiserial(), errc::precondition_failed,
          "splitting constructor needs a special multiserial presentation");
}

}  // namespace

SplittingDatum auto_split_datum_S(const Presentation& pres,
                                  const std::string& v) {
  require_monomial_sm(pres);
  const Quiver& q = pres.quiver();
  std::vector<std::string> s = q.arrows_from(v);
  require(s.size() > 1, errc::precondition_failed,
          "vertex '" + v + "' has no outgoing branching");
  SplittingDatum sp;
  sp.vertex = v;
  const std::string b1 = s.front();
  sp.s1 = {b1};
  sp.s2.assign(s.begin() + 1, s.end());
  for (const std::string& a : q.arrows_into(v)) {
    Path p{q.arrow(a).source, {a, b1}};
    if (pres.is_zero_mod_ideal(p))
      sp.e2.push_back(a);
    else
      sp.e1.push_back(a);
  }
  require(sp.e1.size() <= 1, errc::internal_invariant_violation,
          "condition (S) violated: several arrows continue into '" + b1 + "'");
  return sp;
}

SplittingDatum auto_split_datum_E(const Presentation& pres,
                                  const std::string& v) {
  require_monomial_sm(pres);
  const Quiver& q = pres.quiver();
  std::vector<std::string> e = q.arrows_into(v);
  require(e.size() > 1, errc::precondition_failed,
          "vertex '" + v + "' has no incoming branching");
  SplittingDatum sp;
  sp.vertex = v;
  const std::string a1 = e.front();
  sp.e1 = {a1};
  sp.e2.assign(e.begin() + 1, e.end());
  for (const std::string& b : q.arrows_from(v)) {
    Path p{q.arrow(a1).source, {a1, b}};
    if (pres.is_zero_mod_ideal(p))
      sp.s2.push_back(b);
    else
      sp.s1.push_back(b);
  }
  require(sp.s1.size() <= 1, errc::internal_invariant_violation,
          "condition (S) violated: several arrows continue '" + a1 + "'");
  return sp;
}

}  // namespace qsplit
