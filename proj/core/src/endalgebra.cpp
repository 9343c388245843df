#include "qsplit/endalgebra.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace qsplit {

// ---------------------------------------------------------------------------
// StructureConstantAlgebra

StructureConstantAlgebra::StructureConstantAlgebra(
    int dim, std::vector<std::vector<SparseVec>> table, Vec identity)
    : dim_(dim), table_(std::move(table)), identity_(std::move(identity)) {
  require(static_cast<int>(table_.size()) == dim_,
          errc::internal_invariant_violation, "multiplication table rows");
  for (const auto& row : table_)
    require(static_cast<int>(row.size()) == dim_,
            errc::internal_invariant_violation, "multiplication table cols");
  require(static_cast<int>(identity_.size()) == dim_,
          errc::internal_invariant_violation, "identity coordinate length");
  check_axioms();
}

StructureConstantAlgebra::Vec StructureConstantAlgebra::basis_vec(int i) const {
  Vec v(dim_);
  v[i] = 1;
  return v;
}

StructureConstantAlgebra::Vec StructureConstantAlgebra::multiply(
    const Vec& x, const Vec& y) const {
  Vec out(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < dim_; ++j) {
      if (is_zero(y[j])) continue;
      Scalar f = x[i] * y[j];
      for (const auto& [m, c] : table_[i][j]) out[m] += f * c;
    }
  }
  return out;
}

Matrix StructureConstantAlgebra::left_mult_matrix(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < dim_; ++j)
      for (const auto& [t, c] : table_[i][j]) m.at(j, t) += x[i] * c;
  }
  return m;
}

Matrix StructureConstantAlgebra::right_mult_matrix(const Vec& y) const {
  Matrix m(dim_, dim_);
  for (int k = 0; k < dim_; ++k) {
    if (is_zero(y[k])) continue;
    for (int j = 0; j < dim_; ++j)
      for (const auto& [t, c] : table_[j][k]) m.at(j, t) += y[k] * c;
  }
  return m;
}

void StructureConstantAlgebra::check_axioms() const {
  for (int k = 0; k < dim_; ++k) {
    Vec ek = basis_vec(k);
    require(multiply(identity_, ek) == ek && multiply(ek, identity_) == ek,
            errc::internal_invariant_violation,
            "identity law fails on basis element " + std::to_string(k));
  }
  auto assoc_at = [&](int i, int j, int k) {
    SparseVec lhs, rhs;
    for (const auto& [m, c] : table_[i][j])
      for (const auto& [t, d] : table_[m][k]) {
        lhs[t] += c * d;
        if (is_zero(lhs[t])) lhs.erase(t);
      }
    for (const auto& [m, c] : table_[j][k])
      for (const auto& [t, d] : table_[i][m]) {
        rhs[t] += c * d;
        if (is_zero(rhs[t])) rhs.erase(t);
      }
    require(lhs == rhs, errc::internal_invariant_violation,
            "associativity fails on basis triple (" + std::to_string(i) +
              "," + std::to_string(j) + "," + std::to_string(k) + ")");
  };
  if (dim_ <= 64) {
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k) assoc_at(i, j, k);
  } else {
    // Deterministic sample of about 10^5 triples.
    long long total = 1LL * dim_ * dim_ * dim_;
    long long stride = std::max<long long>(total / 100000, 1);
    for (long long t = 0; t < total; t += stride) {
      int i = static_cast<int>(t / (1LL * dim_ * dim_));
      int j = static_cast<int>((t / dim_) % dim_);
      int k = static_cast<int>(t % dim_);
      assoc_at(i, j, k);
    }
  }
}

// ---------------------------------------------------------------------------
// Polynomials over Q (dense, lowest degree first), for minimal polynomials
// and spectral idempotents.

namespace {

using Poly = std::vector<Scalar>;

void poly_trim(Poly& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  poly_trim(out);
  return out;
}

// Exact division with remainder; divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  require(!b.empty(), errc::internal_invariant_violation, "poly division by 0");
  Poly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0);
  while (poly_deg(a) >= poly_deg(b)) {
    int shift = poly_deg(a) - poly_deg(b);
    Scalar f = a.back() / b.back();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    poly_trim(a);
    if (a.empty()) break;
  }
  poly_trim(q);
  return {q, a};
}

Scalar poly_eval(const Poly& p, const Scalar& x) {
  Scalar acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Monic gcd.
Poly poly_gcd(Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Scalar inv = 1 / a.back();
    for (Scalar& c : a) c *= inv;
  }
  return a;
}

// u with u*a ≡ gcd(a,b) (mod b); used for inverses modulo coprime factors.
Poly poly_inverse_mod(const Poly& a, const Poly& mod) {
  Poly r0 = mod, r1 = poly_divmod(a, mod).second;
  Poly u0 = {}, u1 = {Scalar(1)};
  while (!r1.empty()) {
    auto [q, r2] = poly_divmod(r0, r1);
    Poly u2 = u0;
    Poly qu1 = poly_mul(q, u1);
    u2.resize(std::max(u2.size(), qu1.size()));
    for (size_t i = 0; i < qu1.size(); ++i) u2[i] -= qu1[i];
    poly_trim(u2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  require(poly_deg(r0) == 0, errc::internal_invariant_violation,
          "polynomial inverse of a non-coprime element");
  Scalar inv = 1 / r0[0];
  for (Scalar& c : u0) c *= inv;
  return poly_divmod(u0, mod).second;
}

struct IntFactorization {
  std::vector<std::pair<mpz_class, int>> primes;
  bool complete = true;
};

IntFactorization factor_int(mpz_class n) {
  IntFactorization out;
  n = abs(n);
  if (n <= 1) return out;
  auto strip = [&](const mpz_class& p) {
    int e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e) out.primes.push_back({p, e});
  };
  strip(2);
  for (mpz_class p = 3; p * p <= n && p < 1000000; p += 2) strip(p);
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0)
      out.primes.push_back({n, 1});
    else
      out.complete = false;  // large composite cofactor left unfactored
  }
  return out;
}

std::vector<mpz_class> divisors_of(const IntFactorization& f, bool* capped) {
  std::vector<mpz_class> out = {1};
  for (const auto& [p, e] : f.primes) {
    size_t base = out.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) {
        out.push_back(out[i] * pk);
        if (out.size() > 20000) {
          *capped = true;
          return out;
        }
      }
    }
  }
  return out;
}

struct RootResult {
  std::vector<std::pair<Scalar, int>> roots;  // value, multiplicity
  Poly leftover;    // monic factor with no rational roots found
  bool certified;   // true when the leftover provably has no rational root
};

RootResult rational_roots(Poly m) {
  RootResult out;
  out.certified = true;
  poly_trim(m);
  require(!m.empty(), errc::internal_invariant_violation,
          "roots of the zero polynomial");
  Scalar lead = 1 / m.back();
  for (Scalar& c : m) c *= lead;
  int zero_mult = 0;
  while (!m.empty() && is_zero(m[0])) {
    m.erase(m.begin());
    ++zero_mult;
  }
  if (zero_mult) out.roots.push_back({Scalar(0), zero_mult});
  if (poly_deg(m) <= 0) {
    out.leftover = {Scalar(1)};
    return out;
  }
  mpz_class den = 1;
  for (const Scalar& c : m) den = lcm(den, c.get_den());
  std::vector<mpz_class> ic;
  for (const Scalar& c : m) ic.push_back(mpz_class(c * den));
  bool capped = false;
  IntFactorization f0 = factor_int(ic.front());
  IntFactorization fn = factor_int(ic.back());
  std::vector<mpz_class> ps = divisors_of(f0, &capped);
  std::vector<mpz_class> qs = divisors_of(fn, &capped);
  if (!f0.complete || !fn.complete || capped) out.certified = false;
  for (const mpz_class& p : ps)
    for (const mpz_class& q : qs) {
      if (gcd(p, q) != 1) continue;
      for (int sign : {1, -1}) {
        Scalar cand(sign * p, q);
        cand.canonicalize();
        int mult = 0;
        Poly lin = {-cand, Scalar(1)};
        while (poly_deg(m) >= 1 && is_zero(poly_eval(m, cand))) {
          m = poly_divmod(m, lin).first;
          ++mult;
        }
        if (mult) out.roots.push_back({cand, mult});
      }
    }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.leftover = m.empty() ? Poly{Scalar(1)} : m;
  return out;
}

// ---------------------------------------------------------------------------
// Quotient by a two-sided ideal given as a subspace.

struct QuotientAlg {
  int dim = 0;
  std::vector<int> complement;  // ambient coordinates forming the complement
  const StructureConstantAlgebra* ambient = nullptr;
  const Subspace* ideal = nullptr;
  std::vector<std::vector<StructureConstantAlgebra::SparseVec>> table;
  std::vector<Scalar> one;

  std::vector<Scalar> project(const std::vector<Scalar>& v) const {
    std::vector<Scalar> r = ideal->reduce(v);
    std::vector<Scalar> out(dim);
    for (int j = 0; j < dim; ++j) out[j] = r[complement[j]];
    return out;
  }
  std::vector<Scalar> lift(const std::vector<Scalar>& q) const {
    std::vector<Scalar> out(ambient->dim());
    for (int j = 0; j < dim; ++j) out[complement[j]] = q[j];
    return out;
  }
  std::vector<Scalar> multiply(const std::vector<Scalar>& x,
                               const std::vector<Scalar>& y) const {
    return project(ambient->multiply(lift(x), lift(y)));
  }
  bool is_zero_vec(const std::vector<Scalar>& v) const {
    return std::all_of(v.begin(), v.end(),
                       [](const Scalar& s) { return is_zero(s); });
  }
};

QuotientAlg build_quotient(const StructureConstantAlgebra& alg,
                           const Subspace& ideal) {
  QuotientAlg q;
  q.ambient = &alg;
  q.ideal = &ideal;
  std::vector<bool> pivot(alg.dim(), false);
  for (int p : ideal.pivots()) pivot[p] = true;
  for (int j = 0; j < alg.dim(); ++j)
    if (!pivot[j]) q.complement.push_back(j);
  q.dim = static_cast<int>(q.complement.size());
  q.one = q.project(alg.identity());
  q.table.assign(q.dim, std::vector<StructureConstantAlgebra::SparseVec>(q.dim));
  for (int i = 0; i < q.dim; ++i)
    for (int j = 0; j < q.dim; ++j) {
      std::vector<Scalar> xi(q.dim), xj(q.dim);
      xi[i] = 1;
      xj[j] = 1;
      std::vector<Scalar> prod = q.multiply(xi, xj);
      for (int t = 0; t < q.dim; ++t)
        if (!is_zero(prod[t])) q.table[i][j][t] = prod[t];
    }
  return q;
}

Matrix quotient_gram(const QuotientAlg& q) {
  // Trace form of the quotient's own regular representation.
  std::vector<Matrix> lmat;
  for (int i = 0; i < q.dim; ++i) {
    Matrix m(q.dim, q.dim);
    for (int j = 0; j < q.dim; ++j)
      for (const auto& [t, c] : q.table[i][j]) m.at(j, t) += c;
    lmat.push_back(std::move(m));
  }
  Matrix g(q.dim, q.dim);
  for (int i = 0; i < q.dim; ++i)
    for (int j = 0; j < q.dim; ++j) {
      Scalar tr = 0;
      for (int p = 0; p < q.dim; ++p)
        for (int t = 0; t < q.dim; ++t)
          tr += lmat[i].at(p, t) * lmat[j].at(t, p);
      g.at(i, j) = tr;
    }
  return g;
}

}  // namespace

// ---------------------------------------------------------------------------
// Radical

RadicalResult radical(const StructureConstantAlgebra& alg) {
  int n = alg.dim();
  std::vector<Matrix> lmat;
  for (int i = 0; i < n; ++i) lmat.push_back(alg.left_mult_matrix(alg.basis_vec(i)));
  Matrix gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Scalar tr = 0;
      for (int p = 0; p < n; ++p)
        for (int t = 0; t < n; ++t) tr += lmat[i].at(p, t) * lmat[j].at(t, p);
      gram.at(i, j) = tr;
      gram.at(j, i) = tr;
    }
  Matrix ker = left_nullspace(gram);
  Subspace rad(n);
  for (int r = 0; r < ker.rows(); ++r) rad.add(ker.row(r));

  // The trace-form kernel must be a nilpotent ideal in characteristic 0.
  RadicalResult out{std::move(rad), 1};
  std::vector<std::vector<Scalar>> power = out.radical.rows();
  while (!power.empty()) {
    ++out.nilpotency_index;
    Subspace next(n);
    for (const auto& x : power)
      for (const auto& y : out.radical.rows()) next.add(alg.multiply(x, y));
    require(next.dim() < static_cast<int>(power.size()) ||
                next.dim() == 0,
            errc::internal_invariant_violation,
            "trace-form kernel is not nilpotent");
    power = next.rows();
  }
  if (out.radical.dim() == 0) out.nilpotency_index = 1;

  QuotientAlg q = build_quotient(alg, out.radical);
  require(quotient_gram(q).rank() == q.dim, errc::internal_invariant_violation,
          "semisimple quotient has a degenerate trace form");
  return out;
}

// ---------------------------------------------------------------------------
// Primitive idempotents

namespace {

using Vec = std::vector<Scalar>;

// Minimal polynomial of x in the unital corner with unit e: the first monic
// dependency among e, x, x², …
Poly minimal_polynomial(const QuotientAlg& q, const Vec& x, const Vec& e) {
  Subspace span(q.dim);
  std::vector<Vec> powers;
  Vec cur = e;
  for (;;) {
    if (!span.add(cur)) {
      // cur is a combination of the previous powers.
      Matrix rows(static_cast<int>(powers.size()), q.dim);
      for (size_t r = 0; r < powers.size(); ++r)
        rows.set_row(static_cast<int>(r), powers[r]);
      auto c = solve_left(rows, cur);
      require(c.has_value(), errc::internal_invariant_violation,
              "power dependency without solution");
      Poly m(powers.size() + 1);
      m.back() = 1;
      for (size_t k = 0; k < c->size(); ++k) m[k] = -(*c)[k];
      return m;
    }
    powers.push_back(cur);
    cur = q.multiply(cur, x);
  }
}

Vec eval_at_element(const QuotientAlg& q, const Poly& p, const Vec& x,
                    const Vec& e) {
  Vec acc(q.dim);
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = q.multiply(acc, x);
    for (int j = 0; j < q.dim; ++j) acc[j] += *it * e[j];
  }
  return acc;
}

// Spectral idempotents of x inside the corner with unit e, given the full
// linear factorization of its minimal polynomial.
std::vector<Vec> spectral_idempotents(
    const QuotientAlg& q, const Vec& x, const Vec& e,
    const std::vector<std::pair<Scalar, int>>& roots, const Poly& minpoly) {
  std::vector<Vec> out;
  for (const auto& [lambda, mult] : roots) {
    Poly f = {Scalar(1)};
    Poly lin = {-lambda, Scalar(1)};
    for (int k = 0; k < mult; ++k) f = poly_mul(f, lin);
    Poly g = poly_divmod(minpoly, f).first;
    Poly s = poly_inverse_mod(g, f);
    Poly u = poly_divmod(poly_mul(g, s), minpoly).second;
    out.push_back(eval_at_element(q, u, x, e));
  }
  Vec sum(q.dim);
  for (const Vec& v : out)
    for (int j = 0; j < q.dim; ++j) sum[j] += v[j];
  require(sum == e, errc::internal_invariant_violation,
          "spectral idempotents do not sum to the corner unit");
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = 0; j < out.size(); ++j) {
      Vec p = q.multiply(out[i], out[j]);
      if (i == j)
        require(p == out[i], errc::internal_invariant_violation,
                "spectral projection is not idempotent");
      else
        require(q.is_zero_vec(p), errc::internal_invariant_violation,
                "spectral projections are not orthogonal");
    }
  return out;
}

// Corner basis of e·Q·e as a subspace of Q.
std::vector<Vec> corner_basis(const QuotientAlg& q, const Vec& e) {
  Subspace span(q.dim);
  for (int k = 0; k < q.dim; ++k) {
    Vec bk(q.dim);
    bk[k] = 1;
    span.add(q.multiply(q.multiply(e, bk), e));
  }
  // Canonical RREF rows keep the downstream trials deterministic.
  return span.rows();
}

// Splits e (an idempotent of the semisimple quotient) into a complete list of
// primitive idempotents, entirely inside the quotient.
std::vector<Vec> refine_idempotent(const QuotientAlg& q, Vec e) {
  std::vector<Vec> done;
  std::deque<Vec> work = {std::move(e)};
  int guard = 0;
  while (!work.empty()) {
    require(++guard <= 4 * q.dim + 16, errc::lifting_exhausted,
            "idempotent refinement did not terminate");
    Vec cur = work.front();
    work.pop_front();
    std::vector<Vec> corner = corner_basis(q, cur);
    if (corner.size() <= 1) {
      done.push_back(std::move(cur));
      continue;
    }
    // Deterministic trials: corner basis vectors, then pairwise sums and
    // differences, then a few stretched combinations.
    std::vector<Vec> trials = corner;
    for (size_t i = 0; i < corner.size(); ++i)
      for (size_t j = i + 1; j < corner.size(); ++j) {
        Vec s(q.dim), d(q.dim), t(q.dim);
        for (int t2 = 0; t2 < q.dim; ++t2) {
          s[t2] = corner[i][t2] + corner[j][t2];
          d[t2] = corner[i][t2] - corner[j][t2];
          t[t2] = corner[i][t2] + 2 * corner[j][t2];
        }
        trials.push_back(std::move(s));
        trials.push_back(std::move(d));
        trials.push_back(std::move(t));
      }
    bool split_done = false;
    bool saw_irrational = false;
    for (const Vec& x : trials) {
      Poly m = minimal_polynomial(q, x, cur);
      if (poly_deg(m) < 2) continue;
      RootResult rr = rational_roots(m);
      if (poly_deg(rr.leftover) >= 1) {
        if (rr.certified) saw_irrational = true;
        continue;  // cannot use this trial
      }
      if (rr.roots.size() < 2) continue;  // single eigenvalue: no split
      for (Vec& piece : spectral_idempotents(q, x, cur, rr.roots, m))
        work.push_back(std::move(piece));
      split_done = true;
      break;
    }
    if (!split_done) {
      if (saw_irrational)
        fail(errc::non_split_quotient,
             "semisimple quotient contains an element with irrational "
             "spectrum; the algebra does not split over Q");
      fail(errc::lifting_exhausted,
           "no deterministic trial element splits a corner of dimension " +
             std::to_string(corner.size()));
    }
  }
  return done;
}

}  // namespace

std::vector<StructureConstantAlgebra::Vec> primitive_idempotents(
    const StructureConstantAlgebra& alg) {
  RadicalResult rad = radical(alg);
  QuotientAlg q = build_quotient(alg, rad.radical);

  // Stage 1: split the center into its primitive idempotents. An irrational
  // spectrum here is a sound proof that the quotient does not split over Q
  // (the center of a split semisimple algebra is a power of Q).
  Matrix comm(q.dim, std::max(q.dim * q.dim, 1));
  for (int i = 0; i < q.dim; ++i) {
    Vec xi(q.dim);
    xi[i] = 1;
    for (int k = 0; k < q.dim; ++k) {
      Vec bk(q.dim);
      bk[k] = 1;
      Vec diff = q.multiply(xi, bk);
      Vec yk = q.multiply(bk, xi);
      for (int t = 0; t < q.dim; ++t)
        comm.at(i, k * q.dim + t) = diff[t] - yk[t];
    }
  }
  Matrix zker = left_nullspace(comm);
  std::vector<Vec> central = {q.one};
  for (int zi = 0; zi < zker.rows(); ++zi) {
    Vec z = zker.row(zi);
    std::vector<Vec> next;
    for (Vec& e : central) {
      std::vector<Vec> corner_e;  // split e by the central element z·e
      Vec ze = q.multiply(z, e);
      Poly m = minimal_polynomial(q, ze, e);
      RootResult rr = rational_roots(m);
      if (poly_deg(rr.leftover) >= 1) {
        require(!rr.certified, errc::non_split_quotient,
                "the center of the semisimple quotient has an element with "
                "irrational spectrum; Q is not a splitting field");
        fail(errc::lifting_exhausted,
             "could not certify the rational spectrum of a central element");
      }
      if (rr.roots.size() < 2) {
        next.push_back(std::move(e));
        continue;
      }
      for (Vec& piece : spectral_idempotents(q, ze, e, rr.roots, m))
        next.push_back(std::move(piece));
    }
    central = std::move(next);
  }

  // Stage 2: refine each central block to primitive idempotents.
  std::vector<Vec> prim_q;
  for (const Vec& e : central)
    for (Vec& piece : refine_idempotent(q, e)) prim_q.push_back(std::move(piece));

  // Split check: every corner is one-dimensional and the pairwise hom blocks
  // tile the quotient as a sum of full matrix algebras over Q.
  int pair_total = 0;
  for (const Vec& ei : prim_q)
    for (const Vec& ej : prim_q) {
      Subspace span(q.dim);
      for (int k = 0; k < q.dim; ++k) {
        Vec bk(q.dim);
        bk[k] = 1;
        span.add(q.multiply(q.multiply(ei, bk), ej));
      }
      int d = span.dim();
      if (&ei == &ej)
        require(d == 1, errc::non_split_quotient,
                "a primitive corner has dimension " + std::to_string(d) +
                  " > 1: endomorphism division ring larger than Q");
      else
        require(d <= 1, errc::non_split_quotient,
                "off-diagonal block of dimension " + std::to_string(d));
      pair_total += d;
    }
  require(pair_total == q.dim, errc::internal_invariant_violation,
          "block dimensions do not tile the semisimple quotient");

  // Lift to the algebra itself: Newton iteration inside the shrinking corner
  // keeps the lifted family orthogonal; the last idempotent is the remainder.
  std::vector<Vec> lifted;
  Vec g = alg.identity();
  for (size_t i = 0; i < prim_q.size(); ++i) {
    if (i + 1 == prim_q.size()) {
      lifted.push_back(g);
      break;
    }
    Vec x = alg.multiply(alg.multiply(g, q.lift(prim_q[i])), g);
    int rounds = 0;
    while (alg.multiply(x, x) != x) {
      require(++rounds <= 64, errc::internal_invariant_violation,
              "idempotent lifting did not converge");
      // x <- 3x² - 2x³
      Vec x2 = alg.multiply(x, x);
      Vec x3 = alg.multiply(x2, x);
      for (int t = 0; t < alg.dim(); ++t) x[t] = 3 * x2[t] - 2 * x3[t];
    }
    for (int t = 0; t < alg.dim(); ++t) g[t] -= x[t];
    lifted.push_back(std::move(x));
  }

  // Completeness and orthogonality.
  Vec sum(alg.dim());
  for (const Vec& f : lifted)
    for (int t = 0; t < alg.dim(); ++t) sum[t] += f[t];
  require(sum == alg.identity(), errc::internal_invariant_violation,
          "primitive idempotents do not sum to 1");
  for (size_t i = 0; i < lifted.size(); ++i)
    for (size_t j = 0; j < lifted.size(); ++j) {
      Vec p = alg.multiply(lifted[i], lifted[j]);
      if (i == j)
        require(p == lifted[i], errc::internal_invariant_violation,
                "lifted element is not idempotent");
      else
        require(std::all_of(p.begin(), p.end(),
                            [](const Scalar& s) { return is_zero(s); }),
                errc::internal_invariant_violation,
                "lifted idempotents are not orthogonal");
    }
  return lifted;
}

// ---------------------------------------------------------------------------
// Global dimension via minimal projective resolutions of the simples.

namespace {

// A right module over a structure-constant algebra: a coordinate space with
// one action matrix per algebra basis element.
struct Mod {
  int dim = 0;
  std::vector<Matrix> act;

  Matrix element_action(const StructureConstantAlgebra& alg,
                        const Vec& x) const {
    Matrix m(dim, dim);
    for (int k = 0; k < alg.dim(); ++k)
      if (!is_zero(x[k])) m = m + act[k].scaled(x[k]);
    return m;
  }
};

struct SubmoduleBasis {
  Subspace space;

  std::vector<Scalar> coords(const std::vector<Scalar>& v) const {
    std::vector<Scalar> c(space.dim());
    std::vector<Scalar> acc = v;
    for (int t = 0; t < space.dim(); ++t) {
      c[t] = acc[space.pivots()[t]];
      if (is_zero(c[t])) continue;
      for (int j = 0; j < space.ambient(); ++j)
        acc[j] -= c[t] * space.rows()[t][j];
    }
    require(std::all_of(acc.begin(), acc.end(),
                        [](const Scalar& s) { return is_zero(s); }),
            errc::internal_invariant_violation,
            "vector outside the submodule span");
    return c;
  }
};

// Closes generating rows under the algebra action and packages the result as
// a module of its own.
Mod submodule(const StructureConstantAlgebra& alg, const Mod& ambient,
              const std::vector<std::vector<Scalar>>& gens,
              SubmoduleBasis* basis_out) {
  Subspace span(ambient.dim);
  std::deque<std::vector<Scalar>> work;
  for (const auto& g : gens)
    if (span.add(g)) work.push_back(g);
  while (!work.empty()) {
    std::vector<Scalar> v = work.front();
    work.pop_front();
    for (int k = 0; k < alg.dim(); ++k) {
      std::vector<Scalar> w = mul_row(v, ambient.act[k]);
      if (span.add(w)) work.push_back(std::move(w));
    }
  }
  SubmoduleBasis sb{span};
  Mod sub;
  sub.dim = span.dim();
  for (int k = 0; k < alg.dim(); ++k) {
    Matrix m(sub.dim, sub.dim);
    for (int r = 0; r < sub.dim; ++r) {
      std::vector<Scalar> img = mul_row(span.rows()[r], ambient.act[k]);
      std::vector<Scalar> c = sb.coords(img);
      m.set_row(r, c);
    }
    sub.act.push_back(std::move(m));
  }
  if (basis_out) *basis_out = std::move(sb);
  return sub;
}

// M·rad as a subspace of M's coordinate space.
Subspace module_radical(const StructureConstantAlgebra& alg, const Mod& m,
                        const Subspace& rad) {
  Subspace out(m.dim);
  for (const auto& rho : rad.rows()) {
    Matrix a = m.element_action(alg, rho);
    for (int r = 0; r < m.dim; ++r) {
      std::vector<Scalar> unit(m.dim);
      unit[r] = 1;
      out.add(mul_row(unit, a));
    }
  }
  return out;
}

struct CoverResult {
  Mod kernel;
  bool kernel_zero = false;
};

struct ProjectiveCache {
  std::vector<Mod> projectives;       // one per block
  std::vector<SubmoduleBasis> bases;  // coordinates inside the algebra
  std::vector<Vec> idempotents;       // block representatives
};

// Minimal projective cover of m; returns the syzygy as a module.
CoverResult cover(const StructureConstantAlgebra& alg, const Subspace& rad,
                  const ProjectiveCache& pc, const Mod& m) {
  CoverResult out;
  if (m.dim == 0) {
    out.kernel_zero = true;
    return out;
  }
  Subspace mrad = module_radical(alg, m, rad);
  // Top multiplicities and explicit lifted generators per block.
  std::vector<std::vector<std::vector<Scalar>>> lifts(pc.projectives.size());
  for (size_t b = 0; b < pc.projectives.size(); ++b) {
    Matrix af = m.element_action(alg, pc.idempotents[b]);
    Subspace seen(m.dim);
    for (const auto& row : mrad.rows()) seen.add(row);
    for (int r = 0; r < m.dim; ++r) {
      std::vector<Scalar> unit(m.dim);
      unit[r] = 1;
      std::vector<Scalar> v = mul_row(unit, af);
      if (seen.add(v)) lifts[b].push_back(std::move(v));
    }
  }
  int domain_dim = 0;
  for (size_t b = 0; b < pc.projectives.size(); ++b)
    domain_dim += static_cast<int>(lifts[b].size()) * pc.projectives[b].dim;
  require(domain_dim > 0, errc::internal_invariant_violation,
          "nonzero module with empty top");

  Mod domain;
  domain.dim = domain_dim;
  for (int k = 0; k < alg.dim(); ++k) {
    Matrix a(domain_dim, domain_dim);
    int off = 0;
    for (size_t b = 0; b < pc.projectives.size(); ++b)
      for (size_t t = 0; t < lifts[b].size(); ++t) {
        const Matrix& pa = pc.projectives[b].act[k];
        for (int i = 0; i < pa.rows(); ++i)
          for (int j = 0; j < pa.cols(); ++j)
            a.at(off + i, off + j) = pa.at(i, j);
        off += pc.projectives[b].dim;
      }
    domain.act.push_back(std::move(a));
  }
  // The cover map sends the projective basis row p (an element of f·A) to
  // m_t · p.
  Matrix phi(domain_dim, m.dim);
  int off = 0;
  for (size_t b = 0; b < pc.projectives.size(); ++b)
    for (const auto& mt : lifts[b]) {
      for (int r = 0; r < pc.projectives[b].dim; ++r) {
        const std::vector<Scalar>& p = pc.bases[b].space.rows()[r];
        std::vector<Scalar> img(m.dim);
        for (int k = 0; k < alg.dim(); ++k) {
          if (is_zero(p[k])) continue;
          std::vector<Scalar> step = mul_row(mt, m.act[k]);
          for (int j = 0; j < m.dim; ++j) img[j] += p[k] * step[j];
        }
        phi.set_row(off + r, img);
      }
      off += pc.projectives[b].dim;
    }
  require(phi.rank() == m.dim, errc::internal_invariant_violation,
          "projective cover is not surjective");

  Matrix ker = left_nullspace(phi);
  // Minimality: the kernel must sit inside domain·rad.
  Subspace drad = module_radical(alg, domain, rad);
  for (int r = 0; r < ker.rows(); ++r)
    require(drad.contains(ker.row(r)), errc::internal_invariant_violation,
            "cover kernel escapes the radical: cover not minimal");
  if (ker.rows() == 0) {
    out.kernel_zero = true;
    return out;
  }
  std::vector<std::vector<Scalar>> gens;
  for (int r = 0; r < ker.rows(); ++r) gens.push_back(ker.row(r));
  out.kernel = submodule(alg, domain, gens, nullptr);
  return out;
}

}  // namespace

GldimReport global_dimension(const StructureConstantAlgebra& alg, int bound) {
  RadicalResult rad = radical(alg);
  std::vector<Vec> idems = primitive_idempotents(alg);
  QuotientAlg q = build_quotient(alg, rad.radical);

  // Group idempotents into blocks (isomorphic simples) via nonzero hom blocks
  // in the quotient.
  int k = static_cast<int>(idems.size());
  std::vector<int> block(k, -1);
  std::vector<Vec> proj_q;
  for (const Vec& f : idems) proj_q.push_back(q.project(f));
  int nblocks = 0;
  for (int i = 0; i < k; ++i) {
    if (block[i] >= 0) continue;
    block[i] = nblocks;
    for (int j = i + 1; j < k; ++j) {
      if (block[j] >= 0) continue;
      Subspace span(q.dim);
      for (int t = 0; t < q.dim; ++t) {
        Vec bt(q.dim);
        bt[t] = 1;
        span.add(q.multiply(q.multiply(proj_q[i], bt), proj_q[j]));
      }
      if (span.dim() > 0) block[j] = nblocks;
    }
    ++nblocks;
  }

  // Regular module and the projectives f·A, one per block.
  Mod regular;
  regular.dim = alg.dim();
  for (int t = 0; t < alg.dim(); ++t)
    regular.act.push_back(alg.right_mult_matrix(alg.basis_vec(t)));

  ProjectiveCache pc;
  for (int b = 0; b < nblocks; ++b) {
    int rep = -1;
    for (int i = 0; i < k && rep < 0; ++i)
      if (block[i] == b) rep = i;
    pc.idempotents.push_back(idems[rep]);
    std::vector<std::vector<Scalar>> gens;
    for (int t = 0; t < alg.dim(); ++t)
      gens.push_back(alg.multiply(idems[rep], alg.basis_vec(t)));
    SubmoduleBasis sb{Subspace(0)};
    Mod p = submodule(alg, regular, gens, &sb);
    pc.projectives.push_back(std::move(p));
    pc.bases.push_back(std::move(sb));
  }

  GldimReport rep;
  rep.bound = bound;
  rep.radical_nilpotency = rad.nilpotency_index;
  rep.num_simples = nblocks;
  bool exceeded = false;
  int best = 0;
  for (int b = 0; b < nblocks; ++b) {
    // Simple S_b = (f·A)/(f·A)·rad.
    const Mod& p = pc.projectives[b];
    Subspace prad = module_radical(alg, p, rad.radical);
    std::vector<bool> pivot(p.dim, false);
    for (int t : prad.pivots()) pivot[t] = true;
    std::vector<int> complement;
    for (int t = 0; t < p.dim; ++t)
      if (!pivot[t]) complement.push_back(t);
    Mod simple;
    simple.dim = static_cast<int>(complement.size());
    for (int t = 0; t < alg.dim(); ++t) {
      Matrix a(simple.dim, simple.dim);
      for (int r = 0; r < simple.dim; ++r) {
        std::vector<Scalar> unit(p.dim);
        unit[complement[r]] = 1;
        std::vector<Scalar> img = prad.reduce(mul_row(unit, p.act[t]));
        for (int c = 0; c < simple.dim; ++c) a.at(r, c) = img[complement[c]];
      }
      simple.act.push_back(std::move(a));
    }

    std::optional<int> pd;
    Mod cur = simple;
    for (int step = 0; step <= bound; ++step) {
      CoverResult cov = cover(alg, rad.radical, pc, cur);
      if (cov.kernel_zero) {
        pd = step;
        break;
      }
      cur = std::move(cov.kernel);
    }
    rep.pd_by_simple.push_back(pd);
    if (!pd)
      exceeded = true;
    else
      best = std::max(best, *pd);
  }
  if (!exceeded) rep.gldim = best;
  return rep;
}

}  // namespace qsplit
