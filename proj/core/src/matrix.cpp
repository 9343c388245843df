#include "qsplit/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace qsplit {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require(cols_ == o.rows_, errc::internal_invariant_violation,
          "matrix product shape mismatch");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& v = at(i, k);
      if (qsplit::is_zero(v)) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& w = o.at(k, j);
        if (!qsplit::is_zero(w)) r.at(i, j) += v * w;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_,
          errc::internal_invariant_violation, "matrix sum shape mismatch");
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_,
          errc::internal_invariant_violation, "matrix difference shape mismatch");
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Scalar& s) { return qsplit::is_zero(s); });
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::vector<int> Matrix::rref() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int p = -1;
    for (int i = row; i < rows_; ++i)
      if (!qsplit::is_zero(at(i, col))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
    Scalar inv = 1 / at(row, col);
    for (int j = col; j < cols_; ++j) at(row, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == row || qsplit::is_zero(at(i, col))) continue;
      Scalar f = at(i, col);
      for (int j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int Matrix::rank() const {
  Matrix m = *this;
  return static_cast<int>(m.rref().size());
}

Scalar Matrix::det() const {
  require(rows_ == cols_, errc::internal_invariant_violation,
          "determinant of non-square matrix");
  Matrix m = *this;
  Scalar d = 1;
  for (int col = 0; col < cols_; ++col) {
    int p = -1;
    for (int i = col; i < rows_; ++i)
      if (!qsplit::is_zero(m.at(i, col))) {
        p = i;
        break;
      }
    if (p < 0) return Scalar(0);
    if (p != col) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    Scalar inv = 1 / m.at(col, col);
    for (int i = col + 1; i < rows_; ++i) {
      if (qsplit::is_zero(m.at(i, col))) continue;
      Scalar f = m.at(i, col) * inv;
      for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return d;
}

bool Matrix::invertible() const {
  return rows_ == cols_ && !qsplit::is_zero(det());
}

std::vector<Scalar> Matrix::row(int r) const {
  std::vector<Scalar> v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(r, j);
  return v;
}

void Matrix::set_row(int r, const std::vector<Scalar>& v) {
  require(static_cast<int>(v.size()) == cols_,
          errc::internal_invariant_violation, "row width mismatch");
  for (int j = 0; j < cols_; ++j) at(r, j) = v[j];
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "\n" : "") << "[";
    for (int j = 0; j < cols_; ++j)
      os << (j ? " " : "") << scalar_to_string(at(i, j));
    os << "]";
  }
  return os.str();
}

Matrix left_nullspace(const Matrix& a) {
  // x·A = 0  <=>  Aᵀ·xᵀ = 0; compute the canonical kernel of Aᵀ.
  Matrix t = a.transpose();
  std::vector<int> pivots = t.rref();
  int n = a.rows();
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix basis(static_cast<int>(free_cols.size()), n);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int f = free_cols[k];
    basis.at(static_cast<int>(k), f) = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      basis.at(static_cast<int>(k), pivots[r]) = -t.at(static_cast<int>(r), f);
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve_left(const Matrix& a,
                                              const std::vector<Scalar>& b) {
  require(static_cast<int>(b.size()) == a.cols(),
          errc::internal_invariant_violation, "solve_left shape mismatch");
  // Solve Aᵀ·x = bᵀ by RREF on the augmented matrix.
  Matrix aug(a.cols(), a.rows() + 1);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) aug.at(j, i) = a.at(i, j);
  for (int j = 0; j < a.cols(); ++j) aug.at(j, a.rows()) = b[j];
  std::vector<int> pivots = aug.rref();
  std::vector<Scalar> x(a.rows());
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == a.rows()) return std::nullopt;  // inconsistent
    x[pivots[r]] = aug.at(static_cast<int>(r), a.rows());
  }
  return x;
}

std::vector<Scalar> mul_row(const std::vector<Scalar>& x, const Matrix& a) {
  require(static_cast<int>(x.size()) == a.rows(),
          errc::internal_invariant_violation, "mul_row shape mismatch");
  std::vector<Scalar> r(a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < a.cols(); ++j)
      if (!is_zero(a.at(i, j))) r[j] += x[i] * a.at(i, j);
  }
  return r;
}

bool Subspace::add(std::vector<Scalar> v) {
  v = reduce(std::move(v));
  int lead = -1;
  for (int j = 0; j < ambient_; ++j)
    if (!is_zero(v[j])) {
      lead = j;
      break;
    }
  if (lead < 0) return false;
  Scalar inv = 1 / v[lead];
  for (auto& c : v) c *= inv;
  for (auto& r : rows_) {
    if (is_zero(r[lead])) continue;
    Scalar f = r[lead];
    for (int j = 0; j < ambient_; ++j) r[j] -= f * v[j];
  }
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, lead);
  return true;
}

std::vector<Scalar> Subspace::reduce(std::vector<Scalar> v) const {
  require(static_cast<int>(v.size()) == ambient_,
          errc::internal_invariant_violation, "subspace reduce shape mismatch");
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = v[pivots_[r]];
    if (is_zero(c)) continue;
    Scalar f = c;
    for (int j = 0; j < ambient_; ++j) v[j] -= f * rows_[r][j];
  }
  return v;
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
  std::vector<Scalar> r = reduce(v);
  return std::all_of(r.begin(), r.end(),
                     [](const Scalar& s) { return is_zero(s); });
}

const char* errc_name(errc c) {
  switch (c) {
    case errc::unknown_vertex: return "UnknownVertex";
    case errc::unknown_arrow: return "UnknownArrow";
    case errc::duplicate_identifier: return "DuplicateIdentifier";
    case errc::not_composable: return "NotComposable";
    case errc::not_connected: return "NotConnected";
    case errc::invalid_path: return "InvalidPath";
    case errc::non_uniform_relation: return "NonUniformRelation";
    case errc::non_admissible_generator: return "NonAdmissibleGenerator";
    case errc::not_finite_dimensional: return "NotFiniteDimensional";
    case errc::unknown_basis_path: return "UnknownBasisPath";
    case errc::not_basis_path: return "NotBasisPath";
    case errc::invalid_splitting_datum: return "InvalidSplittingDatum";
    case errc::precondition_failed: return "PreconditionFailed";
    case errc::not_monomial: return "NotMonomial";
    case errc::not_special_multiserial: return "NotSpecialMultiserial";
    case errc::relation_violated: return "RelationViolated";
    case errc::non_split_quotient: return "NonSplitQuotient";
    case errc::lifting_exhausted: return "LiftingExhausted";
    case errc::parse_error: return "ParseError";
    case errc::witness_failure: return "WitnessFailure";
    case errc::inconclusive: return "Inconclusive";
    case errc::internal_invariant_violation: return "InternalInvariantViolation";
  }
  return "Error";
}

}  // namespace qsplit
