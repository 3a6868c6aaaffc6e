#ifndef GRAKIT_EXACTLA_HPP
#define GRAKIT_EXACTLA_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace grakit {

using Rational = boost::multiprecision::cpp_rational;
using SparseRow = std::map<std::size_t, Rational>;  // column -> nonzero entry
using RVector = std::vector<Rational>;

inline std::string rational_string(const Rational& q) {
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

// row -= factor * other
inline void axpy(SparseRow& row, const Rational& factor, const SparseRow& other) {
  for (const auto& [c, v] : other) {
    auto [it, fresh] = row.try_emplace(c, 0);
    it->second -= factor * v;
    if (it->second == 0) row.erase(it);
  }
}

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  static QMatrix from_dense(const std::vector<std::vector<Rational>>& m) {
    std::size_t c = m.empty() ? 0 : m.front().size();
    QMatrix out(m.size(), c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i].size() != c) throw std::invalid_argument("ragged dense matrix");
      for (std::size_t j = 0; j < c; ++j)
        if (m[i][j] != 0) out.data_[i][j] = m[i][j];
    }
    return out;
  }

  static QMatrix identity(std::size_t n) {
    QMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out.data_[i][i] = 1;
    return out;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SparseRow& row(std::size_t i) const { return data_.at(i); }

  Rational at(std::size_t i, std::size_t j) const {
    auto it = data_.at(i).find(j);
    return it == data_[i].end() ? Rational(0) : it->second;
  }
  void add(std::size_t i, std::size_t j, const Rational& v) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("QMatrix index");
    if (v == 0) return;
    auto [it, fresh] = data_[i].try_emplace(j, 0);
    it->second += v;
    if (it->second == 0) data_[i].erase(it);
  }
  void set(std::size_t i, std::size_t j, const Rational& v) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("QMatrix index");
    if (v == 0)
      data_[i].erase(j);
    else
      data_[i][j] = v;
  }

  bool is_zero() const {
    for (const auto& r : data_)
      if (!r.empty()) return false;
    return true;
  }

  QMatrix transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (const auto& [j, v] : data_[i]) t.data_[j][i] = v;
    return t;
  }

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("QMatrix product shape mismatch");
    QMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (const auto& [k, v] : a.data_[i]) axpy(out.data_[i], -v, b.data_[k]);
    return out;
  }
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("QMatrix sum shape mismatch");
    QMatrix out = a;
    for (std::size_t i = 0; i < a.rows_; ++i) axpy(out.data_[i], -1, b.data_[i]);
    return out;
  }
  QMatrix scaled(const Rational& s) const {
    QMatrix out(rows_, cols_);
    if (s == 0) return out;
    for (std::size_t i = 0; i < rows_; ++i)
      for (const auto& [j, v] : data_[i]) out.data_[i][j] = v * s;
    return out;
  }
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  RVector apply(const RVector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("QMatrix apply shape mismatch");
    RVector y(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (const auto& [j, v] : data_[i]) y[i] += v * x[j];
    return y;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<SparseRow> data_;
};

// Incremental row echelon form. Each stored row is normalized and has its own
// leading (smallest) column; a new row is reduced against the pivots first.
class Echelon {
 public:
  // returns true if the row was independent of what is already stored
  bool insert(SparseRow row) {
    while (!row.empty()) {
      auto lead = row.begin();
      auto p = pivots_.find(lead->first);
      if (p == pivots_.end()) {
        Rational inv = 1 / lead->second;
        for (auto& [c, v] : row) v *= inv;
        pivots_.emplace(row.begin()->first, std::move(row));
        return true;
      }
      Rational factor = lead->second;
      axpy(row, factor, p->second);
    }
    return false;
  }
  std::size_t rank() const { return pivots_.size(); }
  std::vector<std::size_t> pivot_columns() const {
    std::vector<std::size_t> out;
    for (const auto& kv : pivots_) out.push_back(kv.first);
    return out;
  }
  bool contains(SparseRow row) const {
    while (!row.empty()) {
      auto lead = row.begin();
      auto p = pivots_.find(lead->first);
      if (p == pivots_.end()) return false;
      Rational factor = lead->second;
      axpy(row, factor, p->second);
    }
    return true;
  }

 private:
  std::map<std::size_t, SparseRow> pivots_;  // leading column -> normalized row
};

inline std::size_t rank(const QMatrix& m) {
  Echelon e;
  for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  return e.rank();
}

// basis of {x : m x = 0}, one vector per free column of the reduced echelon form
inline std::vector<RVector> kernel_basis(const QMatrix& m) {
  std::size_t r = m.rows(), c = m.cols();
  std::vector<RVector> a(r, RVector(c, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (const auto& [j, v] : m.row(i)) a[i][j] = v;
  std::vector<std::size_t> pivcol;
  std::size_t prow = 0;
  for (std::size_t j = 0; j < c && prow < r; ++j) {
    std::size_t sel = prow;
    while (sel < r && a[sel][j] == 0) ++sel;
    if (sel == r) continue;
    std::swap(a[sel], a[prow]);
    Rational inv = 1 / a[prow][j];
    for (auto& v : a[prow]) v *= inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == prow || a[i][j] == 0) continue;
      Rational f = a[i][j];
      for (std::size_t k = j; k < c; ++k) a[i][k] -= f * a[prow][k];
    }
    pivcol.push_back(j);
    ++prow;
  }
  std::vector<char> is_piv(c, 0);
  for (auto j : pivcol) is_piv[j] = 1;
  std::vector<RVector> out;
  for (std::size_t f = 0; f < c; ++f) {
    if (is_piv[f]) continue;
    RVector x(c, 0);
    x[f] = 1;
    for (std::size_t k = 0; k < pivcol.size(); ++k) x[pivcol[k]] = -a[k][f];
    out.push_back(std::move(x));
  }
  return out;
}

struct ComplexError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Chain complex in degrees lo..lo+dims.size()-1 with d_k : C_k -> C_{k-1}.
class ChainComplex {
 public:
  // d[i] is the differential out of degree lo+i; d[0] must map to the zero space
  ChainComplex(int lo, std::vector<std::size_t> dims, std::vector<QMatrix> d)
      : lo_(lo), dims_(std::move(dims)), d_(std::move(d)) {
    if (d_.size() != dims_.size()) throw ComplexError("one differential per degree expected");
    for (std::size_t i = 0; i < dims_.size(); ++i) {
      std::size_t target = i == 0 ? 0 : dims_[i - 1];
      if (d_[i].cols() != dims_[i] || d_[i].rows() != target) throw ComplexError("differential shape mismatch");
    }
    for (std::size_t i = 1; i < d_.size(); ++i)
      if (!(d_[i - 1] * d_[i]).is_zero()) throw ComplexError("d∘d != 0 in degree " + std::to_string(lo_ + i));
  }

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
  std::size_t dim(int k) const { return in_range(k) ? dims_[k - lo_] : 0; }
  const QMatrix& d(int k) const { return d_.at(k - lo_); }

  std::map<int, std::size_t> homology_dims() const {
    std::vector<std::size_t> rk(dims_.size());
    for (std::size_t i = 0; i < dims_.size(); ++i) rk[i] = rank(d_[i]);
    std::map<int, std::size_t> h;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
      std::size_t above = i + 1 < dims_.size() ? rk[i + 1] : 0;
      h[lo_ + static_cast<int>(i)] = dims_[i] - rk[i] - above;
    }
    return h;
  }

 private:
  bool in_range(int k) const { return k >= lo_ && k <= hi(); }
  int lo_;
  std::vector<std::size_t> dims_;
  std::vector<QMatrix> d_;
};

}  // namespace grakit

#endif  // GRAKIT_EXACTLA_HPP
