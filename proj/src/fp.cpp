#include "evatop/fp.hpp"

#include <sstream>
#include <stdexcept>

#include "evatop/fpkernel.hpp"

namespace evatop {

uint64_t fp_add(uint64_t a, uint64_t b, uint64_t p) {
  uint64_t s = a + b;
  return s >= p ? s - p : s;
}

uint64_t fp_sub(uint64_t a, uint64_t b, uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

uint64_t fp_mul(uint64_t a, uint64_t b, uint64_t p) {
  return (uint64_t)((__uint128_t)a * b % p);
}

uint64_t fp_neg(uint64_t a, uint64_t p) { return a == 0 ? 0 : p - a; }

uint64_t fp_pow(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = fp_mul(r, a, p);
    a = fp_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

uint64_t fp_inv(uint64_t a, uint64_t p) {
  if (a % p == 0) throw std::domain_error("fp_inv: zero has no inverse");
  return fp_pow(a, p - 2, p);
}

bool is_prime(uint64_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, uint64_t p)
    : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {
  if (p < 2 || p >= (uint64_t{1} << 31))
    throw std::invalid_argument("FpMatrix: modulus out of range");
}

FpMatrix FpMatrix::identity(std::size_t n, uint64_t p) {
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

bool FpMatrix::operator==(const FpMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && a_ == o.a_;
}

FpMatrix FpMatrix::multiply(const FpMatrix& rhs) const {
  if (cols_ != rhs.rows_ || p_ != rhs.p_)
    throw std::invalid_argument("FpMatrix::multiply: shape/modulus mismatch");
  FpMatrix out(rows_, rhs.cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      uint64_t v = at(i, k);
      if (v) fpk::addmul_mod(out.row(i), rhs.row(k), v, p_, rhs.cols_);
    }
  }
  return out;
}

FpMatrix FpMatrix::add(const FpMatrix& rhs) const {
  if (cols_ != rhs.cols_ || rows_ != rhs.rows_ || p_ != rhs.p_)
    throw std::invalid_argument("FpMatrix::add: shape/modulus mismatch");
  FpMatrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i)
    out.a_[i] = fp_add(out.a_[i], rhs.a_[i], p_);
  return out;
}

FpMatrix FpMatrix::scaled(uint64_t c) const {
  FpMatrix out = *this;
  c %= p_;
  fpk::scale_mod(out.a_.data(), c, p_, out.a_.size());
  return out;
}

FpMatrix FpMatrix::transposed() const {
  FpMatrix out(cols_, rows_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

bool FpMatrix::is_zero() const {
  for (uint64_t v : a_)
    if (v) return false;
  return true;
}

bool FpMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

uint64_t FpMatrix::trace() const {
  uint64_t t = 0;
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i)
    t = fp_add(t, at(i, i), p_);
  return t;
}

std::vector<uint64_t> FpMatrix::apply(const std::vector<uint64_t>& v) const {
  if (v.size() != cols_)
    throw std::invalid_argument("FpMatrix::apply: size mismatch");
  std::vector<uint64_t> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    __uint128_t acc = 0;
    const uint64_t* r = row(i);
    for (std::size_t j = 0; j < cols_; ++j) acc += (__uint128_t)r[j] * v[j];
    out[i] = (uint64_t)(acc % p_);
  }
  return out;
}

FpMatrix FpMatrix::rref(std::vector<std::size_t>* pivot_cols) const {
  FpMatrix m = *this;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t pr = r;
    while (pr < rows_ && m.at(pr, c) == 0) ++pr;
    if (pr == rows_) continue;
    if (pr != r)
      for (std::size_t j = 0; j < cols_; ++j) {
        uint64_t t = m.at(r, j);
        m.set(r, j, m.at(pr, j));
        m.set(pr, j, t);
      }
    uint64_t inv = fp_inv(m.at(r, c), p_);
    fpk::scale_mod(m.row(r), inv, p_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      uint64_t f = m.at(i, c);
      if (f) fpk::addmul_mod(m.row(i), m.row(r), p_ - f, p_, cols_);
    }
    pivots.push_back(c);
    ++r;
  }
  if (pivot_cols) *pivot_cols = std::move(pivots);
  return m;
}

std::size_t FpMatrix::rank() const {
  std::vector<std::size_t> pivots;
  rref(&pivots);
  return pivots.size();
}

FpMatrix FpMatrix::kernel_basis() const {
  std::vector<std::size_t> pivots;
  FpMatrix r = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::size_t nullity = cols_ - pivots.size();
  FpMatrix k(cols_, nullity, p_);
  std::size_t out = 0;
  for (std::size_t fc = 0; fc < cols_; ++fc) {
    if (is_pivot[fc]) continue;
    k.set(fc, out, 1);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      uint64_t v = r.at(i, fc);
      if (v) k.set(pivots[i], out, p_ - v);
    }
    ++out;
  }
  return k;
}

std::optional<std::vector<uint64_t>> FpMatrix::solve(
    const std::vector<uint64_t>& b) const {
  if (b.size() != rows_)
    throw std::invalid_argument("FpMatrix::solve: rhs size mismatch");
  FpMatrix aug(rows_, cols_ + 1, p_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
    aug.set(i, cols_, b[i] % p_);
  }
  std::vector<std::size_t> pivots;
  FpMatrix r = aug.rref(&pivots);
  for (std::size_t c : pivots)
    if (c == cols_) return std::nullopt;  // inconsistent
  std::vector<uint64_t> x(cols_, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r.at(i, cols_);
  return x;
}

std::vector<std::size_t> FpMatrix::independent_cols_mod(
    const FpMatrix& prefix) const {
  if (prefix.rows() != rows_ && prefix.cols() != 0)
    throw std::invalid_argument("independent_cols_mod: row mismatch");
  FpMatrix work = prefix.cols() == 0 ? FpMatrix(rows_, 0, p_) : prefix;
  std::size_t base_rank = work.cols() == 0 ? 0 : work.rank();
  std::vector<std::size_t> chosen;
  for (std::size_t c = 0; c < cols_; ++c) {
    FpMatrix cand(rows_, work.cols() + 1, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < work.cols(); ++j)
        cand.set(i, j, work.at(i, j));
      cand.set(i, work.cols(), at(i, c));
    }
    if (cand.rank() > base_rank) {
      work = cand;
      ++base_rank;
      chosen.push_back(c);
    }
  }
  return chosen;
}

FpMatrix FpMatrix::hcat(const FpMatrix& rhs) const {
  if (rhs.rows() != rows_ || rhs.p() != p_)
    throw std::invalid_argument("FpMatrix::hcat: shape/modulus mismatch");
  FpMatrix out(rows_, cols_ + rhs.cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
    for (std::size_t j = 0; j < rhs.cols_; ++j)
      out.set(i, cols_ + j, rhs.at(i, j));
  }
  return out;
}

FpMatrix FpMatrix::columns(const std::vector<std::size_t>& idx) const {
  FpMatrix out(rows_, idx.size(), p_);
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) out.set(i, j, at(i, idx[j]));
  return out;
}

std::string FpMatrix::to_text() const {
  std::ostringstream os;
  os << rows_ << " " << cols_ << " mod " << p_ << "\n";
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << at(i, j);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace evatop
