// Dense matrices over the prime field F_p, p < 2^31.  Entries are kept
// reduced in [0, p).  Elimination goes through the fpk row kernels.

#ifndef EVATOP_FP_HPP
#define EVATOP_FP_HPP

#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace evatop {

uint64_t fp_add(uint64_t a, uint64_t b, uint64_t p);
uint64_t fp_sub(uint64_t a, uint64_t b, uint64_t p);
uint64_t fp_mul(uint64_t a, uint64_t b, uint64_t p);
uint64_t fp_neg(uint64_t a, uint64_t p);
uint64_t fp_pow(uint64_t a, uint64_t e, uint64_t p);
uint64_t fp_inv(uint64_t a, uint64_t p);  // p prime, a != 0
bool is_prime(uint64_t p);

class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols, uint64_t p);
  static FpMatrix identity(std::size_t n, uint64_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  uint64_t p() const { return p_; }

  uint64_t at(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return a_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, uint64_t v) {
    assert(r < rows_ && c < cols_);
    a_[r * cols_ + c] = v;
  }

  uint64_t* row(std::size_t r) { return a_.data() + r * cols_; }
  const uint64_t* row(std::size_t r) const { return a_.data() + r * cols_; }

  bool operator==(const FpMatrix& o) const;

  FpMatrix multiply(const FpMatrix& rhs) const;
  FpMatrix add(const FpMatrix& rhs) const;
  FpMatrix scaled(uint64_t c) const;
  FpMatrix transposed() const;
  bool is_zero() const;
  bool is_identity() const;
  uint64_t trace() const;

  std::vector<uint64_t> apply(const std::vector<uint64_t>& v) const;

  std::size_t rank() const;
  // Reduced row echelon form together with the pivot column indices.
  FpMatrix rref(std::vector<std::size_t>* pivot_cols = nullptr) const;
  // Columns form a basis of the right kernel (cols = nullity).
  FpMatrix kernel_basis() const;
  // One solution x of Ax = b, if any.
  std::optional<std::vector<uint64_t>> solve(
      const std::vector<uint64_t>& b) const;
  // Column indices of this matrix that extend span(prefix) to
  // span(prefix | this), scanning left to right.
  std::vector<std::size_t> independent_cols_mod(const FpMatrix& prefix) const;
  // Horizontal concatenation [this | rhs].
  FpMatrix hcat(const FpMatrix& rhs) const;
  FpMatrix columns(const std::vector<std::size_t>& idx) const;

  std::string to_text() const;  // dense debug dump

 private:
  std::size_t rows_ = 0, cols_ = 0;
  uint64_t p_ = 2;
  std::vector<uint64_t> a_;
};

}  // namespace evatop

#endif
