#include "braidforge/linalg.hpp"

#include <atomic>
#include <cstdlib>
#include <limits>

namespace braidforge {

namespace {

std::size_t initial_dense_cap()
{
  if (const char* env = std::getenv("BRAIDFORGE_DENSE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<std::size_t>(v);
  }
  return kDefaultDenseCap;
}

std::atomic<std::size_t>& cap_storage()
{
  static std::atomic<std::size_t> cap{initial_dense_cap()};
  return cap;
}

}  // namespace

std::size_t dense_cap() { return cap_storage().load(std::memory_order_relaxed); }

void set_dense_cap(std::size_t cap)
{
  if (cap == 0)
    throw DomainError("dense cap must be positive");
  cap_storage().store(cap, std::memory_order_relaxed);
}

namespace pauli {

DenseMatrix identity(std::size_t n) { return DenseMatrix::Identity(n, n); }

DenseMatrix sigma_x()
{
  DenseMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

DenseMatrix sigma_y()
{
  DenseMatrix m(2, 2);
  m << Complex(0.0), -kI, kI, Complex(0.0);
  return m;
}

DenseMatrix sigma_z()
{
  DenseMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

DenseMatrix i_sigma_y()
{
  DenseMatrix m(2, 2);
  m << 0.0, 1.0, -1.0, 0.0;
  return m;
}

}  // namespace pauli

void require_dense(std::size_t dim, std::size_t cap, const std::string& what)
{
  if (dim > cap)
    throw SizeError(what + ": dimension " + std::to_string(dim) + " exceeds dense cap " +
                    std::to_string(cap));
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b, std::size_t cap)
{
  const auto checked_mul = [](std::size_t x, std::size_t y) {
    if (x != 0 && y > std::numeric_limits<std::size_t>::max() / x)
      throw SizeError("kron: dimension overflow");
    return x * y;
  };
  const std::size_t rows = checked_mul(a.rows(), b.rows());
  const std::size_t cols = checked_mul(a.cols(), b.cols());
  require_dense(rows, cap, "kron");
  require_dense(cols, cap, "kron");

  DenseMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Comparison approx_eq(const DenseMatrix& a, const DenseMatrix& b, double tol)
{
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("approx_eq: shape mismatch");
  Comparison c;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const double e = std::abs(a(i, j) - b(i, j));
      if (e > c.max_error) {
        c.max_error = e;
        c.row = i;
        c.col = j;
      }
    }
  }
  c.equal = c.max_error <= tol;
  return c;
}

StateVector basis_state(std::size_t dim, std::size_t k)
{
  if (k < 1 || k > dim)
    throw DomainError("basis index " + std::to_string(k) + " outside 1.." + std::to_string(dim));
  StateVector v = StateVector::Zero(dim);
  v(k - 1) = 1.0;
  return v;
}

}  // namespace braidforge
