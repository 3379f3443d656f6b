#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace braidforge {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;

/// Dense amplitudes over the tensor-product basis. Storage is 0-based;
/// every public function that takes a basis label uses 1-based labels.
using StateVector = Eigen::VectorXcd;

/// Basis label / row index type for structured operators.
using Index = std::uint32_t;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kSqrt2 = 1.41421356237309504880;
inline constexpr double kInvSqrt2 = 0.70710678118654752440;
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr std::size_t kDefaultDenseCap = std::size_t{1} << 13;
inline constexpr std::size_t kMaxStructuredDim = std::size_t{1} << 32;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested object exceeds a configured or representable size.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Operand shapes do not match.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Deformation parameters violate a representation constraint.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Largest dimension for which dense matrices are materialized. Initialized
/// from BRAIDFORGE_DENSE_CAP when set, otherwise 2^13.
std::size_t dense_cap();
void set_dense_cap(std::size_t cap);

namespace pauli {
DenseMatrix identity(std::size_t n);
DenseMatrix sigma_x();
DenseMatrix sigma_y();
DenseMatrix sigma_z();
/// sqrt(-1) * sigma_y = [[0, 1], [-1, 0]].
DenseMatrix i_sigma_y();
}  // namespace pauli

/// Kronecker product with (A (x) B)_{ik,jl} = A_ij B_kl.
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b, std::size_t cap = dense_cap());

struct Comparison {
  bool equal = true;
  double max_error = 0.0;
  std::size_t row = 0;  // 0-based location of the worst entry
  std::size_t col = 0;
};

/// Entrywise comparison; equal iff max |A - B| <= tol.
Comparison approx_eq(const DenseMatrix& a, const DenseMatrix& b, double tol = kDefaultTolerance);

/// 1-based basis vector |Phi_k> of the given dimension.
StateVector basis_state(std::size_t dim, std::size_t k);

/// Throws SizeError when dim exceeds cap.
void require_dense(std::size_t dim, std::size_t cap, const std::string& what);

}  // namespace braidforge
