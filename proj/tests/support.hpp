#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "braidforge/linalg.hpp"
#include "braidforge/monomial.hpp"

namespace braidforge::testing {

/// Integer form of sqrt2 * B_8 as printed for three qubits.
inline DenseMatrix printed_b8_times_sqrt2()
{
  const int rows[8][8] = {
      {1, 0, 0, 0, 0, 0, 0, 1},  {0, 1, 0, 0, 0, 0, 1, 0},  {0, 0, 1, 0, 0, 1, 0, 0},
      {0, 0, 0, 1, 1, 0, 0, 0},  {0, 0, 0, -1, 1, 0, 0, 0}, {0, 0, -1, 0, 0, 1, 0, 0},
      {0, -1, 0, 0, 0, 0, 1, 0}, {-1, 0, 0, 0, 0, 0, 0, 1},
  };
  DenseMatrix m(8, 8);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c)
      m(r, c) = rows[r][c];
  return m;
}

inline MonomialOperator random_monomial(std::size_t dim, std::mt19937_64& rng, bool signs_only)
{
  std::vector<Index> t(dim);
  for (std::size_t i = 0; i < dim; ++i)
    t[i] = static_cast<Index>(i);
  std::shuffle(t.begin(), t.end(), rng);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  std::bernoulli_distribution coin(0.5);
  std::vector<Complex> ph(dim);
  for (auto& p : ph)
    p = signs_only ? Complex(coin(rng) ? 1.0 : -1.0) : std::polar(1.0, angle(rng));
  return MonomialOperator(std::move(t), std::move(ph));
}

inline StateVector random_state(std::size_t dim, std::mt19937_64& rng)
{
  std::normal_distribution<double> g;
  StateVector v(dim);
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v(i) = Complex(g(rng), g(rng));
  return v / v.norm();
}

/// sum_{n < terms} A^n / n!.
inline DenseMatrix series_exp(const DenseMatrix& a, int terms = 30)
{
  DenseMatrix sum = DenseMatrix::Identity(a.rows(), a.cols());
  DenseMatrix term = sum;
  for (int n = 1; n < terms; ++n) {
    term = term * a / static_cast<double>(n);
    sum += term;
  }
  return sum;
}

inline double max_abs(const DenseMatrix& a) { return a.cwiseAbs().maxCoeff(); }

}  // namespace braidforge::testing
