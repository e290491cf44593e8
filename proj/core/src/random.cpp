#include "entroverify/random.hpp"

#include <cmath>

#include "entroverify/error.hpp"

namespace entroverify {

Rng make_rng(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    0x9e3779b9u};
  return Rng(seq);
}

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t a, std::uint64_t b) {
  return mix_seed(mix_seed(mix_seed(parent) ^ a) ^ (b * 0x2545f4914f6cdd1dull));
}

std::uint64_t hash_label(std::string_view label) {
  // FNV-1a
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

Matrix ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Matrix g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) g(i, j) = Complex(normal(rng), normal(rng));
  }
  return g;
}

CVector haar_vector(int d, Rng& rng) {
  if (d < 1) throw ValidationError("dimension must be at least 1");
  CVector v = ginibre(d, 1, rng).col(0);
  return v / v.norm();
}

Matrix haar_unitary(int n, Rng& rng) {
  const Matrix z = ginibre(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    if (a > 0.0) q.col(j) *= d / a;
  }
  return q;
}

std::vector<Matrix> stinespring_kraus(const Matrix& unitary, int d_in, int d_out, int d_env) {
  if (unitary.rows() != static_cast<Eigen::Index>(d_out) * d_env || unitary.cols() < d_in) {
    throw ValidationError("stinespring: unitary has the wrong shape");
  }
  std::vector<Matrix> kraus;
  kraus.reserve(d_env);
  // Output index ordering is (b, e) with b the slow index.
  for (int e = 0; e < d_env; ++e) {
    Matrix k(d_out, d_in);
    for (int b = 0; b < d_out; ++b) {
      for (int a = 0; a < d_in; ++a) k(b, a) = unitary(b * d_env + e, a);
    }
    kraus.push_back(std::move(k));
  }
  return kraus;
}

}  // namespace entroverify
