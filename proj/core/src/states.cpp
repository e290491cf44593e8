#include "entroverify/states.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "entroverify/error.hpp"

namespace entroverify {

namespace {

// Unitary power W^s through the eigendecomposition of a random unitary
// built as V diag(e^{i theta}) V^dagger, so W^s = V diag(e^{i s theta}) V^dagger.
Matrix fractional_random_unitary(int n, double strength, Rng& rng) {
  const Matrix v = haar_unitary(n, rng);
  std::uniform_real_distribution<double> phase(-M_PI, M_PI);
  CVector d(n);
  for (int i = 0; i < n; ++i) d(i) = std::polar(1.0, strength * phase(rng));
  return v * d.asDiagonal() * v.adjoint();
}

}  // namespace

BipartiteState::BipartiteState(DensityOperator state) : state_(std::move(state)) {
  if (state_.dims().size() != 2) {
    std::ostringstream os;
    os << "bipartite state needs two subsystem dimensions, got " << state_.dims().size();
    throw ValidationError(os.str());
  }
}

BipartiteState::BipartiteState(const HermitianOperator& op, int d_a, int d_b)
    : BipartiteState(DensityOperator(op, {d_a, d_b})) {}

DensityOperator BipartiteState::marginal_a() const {
  return DensityOperator(trace_out_second(op(), dim_a(), dim_b()));
}

DensityOperator BipartiteState::marginal_b() const {
  return DensityOperator(trace_out_first(op(), dim_a(), dim_b()));
}

std::string_view to_string(MarginalMethod m) {
  return m == MarginalMethod::local_channel ? "local-channel" : "mixture";
}

MarginalMethod parse_marginal_method(std::string_view s) {
  if (s == "local-channel" || s == "local_channel") return MarginalMethod::local_channel;
  if (s == "mixture") return MarginalMethod::mixture;
  throw ValidationError("unknown equal-marginal method '" + std::string(s) +
                        "' (expected local-channel or mixture)");
}

DensityOperator random_pure(int d, Rng& rng) {
  return DensityOperator::pure(haar_vector(d, rng));
}

DensityOperator random_pure(int d, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return random_pure(d, rng);
}

DensityOperator random_density(int d, int rank, Rng& rng) {
  if (d < 1) throw ValidationError("dimension must be at least 1");
  if (rank < 1 || rank > d) {
    std::ostringstream os;
    os << "rank must lie in [1, " << d << "], got " << rank;
    throw ValidationError(os.str());
  }
  const Matrix g = ginibre(d, rank, rng);
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityOperator(make_hermitian_unchecked(std::move(m)));
}

DensityOperator random_density(int d, int rank, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return random_density(d, rank, rng);
}

DensityOperator purify(const DensityOperator& rho) {
  const int d = rho.dim();
  const Spectrum s = eig_hermitian(rho.op());
  // |psi> = sum_i sqrt(l_i) |v_i> (x) |i>
  CVector psi = CVector::Zero(d * d);
  for (int i = 0; i < d; ++i) {
    const double l = std::max(s.values(i), 0.0);
    if (l <= 0.0) continue;
    for (int a = 0; a < d; ++a) psi(a * d + i) += std::sqrt(l) * s.vectors(a, i);
  }
  return DensityOperator::pure(psi, {d, d});
}

BipartiteState equal_marginal_partner(const BipartiteState& rho, MarginalMethod method,
                                      double strength, Rng& rng) {
  if (!(strength >= 0.0 && strength <= 1.0)) {
    throw ValidationError("strength must lie in [0, 1]");
  }
  const int da = rho.dim_a();
  const int db = rho.dim_b();
  if (method == MarginalMethod::local_channel) {
    const int de = da * da;
    const Matrix u = fractional_random_unitary(da * de, strength, rng);
    // Ancilla starts in |0>, so the isometry is the first da columns of U
    // after reordering input as (a, e=0).
    Matrix iso(da * de, da);
    for (int a = 0; a < da; ++a) iso.col(a) = u.col(a * de);
    const auto kraus = stinespring_kraus(iso, da, da, de);
    Matrix out = apply_kraus_first(kraus, rho.op().matrix(), da, db);
    out /= out.trace().real();
    return BipartiteState(make_hermitian_unchecked(std::move(out)), da, db);
  }

  // Canonical purification |phi>_{CB} = sum_i sqrt(l_i) |i>_C |e_i>_B of rho_B,
  // then a Haar-isometry channel C -> A.
  const Spectrum sb = eig_hermitian(rho.marginal_b().op());
  CVector phi = CVector::Zero(db * db);
  for (int i = 0; i < db; ++i) {
    const double l = std::max(sb.values(i), 0.0);
    for (int b = 0; b < db; ++b) phi(i * db + b) = std::sqrt(l) * sb.vectors(b, i);
  }
  const int de = da * db;
  const Matrix w = haar_unitary(da * de, rng);
  const auto kraus = stinespring_kraus(w.leftCols(db), db, da, de);
  Matrix tau = apply_kraus_first(kraus, phi * phi.adjoint(), db, db);
  tau /= tau.trace().real();
  Matrix sigma = (1.0 - strength) * rho.op().matrix() + strength * tau;
  return BipartiteState(make_hermitian_unchecked(std::move(sigma)), da, db);
}

std::pair<BipartiteState, BipartiteState> equal_marginal_pair(int d_a, int d_b,
                                                              MarginalMethod method,
                                                              double strength,
                                                              std::uint64_t seed) {
  Rng rng = make_rng(seed);
  const int d = d_a * d_b;
  std::uniform_int_distribution<int> rank_dist(1, d);
  BipartiteState rho(random_density(d, rank_dist(rng), rng).with_dims({d_a, d_b}));
  BipartiteState sigma = equal_marginal_partner(rho, method, strength, rng);
  return {std::move(rho), std::move(sigma)};
}

DeltaBundle build_delta(const BipartiteState& rho, const BipartiteState& sigma) {
  if (rho.dim_a() != sigma.dim_a() || rho.dim_b() != sigma.dim_b()) {
    throw ValidationError("build_delta: dimension mismatch");
  }
  const JordanParts parts = jordan_decompose(rho.op() - sigma.op());
  const double eps = parts.mass;
  if (!(eps > 0.0)) throw ValidationError("delta undefined at epsilon zero");
  // Normalize by the actual traces so P and Q are exact states even when
  // Tr(rho - sigma) differs from zero at round-off level.
  const HermitianOperator p_op = parts.pos * (1.0 / parts.pos.trace());
  const HermitianOperator q_op = parts.neg * (1.0 / parts.neg.trace());
  const HermitianOperator delta_op = (rho.op() + q_op * eps) * (1.0 / (1.0 + eps));
  const int da = rho.dim_a(), db = rho.dim_b();
  return DeltaBundle{BipartiteState(delta_op, da, db), BipartiteState(p_op, da, db),
                     BipartiteState(q_op, da, db), eps};
}

}  // namespace entroverify
