#include "pairwalk/spectral.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace pairwalk {

int SpectralDecomposition::multiplicity(int j) const {
  return static_cast<int>(std::llround(projectors[static_cast<std::size_t>(j)].trace()));
}

SpectralDecomposition ExactSpectrum::numeric() const {
  SpectralDecomposition dec;
  dec.grouping_tolerance = 0.0;
  for (const auto& e : entries) {
    dec.eigenvalues.push_back(e.value.value());
    dec.projectors.push_back(e.projector);
  }
  return dec;
}

std::optional<int> ExactSpectrum::index_of(const ExactScalar& v) const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].value == v) return static_cast<int>(i);
  return std::nullopt;
}

double default_grouping_tolerance(const Matrix& m) {
  const double scale = m.cwiseAbs().rowwise().sum().maxCoeff();
  return 1e-8 * std::max(1.0, scale);
}

SpectralDecomposition eigendecompose_symmetric(const Matrix& m, double tol) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::InvalidMatrix, "eigendecomposition needs a square matrix");
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > tol)
    throw Error(ErrorCode::InvalidMatrix, "matrix is not symmetric within tolerance");

  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::NumericFailure, "symmetric eigensolver failed to converge");

  const Vector& values = solver.eigenvalues();
  const Matrix& vectors = solver.eigenvectors();

  SpectralDecomposition dec;
  dec.grouping_tolerance = tol;
  Eigen::Index begin = 0;
  while (begin < values.size()) {
    Eigen::Index end = begin + 1;
    while (end < values.size() && values(end) - values(end - 1) < tol) ++end;
    const auto block = vectors.middleCols(begin, end - begin);
    dec.eigenvalues.push_back(values.segment(begin, end - begin).mean());
    dec.projectors.push_back(block * block.transpose());
    begin = end;
  }
  return dec;
}

ComplexMatrix transition_matrix(const SpectralDecomposition& dec, double t) {
  const int n = dec.dimension();
  ComplexMatrix u = ComplexMatrix::Zero(n, n);
  for (int j = 0; j < dec.count(); ++j)
    u += std::exp(Complex(0.0, -t * dec.eigenvalues[static_cast<std::size_t>(j)])) *
         dec.projectors[static_cast<std::size_t>(j)];
  return u;
}

std::optional<ExactSpectrum> exact_integer_spectrum(const Graph& g, double tol) {
  const Matrix l = g.laplacian();
  const SpectralDecomposition dec = eigendecompose_symmetric(l, default_grouping_tolerance(l));

  ExactSpectrum spectrum;
  spectrum.source = ExactSource::IntegerBase;
  spectrum.dimension = g.vertex_count();
  for (int j = 0; j < dec.count(); ++j) {
    const double theta = dec.eigenvalues[static_cast<std::size_t>(j)];
    const double rounded = std::round(theta);
    if (std::abs(theta - rounded) > tol) return std::nullopt;
    const Matrix& e = dec.projectors[static_cast<std::size_t>(j)];
    const double residual = ((l - rounded * Matrix::Identity(l.rows(), l.cols())) * e).norm();
    if (residual > tol) return std::nullopt;
    ExactEntry entry;
    entry.value = ExactScalar::integer(static_cast<std::int64_t>(rounded));
    entry.multiplicity = dec.multiplicity(j);
    entry.projector = e;
    entry.provenance = {{TotalEigenClass::Base, j}};
    spectrum.entries.push_back(std::move(entry));
  }
  return spectrum;
}

Matrix null_space_orthonormal(const Matrix& r) {
  Eigen::JacobiSVD<Matrix> svd(r, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double cutoff = 1e-10 * std::max(1.0, sigma.size() ? sigma(0) : 0.0);
  Eigen::Index rank = 0;
  while (rank < sigma.size() && sigma(rank) > cutoff) ++rank;
  return svd.matrixV().rightCols(r.cols() - rank);
}

namespace {

void merge_sorted_entries(ExactSpectrum& spectrum, std::vector<ExactEntry> raw) {
  std::sort(raw.begin(), raw.end(), [](const ExactEntry& a, const ExactEntry& b) {
    return a.value.less_value(b.value);
  });
  for (auto& entry : raw) {
    if (!spectrum.entries.empty() && spectrum.entries.back().value == entry.value) {
      ExactEntry& acc = spectrum.entries.back();
      acc.multiplicity += entry.multiplicity;
      acc.projector += entry.projector;
      acc.provenance.insert(acc.provenance.end(), entry.provenance.begin(), entry.provenance.end());
    } else {
      spectrum.entries.push_back(std::move(entry));
    }
  }
}

ExactScalar half_sum(std::int64_t twice_rational_part, std::int64_t root, std::int64_t delta,
                     int sign) {
  // (twice_rational_part ± root*sqrt(delta)) / 2 as an exact scalar.
  if (delta == 1) return ExactScalar::rational(twice_rational_part + sign * root, 2);
  return ExactScalar::surd(twice_rational_part, sign * root, delta);
}

Matrix theta_pm_projector(const Matrix& e_base, const Matrix& er, const Matrix& rter, double theta,
                          double theta_pm, int r) {
  const int n = static_cast<int>(e_base.rows());
  const int m = static_cast<int>(er.cols());
  const double beta = 2.0 + theta - theta_pm;
  const double denom = beta * beta + 2.0 * r - theta;
  Matrix block(n + m, n + m);
  block.topLeftCorner(n, n) = beta * beta * e_base;
  block.topRightCorner(n, m) = beta * er;
  block.bottomLeftCorner(m, n) = beta * er.transpose();
  block.bottomRightCorner(m, m) = rter;
  return block / denom;
}

Matrix kernel_projector(const Matrix& kernel, int n, int m) {
  Matrix block = Matrix::Zero(n + m, n + m);
  block.bottomRightCorner(m, m) = kernel * kernel.transpose();
  return block;
}

Matrix bipartite_q_projector(const Bipartition& sides, int n, int m) {
  Matrix block = Matrix::Zero(n + m, n + m);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      block(u, v) = (sides.same_side(u, v) ? 1.0 : -1.0) / n;
  return block;
}

}  // namespace

ExactSpectrum total_exact_spectrum(const Graph& g, const ExactSpectrum& base) {
  const auto r_opt = g.regularity();
  if (!r_opt || *r_opt <= 1)
    throw Error(ErrorCode::Unsupported, "total-graph closed form needs an r-regular base with r > 1");
  const int r = *r_opt;
  if (base.source != ExactSource::IntegerBase)
    throw Error(ErrorCode::Unsupported, "total-graph closed form needs an integer base spectrum");
  for (const auto& e : base.entries)
    if (!e.value.is_integer())
      throw Error(ErrorCode::Unsupported, "total-graph closed form needs an integer base spectrum");

  const int n = g.vertex_count();
  const int m = g.edge_count();
  const Matrix r_mat = g.incidence_matrix();
  const bool bipartite = g.is_bipartite();

  // The bipartite branch of the closed form drops theta_p and relies on
  // theta_p = 2r; that identity is asserted rather than assumed.
  std::size_t theta_count = base.entries.size();
  if (bipartite) {
    const ExactEntry& top = base.entries.back();
    if (top.value != ExactScalar::integer(2 * r) || top.multiplicity != 1)
      throw Error(ErrorCode::Internal,
                  "bipartite regular base must have simple largest eigenvalue 2r");
    --theta_count;
  }

  std::vector<ExactEntry> raw;
  for (std::size_t j = 0; j < theta_count; ++j) {
    const std::int64_t theta = base.entries[j].value.as_integer();
    const Matrix& e_base = base.entries[j].projector;
    const std::int64_t disc = static_cast<std::int64_t>(r + 2) * (r + 2) - 4 * theta;
    if (disc <= 0)
      throw Error(ErrorCode::Internal, "(r+2)^2 - 4*theta must be positive below 2r");
    const auto [root, delta] = square_free_decompose(disc);

    const Matrix er = e_base * r_mat;           // E_j R
    const Matrix rter = r_mat.transpose() * er;  // R^T E_j R
    for (int sign : {-1, +1}) {
      ExactEntry entry;
      entry.value = half_sum(r + 2 + 2 * theta, root, delta, sign);
      entry.multiplicity = base.entries[j].multiplicity;
      entry.projector = theta_pm_projector(e_base, er, rter, static_cast<double>(theta),
                                           entry.value.value(), r);
      entry.provenance = {{sign < 0 ? TotalEigenClass::ThetaMinus : TotalEigenClass::ThetaPlus,
                           static_cast<int>(j)}};
      raw.push_back(std::move(entry));
    }
  }

  const Matrix kernel = null_space_orthonormal(r_mat);
  const int s_expected = bipartite ? m - n + 1 : m - n;
  if (static_cast<int>(kernel.cols()) != s_expected)
    throw Error(ErrorCode::Internal, "incidence kernel dimension mismatch");
  if (kernel.cols() > 0) {
    ExactEntry entry;
    entry.value = ExactScalar::integer(2 * r + 2);
    entry.multiplicity = static_cast<int>(kernel.cols());
    entry.projector = kernel_projector(kernel, n, m);
    entry.provenance = {{TotalEigenClass::IncidenceKernel, -1}};
    raw.push_back(std::move(entry));
  }

  if (bipartite) {
    ExactEntry entry;
    entry.value = ExactScalar::integer(3 * r);
    entry.multiplicity = 1;
    entry.projector = bipartite_q_projector(*g.bipartition(), n, m);
    entry.provenance = {{TotalEigenClass::BipartiteQ, -1}};
    raw.push_back(std::move(entry));
  }

  // Stability cross-check: the kernel projector must equal the identity
  // minus everything built from the closed-form blocks.
  if (kernel.cols() > 0) {
    Matrix complement = Matrix::Identity(n + m, n + m);
    for (const auto& entry : raw)
      if (entry.provenance[0].kind != TotalEigenClass::IncidenceKernel)
        complement -= entry.projector;
    if ((complement - kernel_projector(kernel, n, m)).norm() > 1e-8 * (n + m))
      throw Error(ErrorCode::Internal, "incidence-kernel projector disagrees with complement");
  }

  ExactSpectrum spectrum;
  spectrum.source = ExactSource::TotalClosedForm;
  spectrum.dimension = n + m;
  merge_sorted_entries(spectrum, std::move(raw));

  int total_mult = 0;
  for (const auto& e : spectrum.entries) total_mult += e.multiplicity;
  if (total_mult != n + m)
    throw Error(ErrorCode::Internal, "total-graph multiplicities do not sum to n+m");
  return spectrum;
}

SpectralDecomposition total_closed_decomposition(const Graph& g,
                                                 const SpectralDecomposition& base, double tol) {
  const auto r_opt = g.regularity();
  if (!r_opt || *r_opt <= 1)
    throw Error(ErrorCode::Unsupported, "total-graph closed form needs an r-regular base with r > 1");
  const int r = *r_opt;
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const Matrix r_mat = g.incidence_matrix();
  const bool bipartite = g.is_bipartite();

  int theta_count = base.count();
  if (bipartite) {
    if (std::abs(base.eigenvalues.back() - 2.0 * r) > tol)
      throw Error(ErrorCode::Internal, "bipartite regular base must end at eigenvalue 2r");
    --theta_count;
  }

  std::vector<std::pair<double, Matrix>> raw;
  for (int j = 0; j < theta_count; ++j) {
    const double theta = base.eigenvalues[static_cast<std::size_t>(j)];
    const Matrix& e_base = base.projectors[static_cast<std::size_t>(j)];
    const double root = std::sqrt(static_cast<double>(r + 2) * (r + 2) - 4.0 * theta);
    const Matrix er = e_base * r_mat;
    const Matrix rter = r_mat.transpose() * er;
    for (int sign : {-1, +1}) {
      const double theta_pm = (r + 2 + 2.0 * theta + sign * root) / 2.0;
      raw.emplace_back(theta_pm, theta_pm_projector(e_base, er, rter, theta, theta_pm, r));
    }
  }
  const Matrix kernel = null_space_orthonormal(r_mat);
  if (kernel.cols() > 0) raw.emplace_back(2.0 * r + 2.0, kernel_projector(kernel, n, m));
  if (bipartite) raw.emplace_back(3.0 * r, bipartite_q_projector(*g.bipartition(), n, m));

  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SpectralDecomposition dec;
  dec.grouping_tolerance = tol;
  for (auto& [value, projector] : raw) {
    if (!dec.eigenvalues.empty() && value - dec.eigenvalues.back() < tol) {
      dec.projectors.back() += projector;
    } else {
      dec.eigenvalues.push_back(value);
      dec.projectors.push_back(std::move(projector));
    }
  }
  return dec;
}

ExactSpectrum tkn_closed_projectors(int n) {
  if (n <= 3)
    throw Error(ErrorCode::Unsupported, "explicit T(K_n) projectors need n > 3");
  const Graph g = Graph::complete(n);
  const int m = n * (n - 1) / 2;
  const int total = n + m;
  const Matrix r_mat = g.incidence_matrix();
  const Matrix jnn = Matrix::Ones(n, n);
  const Matrix jnm = Matrix::Ones(n, m);
  const Matrix jmm = Matrix::Ones(m, m);
  const Matrix in = Matrix::Identity(n, n);
  const double dn = n;

  std::vector<ExactEntry> raw;
  auto push = [&raw](std::int64_t value, int mult, Matrix proj, TotalEigenClass kind, int j) {
    ExactEntry e;
    e.value = ExactScalar::integer(value);
    e.multiplicity = mult;
    e.projector = std::move(proj);
    e.provenance = {{kind, j}};
    raw.push_back(std::move(e));
  };

  // theta_0^- = 0: rank-one all-ones projector.
  push(0, 1, (2.0 / (dn * dn + dn)) * Matrix::Ones(total, total), TotalEigenClass::ThetaMinus, 0);

  // theta_0^+ = n+1.
  {
    Matrix block(total, total);
    block.topLeftCorner(n, n) = ((dn - 1) * (dn - 1) / dn) * jnn;
    block.topRightCorner(n, m) = (2.0 * (1 - dn) / dn) * jnm;
    block.bottomLeftCorner(m, n) = block.topRightCorner(n, m).transpose();
    block.bottomRightCorner(m, m) = (4.0 / dn) * jmm;
    push(n + 1, 1, block / (dn * dn - 1), TotalEigenClass::ThetaPlus, 0);
  }

  // theta_1^- = n+1, built on E_1 = I - J/n.
  {
    Matrix block(total, total);
    block.topLeftCorner(n, n) = in - jnn / dn;
    block.topRightCorner(n, m) = r_mat - (2.0 / dn) * jnm;
    block.bottomLeftCorner(m, n) = block.topRightCorner(n, m).transpose();
    block.bottomRightCorner(m, m) = r_mat.transpose() * r_mat - (4.0 / dn) * jmm;
    push(n + 1, n - 1, block / (dn - 1), TotalEigenClass::ThetaMinus, 1);
  }

  // theta_1^+ = 2n: the (2-n) scaling applies to the whole E_1 block.
  {
    const double c = 2.0 - dn;
    Matrix block(total, total);
    block.topLeftCorner(n, n) = c * c * (in - jnn / dn);
    block.topRightCorner(n, m) = c * (r_mat - (2.0 / dn) * jnm);
    block.bottomLeftCorner(m, n) = block.topRightCorner(n, m).transpose();
    block.bottomRightCorner(m, m) = r_mat.transpose() * r_mat - (4.0 / dn) * jmm;
    push(2 * n, n - 1, block / (dn * dn - 3 * dn + 2), TotalEigenClass::ThetaPlus, 1);
  }

  // 2n again, from the incidence kernel.
  {
    const Matrix kernel = null_space_orthonormal(r_mat);
    Matrix block = Matrix::Zero(total, total);
    block.bottomRightCorner(m, m) = kernel * kernel.transpose();
    push(2 * n, m - n, std::move(block), TotalEigenClass::IncidenceKernel, -1);
  }

  ExactSpectrum spectrum;
  spectrum.source = ExactSource::TotalClosedForm;
  spectrum.dimension = total;
  merge_sorted_entries(spectrum, std::move(raw));
  return spectrum;
}

void validate_decomposition(const SpectralDecomposition& dec, const Matrix& l, double tol) {
  const int n = dec.dimension();
  Matrix sum = Matrix::Zero(n, n);
  Matrix recon = Matrix::Zero(n, n);
  for (int i = 0; i < dec.count(); ++i) {
    const Matrix& e = dec.projectors[static_cast<std::size_t>(i)];
    if ((e - e.transpose()).norm() > tol)
      throw Error(ErrorCode::NumericFailure, "projector not symmetric");
    const double mult = e.trace();
    if (std::abs(mult - std::round(mult)) > 1e-6)
      throw Error(ErrorCode::NumericFailure, "projector trace not an integer multiplicity");
    for (int j = 0; j < dec.count(); ++j) {
      const Matrix prod = e * dec.projectors[static_cast<std::size_t>(j)];
      const Matrix expect = (i == j) ? e : Matrix::Zero(n, n);
      if ((prod - expect).norm() > tol)
        throw Error(ErrorCode::NumericFailure, "projectors not mutually orthogonal idempotents");
    }
    sum += e;
    recon += dec.eigenvalues[static_cast<std::size_t>(i)] * e;
  }
  if ((sum - Matrix::Identity(n, n)).norm() > tol)
    throw Error(ErrorCode::NumericFailure, "projectors do not resolve the identity");
  if ((recon - l).norm() > tol)
    throw Error(ErrorCode::NumericFailure, "spectral reconstruction does not match the matrix");
}

}  // namespace pairwalk
