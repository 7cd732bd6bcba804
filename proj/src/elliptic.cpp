#include "wavekit/elliptic.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "wavekit/errors.hpp"

namespace wavekit {

namespace {

using SpMat = Eigen::SparseMatrix<double>;

struct ElementGeometry {
  double area = 0.0;
  std::array<Vec2, 3> grad_lambda;  // gradients of the barycentric coordinates
};

std::vector<ElementGeometry> element_geometry(const Mesh& m) {
  std::vector<ElementGeometry> out(m.triangles.size());
  for (std::size_t t = 0; t < m.triangles.size(); ++t) {
    const auto& tr = m.triangles[t];
    const Vec2& a = m.nodes[tr[0]];
    const Vec2& b = m.nodes[tr[1]];
    const Vec2& c = m.nodes[tr[2]];
    const double twice = cross(b - a, c - a);
    ElementGeometry& g = out[t];
    g.area = 0.5 * twice;
    // grad lambda_i = perp(opposite edge) / (2 area), oriented inward.
    g.grad_lambda[0] = (1.0 / twice) * Vec2{b.eta - c.eta, c.xi - b.xi};
    g.grad_lambda[1] = (1.0 / twice) * Vec2{c.eta - a.eta, a.xi - c.xi};
    g.grad_lambda[2] = (1.0 / twice) * Vec2{a.eta - b.eta, b.xi - a.xi};
  }
  return out;
}

Vec2 element_gradient(const Mesh& m, const ElementGeometry& g, std::size_t t, const std::vector<double>& f) {
  const auto& tr = m.triangles[t];
  return f[tr[0]] * g.grad_lambda[0] + f[tr[1]] * g.grad_lambda[1] + f[tr[2]] * g.grad_lambda[2];
}

}  // namespace

std::vector<Vec2> recover_gradient(const Mesh& mesh, const SubsonicDomain& domain, const std::vector<double>& psi) {
  const auto geo = element_geometry(mesh);
  std::vector<Vec2> g(mesh.size());
  std::vector<double> w(mesh.size(), 0.0);
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    const Vec2 gt = element_gradient(mesh, geo[t], t, psi);
    for (int k = 0; k < 3; ++k) {
      const auto i = static_cast<std::size_t>(mesh.triangles[t][k]);
      g[i] += geo[t].area * gt;
      w[i] += geo[t].area;
    }
  }
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    if (w[i] > 0.0) g[i] = (1.0 / w[i]) * g[i];
    std::array<Vec2, 2> normals;
    int count = 0;
    for (int p : mesh.pieces[i]) {
      if (p < 0) continue;
      const BoundaryPiece& piece = domain.boundary[static_cast<std::size_t>(p)];
      if (piece.tag != BoundaryTag::Slip || piece.kind != BoundaryPiece::Kind::Segment) continue;
      normals[static_cast<std::size_t>(count++)] = outward_normal(piece);
    }
    if (count == 2 && std::abs(cross(normals[0], normals[1])) > 1e-9) {
      g[i] = {0.0, 0.0};
    } else if (count >= 1) {
      g[i] -= dot(g[i], normals[0]) * normals[0];
    }
  }
  return g;
}

double PseudoPotentialField::sound_speed(std::size_t i) const { return std::max(std::sqrt(std::max(c2[i], 0.0)), eps); }

std::optional<double> PseudoPotentialField::probe(const Vec2& p) const {
  const MeshLocator loc(mesh);
  return loc.interpolate(psi, p);
}

double PseudoPotentialField::min_interior_excess() const {
  double best = INFINITY;
  for (std::size_t i = 0; i < mesh.size(); ++i)
    if (!mesh.on_boundary(i)) best = std::min(best, psi[i] - B0);
  return best;
}

double PseudoPotentialField::max_ellipticity_defect(double margin) const {
  double worst = -INFINITY;
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    if (mesh.on_boundary(i)) continue;
    bool far = true;
    for (const auto& piece : domain.boundary)
      if (piece.tag == BoundaryTag::DirichletDegenerate && distance_to(piece, mesh.nodes[i]) <= margin) far = false;
    if (!far) continue;
    worst = std::max(worst, dot(grad[i], grad[i]) - c2[i]);
  }
  return worst;
}

PseudoPotentialField solve(const SubsonicDomain& domain, const GasConstants& k, const EllipticOptions& opt) {
  k.validate();
  if (!(opt.relax > 0.0 && opt.relax <= 1.0)) throw DomainError("relaxation factor must lie in (0, 1]");
  if (!(opt.tol_picard > 0.0) || opt.max_iter < 1) throw DomainError("invalid Picard tolerance or iteration limit");
  if (!(domain.B0 < 0.0)) throw DomainError("Bernoulli constant must be negative");

  PseudoPotentialField f;
  f.domain = domain;
  f.k = k;
  f.B0 = domain.B0;
  const double c_ref = std::sqrt(-2.0 * domain.B0);
  f.eps = opt.eps > 0.0 ? opt.eps : 1e-3 * c_ref;
  MeshOptions mopt = opt.mesh;
  if (opt.shrink) mopt.shrink = f.eps;
  f.mesh = ring_mesh(domain, mopt);
  const Mesh& m = f.mesh;
  const std::size_t n = m.size();
  const auto geo = element_geometry(m);

  // Unknown numbering.
  std::vector<int> free_id(n, -1);
  int nf = 0;
  f.psi.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (m.dirichlet[i])
      f.psi[i] = opt.dirichlet ? opt.dirichlet(m.nodes[i]) : domain.B0;
    else
      free_id[i] = nf++;
  }
  if (nf == 0) throw StructureError("mesh has no interior unknowns");

  const double sqrtA = std::sqrt(k.A);
  std::vector<double> rho_elem(m.triangles.size(), sqrtA / c_ref);

  Eigen::SimplicialLDLT<SpMat> ldlt;
  bool analyzed = false;
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(m.triangles.size() * 9);

  auto assemble = [&](SpMat& K, Eigen::VectorXd& F, const std::vector<double>& psi) {
    trip.clear();
    F.setZero(nf);
    for (std::size_t t = 0; t < m.triangles.size(); ++t) {
      const auto& tr = m.triangles[t];
      const double rho = rho_elem[t];
      const double load = 2.0 * rho * geo[t].area / 3.0;
      for (int a = 0; a < 3; ++a) {
        const int ia = free_id[static_cast<std::size_t>(tr[a])];
        if (ia < 0) continue;
        F[ia] += load;
        for (int b = 0; b < 3; ++b) {
          const double kab = rho * geo[t].area * dot(geo[t].grad_lambda[a], geo[t].grad_lambda[b]);
          const int ib = free_id[static_cast<std::size_t>(tr[b])];
          if (ib >= 0)
            trip.emplace_back(ia, ib, kab);
          else
            F[ia] -= kab * psi[static_cast<std::size_t>(tr[b])];
        }
      }
    }
    K.resize(nf, nf);
    K.setFromTriplets(trip.begin(), trip.end());
  };

  auto update_coefficients = [&]() {
    f.grad = recover_gradient(m, domain, f.psi);
    f.c2.assign(n, 0.0);
    f.rho.assign(n, 0.0);
    std::size_t negative = 0;
    f.clipped_nodes = 0;
    for (std::size_t i = 0; i < n; ++i) {
      f.c2[i] = dot(f.grad[i], f.grad[i]) + 2.0 * (f.psi[i] - domain.B0);
      if (f.c2[i] < 0.0) ++negative;
      const double c = std::sqrt(std::max(f.c2[i], 0.0));
      if (c < f.eps) ++f.clipped_nodes;
      f.rho[i] = sqrtA / std::max(c, f.eps);
    }
    if (static_cast<double>(negative) > 0.01 * static_cast<double>(n)) {
      std::ostringstream os;
      os << "ellipticity lost: c^2 < 0 on " << negative << " of " << n << " nodes";
      throw DegeneracyError(os.str());
    }
    for (std::size_t t = 0; t < m.triangles.size(); ++t) {
      const auto& tr = m.triangles[t];
      rho_elem[t] = (f.rho[tr[0]] + f.rho[tr[1]] + f.rho[tr[2]]) / 3.0;
    }
  };

  auto residual_of = [&](const SpMat& K, const Eigen::VectorXd& F) {
    Eigen::VectorXd x(nf);
    for (std::size_t i = 0; i < n; ++i)
      if (free_id[i] >= 0) x[free_id[i]] = f.psi[i];
    return nf > 0 ? (K * x - F).cwiseAbs().maxCoeff() : 0.0;
  };

  SpMat K;
  Eigen::VectorXd F;
  std::vector<double> trace;
  for (int it = 1; it <= opt.max_iter; ++it) {
    if (it > 1) update_coefficients();
    assemble(K, F, f.psi);
    const double residual = it > 1 ? residual_of(K, F) : INFINITY;
    if (!analyzed) {
      ldlt.analyzePattern(K);
      analyzed = true;
    }
    ldlt.factorize(K);
    if (ldlt.info() != Eigen::Success) throw ConvergenceError("sparse factorization failed", trace);
    const Eigen::VectorXd x = ldlt.solve(F);
    double inc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (free_id[i] < 0) continue;
      const double d = x[free_id[i]] - f.psi[i];
      inc = std::max(inc, std::abs(d));
      f.psi[i] += opt.relax * d;
    }
    f.history.push_back({it, residual, inc});
    trace.push_back(inc);
    if (!std::isfinite(inc)) break;
    if (inc < opt.tol_picard) {
      update_coefficients();
      assemble(K, F, f.psi);
      f.final_residual = residual_of(K, F);
      return f;
    }
  }
  std::ostringstream os;
  os << "Picard iteration did not converge in " << opt.max_iter << " iterations (last increment "
     << (trace.empty() ? INFINITY : trace.back()) << ")";
  throw ConvergenceError(os.str(), trace);
}

}  // namespace wavekit
