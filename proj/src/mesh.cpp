#include "wavekit/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wavekit/errors.hpp"

namespace wavekit {

namespace {

constexpr double kPi = std::numbers::pi;

struct BoundaryNode {
  Vec2 p;
  std::array<int, 2> pieces{-1, -1};
};

class RingMesher {
 public:
  RingMesher(const SubsonicDomain& d, const MeshOptions& opt) : d_(d), opt_(opt), z_(d.center) {}

  Mesh run() {
    if (!(opt_.h > 0.0)) throw DomainError("mesh size h must be positive");
    if (!(opt_.grade < 1.0)) throw DomainError("mesh grade must lie below 1");
    mesh_.h = opt_.h;
    place_boundary_nodes();
    if (opt_.grade <= 0.0) {
      double r_max = 0.0;
      for (const auto& n : bnodes_) r_max = std::max(r_max, distance(n.p, z_));
      opt_.grade = std::min(0.5, 4.0 * opt_.h / r_max);
    }
    check_star_shaped();
    build_rings();
    for (std::size_t t = 0; t < mesh_.triangles.size(); ++t)
      if (!(mesh_.area(t) > 0.0)) {
        std::ostringstream os;
        os << "mesh generation produced an inverted triangle near (" << mesh_.nodes[mesh_.triangles[t][0]].xi << ", "
           << mesh_.nodes[mesh_.triangles[t][0]].eta << ")";
        throw StructureError(os.str());
      }
    return std::move(mesh_);
  }

 private:
  const SubsonicDomain& d_;
  MeshOptions opt_;
  Vec2 z_;
  Mesh mesh_;
  std::vector<BoundaryNode> bnodes_;
  std::vector<double> angles_;
  std::vector<std::size_t> required_;  // indices into bnodes_

  bool fan() const { return d_.center_on_boundary; }
  bool is_dirichlet(const std::array<int, 2>& pcs) const {
    for (int p : pcs)
      if (p >= 0 && d_.boundary[static_cast<std::size_t>(p)].tag == BoundaryTag::DirichletDegenerate) return true;
    return false;
  }

  void place_boundary_nodes() {
    const auto& b = d_.boundary;
    const int n = static_cast<int>(b.size());
    int first = 0, last = n - 1;
    if (fan()) {
      if (n < 3) throw StructureError("fan domain needs at least three boundary pieces");
      const double tol = 1e-9 * std::max(1.0, norm(b[1].start() - z_));
      if (distance(b.front().start(), z_) > tol || distance(b.back().end(), z_) > tol ||
          b.front().kind != BoundaryPiece::Kind::Segment || b.back().kind != BoundaryPiece::Kind::Segment)
        throw StructureError("fan domain must start and end with straight pieces through its center");
      first = 1;
      last = n - 2;
    }
    for (int i = first; i <= last; ++i) {
      const BoundaryPiece& p = b[static_cast<std::size_t>(i)];
      const int m = std::max(1, static_cast<int>(std::ceil(p.length() / opt_.h - 1e-9)));
      const int prev = n == 1 ? -1 : (i + n - 1) % n;
      required_.push_back(bnodes_.size());
      for (int k = 0; k < m; ++k) {
        BoundaryNode node{p.at(static_cast<double>(k) / m), {i, -1}};
        if (k == 0) node.pieces = {prev, i};
        if (k == 0 && prev < 0) node.pieces = {i, -1};
        bnodes_.push_back(node);
      }
    }
    if (fan()) {
      required_.push_back(bnodes_.size());
      bnodes_.push_back({b[static_cast<std::size_t>(last)].end(), {last, n - 1}});
    }
    if (opt_.shrink > 0.0)
      for (auto& node : bnodes_)
        if (is_dirichlet(node.pieces)) {
          const Vec2 r = node.p - z_;
          const double len = norm(r);
          if (!(len > opt_.shrink)) throw StructureError("shrink width exceeds the domain size");
          node.p = z_ + ((len - opt_.shrink) / len) * r;
        }
  }

  void check_star_shaped() {
    angles_.resize(bnodes_.size());
    double total = 0.0;
    for (std::size_t i = 0; i < bnodes_.size(); ++i) {
      const double raw = angle_of(bnodes_[i].p - z_);
      angles_[i] = i == 0 ? raw : wrap_angle(raw, angles_[i - 1]);
      if (i > 0) {
        const double step = angles_[i] - angles_[i - 1];
        if (!(step > 1e-12 && step < kPi)) throw StructureError("domain is not star-shaped from its center");
        total += step;
      }
    }
    if (!fan()) {
      const double closing = wrap_angle(angles_.front(), angles_.back()) - angles_.back();
      if (bnodes_.size() > 1 && !(closing > 1e-12 && closing < kPi))
        throw StructureError("domain is not star-shaped from its center");
      total += bnodes_.size() > 1 ? closing : 2.0 * kPi;
      if (std::abs(total - 2.0 * kPi) > 1e-6) throw StructureError("domain is not star-shaped from its center");
    } else if (!(total < 2.0 * kPi)) {
      throw StructureError("fan domain wraps around its center");
    }
  }

  std::vector<double> ring_scales() const {
    double r_max = 0.0;
    for (const auto& n : bnodes_) r_max = std::max(r_max, distance(n.p, z_));
    std::vector<double> s;
    if (!fan()) {
      const int K = std::max(2, static_cast<int>(std::ceil(r_max / opt_.h)));
      for (int k = K; k >= 1; --k) s.push_back(static_cast<double>(k) / K);
      return s;
    }
    const double s_t = std::min(1.0, opt_.h / opt_.grade / r_max);
    if (s_t < 1.0) {
      const int nu = std::max(1, static_cast<int>(std::ceil((1.0 - s_t) * r_max / opt_.h)));
      for (int j = 0; j < nu; ++j) s.push_back(1.0 - j * (1.0 - s_t) / nu);
    }
    const double s_min = opt_.min_radius * opt_.h / r_max;
    for (double v = s_t; v >= s_min; v *= 1.0 - opt_.grade) s.push_back(v);
    return s;
  }

  double local_size(double r) const { return fan() ? std::min(opt_.h, opt_.grade * r) : opt_.h; }

  /// Locally adaptive coarsening of one sector: a node is dropped when the
  /// merged interval still meets the local size and angular limits, and never
  /// two in a row, so every inner interval spans at most two outer ones.
  std::vector<std::size_t> maybe_halve(const std::vector<std::size_t>& sector, double s) const {
    const std::size_t n = sector.size() - 1;
    if (n < 2) return sector;
    auto fits = [&](std::size_t i, std::size_t j) {
      const Vec2& a = bnodes_[i].p;
      const Vec2& b = bnodes_[j].p;
      const double r = s * std::min(distance(a, z_), distance(b, z_));
      return s * distance(a, b) <= local_size(r) && angle_gap(i, j) <= opt_.max_dtheta;
    };
    std::vector<std::size_t> out{sector[0]};
    std::size_t i = 0;
    while (i < n) {
      const std::size_t step = i + 2 <= n && fits(sector[i], sector[i + 2]) ? 2 : 1;
      i += step;
      out.push_back(sector[i]);
    }
    return out;
  }

  double angle_gap(std::size_t i, std::size_t j) const {
    double g = angles_[j] - angles_[i];
    if (g <= 0.0) g += 2.0 * kPi;
    return g;
  }

  int add_node(const Vec2& p, std::array<int, 2> pieces) {
    mesh_.nodes.push_back(p);
    mesh_.pieces.push_back(pieces);
    mesh_.dirichlet.push_back(is_dirichlet(pieces) ? 1 : 0);
    return static_cast<int>(mesh_.nodes.size() - 1);
  }

  void tri(int a, int b, int c) { mesh_.triangles.push_back({a, b, c}); }

  void build_rings() {
    const int nb = static_cast<int>(d_.boundary.size());
    const std::vector<double> scales = ring_scales();

    // Sectors between consecutive required indices.
    std::vector<std::vector<std::size_t>> sectors;
    for (std::size_t r = 0; r < required_.size(); ++r) {
      std::vector<std::size_t> sec;
      const std::size_t a = required_[r];
      std::size_t b;
      if (r + 1 < required_.size())
        b = required_[r + 1];
      else if (!fan())
        b = required_[0] + bnodes_.size();
      else
        break;
      for (std::size_t i = a; i <= b; ++i) sec.push_back(i % bnodes_.size());
      sectors.push_back(sec);
    }

    std::vector<std::size_t> outer_idx;
    std::vector<int> outer_ids;
    auto flatten = [&](const std::vector<std::vector<std::size_t>>& secs) {
      std::vector<std::size_t> flat;
      for (const auto& sec : secs)
        for (std::size_t k = 0; k + 1 < sec.size(); ++k) flat.push_back(sec[k]);
      if (fan()) flat.push_back(secs.back().back());
      return flat;
    };

    outer_idx = flatten(sectors);
    for (std::size_t i : outer_idx) outer_ids.push_back(add_node(bnodes_[i].p, bnodes_[i].pieces));

    for (std::size_t k = 1; k < scales.size(); ++k) {
      const double s = scales[k];
      for (auto& sec : sectors) sec = maybe_halve(sec, s);
      const std::vector<std::size_t> inner_idx = flatten(sectors);
      std::vector<int> inner_ids;
      for (std::size_t j = 0; j < inner_idx.size(); ++j) {
        std::array<int, 2> pcs{-1, -1};
        if (fan() && j == 0) pcs = {0, -1};
        if (fan() && j + 1 == inner_idx.size()) pcs = {nb - 1, -1};
        inner_ids.push_back(add_node(z_ + s * (bnodes_[inner_idx[j]].p - z_), pcs));
      }
      stitch(outer_idx, outer_ids, inner_idx, inner_ids);
      outer_idx = inner_idx;
      outer_ids = inner_ids;
    }

    const int center = add_node(z_, fan() ? std::array<int, 2>{nb - 1, 0} : std::array<int, 2>{-1, -1});
    const std::size_t m = outer_ids.size();
    const std::size_t count = fan() ? m - 1 : m;
    for (std::size_t j = 0; j < count; ++j) tri(center, outer_ids[j], outer_ids[(j + 1) % m]);
  }

  /// Triangulates the strip between an outer ring and an inner ring whose
  /// index set is a subset of the outer one.
  void stitch(const std::vector<std::size_t>& oidx, const std::vector<int>& oid, const std::vector<std::size_t>& iidx,
              const std::vector<int>& iid) {
    const std::size_t no = oidx.size();
    std::vector<std::size_t> pos(iidx.size());
    std::size_t p = 0;
    for (std::size_t j = 0; j < iidx.size(); ++j) {
      while (oidx[p] != iidx[j]) ++p;
      pos[j] = p;
    }
    const std::size_t strips = fan() ? iidx.size() - 1 : iidx.size();
    for (std::size_t j = 0; j < strips; ++j) {
      const std::size_t jn = (j + 1) % iidx.size();
      const std::size_t lo = pos[j];
      const std::size_t hi = jn == 0 && !fan() ? pos[0] + no : pos[jn];
      const int b0 = iid[j], b1 = iid[jn];
      auto o = [&](std::size_t q) { return oid[q % no]; };
      if (hi - lo == 1) {
        const double d1 = distance(mesh_.nodes[b0], mesh_.nodes[o(hi)]);
        const double d2 = distance(mesh_.nodes[b1], mesh_.nodes[o(lo)]);
        if (d1 <= d2) {
          tri(b0, o(lo), o(hi));
          tri(b0, o(hi), b1);
        } else {
          tri(b0, o(lo), b1);
          tri(b1, o(lo), o(hi));
        }
        continue;
      }
      const std::size_t mid = (lo + hi) / 2;
      for (std::size_t q = lo; q < mid; ++q) tri(b0, o(q), o(q + 1));
      tri(b0, o(mid), b1);
      for (std::size_t q = mid; q < hi; ++q) tri(b1, o(q), o(q + 1));
    }
  }
};

}  // namespace

double Mesh::area(std::size_t t) const {
  const auto& tr = triangles[t];
  return 0.5 * cross(nodes[tr[1]] - nodes[tr[0]], nodes[tr[2]] - nodes[tr[0]]);
}

double Mesh::min_angle() const {
  double best = kPi;
  for (const auto& tr : triangles)
    for (int k = 0; k < 3; ++k) {
      const Vec2& a = nodes[tr[k]];
      const Vec2 u = nodes[tr[(k + 1) % 3]] - a;
      const Vec2 v = nodes[tr[(k + 2) % 3]] - a;
      best = std::min(best, std::atan2(std::abs(cross(u, v)), dot(u, v)));
    }
  return best;
}

double Mesh::max_edge() const {
  double best = 0.0;
  for (const auto& tr : triangles)
    for (int k = 0; k < 3; ++k) best = std::max(best, distance(nodes[tr[k]], nodes[tr[(k + 1) % 3]]));
  return best;
}

Mesh ring_mesh(const SubsonicDomain& domain, const MeshOptions& opt) { return RingMesher(domain, opt).run(); }

MeshLocator::MeshLocator(const Mesh& mesh, int buckets_per_side) : mesh_(&mesh) {
  lo_ = hi_ = mesh.nodes.empty() ? Vec2{} : mesh.nodes.front();
  for (const auto& p : mesh.nodes) {
    lo_ = {std::min(lo_.xi, p.xi), std::min(lo_.eta, p.eta)};
    hi_ = {std::max(hi_.xi, p.xi), std::max(hi_.eta, p.eta)};
  }
  const int side = buckets_per_side > 0
                       ? buckets_per_side
                       : std::max(1, static_cast<int>(std::sqrt(static_cast<double>(mesh.triangles.size()) / 2.0)));
  nx_ = ny_ = side;
  buckets_.assign(static_cast<std::size_t>(nx_ * ny_), {});
  const double wx = std::max(hi_.xi - lo_.xi, 1e-300), wy = std::max(hi_.eta - lo_.eta, 1e-300);
  auto cell = [&](double v, double lo, double w, int n) {
    return std::clamp(static_cast<int>((v - lo) / w * n), 0, n - 1);
  };
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    Vec2 a = mesh.nodes[mesh.triangles[t][0]], b = a;
    for (int k = 1; k < 3; ++k) {
      const Vec2& p = mesh.nodes[mesh.triangles[t][k]];
      a = {std::min(a.xi, p.xi), std::min(a.eta, p.eta)};
      b = {std::max(b.xi, p.xi), std::max(b.eta, p.eta)};
    }
    for (int i = cell(a.xi, lo_.xi, wx, nx_); i <= cell(b.xi, lo_.xi, wx, nx_); ++i)
      for (int j = cell(a.eta, lo_.eta, wy, ny_); j <= cell(b.eta, lo_.eta, wy, ny_); ++j)
        buckets_[static_cast<std::size_t>(j * nx_ + i)].push_back(t);
  }
}

std::optional<MeshLocator::Hit> MeshLocator::locate(const Vec2& p, double tol) const {
  const double wx = std::max(hi_.xi - lo_.xi, 1e-300), wy = std::max(hi_.eta - lo_.eta, 1e-300);
  if (p.xi < lo_.xi - tol || p.xi > hi_.xi + tol || p.eta < lo_.eta - tol || p.eta > hi_.eta + tol)
    return std::nullopt;
  const int i = std::clamp(static_cast<int>((p.xi - lo_.xi) / wx * nx_), 0, nx_ - 1);
  const int j = std::clamp(static_cast<int>((p.eta - lo_.eta) / wy * ny_), 0, ny_ - 1);
  std::optional<Hit> best;
  double best_min = -1e300;
  for (std::size_t t : buckets_[static_cast<std::size_t>(j * nx_ + i)]) {
    const auto& tr = mesh_->triangles[t];
    const Vec2& a = mesh_->nodes[tr[0]];
    const Vec2& b = mesh_->nodes[tr[1]];
    const Vec2& c = mesh_->nodes[tr[2]];
    const double det = cross(b - a, c - a);
    const double l1 = cross(b - p, c - p) / det;
    const double l2 = cross(c - p, a - p) / det;
    const double l3 = 1.0 - l1 - l2;
    const double mn = std::min({l1, l2, l3});
    if (mn > best_min) {
      best_min = mn;
      best = Hit{t, {l1, l2, l3}};
    }
  }
  if (!best || best_min < -tol) return std::nullopt;
  return best;
}

std::optional<double> MeshLocator::interpolate(const std::vector<double>& nodal, const Vec2& p) const {
  const auto hit = locate(p);
  if (!hit) return std::nullopt;
  const auto& tr = mesh_->triangles[hit->triangle];
  return hit->bary[0] * nodal[tr[0]] + hit->bary[1] * nodal[tr[1]] + hit->bary[2] * nodal[tr[2]];
}

}  // namespace wavekit
