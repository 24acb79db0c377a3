#include "fdot/grid.hpp"

#include <cmath>
#include <cstdlib>

namespace fdot {

namespace {

bool close(double a, double b, double tol = 1e-12) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

bool Grid2D::same_space_mesh(const Grid2D& o) const {
    return nx == o.nx && ny == o.ny && close(hx, o.hx) && close(hy, o.hy);
}

bool Grid2D::same_mesh(const Grid2D& o) const {
    return same_space_mesh(o) && nt == o.nt && close(dt, o.dt);
}

Grid2D build_grid(int nx, int ny, double T, double dt, double lx, double ly) {
    if (nx < 3 || ny < 3) throw ConfigError("build_grid: nx and ny must be >= 3");
    if (!(dt > 0.0) || !(T > 0.0)) throw ConfigError("build_grid: T and dt must be positive");
    if (!(lx > 0.0) || !(ly > 0.0)) throw ConfigError("build_grid: lx and ly must be positive");
    const auto nsteps = static_cast<long long>(std::llround(T / dt));
    if (nsteps < 1 || std::abs(static_cast<double>(nsteps) * dt - T) > 1e-12 * std::max(1.0, T))
        throw ConfigError("build_grid: dt does not divide T");
    Grid2D g;
    g.nx = nx;
    g.ny = ny;
    g.lx = lx;
    g.ly = ly;
    g.hx = lx / (nx - 1);
    g.hy = ly / (ny - 1);
    g.nt = static_cast<int>(nsteps) + 1;
    g.dt = dt;
    g.T = T;
    return g;
}

ScalarField make_field(const Grid2D& g, const std::function<double(double, double)>& f) {
    ScalarField out(g);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) out(ix, iy) = f(g.x1(ix), g.x2(iy));
    return out;
}

ScalarField SpaceTimeField::snapshot(int k) const {
    ScalarField out(grid);
    auto lv = level(k);
    std::copy(lv.begin(), lv.end(), out.v.begin());
    return out;
}

GammaSpec GammaSpec::full_boundary() {
    GammaSpec g;
    g.edges = {{Side::Bottom, 0, -1}, {Side::Right, 0, -1}, {Side::Top, 0, -1}, {Side::Left, 0, -1}};
    return g;
}

namespace {

int side_extent(Side s, const Grid2D& g) {
    return (s == Side::Left || s == Side::Right) ? g.ny : g.nx;
}

}  // namespace

std::vector<GammaNode> resolve_gamma(const GammaSpec& gamma, const Grid2D& g) {
    if (gamma.edges.empty()) throw ConfigError("GammaSpec: no edges");
    std::vector<GammaNode> out;
    for (const auto& e : gamma.edges) {
        const int n = side_extent(e.side, g);
        const int lo = e.lo;
        const int hi = (e.hi < 0) ? n - 1 : e.hi;  // hi < 0 means "to the end of the side"
        if (lo < 0 || hi >= n || lo > hi)
            throw ConfigError("GammaSpec: edge index range outside side extents");
        const double h = (e.side == Side::Left || e.side == Side::Right) ? g.hy : g.hx;
        for (int i = lo; i <= hi; ++i) {
            GammaNode gn;
            gn.side = e.side;
            switch (e.side) {
                case Side::Left: gn.ix = 0, gn.iy = i; break;
                case Side::Right: gn.ix = g.nx - 1, gn.iy = i; break;
                case Side::Bottom: gn.ix = i, gn.iy = 0; break;
                case Side::Top: gn.ix = i, gn.iy = g.ny - 1; break;
            }
            gn.node = g.node(gn.ix, gn.iy);
            gn.weight = h * ((i == lo || i == hi) ? 0.5 : 1.0);
            out.push_back(gn);
        }
    }
    return out;
}

GammaSpec refine_gamma(const GammaSpec& gamma, int multiplier) {
    if (multiplier < 1) throw ConfigError("refine_gamma: multiplier must be >= 1");
    GammaSpec out = gamma;
    for (auto& e : out.edges) {
        e.lo *= multiplier;
        if (e.hi >= 0) e.hi *= multiplier;
    }
    return out;
}

BoundaryTrace::BoundaryTrace(const Grid2D& g, const GammaSpec& gm) : grid(g), gamma(gm) {
    width = static_cast<int>(resolve_gamma(gm, g).size());
    v.assign(static_cast<size_t>(g.nt) * width, 0.0);
}

BoundaryTrace make_trace(const Grid2D& g, const GammaSpec& gamma,
                         const std::function<double(double, double, double)>& f) {
    BoundaryTrace tr(g, gamma);
    const auto nodes = resolve_gamma(gamma, g);
    for (int k = 0; k < g.nt; ++k) {
        const double t = g.time(k);
        for (size_t s = 0; s < nodes.size(); ++s)
            tr.at(k, static_cast<int>(s)) = f(g.x1(nodes[s].ix), g.x2(nodes[s].iy), t);
    }
    return tr;
}

ScalarField laplacian_apply(const ScalarField& u) {
    const Grid2D& g = u.grid;
    ScalarField out(g, 0.0);
    const double ihx2 = 1.0 / (g.hx * g.hx), ihy2 = 1.0 / (g.hy * g.hy);
    for (int iy = 1; iy < g.ny - 1; ++iy)
        for (int ix = 1; ix < g.nx - 1; ++ix)
            out(ix, iy) = (u(ix - 1, iy) - 2.0 * u(ix, iy) + u(ix + 1, iy)) * ihx2 +
                          (u(ix, iy - 1) - 2.0 * u(ix, iy) + u(ix, iy + 1)) * ihy2;
    return out;
}

BoundaryTrace boundary_flux(const SpaceTimeField& u, const GammaSpec& gamma) {
    const Grid2D& g = u.grid;
    if (g.nx < 3 || g.ny < 3)
        throw ConfigError("boundary_flux: grid too coarse for the 3-point stencil");
    const auto nodes = resolve_gamma(gamma, g);
    BoundaryTrace tr(g, gamma);
    for (int k = 0; k < g.nt; ++k) {
        const auto lv = u.level(k);
        for (size_t s = 0; s < nodes.size(); ++s) {
            const auto& gn = nodes[s];
            int d = 0;  // flat stride toward the interior
            double h = 0.0;
            switch (gn.side) {
                case Side::Left: d = 1, h = g.hx; break;
                case Side::Right: d = -1, h = g.hx; break;
                case Side::Bottom: d = g.nx, h = g.hy; break;
                case Side::Top: d = -g.nx, h = g.hy; break;
            }
            const double u0 = lv[gn.node], u1 = lv[gn.node + d], u2 = lv[gn.node + 2 * d];
            tr.at(k, static_cast<int>(s)) = (3.0 * u0 - 4.0 * u1 + u2) / (2.0 * h);
        }
    }
    return tr;
}

double tv_seminorm(const ScalarField& q) {
    const Grid2D& g = q.grid;
    const double cell = g.hx * g.hy;
    double tv = 0.0;
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            const double dx = (ix + 1 < g.nx) ? (q(ix + 1, iy) - q(ix, iy)) / g.hx : 0.0;
            const double dy = (iy + 1 < g.ny) ? (q(ix, iy + 1) - q(ix, iy)) / g.hy : 0.0;
            tv += cell * std::sqrt(dx * dx + dy * dy);
        }
    return tv;
}

std::vector<double> node_quad_weights(const Grid2D& g) {
    std::vector<double> w(static_cast<size_t>(g.num_nodes()));
    const double cell = g.hx * g.hy;
    for (int iy = 0; iy < g.ny; ++iy) {
        const double cy = (iy == 0 || iy == g.ny - 1) ? 0.5 : 1.0;
        for (int ix = 0; ix < g.nx; ++ix) {
            const double cx = (ix == 0 || ix == g.nx - 1) ? 0.5 : 1.0;
            w[static_cast<size_t>(g.node(ix, iy))] = cell * cx * cy;
        }
    }
    return w;
}

double l2_inner(const ScalarField& a, const ScalarField& b) {
    if (!a.grid.same_space_mesh(b.grid) || a.v.size() != b.v.size())
        throw ConfigError("l2_inner: field shape mismatch");
    const auto w = node_quad_weights(a.grid);
    double s = 0.0;
    for (size_t i = 0; i < a.v.size(); ++i) s += w[i] * a.v[i] * b.v[i];
    return s;
}

double l2_inner(const BoundaryTrace& a, const BoundaryTrace& b) {
    if (!a.grid.same_mesh(b.grid) || !(a.gamma == b.gamma) || a.width != b.width)
        throw ConfigError("l2_inner: trace shape mismatch");
    const auto nodes = resolve_gamma(a.gamma, a.grid);
    double s = 0.0;
    for (int k = 0; k < a.grid.nt; ++k) {
        const double wt = a.grid.dt * ((k == 0 || k == a.grid.nt - 1) ? 0.5 : 1.0);
        double row = 0.0;
        for (int j = 0; j < a.width; ++j) row += nodes[static_cast<size_t>(j)].weight * a.at(k, j) * b.at(k, j);
        s += wt * row;
    }
    return s;
}

double l2_norm(const ScalarField& a) { return std::sqrt(l2_inner(a, a)); }
double l2_norm(const BoundaryTrace& a) { return std::sqrt(l2_inner(a, a)); }

ScalarField add_scaled(const ScalarField& a, double s, const ScalarField& b) {
    if (a.v.size() != b.v.size()) throw ConfigError("add_scaled: shape mismatch");
    ScalarField out = a;
    for (size_t i = 0; i < out.v.size(); ++i) out.v[i] += s * b.v[i];
    return out;
}

BoundaryTrace sub(const BoundaryTrace& a, const BoundaryTrace& b) {
    if (a.v.size() != b.v.size() || !(a.gamma == b.gamma))
        throw ConfigError("sub: trace shape mismatch");
    BoundaryTrace out = a;
    for (size_t i = 0; i < out.v.size(); ++i) out.v[i] -= b.v[i];
    return out;
}

ScalarField clamp_field(const ScalarField& q, double lo, double hi, int* clamped_count) {
    ScalarField out = q;
    int n = 0;
    for (auto& x : out.v) {
        if (x < lo) {
            x = lo;
            ++n;
        } else if (x > hi) {
            x = hi;
            ++n;
        }
    }
    if (clamped_count) *clamped_count = n;
    return out;
}

}  // namespace fdot
