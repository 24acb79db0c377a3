#pragma once

#include <functional>
#include <span>
#include <vector>

#include "fdot/errors.hpp"

namespace fdot {

/// Uniform space-time mesh on [0,lx] x [0,ly] x [0,T], node-centered.
/// Node (ix,iy) sits at (ix*hx, iy*hy) and is stored at flat index iy*nx+ix.
struct Grid2D {
    int nx = 0, ny = 0;  // node counts per axis, boundary nodes included
    double lx = 1.0, ly = 1.0;
    double hx = 0.0, hy = 0.0;
    int nt = 0;  // time levels, t=0 included
    double dt = 0.0;
    double T = 0.0;

    int num_nodes() const { return nx * ny; }
    int node(int ix, int iy) const { return iy * nx + ix; }
    double x1(int ix) const { return ix * hx; }
    double x2(int iy) const { return iy * hy; }
    double time(int k) const { return k * dt; }
    bool is_boundary(int ix, int iy) const {
        return ix == 0 || iy == 0 || ix == nx - 1 || iy == ny - 1;
    }
    bool same_space_mesh(const Grid2D& o) const;
    bool same_mesh(const Grid2D& o) const;  // space and time
};

Grid2D build_grid(int nx, int ny, double T, double dt, double lx = 1.0, double ly = 1.0);

/// One coefficient or snapshot on the spatial grid.
struct ScalarField {
    Grid2D grid;
    std::vector<double> v;  // nx*ny, row-major node order

    ScalarField() = default;
    explicit ScalarField(const Grid2D& g, double fill = 0.0)
        : grid(g), v(static_cast<size_t>(g.num_nodes()), fill) {}

    double& operator()(int ix, int iy) { return v[static_cast<size_t>(grid.node(ix, iy))]; }
    double operator()(int ix, int iy) const { return v[static_cast<size_t>(grid.node(ix, iy))]; }
};

ScalarField make_field(const Grid2D& g, const std::function<double(double, double)>& f);

/// Full solution trajectory u(x,t), time-major.
struct SpaceTimeField {
    Grid2D grid;
    std::vector<double> v;  // nt * (nx*ny)

    SpaceTimeField() = default;
    explicit SpaceTimeField(const Grid2D& g, double fill = 0.0)
        : grid(g), v(static_cast<size_t>(g.nt) * g.num_nodes(), fill) {}

    std::span<double> level(int k) {
        return {v.data() + static_cast<size_t>(k) * grid.num_nodes(),
                static_cast<size_t>(grid.num_nodes())};
    }
    std::span<const double> level(int k) const {
        return {v.data() + static_cast<size_t>(k) * grid.num_nodes(),
                static_cast<size_t>(grid.num_nodes())};
    }
    ScalarField snapshot(int k) const;
};

enum class Side { Left, Right, Bottom, Top };

/// A contiguous node-index range on one side of the square
/// (iy range for Left/Right, ix range for Bottom/Top; inclusive).
struct BoundaryEdge {
    Side side = Side::Left;
    int lo = 0, hi = 0;

    bool operator==(const BoundaryEdge&) const = default;
};

/// The sub-boundary a trace lives on. Corner nodes shared by two included
/// sides appear once per side, each slot with its own outward normal.
struct GammaSpec {
    std::vector<BoundaryEdge> edges;

    static GammaSpec full_boundary();
    bool operator==(const GammaSpec&) const = default;
};

/// A resolved sample point of a GammaSpec on a concrete grid.
struct GammaNode {
    int node = 0;        // flat node index
    int ix = 0, iy = 0;
    Side side = Side::Left;
    double weight = 0.0;  // arclength quadrature weight (trapezoid on the edge segment)
};

std::vector<GammaNode> resolve_gamma(const GammaSpec& gamma, const Grid2D& g);

/// Scale edge index ranges by an integer mesh-refinement factor.
GammaSpec refine_gamma(const GammaSpec& gamma, int multiplier);

/// A scalar function on Gamma x (0,T), sampled at boundary slots and time levels.
struct BoundaryTrace {
    Grid2D grid;
    GammaSpec gamma;
    int width = 0;          // number of resolved gamma slots
    std::vector<double> v;  // nt * width, time-major

    BoundaryTrace() = default;
    BoundaryTrace(const Grid2D& g, const GammaSpec& gm);

    double& at(int k, int s) { return v[static_cast<size_t>(k) * width + s]; }
    double at(int k, int s) const { return v[static_cast<size_t>(k) * width + s]; }
};

BoundaryTrace make_trace(const Grid2D& g, const GammaSpec& gamma,
                         const std::function<double(double, double, double)>& f);  // f(x1,x2,t)

// ---- discrete operators and inner products ----

/// 5-point Laplacian at interior nodes; boundary entries set to zero.
ScalarField laplacian_apply(const ScalarField& u);

/// Outward normal derivative on gamma at every time level,
/// second-order one-sided: (3*u0 - 4*u1 + u2) / (2h) oriented outward.
BoundaryTrace boundary_flux(const SpaceTimeField& u, const GammaSpec& gamma);

/// Discrete isotropic TV with forward differences; zero difference past the
/// last row/column.
double tv_seminorm(const ScalarField& q);

/// Trapezoid-weighted node quadrature weights (integrate to lx*ly).
std::vector<double> node_quad_weights(const Grid2D& g);

double l2_inner(const ScalarField& a, const ScalarField& b);
double l2_inner(const BoundaryTrace& a, const BoundaryTrace& b);
double l2_norm(const ScalarField& a);
double l2_norm(const BoundaryTrace& a);

// small value-semantics helpers used throughout the solvers
ScalarField add_scaled(const ScalarField& a, double s, const ScalarField& b);  // a + s*b
BoundaryTrace sub(const BoundaryTrace& a, const BoundaryTrace& b);
ScalarField clamp_field(const ScalarField& q, double lo, double hi, int* clamped_count = nullptr);

}  // namespace fdot
