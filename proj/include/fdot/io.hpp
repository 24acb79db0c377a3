#pragma once

#include <string>

#include "fdot/grid.hpp"

namespace fdot {

// CSV layout: one `# ...` header line, then row-major values, one row per line.
//   ScalarField     header `# nx,ny,hx,hy`, ny lines of nx values
//   BoundaryTrace   header `# nx,ny,nt,hx,hy,dt`, nt lines of width values
//   SpaceTimeField  single-file form: header `# nx,ny,nt,hx,hy,dt`, lines
//                   `k,<row values>` (time-index column); per-level form:
//                   one ScalarField CSV per time level.

void write_csv(const ScalarField& f, const std::string& path);
void write_csv(const BoundaryTrace& tr, const std::string& path);
void write_csv_single(const SpaceTimeField& u, const std::string& path);
void write_csv_per_level(const SpaceTimeField& u, const std::string& dir,
                         const std::string& basename);

ScalarField read_field_csv(const std::string& path, const Grid2D& grid);
BoundaryTrace read_trace_csv(const std::string& path, const Grid2D& grid, const GammaSpec& gamma);

/// 8-bit binary PGM with per-file linear min/max scaling recorded in a comment.
void write_pgm(const ScalarField& f, const std::string& path);

}  // namespace fdot
