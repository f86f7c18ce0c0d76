#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace mimetic {

/// Uniform periodic box: cell counts per axis and positive spacings.
struct GridSpec3 {
    long nx = 0;
    long ny = 0;
    long nz = 0;
    double dx = 0.0;
    double dy = 0.0;
    double dz = 0.0;
};

/// Throws std::invalid_argument unless all counts are >= 2 and spacings > 0.
void validate(const GridSpec3& g);

bool same_grid(const GridSpec3& a, const GridSpec3& b);

double cell_volume(const GridSpec3& g);
double min_spacing(const GridSpec3& g);

/// The eight staggered field families of the primal/dual grid pair.
///
/// Scalars live at nodes (NodeScalar) or cell centers (DualNodeScalar,
/// CellScalar via the dual pairing); vectors carry one component lattice per
/// axis, sited on edges or faces of the primal grid.
enum class FieldKind {
    NodeScalar,
    EdgeVector,
    FaceVector,
    CellScalar,
    DualCellScalar,
    DualFaceVector,
    DualEdgeVector,
    DualNodeScalar,
};

/// 1 for scalar kinds, 3 for vector kinds.
int components(FieldKind k);

/// Exponent e of the kind's spatial dimension 1/d^e (0 for scalars at nodes,
/// up to 3 for cell densities).
int dimension_exponent(FieldKind k);

bool is_dual(FieldKind k);

/// Stable lower-case name, also used in snapshot sidecars.
const char* kind_name(FieldKind k);

/// Staggering of component `comp` in units of the spacing along each axis
/// (entries are 0 or 1/2).
std::array<double, 3> site_offset(FieldKind k, int comp);

/// Physical coordinates of lattice point (i, j, k) of component `comp`.
std::array<double, 3> site_position(const GridSpec3& g, FieldKind k, int comp,
                                    long i, long j, long k_idx);

/// One discrete field: a kind tag plus one nx*ny*nz lattice per component.
///
/// Storage is row-major with x fastest, identical for every kind; the
/// staggering is metadata (see site_offset). Indices wrap periodically in the
/// operator routines, not here.
class Field3 {
  public:
    Field3() = default;
    Field3(FieldKind kind, const GridSpec3& grid);

    FieldKind kind() const { return kind_; }
    const GridSpec3& grid() const { return grid_; }
    int component_count() const { return components(kind_); }
    long per_component() const { return grid_.nx * grid_.ny * grid_.nz; }

    long index(long i, long j, long k) const {
        return (k * grid_.ny + j) * grid_.nx + i;
    }

    double& at(int c, long i, long j, long k) {
        return data_[static_cast<std::size_t>(c * per_component() + index(i, j, k))];
    }
    double at(int c, long i, long j, long k) const {
        return data_[static_cast<std::size_t>(c * per_component() + index(i, j, k))];
    }

    double* component(int c) { return data_.data() + c * per_component(); }
    const double* component(int c) const { return data_.data() + c * per_component(); }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

  private:
    FieldKind kind_ = FieldKind::NodeScalar;
    GridSpec3 grid_{};
    std::vector<double> data_;
};

/// Seeded uniform [-1, 1] entries on every component lattice.
Field3 make_random_field(FieldKind kind, const GridSpec3& grid, std::uint64_t seed);

/// y += alpha * x. Kinds and grids must match.
void add_scaled(Field3& y, double alpha, const Field3& x);

/// Pointwise (f + g) / 2 of two same-kind fields.
Field3 averaged(const Field3& f, const Field3& g);

double max_abs(const Field3& f);

bool all_finite(const Field3& f);

}  // namespace mimetic
