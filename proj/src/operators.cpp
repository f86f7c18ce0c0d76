#include "mimetic/operators.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "mimetic/inner.hpp"
#include "mimetic/power_iteration.hpp"
#include "parallel_for.hpp"

namespace mimetic {

FieldKind diff_domain(DiffOp op) {
    switch (op) {
        case DiffOp::G: return FieldKind::NodeScalar;
        case DiffOp::R: return FieldKind::EdgeVector;
        case DiffOp::D: return FieldKind::FaceVector;
        case DiffOp::Gstar: return FieldKind::DualNodeScalar;
        case DiffOp::Rstar: return FieldKind::DualEdgeVector;
        case DiffOp::Dstar: return FieldKind::DualFaceVector;
    }
    return FieldKind::NodeScalar;
}

FieldKind diff_codomain(DiffOp op) {
    switch (op) {
        case DiffOp::G: return FieldKind::EdgeVector;
        case DiffOp::R: return FieldKind::FaceVector;
        case DiffOp::D: return FieldKind::CellScalar;
        case DiffOp::Gstar: return FieldKind::DualEdgeVector;
        case DiffOp::Rstar: return FieldKind::DualFaceVector;
        case DiffOp::Dstar: return FieldKind::DualCellScalar;
    }
    return FieldKind::NodeScalar;
}

const char* diff_name(DiffOp op) {
    switch (op) {
        case DiffOp::G: return "G";
        case DiffOp::R: return "R";
        case DiffOp::D: return "D";
        case DiffOp::Gstar: return "Gstar";
        case DiffOp::Rstar: return "Rstar";
        case DiffOp::Dstar: return "Dstar";
    }
    return "?";
}

namespace {

struct StencilCtx {
    long nx, ny, nz;
    double idx, idy, idz;
};

StencilCtx make_ctx(const GridSpec3& g) {
    return {g.nx, g.ny, g.nz, 1.0 / g.dx, 1.0 / g.dy, 1.0 / g.dz};
}

void grad_forward(const StencilCtx& c, const double* s, double* ex, double* ey,
                  double* ez) {
    parallel_for_slabs(c.nz, c.ny, [=](long k, long j) {
        const long kp = (k + 1 == c.nz) ? 0 : k + 1;
        const long jp = (j + 1 == c.ny) ? 0 : j + 1;
        const long row = (k * c.ny + j) * c.nx;
        const long row_jp = (k * c.ny + jp) * c.nx;
        const long row_kp = (kp * c.ny + j) * c.nx;
        for (long i = 0; i < c.nx; ++i) {
            const long ip = (i + 1 == c.nx) ? 0 : i + 1;
            ex[row + i] = (s[row + ip] - s[row + i]) * c.idx;
            ey[row + i] = (s[row_jp + i] - s[row + i]) * c.idy;
            ez[row + i] = (s[row_kp + i] - s[row + i]) * c.idz;
        }
    });
}

void curl_forward(const StencilCtx& c, const double* tx, const double* ty,
                  const double* tz, double* nx_out, double* ny_out,
                  double* nz_out) {
    parallel_for_slabs(c.nz, c.ny, [=](long k, long j) {
        const long kp = (k + 1 == c.nz) ? 0 : k + 1;
        const long jp = (j + 1 == c.ny) ? 0 : j + 1;
        const long row = (k * c.ny + j) * c.nx;
        const long row_jp = (k * c.ny + jp) * c.nx;
        const long row_kp = (kp * c.ny + j) * c.nx;
        for (long i = 0; i < c.nx; ++i) {
            const long ip = (i + 1 == c.nx) ? 0 : i + 1;
            nx_out[row + i] = (tz[row_jp + i] - tz[row + i]) * c.idy -
                              (ty[row_kp + i] - ty[row + i]) * c.idz;
            ny_out[row + i] = (tx[row_kp + i] - tx[row + i]) * c.idz -
                              (tz[row + ip] - tz[row + i]) * c.idx;
            nz_out[row + i] = (ty[row + ip] - ty[row + i]) * c.idx -
                              (tx[row_jp + i] - tx[row + i]) * c.idy;
        }
    });
}

void div_forward(const StencilCtx& c, const double* nx_in, const double* ny_in,
                 const double* nz_in, double* d) {
    parallel_for_slabs(c.nz, c.ny, [=](long k, long j) {
        const long kp = (k + 1 == c.nz) ? 0 : k + 1;
        const long jp = (j + 1 == c.ny) ? 0 : j + 1;
        const long row = (k * c.ny + j) * c.nx;
        const long row_jp = (k * c.ny + jp) * c.nx;
        const long row_kp = (kp * c.ny + j) * c.nx;
        for (long i = 0; i < c.nx; ++i) {
            const long ip = (i + 1 == c.nx) ? 0 : i + 1;
            d[row + i] = (nx_in[row + ip] - nx_in[row + i]) * c.idx +
                         (ny_in[row_jp + i] - ny_in[row + i]) * c.idy +
                         (nz_in[row_kp + i] - nz_in[row + i]) * c.idz;
        }
    });
}

void grad_backward(const StencilCtx& c, const double* s, double* ex, double* ey,
                   double* ez) {
    parallel_for_slabs(c.nz, c.ny, [=](long k, long j) {
        const long km = (k == 0) ? c.nz - 1 : k - 1;
        const long jm = (j == 0) ? c.ny - 1 : j - 1;
        const long row = (k * c.ny + j) * c.nx;
        const long row_jm = (k * c.ny + jm) * c.nx;
        const long row_km = (km * c.ny + j) * c.nx;
        for (long i = 0; i < c.nx; ++i) {
            const long im = (i == 0) ? c.nx - 1 : i - 1;
            ex[row + i] = (s[row + i] - s[row + im]) * c.idx;
            ey[row + i] = (s[row + i] - s[row_jm + i]) * c.idy;
            ez[row + i] = (s[row + i] - s[row_km + i]) * c.idz;
        }
    });
}

void curl_backward(const StencilCtx& c, const double* tx, const double* ty,
                   const double* tz, double* nx_out, double* ny_out,
                   double* nz_out) {
    parallel_for_slabs(c.nz, c.ny, [=](long k, long j) {
        const long km = (k == 0) ? c.nz - 1 : k - 1;
        const long jm = (j == 0) ? c.ny - 1 : j - 1;
        const long row = (k * c.ny + j) * c.nx;
        const long row_jm = (k * c.ny + jm) * c.nx;
        const long row_km = (km * c.ny + j) * c.nx;
        for (long i = 0; i < c.nx; ++i) {
            const long im = (i == 0) ? c.nx - 1 : i - 1;
            nx_out[row + i] = (tz[row + i] - tz[row_jm + i]) * c.idy -
                              (ty[row + i] - ty[row_km + i]) * c.idz;
            ny_out[row + i] = (tx[row + i] - tx[row_km + i]) * c.idz -
                              (tz[row + i] - tz[row + im]) * c.idx;
            nz_out[row + i] = (ty[row + i] - ty[row + im]) * c.idx -
                              (tx[row + i] - tx[row_jm + i]) * c.idy;
        }
    });
}

void div_backward(const StencilCtx& c, const double* nx_in, const double* ny_in,
                  const double* nz_in, double* d) {
    parallel_for_slabs(c.nz, c.ny, [=](long k, long j) {
        const long km = (k == 0) ? c.nz - 1 : k - 1;
        const long jm = (j == 0) ? c.ny - 1 : j - 1;
        const long row = (k * c.ny + j) * c.nx;
        const long row_jm = (k * c.ny + jm) * c.nx;
        const long row_km = (km * c.ny + j) * c.nx;
        for (long i = 0; i < c.nx; ++i) {
            const long im = (i == 0) ? c.nx - 1 : i - 1;
            d[row + i] = (nx_in[row + i] - nx_in[row + im]) * c.idx +
                         (ny_in[row + i] - ny_in[row_jm + i]) * c.idy +
                         (nz_in[row + i] - nz_in[row_km + i]) * c.idz;
        }
    });
}

}  // namespace

Field3 apply_diff(DiffOp op, const Field3& f) {
    if (f.kind() != diff_domain(op))
        throw std::invalid_argument(std::string("apply_diff: ") + diff_name(op) +
                                    " does not accept kind " + kind_name(f.kind()));
    validate(f.grid());
    Field3 out(diff_codomain(op), f.grid());
    const StencilCtx c = make_ctx(f.grid());
    switch (op) {
        case DiffOp::G:
            grad_forward(c, f.component(0), out.component(0), out.component(1),
                         out.component(2));
            break;
        case DiffOp::R:
            curl_forward(c, f.component(0), f.component(1), f.component(2),
                         out.component(0), out.component(1), out.component(2));
            break;
        case DiffOp::D:
            div_forward(c, f.component(0), f.component(1), f.component(2),
                        out.component(0));
            break;
        case DiffOp::Gstar:
            grad_backward(c, f.component(0), out.component(0), out.component(1),
                          out.component(2));
            break;
        case DiffOp::Rstar:
            curl_backward(c, f.component(0), f.component(1), f.component(2),
                          out.component(0), out.component(1), out.component(2));
            break;
        case DiffOp::Dstar:
            div_backward(c, f.component(0), f.component(1), f.component(2),
                         out.component(0));
            break;
    }
    return out;
}

FieldKind second_order_domain(SecondOrderOp op) {
    switch (op) {
        case SecondOrderOp::laplacian_P: return FieldKind::NodeScalar;
        case SecondOrderOp::laplacian_V: return FieldKind::CellScalar;
        case SecondOrderOp::curlcurl_C: return FieldKind::EdgeVector;
        case SecondOrderOp::curlcurl_S: return FieldKind::FaceVector;
    }
    return FieldKind::NodeScalar;
}

const char* second_order_name(SecondOrderOp op) {
    switch (op) {
        case SecondOrderOp::laplacian_P: return "laplacian_P";
        case SecondOrderOp::laplacian_V: return "laplacian_V";
        case SecondOrderOp::curlcurl_C: return "curlcurl_C";
        case SecondOrderOp::curlcurl_S: return "curlcurl_S";
    }
    return "?";
}

Field3 second_order(SecondOrderOp op, const Material& mat, const Field3& f) {
    if (f.kind() != second_order_domain(op))
        throw std::invalid_argument(std::string("second_order: ") +
                                    second_order_name(op) + " does not accept kind " +
                                    kind_name(f.kind()));
    switch (op) {
        case SecondOrderOp::laplacian_P:
            return apply_material(
                StarOp::a_inv,
                apply_diff(DiffOp::Dstar,
                           apply_material(StarOp::A, apply_diff(DiffOp::G, f), mat)),
                mat);
        case SecondOrderOp::laplacian_V:
            return apply_diff(
                DiffOp::D,
                apply_material(
                    StarOp::B,
                    apply_diff(DiffOp::Gstar,
                               apply_material(StarOp::b_inv, f, mat)),
                    mat));
        case SecondOrderOp::curlcurl_C:
            return apply_material(
                StarOp::A_inv,
                apply_diff(DiffOp::Rstar,
                           apply_material(StarOp::B_inv, apply_diff(DiffOp::R, f), mat)),
                mat);
        case SecondOrderOp::curlcurl_S:
            return apply_diff(
                DiffOp::R,
                apply_material(
                    StarOp::A_inv,
                    apply_diff(DiffOp::Rstar,
                               apply_material(StarOp::B_inv, f, mat)),
                    mat));
    }
    throw std::invalid_argument("second_order: unknown composite");
}

double operator_norm_estimate(SecondOrderOp op, const GridSpec3& grid,
                              const Material& mat, double tol,
                              std::uint64_t seed) {
    validate(grid);
    validate(mat);
    const FieldKind space = second_order_domain(op);
    Field3 start = make_random_field(space, grid, seed);
    auto apply = [&](const Field3& x) { return second_order(op, mat, x); };
    auto dot = [&](const Field3& u, const Field3& v) {
        return inner(space, u, v, mat);
    };
    auto scale = [](Field3& u, double s) {
        for (double& v : u.data()) v *= s;
    };
    return power_iteration(apply, dot, scale, std::move(start), tol);
}

}  // namespace mimetic
