#include "mimetic/ref_kernels.hpp"

#include <stdexcept>
#include <string>

namespace mimetic::ref {

namespace {

long wrap_up(long i, long n) { return (i + 1 == n) ? 0 : i + 1; }
long wrap_down(long i, long n) { return (i == 0) ? n - 1 : i - 1; }

}  // namespace

Field3 apply_diff(DiffOp op, const Field3& f) {
    if (f.kind() != diff_domain(op))
        throw std::invalid_argument(std::string("ref::apply_diff: ") + diff_name(op) +
                                    " does not accept kind " + kind_name(f.kind()));
    const GridSpec3& g = f.grid();
    validate(g);
    Field3 out(diff_codomain(op), g);
    const double idx = 1.0 / g.dx;
    const double idy = 1.0 / g.dy;
    const double idz = 1.0 / g.dz;

    for (long k = 0; k < g.nz; ++k) {
        const long kp = wrap_up(k, g.nz);
        const long km = wrap_down(k, g.nz);
        for (long j = 0; j < g.ny; ++j) {
            const long jp = wrap_up(j, g.ny);
            const long jm = wrap_down(j, g.ny);
            for (long i = 0; i < g.nx; ++i) {
                const long ip = wrap_up(i, g.nx);
                const long im = wrap_down(i, g.nx);
                switch (op) {
                    case DiffOp::G:
                        out.at(0, i, j, k) = (f.at(0, ip, j, k) - f.at(0, i, j, k)) * idx;
                        out.at(1, i, j, k) = (f.at(0, i, jp, k) - f.at(0, i, j, k)) * idy;
                        out.at(2, i, j, k) = (f.at(0, i, j, kp) - f.at(0, i, j, k)) * idz;
                        break;
                    case DiffOp::R:
                        out.at(0, i, j, k) = (f.at(2, i, jp, k) - f.at(2, i, j, k)) * idy -
                                             (f.at(1, i, j, kp) - f.at(1, i, j, k)) * idz;
                        out.at(1, i, j, k) = (f.at(0, i, j, kp) - f.at(0, i, j, k)) * idz -
                                             (f.at(2, ip, j, k) - f.at(2, i, j, k)) * idx;
                        out.at(2, i, j, k) = (f.at(1, ip, j, k) - f.at(1, i, j, k)) * idx -
                                             (f.at(0, i, jp, k) - f.at(0, i, j, k)) * idy;
                        break;
                    case DiffOp::D:
                        out.at(0, i, j, k) = (f.at(0, ip, j, k) - f.at(0, i, j, k)) * idx +
                                             (f.at(1, i, jp, k) - f.at(1, i, j, k)) * idy +
                                             (f.at(2, i, j, kp) - f.at(2, i, j, k)) * idz;
                        break;
                    case DiffOp::Gstar:
                        out.at(0, i, j, k) = (f.at(0, i, j, k) - f.at(0, im, j, k)) * idx;
                        out.at(1, i, j, k) = (f.at(0, i, j, k) - f.at(0, i, jm, k)) * idy;
                        out.at(2, i, j, k) = (f.at(0, i, j, k) - f.at(0, i, j, km)) * idz;
                        break;
                    case DiffOp::Rstar:
                        out.at(0, i, j, k) = (f.at(2, i, j, k) - f.at(2, i, jm, k)) * idy -
                                             (f.at(1, i, j, k) - f.at(1, i, j, km)) * idz;
                        out.at(1, i, j, k) = (f.at(0, i, j, k) - f.at(0, i, j, km)) * idz -
                                             (f.at(2, i, j, k) - f.at(2, im, j, k)) * idx;
                        out.at(2, i, j, k) = (f.at(1, i, j, k) - f.at(1, im, j, k)) * idx -
                                             (f.at(0, i, j, k) - f.at(0, i, jm, k)) * idy;
                        break;
                    case DiffOp::Dstar:
                        out.at(0, i, j, k) = (f.at(0, i, j, k) - f.at(0, im, j, k)) * idx +
                                             (f.at(1, i, j, k) - f.at(1, i, jm, k)) * idy +
                                             (f.at(2, i, j, k) - f.at(2, i, j, km)) * idz;
                        break;
                }
            }
        }
    }
    return out;
}

Field3 apply_material(StarOp which, const Field3& f, const Material& mat) {
    if (f.kind() != star_domain(which))
        throw std::invalid_argument(std::string("ref::apply_material: ") +
                                    star_name(which) + " does not accept kind " +
                                    kind_name(f.kind()));
    const Field3* lattice = nullptr;
    bool invert = false;
    switch (which) {
        case StarOp::a: lattice = &mat.a; break;
        case StarOp::b: lattice = &mat.b; break;
        case StarOp::A: lattice = &mat.A; break;
        case StarOp::B: lattice = &mat.B; break;
        case StarOp::a_inv: lattice = &mat.a; invert = true; break;
        case StarOp::b_inv: lattice = &mat.b; invert = true; break;
        case StarOp::A_inv: lattice = &mat.A; invert = true; break;
        case StarOp::B_inv: lattice = &mat.B; invert = true; break;
    }
    Field3 out(star_codomain(which), f.grid());
    for (std::size_t n = 0; n < out.data().size(); ++n)
        out.data()[n] = invert ? f.data()[n] / lattice->data()[n]
                               : f.data()[n] * lattice->data()[n];
    return out;
}

}  // namespace mimetic::ref
