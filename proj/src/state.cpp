#include "nosig/state.hpp"

#include "nosig/hermitian_eigen.hpp"

#include <cmath>
#include <stdexcept>

namespace nosig {

namespace {

const Complex kI(0.0, 1.0);

Complex phase_factor(double theta) { return Complex(std::cos(theta), std::sin(theta)); }

} // namespace

PureState make_pure_state(DimensionSpec dims, CVec amplitudes) {
    if (static_cast<int>(amplitudes.size()) != dims.total())
        throw std::invalid_argument("amplitude count does not match the dimension spec");
    if (!all_finite(amplitudes))
        throw std::invalid_argument("amplitudes must be finite");
    const double n = vec_norm(amplitudes);
    if (std::abs(n - 1.0) > kNormTol)
        throw std::invalid_argument("pure state must be normalized (tolerance 1e-10)");
    return PureState{std::move(dims), std::move(amplitudes)};
}

DensityOperator make_density_operator(DimensionSpec dims, ComplexMatrix matrix) {
    if (!matrix.is_square() || matrix.rows() != dims.total())
        throw std::invalid_argument("density matrix dimension does not match the dimension spec");
    if (!all_finite(matrix))
        throw std::invalid_argument("density matrix entries must be finite");
    if (!is_hermitian(matrix, kHermitianTol))
        throw std::invalid_argument("density operator must be Hermitian (tolerance 1e-10)");
    if (std::abs(trace(matrix) - Complex(1.0, 0.0)) > kNormTol)
        throw std::invalid_argument("density operator must have unit trace (tolerance 1e-10)");
    const std::vector<double> eig = hermitian_eigenvalues(matrix);
    if (eig.front() < kEigenFloor)
        throw std::invalid_argument("density operator must be positive semidefinite");
    return DensityOperator{std::move(dims), std::move(matrix)};
}

DensityOperator pure_to_density(const PureState& s) {
    return DensityOperator{s.dims, outer(s.amplitudes, s.amplitudes)};
}

DensityOperator reduced_state(const DensityOperator& rho, const std::vector<std::string>& keep) {
    ComplexMatrix reduced = partial_trace(rho.matrix, rho.dims, keep);
    return make_density_operator(rho.dims.subset(keep), std::move(reduced));
}

std::vector<double> measurement_probabilities(const DensityOperator& rho,
                                              const std::vector<ComplexMatrix>& projectors) {
    if (projectors.empty())
        throw std::invalid_argument("projector set must be nonempty");
    const int d = rho.matrix.rows();
    ComplexMatrix sum(d, d);
    for (const auto& p : projectors) {
        if (!p.is_square() || p.rows() != d)
            throw std::invalid_argument("projector dimension mismatch");
        if (!is_hermitian(p, 1e-9))
            throw std::invalid_argument("projectors must be Hermitian");
        if (max_abs_diff(p * p, p) > 1e-9)
            throw std::invalid_argument("projectors must be idempotent");
        sum = sum + p;
    }
    if (max_abs_diff(sum, ComplexMatrix::identity(d)) > 1e-9)
        throw std::invalid_argument("projector set must sum to the identity (tolerance 1e-9)");

    std::vector<double> probs;
    probs.reserve(projectors.size());
    for (const auto& p : projectors)
        probs.push_back(trace(p * rho.matrix).real());
    return probs;
}

PureState singlet() {
    const double r = 1.0 / std::sqrt(2.0);
    DimensionSpec dims({{"s1", 2}, {"s2", 2}});
    // basis {uu, ud, du, dd}
    return make_pure_state(dims, {0.0, r, -r, 0.0});
}

PureState greenberger_initial() {
    const double r = 1.0 / std::sqrt(2.0);
    DimensionSpec dims({{"p1", 2}, {"p2", 2}});
    // basis {aa', ab', ba', bb'}
    return make_pure_state(dims, {r, 0.0, 0.0, r});
}

PureState greenberger_predetector(double alpha, double beta) {
    DimensionSpec dims({{"p1", 2}, {"p2", 2}, {"S", 2}});
    // basis order (p1, p2, S) with p1 {h,g}, p2 {c',d'}, S {u,v}
    CVec amp(8, Complex(0.0, 0.0));
    auto at = [&](int p1, int p2, int s) -> Complex& { return amp[4 * p1 + 2 * p2 + s]; };
    at(0, 1, 0) = -0.5 * phase_factor(alpha + beta);  // h d' u
    at(1, 0, 0) = 0.5 * phase_factor(beta - alpha);   // g c' u
    at(1, 0, 1) = 0.5 * phase_factor(alpha - beta);   // g c' v
    at(0, 1, 1) = -0.5 * phase_factor(-alpha - beta); // h d' v
    return make_pure_state(dims, std::move(amp));
}

ComplexMatrix pauli_x() { return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix pauli_y() { return ComplexMatrix{{0.0, -kI}, {kI, 0.0}}; }
ComplexMatrix pauli_z() { return ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}; }

std::vector<ComplexMatrix> spin_axis_projectors(double gamma) {
    // sigma.d for d = (cos g, sin g, 0) is [[0, e^{-ig}], [e^{ig}, 0]].
    const ComplexMatrix sigma_d{{0.0, phase_factor(-gamma)}, {phase_factor(gamma), 0.0}};
    const ComplexMatrix id = ComplexMatrix::identity(2);
    return {0.5 * (id + sigma_d), 0.5 * (id - sigma_d)};
}

} // namespace nosig
