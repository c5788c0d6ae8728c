#include "nosig/channel.hpp"

#include "nosig/hermitian_eigen.hpp"

#include <cmath>
#include <stdexcept>

namespace nosig {

namespace {

ComplexMatrix completeness_sum(const KrausChannel& ch) {
    ComplexMatrix sum(ch.input_dim, ch.input_dim);
    for (const auto& a : ch.operators)
        sum = sum + adjoint(a) * a;
    return sum;
}

// Unnormalized image sum_i (I (x) A_i) rho (I (x) A_i^dag) on the party's
// factor; shared by the deterministic and selective paths.
ComplexMatrix embedded_image(const KrausChannel& ch, const DensityOperator& rho,
                             const std::string& party) {
    const int pos = rho.dims.index_of(party);
    if (rho.dims.dim(pos) != ch.input_dim || ch.input_dim != ch.output_dim)
        throw std::invalid_argument("channel dimension does not match party " + party);
    ComplexMatrix out(rho.matrix.rows(), rho.matrix.cols());
    for (const auto& a : ch.operators) {
        const ComplexMatrix k = embed_operator(rho.dims, party, a);
        out = out + k * rho.matrix * adjoint(k);
    }
    return out;
}

} // namespace

KrausChannel make_kraus_channel(std::vector<ComplexMatrix> operators, ChannelKind kind) {
    if (operators.empty())
        throw std::invalid_argument("channel needs at least one Kraus operator");
    const int out_dim = operators.front().rows();
    const int in_dim = operators.front().cols();
    for (const auto& a : operators) {
        if (a.rows() != out_dim || a.cols() != in_dim)
            throw std::invalid_argument("Kraus operators must share one shape");
        if (!all_finite(a))
            throw std::invalid_argument("Kraus operator entries must be finite");
    }
    return KrausChannel{in_dim, out_dim, std::move(operators), kind};
}

DensityOperator apply_deterministic(const KrausChannel& ch, const DensityOperator& rho,
                                    const std::string& party) {
    if (ch.kind != ChannelKind::deterministic)
        throw std::invalid_argument("apply_deterministic requires a deterministic channel");
    if (max_abs_diff(completeness_sum(ch), ComplexMatrix::identity(ch.input_dim)) > kChannelTol)
        throw std::invalid_argument("deterministic channel fails the completeness relation");
    return make_density_operator(rho.dims, embedded_image(ch, rho, party));
}

SelectiveResult apply_selective(const KrausChannel& ch, const DensityOperator& rho,
                                const std::string& party) {
    if (ch.kind != ChannelKind::probabilistic)
        throw std::invalid_argument("apply_selective requires a probabilistic channel");
    const ComplexMatrix slack =
        ComplexMatrix::identity(ch.input_dim) - completeness_sum(ch);
    if (hermitian_eigenvalues(0.5 * (slack + adjoint(slack))).front() < -kChannelTol)
        throw std::invalid_argument("probabilistic channel exceeds sub-normalization");
    ComplexMatrix image = embedded_image(ch, rho, party);
    const double p = trace(image).real();
    if (p <= 1e-12)
        throw std::domain_error("selective operation has vanishing success probability");
    return SelectiveResult{make_density_operator(rho.dims, (1.0 / p) * image), p};
}

ChannelReport validate_channel(const KrausChannel& ch) {
    ChannelReport report;
    const ComplexMatrix sum = completeness_sum(ch);
    const ComplexMatrix id = ComplexMatrix::identity(ch.input_dim);
    report.completeness_residual = max_abs_diff(sum, id);
    report.trace_preserving = report.completeness_residual <= kChannelTol;

    // sub-normalized: I - sum A^dag A is positive semidefinite
    const std::vector<double> slack = hermitian_eigenvalues(id - sum);
    report.sub_normalized = slack.front() >= -kChannelTol;

    const CpResult cp = is_completely_positive(ch.operators);
    report.completely_positive = cp.completely_positive;
    report.min_choi_eigenvalue = cp.min_choi_eigenvalue;
    return report;
}

ComplexMatrix choi_matrix(const std::vector<ComplexMatrix>& kraus_operators) {
    return choi_matrix(MatrixMap::from_kraus(kraus_operators));
}

ComplexMatrix choi_matrix(const MatrixMap& map) {
    const int din = map.input_dim;
    const int dout = map.output_dim;
    ComplexMatrix choi(din * dout, din * dout);
    for (int j = 0; j < din; ++j)
        for (int k = 0; k < din; ++k) {
            ComplexMatrix unit(din, din);
            unit(j, k) = 1.0;
            const ComplexMatrix block = map.apply(unit);
            if (block.rows() != dout || block.cols() != dout)
                throw std::invalid_argument("map output dimension mismatch");
            for (int r = 0; r < dout; ++r)
                for (int c = 0; c < dout; ++c)
                    choi(j * dout + r, k * dout + c) = block(r, c);
        }
    return choi;
}

MatrixMap MatrixMap::from_kraus(const std::vector<ComplexMatrix>& operators) {
    if (operators.empty())
        throw std::invalid_argument("map needs at least one Kraus operator");
    MatrixMap map;
    map.input_dim = operators.front().cols();
    map.output_dim = operators.front().rows();
    map.apply = [operators](const ComplexMatrix& x) {
        ComplexMatrix out(operators.front().rows(), operators.front().rows());
        for (const auto& a : operators)
            out = out + a * x * adjoint(a);
        return out;
    };
    return map;
}

CpResult is_completely_positive(const std::vector<ComplexMatrix>& kraus_operators) {
    return is_completely_positive(MatrixMap::from_kraus(kraus_operators));
}

CpResult is_completely_positive(const MatrixMap& map) {
    const ComplexMatrix choi = choi_matrix(map);
    // The Choi matrix of a Hermiticity-preserving map is Hermitian up to
    // roundoff; symmetrize before the eigensolve.
    const ComplexMatrix sym = 0.5 * (choi + adjoint(choi));
    const double min_eig = hermitian_eigenvalues(sym).front();
    return CpResult{min_eig >= -kChannelTol, min_eig};
}

GreenbergerMap greenberger_map(double gamma) {
    const Complex phase(std::cos(gamma), std::sin(gamma));
    // |u><u| + e^{ig}|u><v| in the {u, v} basis
    return GreenbergerMap{gamma, ComplexMatrix{{1.0, phase}, {0.0, 0.0}}};
}

KrausChannel complete_to_deterministic(const ComplexMatrix& k) {
    if (!k.is_square())
        throw std::invalid_argument("completion requires a square operator");
    const ComplexMatrix gap = ComplexMatrix::identity(k.rows()) - adjoint(k) * k;
    // psd_sqrt rejects eigenvalues below -1e-9, i.e. k^dag k above 1 + 1e-9.
    ComplexMatrix b = psd_sqrt(gap, kChannelTol);
    return make_kraus_channel({k, std::move(b)}, ChannelKind::deterministic);
}

double linearity_test(const ComplexMatrix& t, const DensityOperator& rho1,
                      const DensityOperator& rho2, double w) {
    if (!(w > 0.0) || !(w < 1.0))
        throw std::invalid_argument("mixture weight must lie in (0, 1)");
    if (!(rho1.dims == rho2.dims))
        throw std::invalid_argument("mixture inputs must share one dimension spec");
    auto normalized = [&](const ComplexMatrix& rho) {
        const ComplexMatrix image = t * rho * adjoint(t);
        const double tr = trace(image).real();
        if (tr <= 1e-12)
            throw std::domain_error("normalized rule is undefined on an annihilated input");
        return (1.0 / tr) * image;
    };
    const ComplexMatrix mixture = w * rho1.matrix + (1.0 - w) * rho2.matrix;
    const ComplexMatrix lhs = normalized(mixture);
    const ComplexMatrix rhs =
        w * normalized(rho1.matrix) + (1.0 - w) * normalized(rho2.matrix);
    return max_abs_diff(lhs, rhs);
}

} // namespace nosig
