#include "nosig/no_signaling.hpp"

#include "nosig/hermitian_eigen.hpp"

#include <cmath>
#include <stdexcept>

namespace nosig {

namespace {

const Complex kI(0.0, 1.0);

double uniform01(std::mt19937_64& rng) {
    // 53 random bits; avoids the implementation-defined std distributions
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

ObstructionReport marginal_obstruction(const TargetTransform& t) {
    if (!(t.input.dims == t.output.dims))
        throw std::invalid_argument("transform input and output must share one dimension spec");
    if (t.input.dims.count() < 2)
        throw std::invalid_argument("transform requires a bipartite space");

    const std::vector<std::string> keep{t.input.dims.label(0)};
    const DensityOperator in_marginal = reduced_state(pure_to_density(t.input), keep);
    const DensityOperator out_marginal = reduced_state(pure_to_density(t.output), keep);

    ObstructionReport report;
    report.marginal_distance = max_abs_diff(in_marginal.matrix, out_marginal.matrix);
    report.achievable_deterministically = report.marginal_distance <= 1e-9;
    report.note = report.achievable_deterministically
                      ? "remote marginal unchanged; no obstruction from this test"
                      : "remote marginal differs; no deterministic local operation on the "
                        "other factor can realize this transform";
    return report;
}

TargetTransform make_collapse_transform(Complex a1, Complex a2, double gamma, double eta,
                                        int dx, int dy) {
    if (dx < 2 || dy < 2)
        throw std::invalid_argument("collapse transform needs both factors of dimension >= 2");
    const double norm2 = std::norm(a1) + std::norm(a2);
    if (std::abs(norm2 - 1.0) > kNormTol)
        throw std::invalid_argument("coefficients must satisfy |a1|^2 + |a2|^2 = 1");

    DimensionSpec dims({{"X", dx}, {"Y", dy}});
    CVec in(static_cast<size_t>(dx) * dy, Complex(0.0, 0.0));
    in[0] = a1;          // |0>|0>
    in[dy + 1] = a2;     // |1>|1>

    const Complex ph_eta(std::cos(eta), std::sin(eta));
    const Complex ph_gamma(std::cos(gamma), std::sin(gamma));
    CVec out(static_cast<size_t>(dx) * dy, Complex(0.0, 0.0));
    out[1] = ph_eta * a1;                // |0>|1>
    out[dy + 1] = ph_eta * ph_gamma * a2; // |1>|1>

    return TargetTransform{make_pure_state(dims, std::move(in)),
                           make_pure_state(dims, std::move(out))};
}

double gaussian(std::mt19937_64& rng) {
    double u1 = uniform01(rng);
    while (u1 <= 0.0)
        u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::acos(-1.0) * u2);
}

ComplexMatrix gaussian_matrix(int rows, int cols, std::mt19937_64& rng) {
    ComplexMatrix m(rows, cols);
    for (auto& z : m.entries())
        z = Complex(gaussian(rng), gaussian(rng));
    return m;
}

PureState random_pure_state(const DimensionSpec& dims, std::mt19937_64& rng) {
    CVec amp(static_cast<size_t>(dims.total()));
    double n = 0.0;
    while (n < 1e-6) {
        for (auto& z : amp)
            z = Complex(gaussian(rng), gaussian(rng));
        n = vec_norm(amp);
    }
    for (auto& z : amp)
        z /= n;
    return make_pure_state(dims, std::move(amp));
}

ComplexMatrix random_unitary(int dim, std::mt19937_64& rng) {
    // Gram-Schmidt on a Gaussian matrix
    ComplexMatrix g = gaussian_matrix(dim, dim, rng);
    for (int c = 0; c < dim; ++c) {
        for (int prev = 0; prev < c; ++prev) {
            Complex overlap(0.0, 0.0);
            for (int r = 0; r < dim; ++r)
                overlap += std::conj(g(r, prev)) * g(r, c);
            for (int r = 0; r < dim; ++r)
                g(r, c) -= overlap * g(r, prev);
        }
        double n = 0.0;
        for (int r = 0; r < dim; ++r)
            n += std::norm(g(r, c));
        n = std::sqrt(n);
        for (int r = 0; r < dim; ++r)
            g(r, c) /= n;
    }
    return g;
}

KrausChannel random_deterministic_channel(int dim, int n_operators, std::mt19937_64& rng) {
    if (n_operators < 1)
        throw std::invalid_argument("channel needs at least one Kraus operator");
    while (true) {
        std::vector<ComplexMatrix> ops;
        ops.reserve(n_operators);
        ComplexMatrix sum(dim, dim);
        for (int i = 0; i < n_operators; ++i) {
            ops.push_back(gaussian_matrix(dim, dim, rng));
            sum = sum + adjoint(ops.back()) * ops.back();
        }
        const ComplexMatrix sym = 0.5 * (sum + adjoint(sum));
        if (hermitian_eigenvalues(sym).front() < 1e-10)
            continue; // resample the degenerate draw
        const ComplexMatrix norm = psd_inv_sqrt(sym);
        for (auto& a : ops)
            a = a * norm;
        return make_kraus_channel(std::move(ops), ChannelKind::deterministic);
    }
}

double fuzz_no_signaling(std::uint64_t seed, int trials, const DimensionSpec& dims) {
    return fuzz_no_signaling(seed, trials, dims, [](int dim, std::mt19937_64& rng) {
        const int n_ops = 1 + static_cast<int>(rng() % 4);
        return random_deterministic_channel(dim, n_ops, rng);
    });
}

double fuzz_no_signaling(std::uint64_t seed, int trials, const DimensionSpec& dims,
                         const ChannelSource& channel_source) {
    if (trials < 1)
        throw std::invalid_argument("trials must be >= 1");
    if (dims.count() != 2)
        throw std::invalid_argument("fuzzer runs on bipartite dimension specs");

    const std::string remote = dims.label(0);
    const std::string local = dims.label(1);
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        // sub-seed by counter; seed_seq consumes 32-bit words
        std::seed_seq sseq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                           static_cast<std::uint32_t>(t)};
        std::mt19937_64 rng(sseq);

        const DensityOperator rho = pure_to_density(random_pure_state(dims, rng));
        const KrausChannel ch = channel_source(dims.dim(1), rng);

        const DensityOperator before = reduced_state(rho, {remote});
        const DensityOperator after =
            reduced_state(apply_deterministic(ch, rho, local), {remote});
        worst = std::max(worst, max_abs_diff(before.matrix, after.matrix));
    }
    return worst;
}

} // namespace nosig
