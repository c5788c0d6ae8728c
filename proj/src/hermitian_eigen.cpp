#include "nosig/hermitian_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace nosig {

namespace {

double off_diagonal_mass(const ComplexMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j)
                s += std::norm(a(i, j));
    return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a(p,q). The pivot block
// [[a_pp, a_pq], [conj(a_pq), a_qq]] is reduced to the real symmetric case
// by factoring out the phase of a_pq, then rotated with the classic
// smaller-root tangent choice.
void rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
    const Complex apq = a(p, q);
    const double r = std::abs(apq);
    if (r == 0.0)
        return;
    const Complex phase = apq / r;

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * r);
    double t;
    if (tau >= 0.0)
        t = 1.0 / (tau + std::hypot(1.0, tau));
    else
        t = -1.0 / (-tau + std::hypot(1.0, tau));
    const double c = 1.0 / std::hypot(1.0, t);
    const double s = t * c;

    // Unitary on the (p,q) plane: column p <- c*p - conj(sp)*q,
    // column q <- sp*p + c*q, with sp = s * phase.
    const Complex sp = s * phase;

    const int n = a.rows();
    for (int k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = c * akp - std::conj(sp) * akq;
        a(k, q) = sp * akp + c * akq;
    }
    for (int k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = c * apk - sp * aqk;
        a(q, k) = std::conj(sp) * apk + c * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = Complex(a(p, p).real(), 0.0);
    a(q, q) = Complex(a(q, q).real(), 0.0);

    for (int k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = c * vkp - std::conj(sp) * vkq;
        v(k, q) = sp * vkp + c * vkq;
    }
}

HermitianEigenSystem jacobi(const ComplexMatrix& m) {
    if (!m.is_square())
        throw std::invalid_argument("eigensolver requires a square matrix");
    if (!is_hermitian(m, kHermitianTol))
        throw std::invalid_argument("eigensolver requires a Hermitian matrix (tolerance 1e-10)");

    const int n = m.rows();
    // Symmetrize to suppress the sub-tolerance drift the input may carry.
    ComplexMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

    ComplexMatrix v = ComplexMatrix::identity(n);
    const double target = 1e-12 * std::max(1.0, frobenius_norm(a));
    const int max_sweeps = 64;
    int sweep = 0;
    while (off_diagonal_mass(a) > target) {
        if (++sweep > max_sweeps)
            throw std::runtime_error("Jacobi eigensolver failed to converge");
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q)
                rotate(a, v, p, q);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return a(x, x).real() < a(y, y).real(); });

    HermitianEigenSystem sys;
    sys.values.resize(n);
    sys.vectors = ComplexMatrix(n, n);
    for (int k = 0; k < n; ++k) {
        sys.values[k] = a(order[k], order[k]).real();
        for (int i = 0; i < n; ++i)
            sys.vectors(i, k) = v(i, order[k]);
    }
    return sys;
}

} // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) { return jacobi(m).values; }

HermitianEigenSystem hermitian_eigensystem(const ComplexMatrix& m) { return jacobi(m); }

ComplexMatrix psd_sqrt(const ComplexMatrix& m, double negative_clamp) {
    HermitianEigenSystem sys = hermitian_eigensystem(m);
    const int n = m.rows();
    // sqrt amplifies roundoff near zero; snap eigenvalues that are zero at
    // working precision so exact kernels stay exact
    double scale = 0.0;
    for (double v : sys.values)
        scale = std::max(scale, std::abs(v));
    ComplexMatrix out(n, n);
    for (int k = 0; k < n; ++k) {
        double lam = sys.values[k];
        if (lam < -negative_clamp)
            throw std::invalid_argument("matrix is not positive semidefinite");
        lam = lam < 1e-12 * scale ? 0.0 : lam;
        const double root = std::sqrt(lam);
        if (root == 0.0)
            continue;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out(i, j) += root * sys.vectors(i, k) * std::conj(sys.vectors(j, k));
    }
    return out;
}

ComplexMatrix psd_inv_sqrt(const ComplexMatrix& m, double min_eigenvalue) {
    HermitianEigenSystem sys = hermitian_eigensystem(m);
    const int n = m.rows();
    ComplexMatrix out(n, n);
    for (int k = 0; k < n; ++k) {
        const double lam = sys.values[k];
        if (lam < min_eigenvalue)
            throw std::invalid_argument("matrix is numerically singular");
        const double root = 1.0 / std::sqrt(lam);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out(i, j) += root * sys.vectors(i, k) * std::conj(sys.vectors(j, k));
    }
    return out;
}

} // namespace nosig
