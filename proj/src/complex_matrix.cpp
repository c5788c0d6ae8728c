#include "nosig/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace nosig {

namespace {

void require(bool ok, const char* msg) {
    if (!ok)
        throw std::invalid_argument(msg);
}

} // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, Complex(0.0, 0.0)) {
    require(rows > 0 && cols > 0, "matrix dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(int rows, int cols, CVec entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    require(rows > 0 && cols > 0, "matrix dimensions must be positive");
    require(data_.size() == static_cast<size_t>(rows) * cols,
            "entry count does not match rows*cols");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = static_cast<int>(rows.size());
    require(rows_ > 0, "matrix dimensions must be positive");
    cols_ = static_cast<int>(rows.begin()->size());
    require(cols_ > 0, "matrix dimensions must be positive");
    data_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        require(static_cast<int>(r.size()) == cols_, "ragged initializer rows");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::zero(int rows, int cols) { return ComplexMatrix(rows, cols); }

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "shape mismatch in matrix addition");
    ComplexMatrix out(a.rows(), a.cols());
    for (size_t i = 0; i < a.entries().size(); ++i)
        out.entries()[i] = a.entries()[i] + b.entries()[i];
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "shape mismatch in matrix subtraction");
    ComplexMatrix out(a.rows(), a.cols());
    for (size_t i = 0; i < a.entries().size(); ++i)
        out.entries()[i] = a.entries()[i] - b.entries()[i];
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.cols() == b.rows(), "shape mismatch in matrix product");
    ComplexMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0))
                continue;
            for (int j = 0; j < b.cols(); ++j)
                out(i, j) += aik * b(k, j);
        }
    return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
    ComplexMatrix out(a.rows(), a.cols());
    for (size_t i = 0; i < a.entries().size(); ++i)
        out.entries()[i] = s * a.entries()[i];
    return out;
}

ComplexMatrix operator*(double s, const ComplexMatrix& a) { return Complex(s, 0.0) * a; }

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out(j, i) = std::conj(a(i, j));
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex(0.0, 0.0))
                continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

Complex trace(const ComplexMatrix& a) {
    require(a.is_square(), "trace requires a square matrix");
    Complex t(0.0, 0.0);
    for (int i = 0; i < a.rows(); ++i)
        t += a(i, i);
    return t;
}

CVec mat_vec(const ComplexMatrix& a, const CVec& v) {
    require(a.cols() == static_cast<int>(v.size()), "shape mismatch in matrix-vector product");
    CVec out(static_cast<size_t>(a.rows()), Complex(0.0, 0.0));
    for (int i = 0; i < a.rows(); ++i) {
        Complex s(0.0, 0.0);
        for (int j = 0; j < a.cols(); ++j)
            s += a(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

ComplexMatrix outer(const CVec& a, const CVec& b) {
    ComplexMatrix out(static_cast<int>(a.size()), static_cast<int>(b.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out(static_cast<int>(i), static_cast<int>(j)) = a[i] * std::conj(b[j]);
    return out;
}

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const auto& z : a.entries())
        m = std::max(m, std::abs(z));
    return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "shape mismatch in matrix comparison");
    double m = 0.0;
    for (size_t i = 0; i < a.entries().size(); ++i)
        m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
    return m;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const auto& z : a.entries())
        s += std::norm(z);
    return std::sqrt(s);
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
    if (!a.is_square())
        return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i; j < a.cols(); ++j)
            if (std::abs(a(i, j) - std::conj(a(j, i))) > tol)
                return false;
    return true;
}

bool all_finite(const ComplexMatrix& a) { return all_finite(a.entries()); }

bool all_finite(const CVec& v) {
    for (const auto& z : v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            return false;
    return true;
}

double vec_norm(const CVec& v) {
    double s = 0.0;
    for (const auto& z : v)
        s += std::norm(z);
    return std::sqrt(s);
}

Complex inner(const CVec& a, const CVec& b) {
    require(a.size() == b.size(), "shape mismatch in inner product");
    Complex s(0.0, 0.0);
    for (size_t i = 0; i < a.size(); ++i)
        s += std::conj(a[i]) * b[i];
    return s;
}

double phase_aligned_max_diff(const CVec& x, const CVec& y) {
    require(x.size() == y.size(), "shape mismatch in phase-aligned comparison");
    Complex c = inner(y, x);
    Complex phase(1.0, 0.0);
    if (std::abs(c) > 1e-14)
        phase = c / std::abs(c);
    double m = 0.0;
    for (size_t i = 0; i < x.size(); ++i)
        m = std::max(m, std::abs(x[i] - phase * y[i]));
    return m;
}

} // namespace nosig
