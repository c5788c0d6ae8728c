#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace nosig {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

/// Dense row-major complex matrix. The universal carrier for states,
/// operators and channels in this library; dimensions are always explicit
/// and there is no implicit broadcasting.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols);
    ComplexMatrix(int rows, int cols, CVec entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(int n);
    static ComplexMatrix zero(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Complex& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    const CVec& entries() const { return data_; }
    CVec& entries() { return data_; }

  private:
    int rows_ = 0;
    int cols_ = 0;
    CVec data_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
ComplexMatrix operator*(double s, const ComplexMatrix& a);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

/// Kronecker product; dimensions multiply.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

Complex trace(const ComplexMatrix& a);

CVec mat_vec(const ComplexMatrix& a, const CVec& v);

/// |a><b| for amplitude vectors a, b.
ComplexMatrix outer(const CVec& a, const CVec& b);

double max_abs(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a, double tol);
bool all_finite(const ComplexMatrix& a);
bool all_finite(const CVec& v);

double vec_norm(const CVec& v);
Complex inner(const CVec& a, const CVec& b); // <a|b>

/// Largest |x_i - phase * y_i| after aligning y to x with the L2-optimal
/// global phase. Zero (up to roundoff) iff the vectors agree up to a
/// global phase.
double phase_aligned_max_diff(const CVec& x, const CVec& y);

} // namespace nosig
