#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace spinboost::linalg {

using Complex = std::complex<double>;

// Dense row-major complex matrix. Everything in this project is at most 4x4,
// so storage is a plain vector and operations are written for clarity.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols,
                  std::initializer_list<Complex> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix column(std::initializer_list<Complex> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    Complex trace() const;

    double frobenius_norm() const;
    double max_abs() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(Complex s);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex s);
ComplexMatrix operator*(double s, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, double s);

// <a|b> for column vectors of equal length.
Complex inner(const ComplexMatrix& a, const ComplexMatrix& b);
// |a><b|
ComplexMatrix outer(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix projector(const ComplexMatrix& ket);

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

// Trace out the first factor of a (2m x 2m) bipartite operator on C^m (x) C^2,
// leaving the 2x2 operator on the second slot. The first (slow) index is the
// one being summed.
ComplexMatrix partial_trace_first(const ComplexMatrix& m);

struct EigenSystem {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // unit eigenvectors as columns, same order
};

// Cyclic complex Jacobi diagonalization. Input is symmetrized as (M + M^dag)/2;
// intended for the small Hermitian matrices this project produces.
EigenSystem hermitian_eig(const ComplexMatrix& m);

// Hermitian PSD square root via the spectral decomposition. Eigenvalues in
// [-1e-8, 0) are clamped to zero; anything below that raises.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

// Validated density matrix: square, Hermitian to 1e-12, unit trace to 1e-12,
// smallest eigenvalue >= -1e-12. Returns the symmetrized copy.
ComplexMatrix make_density(const ComplexMatrix& m);

const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();

}  // namespace spinboost::linalg
