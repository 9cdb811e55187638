#include "spinboost/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace spinboost::linalg {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::initializer_list<Complex> entries)
    : rows_(rows), cols_(cols), data_(entries) {
    if (data_.size() != rows * cols)
        throw std::invalid_argument("entry count does not match matrix shape");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::column(std::initializer_list<Complex> entries) {
    return ComplexMatrix(entries.size(), 1, entries);
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
    return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(r, c) = std::conj((*this)(r, c));
    return m;
}

Complex ComplexMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of a non-square matrix");
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex& z : data_) m = std::max(m, std::abs(z));
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch in +=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch in -=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (Complex& z : data_) z *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in *");
    ComplexMatrix m(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex arK = a(r, k);
            if (arK == Complex{}) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) m(r, c) += arK * b(k, c);
        }
    return m;
}

ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }
ComplexMatrix operator*(double s, ComplexMatrix m) { return m *= Complex(s); }
ComplexMatrix operator*(ComplexMatrix m, double s) { return m *= Complex(s); }

Complex inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != 1 || b.cols() != 1 || a.rows() != b.rows())
        throw std::invalid_argument("inner product expects equal-length column vectors");
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += std::conj(a(i, 0)) * b(i, 0);
    return s;
}

ComplexMatrix outer(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != 1 || b.cols() != 1)
        throw std::invalid_argument("outer product expects column vectors");
    ComplexMatrix m(a.rows(), b.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < b.rows(); ++c)
            m(r, c) = a(r, 0) * std::conj(b(c, 0));
    return m;
}

ComplexMatrix projector(const ComplexMatrix& ket) { return outer(ket, ket); }

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar)
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const Complex z = a(ar, ac);
            if (z == Complex{}) continue;
            for (std::size_t br = 0; br < b.rows(); ++br)
                for (std::size_t bc = 0; bc < b.cols(); ++bc)
                    m(ar * b.rows() + br, ac * b.cols() + bc) = z * b(br, bc);
        }
    return m;
}

ComplexMatrix partial_trace_first(const ComplexMatrix& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0)
        throw std::invalid_argument("partial trace expects a square matrix on C^m (x) C^2");
    const std::size_t blocks = m.rows() / 2;
    ComplexMatrix out(2, 2);
    for (std::size_t k = 0; k < blocks; ++k)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                out(i, j) += m(2 * k + i, 2 * k + j);
    return out;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& h) {
    double s = 0.0;
    for (std::size_t r = 0; r < h.rows(); ++r)
        for (std::size_t c = 0; c < h.cols(); ++c)
            if (r != c) s += std::norm(h(r, c));
    return std::sqrt(s);
}

// One complex Jacobi rotation zeroing h(p,q). The rotation
//   V(p,p) = cos t, V(p,q) = -sin t e^{i phi}, V(q,p) = sin t e^{-i phi},
//   V(q,q) = cos t, with phi = arg h(p,q),
// is applied as h <- V^dag h V and accumulated into vecs.
void jacobi_rotate(ComplexMatrix& h, ComplexMatrix& vecs, std::size_t p, std::size_t q) {
    const Complex hpq = h(p, q);
    const double b = std::abs(hpq);
    if (b < 1e-300) return;
    const Complex phase = hpq / b;  // e^{i phi}

    const double a = h(p, p).real();
    const double d = h(q, q).real();
    double t;  // tan of the rotation angle, |t| <= 1
    if (a == d) {
        t = 1.0;
    } else {
        const double zeta = (a - d) / (2.0 * b);
        t = ((zeta >= 0.0) ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::size_t n = h.rows();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex hkp = h(k, p);
        const Complex hkq = h(k, q);
        h(k, p) = c * hkp + s * std::conj(phase) * hkq;
        h(k, q) = c * hkq - s * phase * hkp;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex hpk = h(p, k);
        const Complex hqk = h(q, k);
        h(p, k) = c * hpk + s * phase * hqk;
        h(q, k) = c * hqk - s * std::conj(phase) * hpk;
    }
    h(p, q) = 0.0;
    h(q, p) = 0.0;
    h(p, p) = Complex(h(p, p).real(), 0.0);
    h(q, q) = Complex(h(q, q).real(), 0.0);

    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = vecs(k, p);
        const Complex vkq = vecs(k, q);
        vecs(k, p) = c * vkp + s * std::conj(phase) * vkq;
        vecs(k, q) = c * vkq - s * phase * vkp;
    }
}

}  // namespace

EigenSystem hermitian_eig(const ComplexMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw std::invalid_argument("hermitian_eig expects a non-empty square matrix");
    const std::size_t n = m.rows();

    ComplexMatrix h = 0.5 * (m + m.adjoint());
    ComplexMatrix vecs = ComplexMatrix::identity(n);

    const double tol = 1e-15 * std::max(1.0, h.frobenius_norm());
    for (int sweep = 0; sweep < 60 && off_diagonal_norm(h) > tol; ++sweep)
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(h, vecs, p, q);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return h(i, i).real() > h(j, j).real();
    });

    EigenSystem sys;
    sys.values.resize(n);
    sys.vectors = ComplexMatrix(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        sys.values[c] = h(order[c], order[c]).real();
        for (std::size_t r = 0; r < n; ++r) sys.vectors(r, c) = vecs(r, order[c]);
    }
    return sys;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
    EigenSystem sys = hermitian_eig(m);
    const std::size_t n = m.rows();
    ComplexMatrix root(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        double lam = sys.values[k];
        if (lam < -1e-8)
            throw std::runtime_error("psd_sqrt: matrix is not positive semidefinite");
        if (lam < 0.0) lam = 0.0;
        const double r = std::sqrt(lam);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                root(i, j) += r * sys.vectors(i, k) * std::conj(sys.vectors(j, k));
    }
    return root;
}

ComplexMatrix make_density(const ComplexMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw std::invalid_argument("density matrix must be square");
    if ((m - m.adjoint()).max_abs() > 1e-12)
        throw std::invalid_argument("density matrix must be Hermitian");
    ComplexMatrix rho = 0.5 * (m + m.adjoint());
    if (std::abs(rho.trace() - Complex(1.0)) > 1e-12)
        throw std::invalid_argument("density matrix must have unit trace");
    EigenSystem sys = hermitian_eig(rho);
    if (sys.values.back() < -1e-12)
        throw std::invalid_argument("density matrix must be positive semidefinite");
    return rho;
}

const ComplexMatrix& pauli_x() {
    static const ComplexMatrix s(2, 2, {0.0, 1.0, 1.0, 0.0});
    return s;
}

const ComplexMatrix& pauli_y() {
    static const ComplexMatrix s(2, 2, {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0});
    return s;
}

const ComplexMatrix& pauli_z() {
    static const ComplexMatrix s(2, 2, {1.0, 0.0, 0.0, -1.0});
    return s;
}

}  // namespace spinboost::linalg
