#pragma once

#include <complex>
#define LAPACK_COMPLEX_CUSTOM
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <cblas.h>
#include <lapacke.h>

#include <cmath>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skewjue {

// Dense row-major complex matrix, the one shape the LAPACK bridge needs.
struct ComplexMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::complex<double>> data;

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    std::complex<double>& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const std::complex<double>& operator()(std::size_t i, std::size_t j) const {
        return data[i * cols + j];
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& z : data) m = std::max(m, std::abs(z));
        return m;
    }

    // max |H_ij - conj(H_ji)|; zero for exactly Hermitian input.
    double hermitian_defect() const {
        double m = 0.0;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = i; j < cols; ++j)
                m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return m;
    }
};

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("ComplexMatrix: shape mismatch in addition");
    ComplexMatrix c = a;
    for (std::size_t i = 0; i < c.data.size(); ++i) c.data[i] += b.data[i];
    return c;
}

inline ComplexMatrix operator*(double s, const ComplexMatrix& a) {
    ComplexMatrix c = a;
    for (auto& z : c.data) z *= s;
    return c;
}

inline ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("multiply: inner dimensions differ");
    ComplexMatrix c(a.rows, b.cols);
    const std::complex<double> one(1.0, 0.0), zero(0.0, 0.0);
    cblas_zgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans, static_cast<int>(a.rows),
                static_cast<int>(b.cols), static_cast<int>(a.cols), &one, a.data.data(),
                static_cast<int>(a.cols), b.data.data(), static_cast<int>(b.cols), &zero,
                c.data.data(), static_cast<int>(c.cols));
    return c;
}

// W = A^* A, Hermitian positive semidefinite of size cols x cols. Only the
// upper triangle comes from the rank-k update; the mirror fill makes the
// result exactly Hermitian.
inline ComplexMatrix gram(const ComplexMatrix& a) {
    ComplexMatrix w(a.cols, a.cols);
    cblas_zherk(CblasRowMajor, CblasUpper, CblasConjTrans, static_cast<int>(a.cols),
                static_cast<int>(a.rows), 1.0, a.data.data(), static_cast<int>(a.cols), 0.0,
                w.data.data(), static_cast<int>(w.cols));
    for (std::size_t i = 0; i < w.rows; ++i) {
        w(i, i) = std::complex<double>(w(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < w.cols; ++j) w(j, i) = std::conj(w(i, j));
    }
    return w;
}

struct HermitianEig {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column j pairs with values[j]; empty without vectors
};

namespace detail {

inline std::string matrix_brief(const ComplexMatrix& h) {
    std::ostringstream os;
    os << h.rows << "x" << h.cols << ", max|entry| = " << h.max_abs();
    if (h.rows <= 6) {
        os << ", entries:";
        for (std::size_t i = 0; i < h.rows; ++i)
            for (std::size_t j = 0; j < h.cols; ++j)
                os << " (" << h(i, j).real() << "," << h(i, j).imag() << ")";
    }
    return os.str();
}

}  // namespace detail

inline void require_hermitian(const ComplexMatrix& h, double rel_tol = 1e-10) {
    if (h.rows != h.cols) throw std::invalid_argument("require_hermitian: not square");
    if (h.hermitian_defect() > rel_tol * std::max(1.0, h.max_abs()))
        throw std::invalid_argument("require_hermitian: defect above tolerance");
}

inline HermitianEig hermitian_eig(const ComplexMatrix& h, bool with_vectors = true) {
    require_hermitian(h);
    HermitianEig out;
    out.values.resize(h.rows);
    ComplexMatrix work = h;
    int info = LAPACKE_zheevd(LAPACK_ROW_MAJOR, with_vectors ? 'V' : 'N', 'U',
                              static_cast<int>(h.rows), work.data.data(),
                              static_cast<int>(h.cols), out.values.data());
    if (info != 0)
        throw std::runtime_error("hermitian_eig: zheevd failed, info = " + std::to_string(info) +
                                 " on " + detail::matrix_brief(h));
    if (with_vectors) out.vectors = std::move(work);
    return out;
}

// Eigenvalues (ascending) of the definite pencil A v = lambda B v with A
// Hermitian and B Hermitian positive definite; the entries of A and B are
// consumed. Used for spectra of B^{-1/2} A B^{-1/2} without forming it.
inline std::vector<double> definite_pencil_eigenvalues(ComplexMatrix a, ComplexMatrix b) {
    if (a.rows != a.cols || b.rows != b.cols || a.rows != b.rows)
        throw std::invalid_argument("definite_pencil_eigenvalues: shape mismatch");
    std::vector<double> values(a.rows);
    int info = LAPACKE_zhegvd(LAPACK_ROW_MAJOR, 1, 'N', 'U', static_cast<int>(a.rows),
                              a.data.data(), static_cast<int>(a.cols), b.data.data(),
                              static_cast<int>(b.cols), values.data());
    if (info != 0)
        throw std::runtime_error("definite_pencil_eigenvalues: zhegvd failed, info = " +
                                 std::to_string(info) + " on " + detail::matrix_brief(b));
    return values;
}

// W^{-1/2} through the spectral decomposition; W must be Hermitian positive
// definite in the numerical sense min eig > rel_tol * max eig, otherwise a
// runtime_error reports near-singularity so callers can resample.
inline ComplexMatrix inverse_sqrt_psd(const ComplexMatrix& w, double rel_tol = 1e-13) {
    HermitianEig eig = hermitian_eig(w, true);
    double top = eig.values.empty() ? 0.0 : eig.values.back();
    if (top <= 0.0 || eig.values.front() <= rel_tol * top)
        throw std::runtime_error("inverse_sqrt_psd: matrix is numerically singular");
    ComplexMatrix scaled = eig.vectors;  // columns v_j / sqrt(e_j)
    for (std::size_t i = 0; i < scaled.rows; ++i)
        for (std::size_t j = 0; j < scaled.cols; ++j)
            scaled(i, j) /= std::sqrt(eig.values[j]);
    ComplexMatrix out(w.rows, w.cols);
    const std::complex<double> one(1.0, 0.0), zero(0.0, 0.0);
    cblas_zgemm(CblasRowMajor, CblasNoTrans, CblasConjTrans, static_cast<int>(w.rows),
                static_cast<int>(w.cols), static_cast<int>(w.cols), &one, scaled.data.data(),
                static_cast<int>(scaled.cols), eig.vectors.data.data(),
                static_cast<int>(eig.vectors.cols), &zero, out.data.data(),
                static_cast<int>(out.cols));
    return out;
}

inline ComplexMatrix delete_last_row_col(const ComplexMatrix& h) {
    if (h.rows != h.cols || h.rows == 0)
        throw std::invalid_argument("delete_last_row_col: need a nonempty square matrix");
    ComplexMatrix m(h.rows - 1, h.cols - 1);
    for (std::size_t i = 0; i + 1 < h.rows; ++i)
        for (std::size_t j = 0; j + 1 < h.cols; ++j) m(i, j) = h(i, j);
    return m;
}

// Spectrum of a symmetric tridiagonal matrix plus the first component of each
// normalized eigenvector, which is all Golub-Welsch quadrature needs.
struct TridiagEig {
    std::vector<double> values;            // ascending
    std::vector<double> first_components;  // matching order
};

inline TridiagEig tridiagonal_eig(std::vector<double> diag, std::vector<double> offdiag) {
    const std::size_t n = diag.size();
    if (n == 0 || offdiag.size() + 1 != n)
        throw std::invalid_argument("tridiagonal_eig: offdiagonal must have size n - 1");
    std::vector<double> z(n * n);
    int info = LAPACKE_dstevd(LAPACK_ROW_MAJOR, 'V', static_cast<int>(n), diag.data(),
                              offdiag.data(), z.data(), static_cast<int>(n));
    if (info != 0)
        throw std::runtime_error("tridiagonal_eig: dstevd failed, info = " + std::to_string(info));
    TridiagEig out;
    out.values = std::move(diag);
    out.first_components.resize(n);
    for (std::size_t j = 0; j < n; ++j) out.first_components[j] = z[j];
    return out;
}

}  // namespace skewjue
