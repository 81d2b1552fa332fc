#include "pcmbem/dense_matrix.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "pcmbem/errors.hpp"

namespace pcm {

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

std::vector<double> matvec(const DenseMatrix& m, const std::vector<double>& x) {
    if (x.size() != m.cols) throw std::invalid_argument("matvec dimension mismatch");
    std::vector<double> y(m.rows, 0.0);
    for (std::size_t i = 0; i < m.rows; ++i) {
        const double* row = &m.data[i * m.cols];
        double acc = 0.0;
        for (std::size_t j = 0; j < m.cols; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
    return y;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matmul dimension mismatch");
    DenseMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            double aik = a(i, k);
            for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
        }
    std::uint64_t n = static_cast<std::uint64_t>(a.rows) * a.cols * b.cols;
    c.assembly_flops.tally(n, n);
    return c;
}

double max_abs(const DenseMatrix& m) {
    double best = 0.0;
    for (double v : m.data) best = std::max(best, std::abs(v));
    return best;
}

double frobenius_norm(const DenseMatrix& m) {
    double acc = 0.0;
    for (double v : m.data) acc += v * v;
    return std::sqrt(acc);
}

void write_matrix_binary(std::ostream& out, const DenseMatrix& m) {
    std::uint64_t dims[2] = {m.rows, m.cols};
    out.write(reinterpret_cast<const char*>(dims), sizeof(dims));
    out.write(reinterpret_cast<const char*>(m.data.data()),
              static_cast<std::streamsize>(m.data.size() * sizeof(double)));
}

DenseMatrix read_matrix_binary(std::istream& in) {
    std::uint64_t dims[2];
    in.read(reinterpret_cast<char*>(dims), sizeof(dims));
    if (!in) throw ParseError("matrix binary: truncated header");
    DenseMatrix m(dims[0], dims[1]);
    in.read(reinterpret_cast<char*>(m.data.data()),
            static_cast<std::streamsize>(m.data.size() * sizeof(double)));
    if (!in) throw ParseError("matrix binary: truncated payload");
    return m;
}

void write_matrix_csv(std::ostream& out, const DenseMatrix& m) {
    char buf[64];
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
            out << buf << (j + 1 == m.cols ? "\n" : ",");
        }
    }
}

} // namespace pcm
