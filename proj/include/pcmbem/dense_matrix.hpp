#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "pcmbem/flops.hpp"

namespace pcm {

// Row-major dense matrix with the flop ledger of its assembly attached.
struct DenseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;
    FlopLedger assembly_flops;

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    static DenseMatrix identity(std::size_t n);
};

// y = M x
std::vector<double> matvec(const DenseMatrix& m, const std::vector<double>& x);

// A * B, charging 2*rows*cols*inner flops to the result's ledger.
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

double max_abs(const DenseMatrix& m);
double frobenius_norm(const DenseMatrix& m);

// Little-endian binary layout: u64 rows, u64 cols, then row-major f64.
void write_matrix_binary(std::ostream& out, const DenseMatrix& m);
DenseMatrix read_matrix_binary(std::istream& in);

void write_matrix_csv(std::ostream& out, const DenseMatrix& m);

} // namespace pcm
