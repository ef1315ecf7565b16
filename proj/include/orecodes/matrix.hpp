/*
   Copyright 2026 the orecodes authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ORECODES_MATRIX_HPP
#define ORECODES_MATRIX_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "orecodes/ring.hpp"

namespace orecodes {

/// A row vector over the coefficient ring.
using RowVector = std::vector<Residues>;

/// Dense row-major matrix over a coefficient ring.  Vectors are rows and
/// act on the left: all products in this library are row * matrix.
class MatrixA {
   public:
    MatrixA(RingPtr ring, std::size_t rows, std::size_t cols);  // zeros
    static MatrixA identity(const RingPtr& ring, std::size_t n);
    static MatrixA from_rows(RingPtr ring, std::vector<RowVector> rows);
    /// Rows separated by newlines, entries by '|', each entry a
    /// ring-element literal.
    static MatrixA parse(const RingPtr& ring, std::string_view text);

    const RingPtr& ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const Residues& entry(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, Residues value);
    RowVector row(std::size_t i) const;

    bool is_zero() const;
    bool is_square() const noexcept { return rows_ == cols_; }
    /// Entry-wise sigma / delta (used by the N_j matrix recursion).
    MatrixA map_sigma() const;
    MatrixA map_delta() const;

    std::string str() const;
    bool operator==(const MatrixA& other) const;
    bool operator!=(const MatrixA& other) const { return !(*this == other); }

   private:
    RingPtr ring_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Residues> entries_;  // row-major
};

std::ostream& operator<<(std::ostream& os, const MatrixA& m);

MatrixA mat_mul(const MatrixA& a, const MatrixA& b);
MatrixA mat_add(const MatrixA& a, const MatrixA& b);

/// Row vector times matrix: (v M)_j = sum_i v_i * M(i, j).  Left scalar
/// coefficients, consistent with left A-module conventions.
RowVector vec_mat_mul(const Ring& ring, const RowVector& v, const MatrixA& m);

// -- row-vector helpers ------------------------------------------------------
RowVector vec_zero(const Ring& ring, std::size_t n);
bool vec_is_zero(const Ring& ring, const RowVector& v);
RowVector vec_add(const Ring& ring, const RowVector& a, const RowVector& b);
RowVector vec_sub(const Ring& ring, const RowVector& a, const RowVector& b);
/// a * v, componentwise left multiplication.
RowVector vec_scale(const Ring& ring, const Residues& a, const RowVector& v);
RowVector vec_sigma(const Ring& ring, const RowVector& v);
RowVector vec_delta(const Ring& ring, const RowVector& v);
std::size_t vec_weight(const Ring& ring, const RowVector& v);  // Hamming weight

/// One matrix row as text: entries joined by '|'.
std::string format_row(const Ring& ring, const RowVector& v);
RowVector parse_row(const Ring& ring, std::string_view text);

}  // namespace orecodes

#endif
