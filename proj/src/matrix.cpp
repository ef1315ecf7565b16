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

#include "orecodes/matrix.hpp"

#include <ostream>
#include <sstream>

namespace orecodes {

MatrixA::MatrixA(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
    if (!ring_) throw std::invalid_argument("MatrixA: null ring");
    entries_.assign(rows_ * cols_, ring_->zero());
}

MatrixA MatrixA::identity(const RingPtr& ring, std::size_t n) {
    MatrixA m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, ring->one());
    return m;
}

MatrixA MatrixA::from_rows(RingPtr ring, std::vector<RowVector> rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    MatrixA m(std::move(ring), rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("MatrixA: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, std::move(rows[i][j]));
    }
    return m;
}

MatrixA MatrixA::parse(const RingPtr& ring, std::string_view text) {
    std::vector<RowVector> rows;
    std::string line;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        rows.push_back(parse_row(*ring, line));
    }
    if (rows.empty()) throw std::invalid_argument("matrix literal: empty");
    return from_rows(ring, std::move(rows));
}

const Residues& MatrixA::entry(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::invalid_argument("MatrixA: index out of range");
    return entries_[i * cols_ + j];
}

void MatrixA::set(std::size_t i, std::size_t j, Residues value) {
    if (i >= rows_ || j >= cols_) throw std::invalid_argument("MatrixA: index out of range");
    if (value.size() != ring_->width())
        throw std::invalid_argument("MatrixA: entry width mismatch");
    entries_[i * cols_ + j] = std::move(value);
}

RowVector MatrixA::row(std::size_t i) const {
    if (i >= rows_) throw std::invalid_argument("MatrixA: row out of range");
    return RowVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

bool MatrixA::is_zero() const {
    for (const Residues& e : entries_)
        if (!ring_->is_zero(e)) return false;
    return true;
}

MatrixA MatrixA::map_sigma() const {
    MatrixA m(ring_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = ring_->sigma(entries_[i]);
    return m;
}

MatrixA MatrixA::map_delta() const {
    MatrixA m(ring_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = ring_->delta(entries_[i]);
    return m;
}

std::string MatrixA::str() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) s += '\n';
        s += format_row(*ring_, row(i));
    }
    return s;
}

bool MatrixA::operator==(const MatrixA& other) const {
    require_same_ring(*ring_, *other.ring_, "matrix ==");
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

std::ostream& operator<<(std::ostream& os, const MatrixA& m) { return os << m.str(); }

MatrixA mat_mul(const MatrixA& a, const MatrixA& b) {
    require_same_ring(*a.ring(), *b.ring(), "mat_mul");
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
    const Ring& R = *a.ring();
    MatrixA out(a.ring(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Residues acc = R.zero();
            for (std::size_t k = 0; k < a.cols(); ++k)
                acc = R.add(acc, R.mul(a.entry(i, k), b.entry(k, j)));
            out.set(i, j, std::move(acc));
        }
    return out;
}

MatrixA mat_add(const MatrixA& a, const MatrixA& b) {
    require_same_ring(*a.ring(), *b.ring(), "mat_add");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("mat_add: dimension mismatch");
    const Ring& R = *a.ring();
    MatrixA out(a.ring(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.set(i, j, R.add(a.entry(i, j), b.entry(i, j)));
    return out;
}

RowVector vec_mat_mul(const Ring& ring, const RowVector& v, const MatrixA& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("vec_mat_mul: dimension mismatch");
    RowVector out(m.cols(), ring.zero());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (ring.is_zero(v[i])) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[j] = ring.add(out[j], ring.mul(v[i], m.entry(i, j)));
    }
    return out;
}

RowVector vec_zero(const Ring& ring, std::size_t n) { return RowVector(n, ring.zero()); }

bool vec_is_zero(const Ring& ring, const RowVector& v) {
    for (const Residues& c : v)
        if (!ring.is_zero(c)) return false;
    return true;
}

RowVector vec_add(const Ring& ring, const RowVector& a, const RowVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: length mismatch");
    RowVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring.add(a[i], b[i]);
    return out;
}

RowVector vec_sub(const Ring& ring, const RowVector& a, const RowVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: length mismatch");
    RowVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring.sub(a[i], b[i]);
    return out;
}

RowVector vec_scale(const Ring& ring, const Residues& a, const RowVector& v) {
    RowVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = ring.mul(a, v[i]);
    return out;
}

RowVector vec_sigma(const Ring& ring, const RowVector& v) {
    RowVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = ring.sigma(v[i]);
    return out;
}

RowVector vec_delta(const Ring& ring, const RowVector& v) {
    RowVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = ring.delta(v[i]);
    return out;
}

std::size_t vec_weight(const Ring& ring, const RowVector& v) {
    std::size_t w = 0;
    for (const Residues& c : v)
        if (!ring.is_zero(c)) ++w;
    return w;
}

std::string format_row(const Ring& ring, const RowVector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += '|';
        s += ring.format_element(v[i]);
    }
    return s;
}

RowVector parse_row(const Ring& ring, std::string_view text) {
    RowVector out;
    std::string part;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, part, '|')) out.push_back(ring.parse_element(part));
    if (out.empty()) throw std::invalid_argument("row literal: empty");
    return out;
}

}  // namespace orecodes
