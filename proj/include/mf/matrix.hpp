/*
   Copyright 2026 The mf Authors

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

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "mf/error.hpp"
#include "mf/rational.hpp"

namespace mf {

/// Dense row-major matrix of rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix from_rows(const std::vector<Vector>& rows) {
        if (rows.empty()) return {};
        RationalMatrix m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) {
                throw Error(ErrorKind::DimensionMismatch, "ragged rows in matrix literal");
            }
            std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * m.cols_));
        }
        return m;
    }

    static RationalMatrix from_columns(const std::vector<Vector>& cols) {
        return from_rows(cols).transposed();
    }

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Rational> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }
    Vector row_vector(std::size_t i) const { return Vector(row(i).begin(), row(i).end()); }
    Vector column_vector(std::size_t j) const {
        Vector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    const std::vector<Rational>& entries() const noexcept { return data_; }

    RationalMatrix transposed() const {
        RationalMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    void append_row(std::span<const Rational> r) {
        if (rows_ == 0 && cols_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "appended row has wrong length");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    /// Stacks `below` under this matrix.
    RationalMatrix stacked(const RationalMatrix& below) const {
        if (empty()) return below;
        if (below.empty()) return *this;
        if (below.cols_ != cols_) throw Error(ErrorKind::DimensionMismatch, "cannot stack matrices");
        RationalMatrix out = *this;
        out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
        out.rows_ += below.rows_;
        return out;
    }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

inline RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
    RationalMatrix c(a.rows(), b.cols());
    Rational t;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (sgn(b(k, j)) == 0) continue;
                t = a(i, k) * b(k, j);
                c(i, j) += t;
            }
        }
    return c;
}

inline Vector operator*(const RationalMatrix& a, const Vector& v) {
    if (a.cols() != v.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape");
    Vector out(a.rows());
    Rational t;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (sgn(a(i, j)) == 0 || sgn(v[j]) == 0) continue;
            t = a(i, j) * v[j];
            out[i] += t;
        }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).get_str();
        os << ']';
    }
    return os << ']';
}

namespace detail {

using IntegerRow = std::vector<Integer>;

inline IntegerRow to_integer_row(std::span<const Rational> r) {
    Integer l = lcm_of_denominators(r.data(), r.size());
    IntegerRow out(r.size());
    for (std::size_t j = 0; j < r.size(); ++j) {
        if (sgn(r[j]) == 0) continue;
        out[j] = r[j].get_num() * (l / r[j].get_den());
    }
    return out;
}

inline void make_primitive(IntegerRow& row) {
    Integer g = 0;
    for (const auto& e : row) {
        if (sgn(e) == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (auto& e : row)
        if (sgn(e) != 0) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
}

/// Reduced row echelon form kept over the integers: row r has a positive
/// entry at column pivots[r], zeros in every other pivot column, and is
/// primitive. Zero rows are dropped.
struct IntegerEchelon {
    std::vector<IntegerRow> rows;
    std::vector<std::size_t> pivots;
    std::size_t cols = 0;
};

/// Fraction-free Gauss-Jordan elimination. Each update is the cross
/// multiplication row_i <- a_pp*row_i - a_ip*row_p followed by removal of
/// the row content, so entries stay integral and no division by a
/// non-divisor ever happens. Pivot choice only affects speed: the reduced
/// form is unique.
inline IntegerEchelon reduce(std::vector<IntegerRow> rows, std::size_t cols) {
    IntegerEchelon e;
    e.cols = cols;
    std::size_t rank = 0;
    Integer a, p;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t best = rows.size();
        std::size_t best_size = 0;
        for (std::size_t i = rank; i < rows.size(); ++i) {
            if (sgn(rows[i][c]) == 0) continue;
            std::size_t sz = mpz_sizeinbase(rows[i][c].get_mpz_t(), 2);
            if (best == rows.size() || sz < best_size) {
                best = i;
                best_size = sz;
                if (sz == 1) break;
            }
        }
        if (best == rows.size()) continue;
        std::swap(rows[rank], rows[best]);
        IntegerRow& piv = rows[rank];
        if (sgn(piv[c]) < 0)
            for (auto& x : piv) x = -x;
        make_primitive(piv);
        p = piv[c];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || sgn(rows[i][c]) == 0) continue;
            IntegerRow& r = rows[i];
            a = r[c];
            for (std::size_t j = 0; j < cols; ++j) {
                if (sgn(r[j]) != 0) r[j] *= p;
                if (sgn(piv[j]) != 0) mpz_submul(r[j].get_mpz_t(), a.get_mpz_t(), piv[j].get_mpz_t());
            }
            make_primitive(r);
        }
        e.pivots.push_back(c);
        ++rank;
    }
    rows.resize(rank);
    e.rows = std::move(rows);
    return e;
}

inline IntegerEchelon reduce(const RationalMatrix& m) {
    std::vector<IntegerRow> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_integer_row(m.row(i)));
    return reduce(std::move(rows), m.cols());
}

}  // namespace detail

inline std::size_t rank(const RationalMatrix& m) {
    if (m.empty()) return 0;
    return detail::reduce(m).pivots.size();
}

/// Basis of the right null space, one vector per non-pivot column of the
/// reduced echelon form (in column order). Each vector is a primitive
/// integer vector whose entry at its free column is positive.
inline std::vector<Vector> kernel_basis(const RationalMatrix& m) {
    const std::size_t cols = m.cols();
    std::vector<Vector> basis;
    if (cols == 0) return basis;
    detail::IntegerEchelon e = m.rows() == 0 ? detail::IntegerEchelon{{}, {}, cols} : detail::reduce(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector v(cols);
        v[f] = 1;
        for (std::size_t r = 0; r < e.rows.size(); ++r) {
            const Integer& entry = e.rows[r][f];
            if (sgn(entry) == 0) continue;
            v[e.pivots[r]] = Rational(-entry, e.rows[r][e.pivots[r]]);
            v[e.pivots[r]].canonicalize();
        }
        basis.push_back(primitive_integer(v));
    }
    return basis;
}

/// Row-reduced echelon form with pivot entries scaled to 1.
inline RationalMatrix rref(const RationalMatrix& m) {
    detail::IntegerEchelon e = detail::reduce(m);
    RationalMatrix out(e.rows.size(), m.cols());
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
        const Integer& p = e.rows[r][e.pivots[r]];
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (sgn(e.rows[r][j]) == 0) continue;
            out(r, j) = Rational(e.rows[r][j], p);
            out(r, j).canonicalize();
        }
    }
    return out;
}

inline std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
    if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    const std::size_t n = a.rows();
    std::vector<detail::IntegerRow> rows;
    for (std::size_t i = 0; i < n; ++i) {
        Vector aug(2 * n);
        for (std::size_t j = 0; j < n; ++j) aug[j] = a(i, j);
        aug[n + i] = 1;
        rows.push_back(detail::to_integer_row(aug));
    }
    detail::IntegerEchelon e = detail::reduce(std::move(rows), 2 * n);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    RationalMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j < n; ++j) {
            inv(r, j) = Rational(e.rows[r][n + j], e.rows[r][r]);
            inv(r, j).canonicalize();
        }
    return inv;
}

/// Unique solution of a·x = b, or empty when a is singular.
inline std::optional<Vector> solve(const RationalMatrix& a, const Vector& b) {
    auto inv = inverse(a);
    if (!inv) return std::nullopt;
    return *inv * b;
}

inline bool row_space_equal(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.cols()) return false;
    const std::size_t ra = rank(a);
    return ra == rank(b) && ra == rank(a.stacked(b));
}

inline bool is_scalar_matrix(const RationalMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0) return false;
    if (sgn(m(0, 0)) == 0) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (i == j ? m(i, j) != m(0, 0) : sgn(m(i, j)) != 0) return false;
        }
    return true;
}

/// True when a == lambda * b for some nonzero lambda.
inline bool proportional(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    const auto& x = a.entries();
    const auto& y = b.entries();
    std::size_t k = 0;
    while (k < x.size() && sgn(x[k]) == 0) ++k;
    if (k == x.size() || sgn(y[k]) == 0) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] * y[k] != y[i] * x[k]) return false;
    return true;
}

}  // namespace mf
