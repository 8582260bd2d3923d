/*
   Copyright 2026 The modrees Authors

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

#ifndef MODREES_MATRIX_HPP
#define MODREES_MATRIX_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "ring.hpp"

namespace modrees {

/// Dense matrix over a ring's polynomials. Entries are kept reduced modulo
/// the ring's defining ideal by the ring-aware operations below.
template <class F>
class Mat {
  public:
    using K = typename F::Elem;
    using Poly = Polynomial<K>;

    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols, const Ring<F>& ring)
        : rows_(rows), cols_(cols), a_(rows * cols, ring.zero()) {}

    static Mat identity(std::size_t n, const Ring<F>& ring) {
        Mat m(n, n, ring);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring.one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Poly& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Poly& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (auto& p : a_)
            if (!p.is_zero()) return false;
        return true;
    }
    bool operator==(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!(a_[i] == o.a_[i])) return false;
        return true;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transpose(const Ring<F>& ring) const {
        Mat t(cols_, rows_, ring);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Mat column(std::size_t j, const Ring<F>& ring) const {
        Mat c(rows_, 1, ring);
        for (std::size_t i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
        return c;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Poly> a_;
};

template <class F>
Mat<F> mat_add(const Ring<F>& ring, const Mat<F>& a, const Mat<F>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
    Mat<F> r(a.rows(), a.cols(), ring);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = ring.reduce(a.at(i, j) + b.at(i, j));
    return r;
}

template <class F>
Mat<F> mat_sub(const Ring<F>& ring, const Mat<F>& a, const Mat<F>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
    Mat<F> r(a.rows(), a.cols(), ring);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = ring.reduce(a.at(i, j) - b.at(i, j));
    return r;
}

template <class F>
Mat<F> mat_neg(const Ring<F>& ring, const Mat<F>& a) {
    Mat<F> r(a.rows(), a.cols(), ring);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = -a.at(i, j);
    return r;
}

template <class F>
Mat<F> mat_mul(const Ring<F>& ring, const Mat<F>& a, const Mat<F>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
    Mat<F> r(a.rows(), b.cols(), ring);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            auto acc = ring.zero();
            for (std::size_t k = 0; k < a.cols(); ++k) acc = acc + a.at(i, k) * b.at(k, j);
            r.at(i, j) = ring.reduce(acc);
        }
    return r;
}

template <class F>
Mat<F> mat_hstack(const Ring<F>& ring, const Mat<F>& a, const Mat<F>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
    Mat<F> r(a.rows(), a.cols() + b.cols(), ring);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

template <class F>
Mat<F> mat_vstack(const Ring<F>& ring, const Mat<F>& a, const Mat<F>& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
    Mat<F> r(a.rows() + b.rows(), a.cols(), ring);
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) r.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i) r.at(a.rows() + i, j) = b.at(i, j);
    }
    return r;
}

/// column-major flattening: vec(X)[i + rows*j] = X[i][j], as a column matrix
template <class F>
Mat<F> mat_vec(const Ring<F>& ring, const Mat<F>& x) {
    Mat<F> v(x.rows() * x.cols(), 1, ring);
    for (std::size_t j = 0; j < x.cols(); ++j)
        for (std::size_t i = 0; i < x.rows(); ++i) v.at(i + x.rows() * j, 0) = x.at(i, j);
    return v;
}

template <class F>
Mat<F> mat_unvec(const Ring<F>& ring, const Mat<F>& v, std::size_t rows, std::size_t cols) {
    if (v.rows() != rows * cols || v.cols() != 1) throw std::invalid_argument("unvec shape mismatch");
    Mat<F> x(rows, cols, ring);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) x.at(i, j) = v.at(i + rows * j, 0);
    return x;
}

/// Kronecker product, (A kron B)[(ia,ib),(ja,jb)] = A[ia][ja] * B[ib][jb];
/// satisfies vec(B X A^T) = (A kron B) vec(X) with column-major vec
template <class F>
Mat<F> mat_kron(const Ring<F>& ring, const Mat<F>& a, const Mat<F>& b) {
    Mat<F> r(a.rows() * b.rows(), a.cols() * b.cols(), ring);
    for (std::size_t ia = 0; ia < a.rows(); ++ia)
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            if (a.at(ia, ja).is_zero()) continue;
            for (std::size_t ib = 0; ib < b.rows(); ++ib)
                for (std::size_t jb = 0; jb < b.cols(); ++jb)
                    r.at(ia * b.rows() + ib, ja * b.cols() + jb) =
                        ring.reduce(a.at(ia, ja) * b.at(ib, jb));
        }
    return r;
}

// ---------------------------------------------------------------------------
// column-span machinery over the ring (quotient relations handled internally)
// ---------------------------------------------------------------------------

namespace detail {

template <class F>
VecPoly<typename F::Elem> column_to_vec(const Ring<F>& ring, const Mat<F>& m, std::size_t j) {
    using K = typename F::Elem;
    std::vector<typename VecPoly<K>::Term> ts;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (auto& t : m.at(i, j).terms()) ts.push_back({i, t.mon, t.coeff});
    return VecPoly<K>(ring.order(), std::move(ts));
}

}  // namespace detail

/// Span of the columns of a matrix over A inside A^rows: membership, lift
/// certificates and syzygies, with the quotient-ring relations I*e_i adjoined
/// behind the scenes.
template <class F>
class ColumnSpan {
  public:
    using K = typename F::Elem;

    ColumnSpan(const Ring<F>& ring, const Mat<F>& m) : ring_(ring), rows_(m.rows()), cols_(m.cols()) {
        std::vector<VecPoly<K>> columns, extras;
        for (std::size_t j = 0; j < cols_; ++j) columns.push_back(detail::column_to_vec(ring, m, j));
        for (auto& f : ring.ideal())
            for (std::size_t i = 0; i < rows_; ++i)
                extras.push_back(VecPoly<K>::from_poly(f, i, ring.order()));
        gb_.emplace(std::move(columns), std::move(extras), rows_, ring.nvars(), ring.field().one(),
                    ring.order());
    }

    bool contains(const Mat<F>& b) const { return gb_->contains(detail::column_to_vec(ring_, b, 0)); }

    /// c with M*c = b over A, or nullopt
    std::optional<Mat<F>> lift(const Mat<F>& b) const {
        if (b.rows() != rows_ || b.cols() != 1) throw std::invalid_argument("lift shape mismatch");
        auto c = gb_->lift(detail::column_to_vec(ring_, b, 0));
        if (!c) return std::nullopt;
        Mat<F> out(cols_, 1, ring_);
        for (std::size_t i = 0; i < cols_; ++i) out.at(i, 0) = ring_.reduce((*c)[i]);
        return out;
    }

    /// staircase data of A^rows modulo the span (quotient-ring relations
    /// included): lead monomials per component
    std::vector<std::vector<Monomial>> quotient_leads() const { return gb_->quotient_leads(); }

    /// columns generate ker(A^cols -> A^rows) over A
    Mat<F> syzygies() const {
        auto syz = gb_->syzygies();
        std::vector<Mat<F>> keep;
        for (auto& s : syz) {
            Mat<F> col(cols_, 1, ring_);
            bool nonzero = false;
            for (std::size_t i = 0; i < cols_; ++i) {
                col.at(i, 0) = ring_.reduce(s[i]);
                nonzero = nonzero || !col.at(i, 0).is_zero();
            }
            if (nonzero) keep.push_back(std::move(col));
        }
        Mat<F> out(cols_, keep.size(), ring_);
        for (std::size_t j = 0; j < keep.size(); ++j)
            for (std::size_t i = 0; i < cols_; ++i) out.at(i, j) = keep[j].at(i, 0);
        return out;
    }

  private:
    Ring<F> ring_;
    std::size_t rows_, cols_;
    std::optional<ModuleGB<K>> gb_;
};

/// spec-level entry points: syzygies and lift of a relation matrix over A
template <class F>
Mat<F> syzygies(const Ring<F>& ring, const Mat<F>& m) {
    return ColumnSpan<F>(ring, m).syzygies();
}

template <class F>
std::optional<Mat<F>> lift(const Ring<F>& ring, const Mat<F>& b, const Mat<F>& m) {
    if (b.rows() != m.rows()) throw std::invalid_argument("lift shape mismatch");
    return ColumnSpan<F>(ring, m).lift(b);
}

}  // namespace modrees

#endif
