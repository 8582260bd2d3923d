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

#ifndef MODREES_LINSYS_HPP
#define MODREES_LINSYS_HPP

#include <optional>
#include <vector>

#include "matrix.hpp"

namespace modrees {

/// A-linear system in matrix unknowns: equations sum_k L*X_k*R = B, solved by
/// column-major flattening (vec(LXR) = (R^T kron L) vec X) and one module
/// lift. Existence of a solution is exact; the returned solution is the
/// deterministic certificate of the underlying Groebner lift.
template <class F>
class LinearSystem {
  public:
    explicit LinearSystem(const Ring<F>& ring) : ring_(ring) {}

    /// declare a rows x cols matrix unknown; returns its handle
    std::size_t add_unknown(std::size_t rows, std::size_t cols) {
        unknowns_.push_back({rows, cols});
        return unknowns_.size() - 1;
    }

    /// start an equation with right-hand side B; returns its handle
    std::size_t add_equation(Mat<F> rhs) {
        eqs_.push_back({std::move(rhs), {}});
        return eqs_.size() - 1;
    }

    /// add a term L * X_u * R to an equation; empty optional means identity
    void add_term(std::size_t eq, std::size_t u, std::optional<Mat<F>> left,
                  std::optional<Mat<F>> right) {
        const auto& [rows, cols] = unknowns_[u];
        const auto& rhs = eqs_[eq].rhs;
        Mat<F> l = left ? *left : Mat<F>::identity(rhs.rows(), ring_);
        Mat<F> r = right ? *right : Mat<F>::identity(rhs.cols(), ring_);
        if (l.cols() != rows || r.rows() != cols || l.rows() != rhs.rows() || r.cols() != rhs.cols())
            throw std::invalid_argument("linear system term shape mismatch");
        eqs_[eq].terms.push_back({u, std::move(l), std::move(r)});
    }

    std::optional<std::vector<Mat<F>>> solve() const {
        std::vector<std::size_t> col_offset(unknowns_.size() + 1, 0);
        for (std::size_t u = 0; u < unknowns_.size(); ++u)
            col_offset[u + 1] = col_offset[u] + unknowns_[u].first * unknowns_[u].second;
        std::size_t total_cols = col_offset.back();

        std::size_t total_rows = 0;
        for (auto& e : eqs_) total_rows += e.rhs.rows() * e.rhs.cols();

        Mat<F> big(total_rows, total_cols, ring_);
        Mat<F> rhs(total_rows, 1, ring_);
        std::size_t row0 = 0;
        for (auto& e : eqs_) {
            auto v = mat_vec(ring_, e.rhs);
            for (std::size_t i = 0; i < v.rows(); ++i) rhs.at(row0 + i, 0) = v.at(i, 0);
            for (auto& t : e.terms) {
                auto block = mat_kron(ring_, t.right.transpose(ring_), t.left);
                std::size_t c0 = col_offset[t.unknown];
                for (std::size_t i = 0; i < block.rows(); ++i)
                    for (std::size_t j = 0; j < block.cols(); ++j)
                        big.at(row0 + i, c0 + j) =
                            ring_.reduce(big.at(row0 + i, c0 + j) + block.at(i, j));
            }
            row0 += v.rows();
        }

        auto u = ColumnSpan<F>(ring_, big).lift(rhs);
        if (!u) return std::nullopt;
        std::vector<Mat<F>> out;
        out.reserve(unknowns_.size());
        for (std::size_t k = 0; k < unknowns_.size(); ++k) {
            Mat<F> slice(unknowns_[k].first * unknowns_[k].second, 1, ring_);
            for (std::size_t i = 0; i < slice.rows(); ++i) slice.at(i, 0) = u->at(col_offset[k] + i, 0);
            out.push_back(mat_unvec(ring_, slice, unknowns_[k].first, unknowns_[k].second));
        }
        return out;
    }

  private:
    struct Term {
        std::size_t unknown;
        Mat<F> left, right;
    };
    struct Eq {
        Mat<F> rhs;
        std::vector<Term> terms;
    };

    Ring<F> ring_;
    std::vector<std::pair<std::size_t, std::size_t>> unknowns_;
    std::vector<Eq> eqs_;
};

}  // namespace modrees

#endif
