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

#ifndef MODREES_SNF_HPP
#define MODREES_SNF_HPP

#include <vector>

#include "module.hpp"

namespace modrees {

/// invariant-factor decomposition of a module over k[x]: the module is
/// free_rank copies of k[x] plus k[x]/(d_i) with d_1 | d_2 | ...
template <class F>
struct SmithDecomposition {
    std::vector<Polynomial<typename F::Elem>> invariant_factors;  // monic, nonunit, divisibility chain
    std::size_t free_rank = 0;

    std::size_t torsion_dimension() const {
        std::size_t d = 0;
        for (auto& f : invariant_factors) d += f.degree();
        return d;
    }
    bool operator==(const SmithDecomposition& o) const {
        if (free_rank != o.free_rank || invariant_factors.size() != o.invariant_factors.size())
            return false;
        for (std::size_t i = 0; i < invariant_factors.size(); ++i)
            if (!(invariant_factors[i] == o.invariant_factors[i])) return false;
        return true;
    }
};

namespace detail {

/// univariate division with quotient: p = q*d + r, deg r < deg d
template <class K>
std::pair<Polynomial<K>, Polynomial<K>> divmod_univariate(const Polynomial<K>& p, const Polynomial<K>& d) {
    auto ord = p.order();
    Polynomial<K> q(ord), r = p;
    while (!r.is_zero() && d.lead_monomial().divides(r.lead_monomial())) {
        auto t = Polynomial<K>::monomial(r.lead_monomial() / d.lead_monomial(),
                                         r.lead_coeff() / d.lead_coeff(), ord);
        q = q + t;
        r = r - t * d;
    }
    return {q, r};
}

}  // namespace detail

/// Smith normal form oracle over a univariate polynomial ring k[x]; used to
/// cross-check hom/dual/kernel/tensor computations independently.
template <class F>
SmithDecomposition<F> snf_oracle(const FpModule<F>& m) {
    using K = typename F::Elem;
    using Poly = Polynomial<K>;
    const auto& R = m.ring();
    if (R.nvars() != 1 || !R.is_polynomial_ring())
        throw std::invalid_argument("snf oracle requires a univariate polynomial ring over a field");

    std::size_t rows = m.gens(), cols = m.rels().cols();
    std::vector<std::vector<Poly>> a(rows, std::vector<Poly>(cols, R.zero()));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m.rels().at(i, j);

    std::vector<Poly> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // pivot: nonzero entry of minimal degree in the remaining block
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (a[i][j].is_zero()) continue;
                if (!found || a[i][j].degree() < a[pi][pj].degree()) pi = i, pj = j, found = true;
            }
        if (!found) break;
        std::swap(a[pi], a[t]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][pj], a[i][t]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t].is_zero()) continue;
                auto [q, r] = detail::divmod_univariate(a[i][t], a[t][t]);
                for (std::size_t j = t; j < cols; ++j) a[i][j] = a[i][j] - q * a[t][j];
                if (!a[i][t].is_zero()) {
                    std::swap(a[i], a[t]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j].is_zero()) continue;
                auto [q, r] = detail::divmod_univariate(a[t][j], a[t][t]);
                for (std::size_t i = t; i < rows; ++i) a[i][j] = a[i][j] - q * a[i][t];
                if (!a[t][j].is_zero()) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][j], a[i][t]);
                    clean = false;
                }
            }
        }
        // divisibility: fold in any entry the pivot misses and redo
        bool redo = false;
        for (std::size_t i = t + 1; i < rows && !redo; ++i)
            for (std::size_t j = t + 1; j < cols && !redo; ++j) {
                auto [q, r] = detail::divmod_univariate(a[i][j], a[t][t]);
                if (!r.is_zero()) {
                    for (std::size_t jj = t; jj < cols; ++jj) a[t][jj] = a[t][jj] + a[i][jj];
                    redo = true;
                }
            }
        if (redo) continue;
        diag.push_back(a[t][t].monic());
        ++t;
    }

    SmithDecomposition<F> out;
    out.free_rank = rows - diag.size();
    for (auto& d : diag)
        if (d.degree() > 0) out.invariant_factors.push_back(d);
    return out;
}

}  // namespace modrees

#endif
