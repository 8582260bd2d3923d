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

#ifndef MODREES_KLINALG_HPP
#define MODREES_KLINALG_HPP

#include <optional>
#include <vector>

#include "module.hpp"

namespace modrees {

/// Gaussian elimination rank of a dense matrix over the coefficient field
template <class K>
std::size_t k_rank(std::vector<std::vector<K>> a) {
    std::size_t rank = 0;
    if (a.empty()) return 0;
    std::size_t rows = a.size(), cols = a[0].size();
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        K inv = a[rank][col].inv();
        for (std::size_t j = col; j < cols; ++j) a[rank][j] = a[rank][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][col].is_zero()) continue;
            K f = a[i][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] = a[i][j] - f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// dimension of a finitely presented module as a k-vector space, when that
/// dimension is finite (the base ring itself need not be finite dimensional):
/// counts standard module monomials outside the relation-span staircase
template <class F>
std::optional<std::size_t> k_dimension(const FpModule<F>& m) {
    const auto& R = m.ring();
    if (m.gens() == 0) return 0;
    auto leads = m.rel_span().quotient_leads();
    std::size_t total = 0;
    for (auto& comp_leads : leads) {
        auto stair = staircase_monomials(comp_leads, R.nvars(), R.order());
        if (!stair) return std::nullopt;
        total += stair->size();
    }
    return total;
}

/// standard module monomials (component, monomial) forming a k-basis of the
/// module, when finite dimensional
template <class F>
std::optional<std::vector<std::pair<std::size_t, Monomial>>> k_basis(const FpModule<F>& m) {
    const auto& R = m.ring();
    std::vector<std::pair<std::size_t, Monomial>> out;
    if (m.gens() == 0) return out;
    auto leads = m.rel_span().quotient_leads();
    for (std::size_t c = 0; c < leads.size(); ++c) {
        auto stair = staircase_monomials(leads[c], R.nvars(), R.order());
        if (!stair) return std::nullopt;
        for (auto& mon : *stair) out.emplace_back(c, mon);
    }
    return out;
}

}  // namespace modrees

#endif
