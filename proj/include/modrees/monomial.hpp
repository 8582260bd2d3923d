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

#ifndef MODREES_MONOMIAL_HPP
#define MODREES_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace modrees {

/// Exponent vector over a fixed ambient variable list.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    std::uint32_t& operator[](std::size_t i) { return e_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }

    std::uint32_t degree() const { return std::accumulate(e_.begin(), e_.end(), std::uint32_t(0)); }
    std::uint32_t degree_range(std::size_t lo, std::size_t hi) const {
        std::uint32_t d = 0;
        for (std::size_t i = lo; i < hi && i < e_.size(); ++i) d += e_[i];
        return d;
    }
    bool is_one() const { return degree() == 0; }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > m.e_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += m.e_[i];
        return r;
    }
    /// quotient; caller guarantees divisibility
    Monomial operator/(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (r.e_[i] < m.e_[i]) throw std::invalid_argument("monomial quotient is not a monomial");
            r.e_[i] -= m.e_[i];
        }
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(r.e_[i], b.e_[i]);
        return r;
    }
    static bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] && b.e_[i]) return false;
        return true;
    }

    bool operator==(const Monomial& m) const { return e_ == m.e_; }
    bool operator!=(const Monomial& m) const { return e_ != m.e_; }

  private:
    std::vector<std::uint32_t> e_;
};

/// Total order on monomials, compatible with multiplication.
/// block(split) compares the leading block [0, split) by degrevlex first and
/// therefore eliminates exactly that block.
class MonomialOrder {
  public:
    enum class Kind : std::uint8_t { lex, degrevlex, block };

    static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
    static MonomialOrder degrevlex() { return MonomialOrder(Kind::degrevlex, 0); }
    static MonomialOrder block_elim(std::size_t split) { return MonomialOrder(Kind::block, split); }

    Kind kind() const { return kind_; }
    std::size_t split() const { return split_; }

    /// -1 if a < b, 0 if equal, +1 if a > b
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case Kind::lex: return cmp_lex(a, b, 0, a.nvars());
            case Kind::degrevlex: return cmp_drl(a, b, 0, a.nvars());
            case Kind::block: {
                int c = cmp_drl(a, b, 0, std::min(split_, a.nvars()));
                if (c) return c;
                return cmp_drl(a, b, std::min(split_, a.nvars()), a.nvars());
            }
        }
        return 0;
    }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder& o) const { return kind_ == o.kind_ && split_ == o.split_; }
    bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

  private:
    MonomialOrder(Kind k, std::size_t s) : kind_(k), split_(s) {}

    static int cmp_lex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
    }
    static int cmp_drl(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
        std::uint32_t da = a.degree_range(lo, hi), db = b.degree_range(lo, hi);
        if (da != db) return da > db ? 1 : -1;
        // revlex tiebreak: the last differing exponent decides, smaller wins
        for (std::size_t i = hi; i-- > lo;) {
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        }
        return 0;
    }

    Kind kind_;
    std::size_t split_;
};

}  // namespace modrees

#endif
