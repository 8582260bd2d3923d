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

#ifndef MODREES_MODGB_HPP
#define MODREES_MODGB_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "monomial.hpp"
#include "polynomial.hpp"

namespace modrees {

/// Element of a free module over k[x..]: term list (component, monomial,
/// coefficient) strictly descending under position-over-term: lower component
/// index dominates, ties broken by the ring order. Everything in component i
/// is therefore greater than everything in component j > i, which is the
/// elimination property the syzygy and lift computations rely on.
template <class K>
class VecPoly {
  public:
    struct Term {
        std::size_t comp;
        Monomial mon;
        K coeff;
    };

    VecPoly() : ord_(MonomialOrder::degrevlex()) {}
    explicit VecPoly(MonomialOrder ord) : ord_(ord) {}
    VecPoly(MonomialOrder ord, std::vector<Term> terms) : ord_(ord), terms_(std::move(terms)) {
        normalize();
    }

    static VecPoly from_poly(const Polynomial<K>& p, std::size_t comp, MonomialOrder ord) {
        VecPoly v(ord);
        v.terms_.reserve(p.term_count());
        for (auto& t : p.terms()) v.terms_.push_back({comp, t.mon, t.coeff});
        return v;
    }
    static VecPoly unit(std::size_t comp, std::size_t nvars, const K& one, MonomialOrder ord) {
        VecPoly v(ord);
        v.terms_.push_back({comp, Monomial(nvars), one});
        return v;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    const MonomialOrder& order() const { return ord_; }
    const Term& lead() const {
        if (terms_.empty()) throw std::logic_error("lead of zero vector");
        return terms_.front();
    }
    std::size_t min_component() const {
        if (terms_.empty()) throw std::logic_error("component of zero vector");
        return terms_.front().comp;
    }
    bool all_components_at_least(std::size_t c) const {
        return terms_.empty() || terms_.front().comp >= c;
    }

    /// extract the polynomial sitting in one component
    Polynomial<K> component(std::size_t comp) const {
        std::vector<typename Polynomial<K>::Term> ts;
        for (auto& t : terms_)
            if (t.comp == comp) ts.push_back({t.mon, t.coeff});
        return Polynomial<K>(ord_, std::move(ts));
    }

    VecPoly operator-() const {
        VecPoly r(*this);
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }
    VecPoly operator+(const VecPoly& o) const { return merged(o, false); }
    VecPoly operator-(const VecPoly& o) const { return merged(o, true); }
    VecPoly times_monomial(const Monomial& m, const K& c) const {
        VecPoly r(ord_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (auto& t : terms_) r.terms_.push_back({t.comp, t.mon * m, t.coeff * c});
        return r;
    }
    VecPoly scaled(const K& c) const {
        VecPoly r(ord_);
        if (c.is_zero()) return r;
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.coeff = t.coeff * c;
        return r;
    }
    VecPoly monic() const {
        if (is_zero()) return *this;
        return scaled(lead().coeff.inv());
    }
    /// shift every component index by delta
    VecPoly shifted(std::size_t delta) const {
        VecPoly r(*this);
        for (auto& t : r.terms_) t.comp += delta;
        return r;
    }

    bool operator==(const VecPoly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].comp != o.terms_[i].comp || terms_[i].mon != o.terms_[i].mon ||
                !(terms_[i].coeff == o.terms_[i].coeff))
                return false;
        return true;
    }

    int compare_terms(const Term& a, const Term& b) const {
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return ord_.compare(a.mon, b.mon);
    }

  private:
    VecPoly merged(const VecPoly& o, bool subtract) const {
        VecPoly r(ord_);
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            int c;
            if (i == terms_.size()) c = -1;
            else if (j == o.terms_.size()) c = 1;
            else c = compare_terms(terms_[i], o.terms_[j]);
            if (c > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                K cf = subtract ? -o.terms_[j].coeff : o.terms_[j].coeff;
                if (!cf.is_zero()) r.terms_.push_back({o.terms_[j].comp, o.terms_[j].mon, cf});
                ++j;
            } else {
                K cf = subtract ? terms_[i].coeff - o.terms_[j].coeff : terms_[i].coeff + o.terms_[j].coeff;
                if (!cf.is_zero()) r.terms_.push_back({terms_[i].comp, terms_[i].mon, cf});
                ++i, ++j;
            }
        }
        return r;
    }
    void normalize() {
        std::stable_sort(terms_.begin(), terms_.end(),
                         [this](const Term& a, const Term& b) { return compare_terms(a, b) > 0; });
        std::vector<Term> out;
        for (auto& t : terms_) {
            if (!out.empty() && out.back().comp == t.comp && out.back().mon == t.mon) {
                out.back().coeff += t.coeff;
                if (out.back().coeff.is_zero()) out.pop_back();
            } else if (!t.coeff.is_zero()) {
                out.push_back(t);
            }
        }
        terms_ = std::move(out);
    }

    MonomialOrder ord_;
    std::vector<Term> terms_;
};

namespace detail {

/// one full-reduction pass: rewrite v until no term is divisible by any lead
/// term of the basis (same component, monomial divisibility)
template <class K>
VecPoly<K> vec_normal_form(VecPoly<K> v, const std::vector<VecPoly<K>>& basis) {
    using VP = VecPoly<K>;
    VP result(v.order());
    while (!v.is_zero()) {
        const auto& head = v.lead();
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            const auto& gl = g.lead();
            if (gl.comp == head.comp && gl.mon.divides(head.mon)) {
                K factor = head.coeff / gl.coeff;
                v = v - g.times_monomial(head.mon / gl.mon, factor);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            // move the irreducible head term to the result
            VP head_only(v.order(), {head});
            result = result + head_only;
            v = v - head_only;
        }
    }
    return result;
}

template <class K>
bool basis_sorted_less(const VecPoly<K>& a, const VecPoly<K>& b) {
    const auto& la = a.lead();
    const auto& lb = b.lead();
    if (la.comp != lb.comp) return la.comp < lb.comp;
    auto da = la.mon.degree(), db = lb.mon.degree();
    if (da != db) return da < db;
    int c = a.order().compare(la.mon, lb.mon);
    if (c) return c < 0;
    // identical leads cannot occur in a minimal basis; compare term counts
    return a.terms().size() < b.terms().size();
}

}  // namespace detail

/// Buchberger completion for a submodule of a free module, returning the
/// reduced Groebner basis (monic, inter-reduced, deterministically sorted).
/// The product criterion is only sound at ring level (one component).
template <class K>
std::vector<VecPoly<K>> buchberger_module(std::vector<VecPoly<K>> gens, std::size_t ncomp) {
    using VP = VecPoly<K>;
    std::vector<VP> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(g.monic());
    if (basis.empty()) return {};
    MonomialOrder ord = basis.front().order();
    const bool ring_level = ncomp == 1;

    // pair queue ordered by (lcm degree, lcm under ord, indices)
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        std::uint32_t deg;
    };
    auto pair_less = [&ord](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = ord.compare(a.lcm, b.lcm);
        if (c) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::vector<Pair> queue;
    auto push_pairs = [&](std::size_t jnew) {
        const auto& g = basis[jnew];
        for (std::size_t i = 0; i < jnew; ++i) {
            if (basis[i].lead().comp != g.lead().comp) continue;
            if (ring_level && Monomial::coprime(basis[i].lead().mon, g.lead().mon)) continue;
            Monomial l = Monomial::lcm(basis[i].lead().mon, g.lead().mon);
            queue.push_back({i, jnew, l, l.degree()});
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), pair_less);
        Pair p = *it;
        queue.erase(it);
        const VP &f = basis[p.i], &g = basis[p.j];
        VP s = f.times_monomial(p.lcm / f.lead().mon, f.lead().coeff.one_like()) -
               g.times_monomial(p.lcm / g.lead().mon, f.lead().coeff.one_like());
        VP r = detail::vec_normal_form(std::move(s), basis);
        if (!r.is_zero()) {
            basis.push_back(r.monic());
            push_pairs(basis.size() - 1);
        }
    }

    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<VP> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const auto &li = basis[i].lead(), &lj = basis[j].lead();
            if (lj.comp == li.comp && lj.mon.divides(li.mon)) {
                if (li.mon == lj.mon) redundant = j < i;  // keep the first of equal leads
                else redundant = true;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // inter-reduce tails
    std::vector<VP> reduced(minimal.size(), VP(ord));
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<VP> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced[i] = detail::vec_normal_form(minimal[i], others).monic();
    }
    std::erase_if(reduced, [](const VP& v) { return v.is_zero(); });
    std::sort(reduced.begin(), reduced.end(), detail::basis_sorted_less<K>);
    return reduced;
}

/// Groebner machinery for the column span of a fixed family of vectors in a
/// free module k[x]^m: membership, canonical normal forms, certificates
/// (lifts) and the full syzygy module, all read off one extended basis with
/// tag components m..m+s-1 appended below the real ones.
template <class K>
class ModuleGB {
  public:
    /// columns get tag components and certificates; extras (e.g. quotient-ring
    /// relation vectors) enlarge the span without being tracked
    ModuleGB(std::vector<VecPoly<K>> columns, std::vector<VecPoly<K>> extras, std::size_t ncomp,
             std::size_t nvars, const K& one, MonomialOrder ord)
        : m_(ncomp), s_(columns.size()), nvars_(nvars), ord_(ord) {
        std::vector<VecPoly<K>> ext;
        ext.reserve(s_ + extras.size());
        for (std::size_t i = 0; i < s_; ++i)
            ext.push_back(columns[i] + VecPoly<K>::unit(m_ + i, nvars_, one, ord));
        for (auto& e : extras) ext.push_back(std::move(e));
        gb_ = buchberger_module(std::move(ext), m_ + s_);
    }

    /// normal form of a vector against the span (tags ignored on input)
    VecPoly<K> normal_form(const VecPoly<K>& v) const { return detail::vec_normal_form(v, gb_); }

    bool contains(const VecPoly<K>& v) const {
        auto nf = normal_form(v);
        return nf.all_components_at_least(m_);
    }

    /// coefficients c with sum c_i * column_i = v, if v lies in the span
    std::optional<std::vector<Polynomial<K>>> lift(const VecPoly<K>& v) const {
        auto nf = normal_form(v);
        if (!nf.all_components_at_least(m_)) return std::nullopt;
        std::vector<Polynomial<K>> c(s_, Polynomial<K>(ord_));
        for (std::size_t i = 0; i < s_; ++i) c[i] = -nf.component(m_ + i);
        return c;
    }

    /// lead monomials of the span's Groebner basis, bucketed by component;
    /// describes the staircase of the quotient free-module modulo the span
    std::vector<std::vector<Monomial>> quotient_leads() const {
        std::vector<std::vector<Monomial>> leads(m_);
        for (const auto& g : gb_) {
            if (g.is_zero() || g.lead().comp >= m_) continue;
            leads[g.lead().comp].push_back(g.lead().mon);
        }
        return leads;
    }

    /// generators of the syzygy module of the columns (vectors of length s)
    std::vector<std::vector<Polynomial<K>>> syzygies() const {
        std::vector<std::vector<Polynomial<K>>> out;
        for (const auto& g : gb_) {
            if (!g.all_components_at_least(m_)) continue;
            std::vector<Polynomial<K>> c(s_, Polynomial<K>(ord_));
            for (std::size_t i = 0; i < s_; ++i) c[i] = g.component(m_ + i);
            out.push_back(std::move(c));
        }
        return out;
    }

    const std::vector<VecPoly<K>>& basis() const { return gb_; }

  private:
    std::size_t m_, s_, nvars_;
    MonomialOrder ord_;
    std::vector<VecPoly<K>> gb_;
};

// ---------------------------------------------------------------------------
// ring level: ideals are the one-component case
// ---------------------------------------------------------------------------

template <class K>
std::vector<Polynomial<K>> buchberger(const std::vector<Polynomial<K>>& gens, MonomialOrder ord) {
    std::vector<VecPoly<K>> vgens;
    for (auto& g : gens) {
        auto g2 = g.with_order(ord);
        if (!g2.is_zero()) vgens.push_back(VecPoly<K>::from_poly(g2, 0, ord));
    }
    auto gb = buchberger_module(std::move(vgens), 1);
    std::vector<Polynomial<K>> out;
    out.reserve(gb.size());
    for (auto& g : gb) out.push_back(g.component(0));
    return out;
}

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& p, const std::vector<Polynomial<K>>& gb, MonomialOrder ord) {
    std::vector<VecPoly<K>> basis;
    basis.reserve(gb.size());
    for (auto& g : gb)
        if (!g.is_zero()) basis.push_back(VecPoly<K>::from_poly(g.with_order(ord), 0, ord));
    auto nf = detail::vec_normal_form(VecPoly<K>::from_poly(p.with_order(ord), 0, ord), basis);
    return nf.component(0);
}

/// permute variables: new exponent slot i holds old slot perm[i]
template <class K>
Polynomial<K> permute_vars(const Polynomial<K>& p, const std::vector<std::size_t>& perm, MonomialOrder ord) {
    std::vector<typename Polynomial<K>::Term> ts;
    ts.reserve(p.term_count());
    for (auto& t : p.terms()) {
        Monomial m(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) m[i] = t.mon[perm[i]];
        ts.push_back({std::move(m), t.coeff});
    }
    return Polynomial<K>(ord, std::move(ts));
}

/// drop variable slots not in keep (caller guarantees the polynomial is free
/// of them); keep[i] names the old slot that becomes new slot i
template <class K>
Polynomial<K> project_vars(const Polynomial<K>& p, const std::vector<std::size_t>& keep, MonomialOrder ord) {
    return permute_vars(p, keep, ord);
}

/// intersection of the ideal with the subring on the variables NOT in the
/// leading block [0, drop): returns generators still expressed in the full
/// ambient variable list, free of the dropped block, forming a reduced GB of
/// the elimination ideal under the induced order
template <class K>
std::vector<Polynomial<K>> eliminate_block(const std::vector<Polynomial<K>>& gens, std::size_t drop) {
    auto gb = buchberger(gens, MonomialOrder::block_elim(drop));
    std::vector<Polynomial<K>> out;
    for (auto& g : gb)
        if (g.free_of_range(0, drop)) out.push_back(g);
    return out;
}

/// general elimination of an arbitrary variable subset: permutes the dropped
/// variables to the front, eliminates the block, and permutes back; result is
/// re-reduced under the supplied final order
template <class K>
std::vector<Polynomial<K>> eliminate_vars(const std::vector<Polynomial<K>>& gens, std::size_t nvars,
                                          std::vector<std::size_t> drop, MonomialOrder final_ord) {
    std::sort(drop.begin(), drop.end());
    std::vector<std::size_t> perm;  // new slot -> old slot, dropped first
    perm.reserve(nvars);
    std::vector<bool> dropped(nvars, false);
    for (auto d : drop) {
        if (d >= nvars) throw std::invalid_argument("eliminate: variable index out of range");
        dropped[d] = true;
    }
    for (auto d : drop) perm.push_back(d);
    for (std::size_t i = 0; i < nvars; ++i)
        if (!dropped[i]) perm.push_back(i);

    MonomialOrder block = MonomialOrder::block_elim(drop.size());
    std::vector<Polynomial<K>> permuted;
    permuted.reserve(gens.size());
    for (auto& g : gens) permuted.push_back(permute_vars(g, perm, block));
    auto elim = eliminate_block(permuted, drop.size());

    // invert the permutation and restate under the final order
    std::vector<std::size_t> inv(nvars);
    for (std::size_t i = 0; i < nvars; ++i) inv[perm[i]] = i;
    std::vector<Polynomial<K>> out;
    out.reserve(elim.size());
    for (auto& g : elim) out.push_back(permute_vars(g, inv, final_ord));
    return buchberger(out, final_ord);
}

}  // namespace modrees

#endif
