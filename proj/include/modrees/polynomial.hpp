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

#ifndef MODREES_POLYNOMIAL_HPP
#define MODREES_POLYNOMIAL_HPP

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"
#include "monomial.hpp"

namespace modrees {

/// Multivariate polynomial: term list strictly descending under the order it
/// carries. No zero coefficients, no duplicate monomials.
template <class K>
class Polynomial {
  public:
    struct Term {
        Monomial mon;
        K coeff;
    };

    Polynomial() : ord_(MonomialOrder::degrevlex()) {}
    explicit Polynomial(MonomialOrder ord) : ord_(ord) {}
    Polynomial(MonomialOrder ord, std::vector<Term> terms) : ord_(ord), terms_(std::move(terms)) {
        normalize();
    }
    static Polynomial constant(std::size_t nvars, const K& c, MonomialOrder ord) {
        Polynomial p(ord);
        if (!c.is_zero()) p.terms_.push_back({Monomial(nvars), c});
        return p;
    }
    static Polynomial monomial(Monomial m, const K& c, MonomialOrder ord) {
        Polynomial p(ord);
        if (!c.is_zero()) p.terms_.push_back({std::move(m), c});
        return p;
    }
    static Polynomial variable(std::size_t nvars, std::size_t i, const K& one, MonomialOrder ord) {
        Monomial m(nvars);
        m[i] = 1;
        return monomial(std::move(m), one, ord);
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const MonomialOrder& order() const { return ord_; }
    std::size_t nvars() const { return terms_.empty() ? 0 : terms_.front().mon.nvars(); }

    const Monomial& lead_monomial() const { require_nonzero(); return terms_.front().mon; }
    const K& lead_coeff() const { require_nonzero(); return terms_.front().coeff; }
    std::uint32_t degree() const {
        std::uint32_t d = 0;
        for (auto& t : terms_) d = std::max(d, t.mon.degree());
        return d;
    }
    /// total degree within a variable range; 0 for the zero polynomial
    std::uint32_t degree_range(std::size_t lo, std::size_t hi) const {
        std::uint32_t d = 0;
        for (auto& t : terms_) d = std::max(d, t.mon.degree_range(lo, hi));
        return d;
    }
    bool is_homogeneous_range(std::size_t lo, std::size_t hi) const {
        if (terms_.empty()) return true;
        auto d = terms_.front().mon.degree_range(lo, hi);
        for (auto& t : terms_)
            if (t.mon.degree_range(lo, hi) != d) return false;
        return true;
    }
    bool free_of_range(std::size_t lo, std::size_t hi) const {
        for (auto& t : terms_)
            if (t.mon.degree_range(lo, hi) > 0) return false;
        return true;
    }

    Polynomial with_order(MonomialOrder ord) const {
        Polynomial r(ord, terms_);
        return r;
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }
    Polynomial operator+(const Polynomial& o) const { return merged(o, false); }
    Polynomial operator-(const Polynomial& o) const { return merged(o, true); }

    Polynomial operator*(const Polynomial& o) const {
        check_order(o);
        Polynomial r(ord_);
        if (is_zero() || o.is_zero()) return r;
        auto cmp = [this](const Monomial& a, const Monomial& b) { return ord_.greater(a, b); };
        std::map<Monomial, K, decltype(cmp)> acc(cmp);
        for (auto& a : terms_)
            for (auto& b : o.terms_) {
                Monomial m = a.mon * b.mon;
                K c = a.coeff * b.coeff;
                auto it = acc.find(m);
                if (it == acc.end()) acc.emplace(std::move(m), std::move(c));
                else it->second += c;
            }
        for (auto& [m, c] : acc)
            if (!c.is_zero()) r.terms_.push_back({m, c});
        return r;
    }
    Polynomial scaled(const K& c) const {
        Polynomial r(ord_);
        if (c.is_zero()) return r;
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.coeff = t.coeff * c;
        return r;
    }
    Polynomial times_monomial(const Monomial& m, const K& c) const {
        Polynomial r(ord_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (auto& t : terms_) r.terms_.push_back({t.mon * m, t.coeff * c});
        return r;
    }
    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(lead_coeff().inv());
    }

    bool operator==(const Polynomial& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mon != o.terms_[i].mon || !(terms_[i].coeff == o.terms_[i].coeff)) return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// substitute: variable i becomes img(i), a polynomial over a possibly
    /// different variable list, all images under one common order
    template <class GetImage>
    Polynomial substituted(std::size_t out_nvars, MonomialOrder out_ord, GetImage img) const {
        Polynomial acc(out_ord);
        for (auto& t : terms_) {
            Polynomial prod = Polynomial::constant(out_nvars, t.coeff, out_ord);
            for (std::size_t i = 0; i < t.mon.nvars(); ++i)
                for (std::uint32_t e = 0; e < t.mon[i]; ++e) prod = prod * img(i);
            acc = acc + prod;
        }
        return acc;
    }

  private:
    void require_nonzero() const {
        if (terms_.empty()) throw std::logic_error("lead term of zero polynomial");
    }
    void check_order(const Polynomial& o) const {
        if (!o.terms_.empty() && !terms_.empty() && !(ord_ == o.ord_))
            throw std::logic_error("mixing polynomials with different monomial orders");
    }
    Polynomial merged(const Polynomial& o, bool subtract) const {
        check_order(o);
        Polynomial r(ord_);
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            if (j == o.terms_.size() || (i < terms_.size() && ord_.greater(terms_[i].mon, o.terms_[j].mon))) {
                r.terms_.push_back(terms_[i++]);
            } else if (i == terms_.size() || ord_.greater(o.terms_[j].mon, terms_[i].mon)) {
                K c = subtract ? -o.terms_[j].coeff : o.terms_[j].coeff;
                if (!c.is_zero()) r.terms_.push_back({o.terms_[j].mon, c});
                ++j;
            } else {
                K c = subtract ? terms_[i].coeff - o.terms_[j].coeff : terms_[i].coeff + o.terms_[j].coeff;
                if (!c.is_zero()) r.terms_.push_back({terms_[i].mon, c});
                ++i, ++j;
            }
        }
        return r;
    }
    void normalize() {
        auto cmp = [this](const Term& a, const Term& b) { return ord_.greater(a.mon, b.mon); };
        std::stable_sort(terms_.begin(), terms_.end(), cmp);
        std::vector<Term> out;
        for (auto& t : terms_) {
            if (!out.empty() && out.back().mon == t.mon) out.back().coeff += t.coeff;
            else out.push_back(t);
            if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
        }
        terms_ = std::move(out);
    }

    MonomialOrder ord_;
    std::vector<Term> terms_;
};

/// deterministic comparison used to sort bases: degree, then order, and the
/// order is total on monomials so no further tiebreak is needed for distinct
/// lead terms; falls back to full term-list comparison
template <class K>
int compare_polys(const Polynomial<K>& a, const Polynomial<K>& b, const MonomialOrder& ord) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero() ? 0 : (a.is_zero() ? -1 : 1);
    auto da = a.lead_monomial().degree(), db = b.lead_monomial().degree();
    if (da != db) return da < db ? -1 : 1;
    int c = ord.compare(a.lead_monomial(), b.lead_monomial());
    if (c) return c;
    auto na = a.term_count(), nb = b.term_count();
    for (std::size_t i = 0; i < std::min(na, nb); ++i) {
        c = ord.compare(a.terms()[i].mon, b.terms()[i].mon);
        if (c) return c;
    }
    return na == nb ? 0 : (na < nb ? -1 : 1);
}

// ---------------------------------------------------------------------------
// printing and parsing: plain ASCII grammar, terms like 3/2*x^2*y - 5
// ---------------------------------------------------------------------------

template <class K>
std::string poly_to_string(const Polynomial<K>& p, const std::vector<std::string>& vars) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : p.terms()) {
        K c = t.coeff;
        if (first) {
            if (c.is_negative()) {
                os << "-";
                c = -c;
            }
        } else {
            if (c.is_negative()) {
                os << " - ";
                c = -c;
            } else {
                os << " + ";
            }
        }
        bool has_mon = !t.mon.is_one();
        if (!has_mon || !c.is_one()) {
            os << c.str();
            if (has_mon) os << "*";
        }
        bool star = false;
        for (std::size_t i = 0; i < t.mon.nvars(); ++i) {
            if (!t.mon[i]) continue;
            if (star) os << "*";
            os << vars[i];
            if (t.mon[i] > 1) os << "^" << t.mon[i];
            star = true;
        }
        first = false;
    }
    return os.str();
}

namespace detail {

inline void skip_ws(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

}  // namespace detail

/// Parses sums of terms; a term is a '*'-separated product of integer or a/b
/// literals and var^exp factors, with optional leading sign per term.
template <class F>
Polynomial<typename F::Elem> parse_polynomial(const std::string& src, const F& field,
                                              const std::vector<std::string>& vars, MonomialOrder ord) {
    using K = typename F::Elem;
    using P = Polynomial<K>;
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(i) + ": " + msg +
                                    " in '" + src + "'");
    };
    auto var_index = [&](const std::string& name) -> std::size_t {
        for (std::size_t v = 0; v < vars.size(); ++v)
            if (vars[v] == name) return v;
        fail("unknown variable '" + name + "'");
        return 0;
    };

    P result(ord);
    detail::skip_ws(src, i);
    if (i == src.size()) fail("empty polynomial");
    bool first_term = true;
    while (i < src.size()) {
        int sign = 1;
        detail::skip_ws(src, i);
        if (!first_term) {
            if (src[i] == '+') sign = 1;
            else if (src[i] == '-') sign = -1;
            else fail("expected '+' or '-'");
            ++i;
        } else if (src[i] == '-') {
            sign = -1;
            ++i;
        } else if (src[i] == '+') {
            ++i;
        }
        detail::skip_ws(src, i);

        K coeff = field.one();
        Monomial mon(vars.size());
        bool saw_factor = false;
        while (true) {
            detail::skip_ws(src, i);
            if (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
                std::size_t j = i;
                while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
                std::string lit = src.substr(i, j - i);
                i = j;
                detail::skip_ws(src, i);
                if (i < src.size() && src[i] == '/') {
                    ++i;
                    detail::skip_ws(src, i);
                    std::size_t k = i;
                    while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
                    if (k == i) fail("expected denominator");
                    lit += "/" + src.substr(i, k - i);
                    i = k;
                }
                coeff = coeff * field.from_string(lit);
            } else if (i < src.size() &&
                       (std::isalpha(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
                std::size_t j = i;
                while (j < src.size() &&
                       (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                    ++j;
                std::size_t v = var_index(src.substr(i, j - i));
                i = j;
                std::uint32_t exp = 1;
                detail::skip_ws(src, i);
                if (i < src.size() && src[i] == '^') {
                    ++i;
                    detail::skip_ws(src, i);
                    std::size_t k = i;
                    while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
                    if (k == i) fail("expected exponent");
                    exp = static_cast<std::uint32_t>(std::stoul(src.substr(i, k - i)));
                    i = k;
                }
                mon[v] += exp;
            } else {
                fail("expected a coefficient or variable");
            }
            saw_factor = true;
            detail::skip_ws(src, i);
            if (i < src.size() && src[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!saw_factor) fail("empty term");
        if (sign < 0) coeff = -coeff;
        result = result + P::monomial(std::move(mon), coeff, ord);
        detail::skip_ws(src, i);
        first_term = false;
    }
    return result;
}

}  // namespace modrees

#endif
