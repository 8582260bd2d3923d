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

#ifndef MODREES_RING_HPP
#define MODREES_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modgb.hpp"
#include "polynomial.hpp"

namespace modrees {

namespace detail {

inline bool staircase_divisible(const std::vector<Monomial>& leads, const Monomial& m) {
    for (auto& l : leads)
        if (l.divides(m)) return true;
    return false;
}

inline void staircase_enumerate(const std::vector<Monomial>& leads, Monomial& cur, std::size_t v,
                                std::size_t nvars, std::vector<Monomial>& out) {
    if (staircase_divisible(leads, cur)) return;
    if (v == nvars) {
        out.push_back(cur);
        return;
    }
    for (std::uint32_t e = 0;; ++e) {
        cur[v] = e;
        if (staircase_divisible(leads, cur)) break;
        staircase_enumerate(leads, cur, v + 1, nvars, out);
    }
    cur[v] = 0;
}

}  // namespace detail

/// monomials outside the lead-term ideal, sorted ascending under ord, when
/// that staircase is finite
inline std::optional<std::vector<Monomial>> staircase_monomials(const std::vector<Monomial>& leads,
                                                                std::size_t nvars,
                                                                const MonomialOrder& ord) {
    // a variable with no pure power among the lead terms makes it infinite
    for (std::size_t v = 0; v < nvars; ++v) {
        bool bounded = false;
        for (auto& m : leads) {
            bool pure = m[v] > 0;
            for (std::size_t w = 0; w < nvars && pure; ++w)
                if (w != v && m[w] > 0) pure = false;
            if (pure) bounded = true;
        }
        if (!bounded) return std::nullopt;
    }
    std::vector<Monomial> out;
    Monomial cur(nvars);
    detail::staircase_enumerate(leads, cur, 0, nvars, out);
    std::sort(out.begin(), out.end(), [&ord](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
    return out;
}

/// Computable base ring A = k[x_1..x_n]/I, carried with the reduced Groebner
/// basis of I under degrevlex. Immutable; cheap to copy (shared data).
template <class F>
class Ring {
  public:
    using K = typename F::Elem;
    using Poly = Polynomial<K>;

    Ring(F field, std::vector<std::string> vars, const std::vector<Poly>& ideal_gens = {}) {
        auto data = std::make_shared<Data>();
        data->field = field;
        data->vars = std::move(vars);
        data->ord = MonomialOrder::degrevlex();
        data->ideal_gb = buchberger(ideal_gens, data->ord);
        for (auto& g : data->ideal_gb)
            if (!g.is_zero() && g.lead_monomial().is_one())
                throw std::invalid_argument("defining ideal is the unit ideal");
        d_ = std::move(data);
    }

    const F& field() const { return d_->field; }
    const std::vector<std::string>& vars() const { return d_->vars; }
    std::size_t nvars() const { return d_->vars.size(); }
    const MonomialOrder& order() const { return d_->ord; }
    const std::vector<Poly>& ideal() const { return d_->ideal_gb; }
    bool is_polynomial_ring() const { return d_->ideal_gb.empty(); }

    Poly reduce(const Poly& p) const {
        if (d_->ideal_gb.empty()) return p.with_order(d_->ord);
        return normal_form(p, d_->ideal_gb, d_->ord);
    }

    Poly zero() const { return Poly(d_->ord); }
    Poly one() const { return Poly::constant(nvars(), d_->field.one(), d_->ord); }
    Poly constant(const K& c) const { return Poly::constant(nvars(), c, d_->ord); }
    Poly constant_int(long n) const { return constant(d_->field.from_int(n)); }
    Poly var(std::size_t i) const {
        if (i >= nvars()) throw std::invalid_argument("variable index out of range");
        return Poly::variable(nvars(), i, d_->field.one(), d_->ord);
    }

    Poly parse(const std::string& s) const { return reduce(parse_polynomial(s, d_->field, d_->vars, d_->ord)); }
    std::string str(const Poly& p) const { return poly_to_string(p, d_->vars); }

    bool operator==(const Ring& o) const {
        if (d_ == o.d_) return true;
        if (!(d_->field == o.d_->field) || d_->vars != o.d_->vars) return false;
        if (d_->ideal_gb.size() != o.d_->ideal_gb.size()) return false;
        for (std::size_t i = 0; i < d_->ideal_gb.size(); ++i)
            if (!(d_->ideal_gb[i] == o.d_->ideal_gb[i])) return false;
        return true;
    }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    /// monomials outside the lead-term ideal of I, i.e. a k-basis of A, when
    /// that staircase is finite
    std::optional<std::vector<Monomial>> standard_monomials() const {
        std::vector<Monomial> lead;
        for (auto& g : d_->ideal_gb) lead.push_back(g.lead_monomial());
        return staircase_monomials(lead, nvars(), d_->ord);
    }

    bool is_finite_dimensional() const { return standard_monomials().has_value(); }

  private:
    struct Data {
        F field;
        std::vector<std::string> vars;
        MonomialOrder ord = MonomialOrder::degrevlex();
        std::vector<Poly> ideal_gb;
    };

    std::shared_ptr<const Data> d_;
};

}  // namespace modrees

#endif
