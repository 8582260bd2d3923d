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

#ifndef MODREES_MODULE_HPP
#define MODREES_MODULE_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "linsys.hpp"
#include "matrix.hpp"

namespace modrees {

/// Finitely presented A-module: a fixed ordered generator list and a relation
/// matrix whose columns are the relations. The zero module has no generators.
/// Values are immutable; the Groebner data of the relation span is cached
/// lazily behind shared state.
template <class F>
class FpModule {
  public:
    using K = typename F::Elem;

    FpModule(const Ring<F>& ring, std::size_t gens, const Mat<F>& rels) {
        if (rels.rows() != gens) throw std::invalid_argument("relation matrix must have one row per generator");
        auto data = std::make_shared<Data>(ring, gens, Mat<F>(gens, rels.cols(), ring));
        for (std::size_t i = 0; i < gens; ++i)
            for (std::size_t j = 0; j < rels.cols(); ++j) data->rels.at(i, j) = ring.reduce(rels.at(i, j));
        d_ = std::move(data);
    }

    const Ring<F>& ring() const { return d_->ring; }
    std::size_t gens() const { return d_->gens; }
    const Mat<F>& rels() const { return d_->rels; }

    const ColumnSpan<F>& rel_span() const {
        std::call_once(d_->once, [this] { d_->span.emplace(d_->ring, d_->rels); });
        return *d_->span;
    }

    bool is_zero() const {
        if (d_->gens == 0) return true;
        for (std::size_t i = 0; i < d_->gens; ++i) {
            Mat<F> e(d_->gens, 1, d_->ring);
            e.at(i, 0) = d_->ring.one();
            if (!rel_span().contains(e)) return false;
        }
        return true;
    }

    /// identical presentation (not isomorphism)
    bool same_presentation(const FpModule& o) const {
        return d_->ring == o.d_->ring && d_->gens == o.d_->gens && d_->rels == o.d_->rels;
    }

  private:
    struct Data {
        Data(const Ring<F>& r, std::size_t g, Mat<F> m) : ring(r), gens(g), rels(std::move(m)) {}
        Ring<F> ring;
        std::size_t gens;
        Mat<F> rels;
        mutable std::once_flag once;
        mutable std::optional<ColumnSpan<F>> span;
    };
    std::shared_ptr<const Data> d_;
};

/// Morphism of finitely presented modules, stored on generators. Constructing
/// one checks that source relations land in the target relation span.
template <class F>
class ModuleMap {
  public:
    using K = typename F::Elem;

    ModuleMap(const FpModule<F>& src, const FpModule<F>& tgt, const Mat<F>& mat)
        : src_(src), tgt_(tgt), mat_(tgt.gens(), src.gens(), src.ring()) {
        if (src.ring() != tgt.ring()) throw std::invalid_argument("module map across different rings");
        if (mat.rows() != tgt.gens() || mat.cols() != src.gens())
            throw std::invalid_argument("module map matrix shape mismatch");
        for (std::size_t i = 0; i < mat.rows(); ++i)
            for (std::size_t j = 0; j < mat.cols(); ++j) mat_.at(i, j) = src.ring().reduce(mat.at(i, j));
        auto moved = mat_mul(src.ring(), mat_, src.rels());
        for (std::size_t j = 0; j < moved.cols(); ++j) {
            if (!tgt.rel_span().contains(moved.column(j, src.ring())))
                throw std::invalid_argument("matrix does not respect module relations");
        }
    }

    const FpModule<F>& source() const { return src_; }
    const FpModule<F>& target() const { return tgt_; }
    const Mat<F>& matrix() const { return mat_; }
    const Ring<F>& ring() const { return src_.ring(); }

    static ModuleMap identity(const FpModule<F>& m) {
        return ModuleMap(m, m, Mat<F>::identity(m.gens(), m.ring()));
    }
    static ModuleMap zero(const FpModule<F>& src, const FpModule<F>& tgt) {
        return ModuleMap(src, tgt, Mat<F>(tgt.gens(), src.gens(), src.ring()));
    }

  private:
    FpModule<F> src_, tgt_;
    Mat<F> mat_;
};

template <class F>
ModuleMap<F> compose(const ModuleMap<F>& g, const ModuleMap<F>& f) {
    if (!g.source().same_presentation(f.target()))
        throw std::invalid_argument("composition source/target mismatch");
    return ModuleMap<F>(f.source(), g.target(), mat_mul(f.ring(), g.matrix(), f.matrix()));
}

/// equality as maps: the difference factors through the target relations
template <class F>
bool maps_equal(const ModuleMap<F>& f, const ModuleMap<F>& g) {
    if (!f.source().same_presentation(g.source()) || !f.target().same_presentation(g.target()))
        return false;
    auto diff = mat_sub(f.ring(), f.matrix(), g.matrix());
    for (std::size_t j = 0; j < diff.cols(); ++j)
        if (!f.target().rel_span().contains(diff.column(j, f.ring()))) return false;
    return true;
}

template <class F>
bool is_zero_map(const ModuleMap<F>& f) {
    return maps_equal(f, ModuleMap<F>::zero(f.source(), f.target()));
}

// ---------------------------------------------------------------------------
// basic constructions
// ---------------------------------------------------------------------------

template <class F>
FpModule<F> free_module(const Ring<F>& ring, std::size_t rank) {
    return FpModule<F>(ring, rank, Mat<F>(rank, 0, ring));
}

/// canonical surjection from the free module on M's generators
template <class F>
ModuleMap<F> free_cover(const FpModule<F>& m) {
    return ModuleMap<F>(free_module(m.ring(), m.gens()), m, Mat<F>::identity(m.gens(), m.ring()));
}

template <class F>
struct DirectSum {
    FpModule<F> module;
    ModuleMap<F> inj1, inj2, proj1, proj2;
};

template <class F>
DirectSum<F> direct_sum(const FpModule<F>& a, const FpModule<F>& b) {
    const auto& R = a.ring();
    if (R != b.ring()) throw std::invalid_argument("direct sum across different rings");
    Mat<F> rels(a.gens() + b.gens(), a.rels().cols() + b.rels().cols(), R);
    for (std::size_t i = 0; i < a.gens(); ++i)
        for (std::size_t j = 0; j < a.rels().cols(); ++j) rels.at(i, j) = a.rels().at(i, j);
    for (std::size_t i = 0; i < b.gens(); ++i)
        for (std::size_t j = 0; j < b.rels().cols(); ++j)
            rels.at(a.gens() + i, a.rels().cols() + j) = b.rels().at(i, j);
    FpModule<F> sum(R, a.gens() + b.gens(), rels);

    Mat<F> i1(sum.gens(), a.gens(), R), i2(sum.gens(), b.gens(), R);
    Mat<F> p1(a.gens(), sum.gens(), R), p2(b.gens(), sum.gens(), R);
    for (std::size_t i = 0; i < a.gens(); ++i) i1.at(i, i) = p1.at(i, i) = R.one();
    for (std::size_t i = 0; i < b.gens(); ++i)
        i2.at(a.gens() + i, i) = p2.at(i, a.gens() + i) = R.one();
    return {sum, ModuleMap<F>(a, sum, i1), ModuleMap<F>(b, sum, i2), ModuleMap<F>(sum, a, p1),
            ModuleMap<F>(sum, b, p2)};
}

/// stack two maps with a common source into the direct sum of the targets
template <class F>
ModuleMap<F> pair_into_sum(const ModuleMap<F>& f, const ModuleMap<F>& g, const DirectSum<F>& sum) {
    if (!f.source().same_presentation(g.source())) throw std::invalid_argument("pairing source mismatch");
    return ModuleMap<F>(f.source(), sum.module, mat_vstack(f.ring(), f.matrix(), g.matrix()));
}

// ---------------------------------------------------------------------------
// kernel / image / cokernel
// ---------------------------------------------------------------------------

namespace detail {

/// columns c with f*c inside the relation span of the target: the syzygies of
/// [f.matrix | target relations] projected to the first block
template <class F>
Mat<F> preimage_of_relations(const ModuleMap<F>& f) {
    const auto& R = f.ring();
    auto stacked = mat_hstack(R, f.matrix(), f.target().rels());
    auto syz = ColumnSpan<F>(R, stacked).syzygies();
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < syz.cols(); ++j) {
        bool nonzero = false;
        for (std::size_t i = 0; i < f.source().gens(); ++i)
            nonzero = nonzero || !syz.at(i, j).is_zero();
        if (nonzero) keep.push_back(j);
    }
    Mat<F> out(f.source().gens(), keep.size(), R);
    for (std::size_t j = 0; j < keep.size(); ++j)
        for (std::size_t i = 0; i < f.source().gens(); ++i) out.at(i, j) = syz.at(i, keep[j]);
    return out;
}

}  // namespace detail

template <class F>
struct Kernel {
    FpModule<F> module;
    ModuleMap<F> inclusion;  // into the source of f
};

template <class F>
Kernel<F> kernel(const ModuleMap<F>& f) {
    const auto& R = f.ring();
    auto w = detail::preimage_of_relations(f);  // generators of ker inside A^gens(src)
    auto stacked = mat_hstack(R, w, f.source().rels());
    auto syz = ColumnSpan<F>(R, stacked).syzygies();
    Mat<F> rels(w.cols(), syz.cols(), R);
    for (std::size_t j = 0; j < syz.cols(); ++j)
        for (std::size_t i = 0; i < w.cols(); ++i) rels.at(i, j) = syz.at(i, j);
    FpModule<F> ker(R, w.cols(), rels);
    return {ker, ModuleMap<F>(ker, f.source(), w)};
}

template <class F>
struct Image {
    FpModule<F> module;
    ModuleMap<F> epi;   // source of f onto the image
    ModuleMap<F> mono;  // image into the target of f
};

template <class F>
Image<F> image(const ModuleMap<F>& f) {
    const auto& R = f.ring();
    auto w = detail::preimage_of_relations(f);
    FpModule<F> img(R, f.source().gens(), w);
    return {img, ModuleMap<F>(f.source(), img, Mat<F>::identity(f.source().gens(), R)),
            ModuleMap<F>(img, f.target(), f.matrix())};
}

template <class F>
struct Cokernel {
    FpModule<F> module;
    ModuleMap<F> projection;  // from the target of f
};

template <class F>
Cokernel<F> cokernel(const ModuleMap<F>& f) {
    const auto& R = f.ring();
    FpModule<F> coker(R, f.target().gens(), mat_hstack(R, f.matrix(), f.target().rels()));
    return {coker, ModuleMap<F>(f.target(), coker, Mat<F>::identity(f.target().gens(), R))};
}

template <class F>
bool is_surjective(const ModuleMap<F>& f) {
    return cokernel(f).module.is_zero();
}

template <class F>
bool is_injective(const ModuleMap<F>& f) {
    return kernel(f).module.is_zero();
}

/// psi with mono o psi = f, when f lands inside the subobject
template <class F>
std::optional<ModuleMap<F>> factor_through_mono(const ModuleMap<F>& f, const ModuleMap<F>& mono) {
    const auto& R = f.ring();
    if (!f.target().same_presentation(mono.target()))
        throw std::invalid_argument("factorization targets differ");
    const auto& X = f.source();
    const auto& Y = mono.source();
    LinearSystem<F> sys(R);
    auto psi = sys.add_unknown(Y.gens(), X.gens());
    auto w = sys.add_unknown(Y.rels().cols(), X.rels().cols());
    auto v = sys.add_unknown(f.target().rels().cols(), X.gens());
    // mono * psi + rels_Z * v = f
    auto eq1 = sys.add_equation(f.matrix());
    sys.add_term(eq1, psi, mono.matrix(), std::nullopt);
    sys.add_term(eq1, v, f.target().rels(), std::nullopt);
    // psi * rels_X = rels_Y * w   (psi is a well-defined map)
    auto eq2 = sys.add_equation(Mat<F>(Y.gens(), X.rels().cols(), R));
    sys.add_term(eq2, psi, std::nullopt, X.rels());
    sys.add_term(eq2, w, mat_neg(R, Y.rels()), std::nullopt);
    auto sol = sys.solve();
    if (!sol) return std::nullopt;
    return ModuleMap<F>(X, Y, (*sol)[psi]);
}

/// retraction r with r o f = id when f splits
template <class F>
std::optional<ModuleMap<F>> split_retraction(const ModuleMap<F>& f) {
    const auto& R = f.ring();
    const auto& M = f.source();
    const auto& N = f.target();
    LinearSystem<F> sys(R);
    auto r = sys.add_unknown(M.gens(), N.gens());
    auto y = sys.add_unknown(M.rels().cols(), N.rels().cols());
    auto z = sys.add_unknown(M.rels().cols(), M.gens());
    // r * rels_N = rels_M * y   (r is a well-defined map N -> M)
    auto eq1 = sys.add_equation(Mat<F>(M.gens(), N.rels().cols(), R));
    sys.add_term(eq1, r, std::nullopt, N.rels());
    sys.add_term(eq1, y, mat_neg(R, M.rels()), std::nullopt);
    // r * f - rels_M * z = id    (r o f = id modulo relations of M)
    auto eq2 = sys.add_equation(Mat<F>::identity(M.gens(), R));
    sys.add_term(eq2, r, std::nullopt, f.matrix());
    sys.add_term(eq2, z, mat_neg(R, M.rels()), std::nullopt);
    auto sol = sys.solve();
    if (!sol) return std::nullopt;
    return ModuleMap<F>(N, M, (*sol)[r]);
}

template <class F>
bool is_split_mono(const ModuleMap<F>& f) {
    return split_retraction(f).has_value();
}

// ---------------------------------------------------------------------------
// Hom modules
// ---------------------------------------------------------------------------

/// Hom_A(M, N) presented as a module together with the two-way interpretation
/// between its elements and actual morphisms M -> N.
template <class F>
class HomModule {
  public:
    HomModule(const FpModule<F>& m, const FpModule<F>& n) : m_(m), n_(n), module_(build(m, n)) {}

    const FpModule<F>& module() const { return *module_; }
    const FpModule<F>& hom_source() const { return m_; }
    const FpModule<F>& hom_target() const { return n_; }
    std::size_t gen_count() const { return gens_.size(); }
    /// the k-th generator as an actual morphism
    const Mat<F>& gen_matrix(std::size_t k) const { return gens_[k]; }

    /// element (coordinate column over the generators) -> morphism M -> N
    ModuleMap<F> interpret(const Mat<F>& coords) const {
        const auto& R = m_.ring();
        if (coords.rows() != gens_.size() || coords.cols() != 1)
            throw std::invalid_argument("hom element shape mismatch");
        Mat<F> acc(n_.gens(), m_.gens(), R);
        for (std::size_t k = 0; k < gens_.size(); ++k)
            for (std::size_t i = 0; i < n_.gens(); ++i)
                for (std::size_t j = 0; j < m_.gens(); ++j)
                    acc.at(i, j) = R.reduce(acc.at(i, j) + coords.at(k, 0) * gens_[k].at(i, j));
        return ModuleMap<F>(m_, n_, acc);
    }

    /// morphism -> coordinates over the generators (exact inverse up to
    /// relations); a morphism that fails to lift would be an engine bug
    Mat<F> coordinates_of(const ModuleMap<F>& f) const {
        const auto& R = m_.ring();
        auto c = span_->lift(mat_vec(R, f.matrix()));
        if (!c) throw std::logic_error("valid morphism failed to lift against Hom presentation");
        Mat<F> out(gens_.size(), 1, R);
        for (std::size_t k = 0; k < gens_.size(); ++k) out.at(k, 0) = c->at(k, 0);
        return out;
    }

  private:
    FpModule<F> build(const FpModule<F>& m, const FpModule<F>& n) {
        const auto& R = m.ring();
        if (R != n.ring()) throw std::invalid_argument("hom across different rings");
        const std::size_t g = m.gens(), h = n.gens();
        const std::size_t r = m.rels().cols(), s = n.rels().cols();

        // solutions (phi, x) of phi*R_M = R_N*x, flattened
        Mat<F> eq(h * r, h * g + s * r, R);
        {
            auto a = mat_kron(R, m.rels().transpose(R), Mat<F>::identity(h, R));
            for (std::size_t i = 0; i < a.rows(); ++i)
                for (std::size_t j = 0; j < a.cols(); ++j) eq.at(i, j) = a.at(i, j);
            auto b = mat_kron(R, Mat<F>::identity(r, R), n.rels());
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t j = 0; j < b.cols(); ++j) eq.at(i, h * g + j) = mat_neg(R, b).at(i, j);
        }
        auto sols = ColumnSpan<F>(R, eq).syzygies();
        for (std::size_t j = 0; j < sols.cols(); ++j) {
            Mat<F> phi(h, g, R);
            bool nonzero = false;
            for (std::size_t c = 0; c < g; ++c)
                for (std::size_t rr = 0; rr < h; ++rr) {
                    phi.at(rr, c) = sols.at(rr + h * c, j);
                    nonzero = nonzero || !phi.at(rr, c).is_zero();
                }
            if (nonzero) gens_.push_back(std::move(phi));
        }

        // trivial morphisms: columns of R_N placed in every generator slot
        std::vector<Mat<F>> trivial;
        for (std::size_t k = 0; k < s; ++k)
            for (std::size_t j = 0; j < g; ++j) {
                Mat<F> b(h, g, R);
                for (std::size_t i = 0; i < h; ++i) b.at(i, j) = n.rels().at(i, k);
                trivial.push_back(std::move(b));
            }

        Mat<F> zb(h * g, gens_.size() + trivial.size(), R);
        for (std::size_t j = 0; j < gens_.size(); ++j) {
            auto v = mat_vec(R, gens_[j]);
            for (std::size_t i = 0; i < v.rows(); ++i) zb.at(i, j) = v.at(i, 0);
        }
        for (std::size_t j = 0; j < trivial.size(); ++j) {
            auto v = mat_vec(R, trivial[j]);
            for (std::size_t i = 0; i < v.rows(); ++i) zb.at(i, gens_.size() + j) = v.at(i, 0);
        }
        span_.emplace(R, zb);
        auto rels_full = span_->syzygies();
        Mat<F> rels(gens_.size(), rels_full.cols(), R);
        for (std::size_t j = 0; j < rels_full.cols(); ++j)
            for (std::size_t i = 0; i < gens_.size(); ++i) rels.at(i, j) = rels_full.at(i, j);
        return FpModule<F>(R, gens_.size(), rels);
    }

    FpModule<F> m_, n_;
    std::vector<Mat<F>> gens_;
    mutable std::optional<ColumnSpan<F>> span_;
    std::optional<FpModule<F>> module_;
};

template <class F>
HomModule<F> hom_module(const FpModule<F>& m, const FpModule<F>& n) {
    return HomModule<F>(m, n);
}

// ---------------------------------------------------------------------------
// duals and biduals
// ---------------------------------------------------------------------------

template <class F>
HomModule<F> dual(const FpModule<F>& m) {
    return HomModule<F>(m, free_module(m.ring(), 1));
}

/// contravariant functoriality: Hom(f, A): N* -> M*
template <class F>
ModuleMap<F> dual_map(const ModuleMap<F>& f, const HomModule<F>& dual_src, const HomModule<F>& dual_tgt) {
    const auto& R = f.ring();
    Mat<F> mat(dual_src.gen_count(), dual_tgt.gen_count(), R);
    for (std::size_t k = 0; k < dual_tgt.gen_count(); ++k) {
        auto pulled = mat_mul(R, dual_tgt.gen_matrix(k), f.matrix());  // psi_k o f : M -> A
        auto coords = dual_src.coordinates_of(ModuleMap<F>(f.source(), free_module(R, 1), pulled));
        for (std::size_t i = 0; i < dual_src.gen_count(); ++i) mat.at(i, k) = coords.at(i, 0);
    }
    return ModuleMap<F>(dual_tgt.module(), dual_src.module(), mat);
}

template <class F>
ModuleMap<F> dual_map(const ModuleMap<F>& f) {
    auto ds = dual(f.source());
    auto dt = dual(f.target());
    return dual_map(f, ds, dt);
}

template <class F>
struct BidualData {
    HomModule<F> dual;         // M*
    HomModule<F> bidual;       // M** = (M*)*
    ModuleMap<F> evaluation;   // M -> M**
};

template <class F>
BidualData<F> bidual_map(const FpModule<F>& m) {
    const auto& R = m.ring();
    HomModule<F> d(m, free_module(R, 1));
    HomModule<F> dd(d.module(), free_module(R, 1));
    Mat<F> mat(dd.gen_count(), m.gens(), R);
    for (std::size_t k = 0; k < m.gens(); ++k) {
        // evaluation against the k-th generator, as a functional on M*
        Mat<F> row(1, d.gen_count(), R);
        for (std::size_t i = 0; i < d.gen_count(); ++i) row.at(0, i) = d.gen_matrix(i).at(0, k);
        auto coords = dd.coordinates_of(ModuleMap<F>(d.module(), free_module(R, 1), row));
        for (std::size_t i = 0; i < dd.gen_count(); ++i) mat.at(i, k) = coords.at(i, 0);
    }
    ModuleMap<F> ev(m, dd.module(), mat);
    return {std::move(d), std::move(dd), std::move(ev)};
}

/// torsionless quotient: image of the evaluation map M -> M**
template <class F>
struct Torsionless {
    FpModule<F> module;       // M^tl
    ModuleMap<F> projection;  // M ->> M^tl
    ModuleMap<F> inclusion;   // M^tl into M**
};

template <class F>
Torsionless<F> tl(const FpModule<F>& m) {
    auto bd = bidual_map(m);
    auto im = image(bd.evaluation);
    return {im.module, im.epi, im.mono};
}

// ---------------------------------------------------------------------------
// tensor products
// ---------------------------------------------------------------------------

/// generator grid (i, j) -> flat index i * gens(N) + j
template <class F>
FpModule<F> tensor(const FpModule<F>& m, const FpModule<F>& n) {
    const auto& R = m.ring();
    if (R != n.ring()) throw std::invalid_argument("tensor across different rings");
    const std::size_t g = m.gens(), h = n.gens();
    Mat<F> rels(g * h, m.rels().cols() * h + g * n.rels().cols(), R);
    std::size_t col = 0;
    for (std::size_t k = 0; k < m.rels().cols(); ++k)
        for (std::size_t j = 0; j < h; ++j, ++col)
            for (std::size_t i = 0; i < g; ++i) rels.at(i * h + j, col) = m.rels().at(i, k);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t k = 0; k < n.rels().cols(); ++k, ++col)
            for (std::size_t j = 0; j < h; ++j) rels.at(i * h + j, col) = n.rels().at(j, k);
    return FpModule<F>(R, g * h, rels);
}

/// f tensor id_N
template <class F>
ModuleMap<F> tensor_map(const ModuleMap<F>& f, const FpModule<F>& n, const FpModule<F>& src_tensor,
                        const FpModule<F>& tgt_tensor) {
    const auto& R = f.ring();
    auto mat = mat_kron(R, f.matrix(), Mat<F>::identity(n.gens(), R));
    return ModuleMap<F>(src_tensor, tgt_tensor, mat);
}

template <class F>
ModuleMap<F> tensor_map(const ModuleMap<F>& f, const FpModule<F>& n) {
    return tensor_map(f, n, tensor(f.source(), n), tensor(f.target(), n));
}

}  // namespace modrees

#endif
