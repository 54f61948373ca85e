// Bounded nonnegatively graded chain complexes of finite-dimensional
// rational vector spaces, with chain maps, homology (chosen cycle-lift
// bases, first-pivot convention), quasi-isomorphism testing, Koszul-signed
// tensor products, braiding and mapping cylinders.
//
// Degree-n elements are column vectors of length dims[n]; the boundary
// d_n : C_n -> C_{n-1} is a dims[n-1] x dims[n] matrix. d o d = 0 is
// checked whenever a complex is constructed from raw data.

#ifndef COSEGAL_COMPLEX_HPP
#define COSEGAL_COMPLEX_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cosegal/matrix.hpp"

namespace cosegal {

class ChainComplex {
public:
    ChainComplex() = default;

    /// boundaries[n] = d_n for n >= 1; boundaries[0] is ignored and may be
    /// empty. Shapes and d o d = 0 are enforced.
    ChainComplex(std::vector<std::size_t> dims, std::vector<QMatrix> boundaries)
        : dims_(std::move(dims)), d_(std::move(boundaries)) {
        d_.resize(dims_.size());
        if (!dims_.empty()) d_[0] = QMatrix(0, dims_[0]);
        for (std::size_t n = 1; n < dims_.size(); ++n) {
            if (d_[n].rows != dims_[n - 1] || d_[n].cols != dims_[n])
                throw std::invalid_argument("ChainComplex: boundary shape mismatch at degree " +
                                            std::to_string(n));
            if (n >= 2 && !(d_[n - 1] * d_[n]).is_zero())
                throw std::invalid_argument("ChainComplex: d o d != 0 at degree " +
                                            std::to_string(n));
        }
        trim();
    }

    std::size_t top_degree() const { return dims_.empty() ? 0 : dims_.size() - 1; }
    std::size_t graded_length() const { return dims_.size(); }

    std::size_t dim(std::size_t n) const { return n < dims_.size() ? dims_[n] : 0; }
    const std::vector<std::size_t>& dims() const { return dims_; }

    /// d_n as a dims[n-1] x dims[n] matrix; d_0 has zero rows (degree -1 is 0).
    QMatrix boundary(std::size_t n) const {
        if (n == 0) return QMatrix(0, dim(0));
        if (n >= dims_.size()) return QMatrix(dim(n - 1), dim(n));
        return d_[n];
    }

    std::size_t total_dim() const {
        std::size_t t = 0;
        for (auto d : dims_) t += d;
        return t;
    }

    bool operator==(const ChainComplex& o) const { return dims_ == o.dims_ && d_ == o.d_; }
    bool operator!=(const ChainComplex& o) const { return !(*this == o); }

private:
    void trim() {
        while (!dims_.empty() && dims_.back() == 0) {
            dims_.pop_back();
            d_.pop_back();
        }
    }

    std::vector<std::size_t> dims_;
    std::vector<QMatrix> d_;
};

struct ChainMap {
    ChainComplex source;
    ChainComplex target;
    std::vector<QMatrix> components;  // components[n]: target.dim(n) x source.dim(n)

    QMatrix component(std::size_t n) const {
        if (n < components.size()) return components[n];
        return QMatrix(target.dim(n), source.dim(n));
    }
};

/// Builds a chain map, padding missing components with zero matrices and
/// checking every commuting square f d = d f exactly.
inline ChainMap make_chain_map(ChainComplex source, ChainComplex target,
                               std::vector<QMatrix> components) {
    ChainMap f{std::move(source), std::move(target), std::move(components)};
    std::size_t len = std::max(f.source.graded_length(), f.target.graded_length());
    f.components.resize(len);
    for (std::size_t n = 0; n < len; ++n) {
        QMatrix& c = f.components[n];
        if (c.rows == 0 && c.cols == 0) c = QMatrix(f.target.dim(n), f.source.dim(n));
        if (c.rows != f.target.dim(n) || c.cols != f.source.dim(n))
            throw std::invalid_argument("chain map: component shape mismatch at degree " +
                                        std::to_string(n));
    }
    for (std::size_t n = 1; n < len; ++n)
        if (f.component(n - 1) * f.source.boundary(n) != f.target.boundary(n) * f.component(n))
            throw std::invalid_argument("chain map: square fails at degree " + std::to_string(n));
    return f;
}

inline ChainMap identity_map(const ChainComplex& c) {
    std::vector<QMatrix> comps;
    for (std::size_t n = 0; n < c.graded_length(); ++n) comps.push_back(QMatrix::identity(c.dim(n)));
    return ChainMap{c, c, std::move(comps)};
}

inline ChainMap zero_map(const ChainComplex& source, const ChainComplex& target) {
    return make_chain_map(source, target, {});
}

inline ChainMap compose(const ChainMap& g, const ChainMap& f) {
    if (f.target != g.source) throw std::invalid_argument("compose: middle complex mismatch");
    std::size_t len = std::max(f.components.size(), g.components.size());
    std::vector<QMatrix> comps;
    for (std::size_t n = 0; n < len; ++n) comps.push_back(g.component(n) * f.component(n));
    return ChainMap{f.source, g.target, std::move(comps)};
}

inline ChainMap map_sum(const ChainMap& f, const ChainMap& g) {
    if (f.source != g.source || f.target != g.target)
        throw std::invalid_argument("map_sum: shape mismatch");
    std::size_t len = std::max(f.components.size(), g.components.size());
    std::vector<QMatrix> comps;
    for (std::size_t n = 0; n < len; ++n) comps.push_back(f.component(n) + g.component(n));
    return ChainMap{f.source, f.target, std::move(comps)};
}

inline bool is_degreewise_injective(const ChainMap& f) {
    for (std::size_t n = 0; n < f.source.graded_length(); ++n)
        if (rank(f.component(n)) != f.source.dim(n)) return false;
    return true;
}

inline bool is_degreewise_iso(const ChainMap& f) {
    for (std::size_t n = 0; n < std::max(f.source.graded_length(), f.target.graded_length()); ++n)
        if (f.source.dim(n) != f.target.dim(n) || rank(f.component(n)) != f.source.dim(n))
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Homology

struct Homology {
    std::vector<std::size_t> betti;
    std::vector<QMatrix> cycle_lifts;  // per degree: dims[n] x betti[n]
    std::vector<QMatrix> image_basis;  // per degree: dims[n] x rank(d_{n+1})
};

/// Chosen-basis homology. In each degree the boundary image basis is the
/// pivot-column set of d_{n+1}, and cycle lifts are the kernel basis
/// columns that extend it to a basis of the cycles (first-pivot order).
inline Homology homology(const ChainComplex& c) {
    Homology h;
    std::size_t len = c.graded_length();
    h.betti.resize(len);
    h.cycle_lifts.resize(len);
    h.image_basis.resize(len);
    for (std::size_t n = 0; n < len; ++n) {
        QMatrix cycles = (n == 0) ? QMatrix::identity(c.dim(0)) : kernel_basis(c.boundary(n));
        QMatrix dnext = c.boundary(n + 1);
        Rref rb = rref(dnext);
        QMatrix img(c.dim(n), rb.pivots.size());
        for (std::size_t k = 0; k < rb.pivots.size(); ++k)
            for (std::size_t i = 0; i < c.dim(n); ++i) img.at(i, k) = dnext.at(i, rb.pivots[k]);
        // Pick the cycle columns that enlarge the span of the image.
        Rref sel = rref(hstack(img, cycles));
        std::vector<std::size_t> chosen;
        for (auto p : sel.pivots)
            if (p >= img.cols) chosen.push_back(p - img.cols);
        QMatrix lifts(c.dim(n), chosen.size());
        for (std::size_t k = 0; k < chosen.size(); ++k)
            for (std::size_t i = 0; i < c.dim(n); ++i) lifts.at(i, k) = cycles.at(i, chosen[k]);
        h.betti[n] = chosen.size();
        h.cycle_lifts[n] = std::move(lifts);
        h.image_basis[n] = std::move(img);
    }
    return h;
}

inline std::vector<std::size_t> betti(const ChainComplex& c) { return homology(c).betti; }

/// Matrix of H_n(f) between the chosen homology bases.
inline QMatrix homology_map(const ChainMap& f, const Homology& hs, const Homology& ht,
                            std::size_t n) {
    std::size_t bs = n < hs.betti.size() ? hs.betti[n] : 0;
    std::size_t bt = n < ht.betti.size() ? ht.betti[n] : 0;
    if (bs == 0 || (bt == 0 && bs == 0)) return QMatrix(bt, bs);
    QMatrix lifts_t = n < ht.cycle_lifts.size() ? ht.cycle_lifts[n] : QMatrix(f.target.dim(n), 0);
    QMatrix img_t = n < ht.image_basis.size() ? ht.image_basis[n] : QMatrix(f.target.dim(n), 0);
    QMatrix mapped = f.component(n) * hs.cycle_lifts[n];
    auto x = solve(hstack(lifts_t, img_t), mapped);
    if (!x) throw std::logic_error("homology_map: image of a cycle is not a cycle");
    QMatrix out(bt, bs);
    for (std::size_t i = 0; i < bt; ++i)
        for (std::size_t j = 0; j < bs; ++j) out.at(i, j) = x->at(i, j);
    return out;
}

inline bool is_quasi_iso(const ChainMap& f) {
    Homology hs = homology(f.source), ht = homology(f.target);
    std::size_t len = std::max(hs.betti.size(), ht.betti.size());
    for (std::size_t n = 0; n < len; ++n) {
        std::size_t bs = n < hs.betti.size() ? hs.betti[n] : 0;
        std::size_t bt = n < ht.betti.size() ? ht.betti[n] : 0;
        if (bs != bt) return false;
        if (bs == 0) continue;
        if (rank(homology_map(f, hs, ht, n)) != bs) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Builders

inline ChainComplex zero_complex() { return ChainComplex({}, {}); }

/// The monoidal unit: Q in degree 0.
inline ChainComplex unit_complex() { return ChainComplex({1}, {}); }

/// Q^2 -> Q with d(e) = v1 - v0; contractible model of the 1-simplex.
inline ChainComplex interval_complex() {
    QMatrix d1(2, 1);
    d1.at(0, 0) = -1;
    d1.at(1, 0) = 1;
    return ChainComplex({2, 1}, {QMatrix(), d1});
}

/// One vertex, one loop, zero boundary: betti [1,1].
inline ChainComplex circle_complex() {
    return ChainComplex({1, 1}, {QMatrix(), QMatrix(1, 1)});
}

/// Q concentrated in degree k.
inline ChainComplex sphere_complex(std::size_t k) {
    std::vector<std::size_t> dims(k + 1, 0);
    dims[k] = 1;
    std::vector<QMatrix> ds(k + 1);
    for (std::size_t n = 1; n <= k; ++n) ds[n] = QMatrix(dims[n - 1], dims[n]);
    return ChainComplex(std::move(dims), std::move(ds));
}

/// Q in degrees k and k-1 with identity boundary; contractible. k >= 1.
inline ChainComplex disk_complex(std::size_t k) {
    if (k < 1) throw std::invalid_argument("disk_complex: k must be >= 1");
    std::vector<std::size_t> dims(k + 1, 0);
    dims[k] = dims[k - 1] = 1;
    std::vector<QMatrix> ds(k + 1);
    for (std::size_t n = 1; n <= k; ++n) ds[n] = QMatrix(dims[n - 1], dims[n]);
    ds[k] = QMatrix::identity(1);
    return ChainComplex(std::move(dims), std::move(ds));
}

/// sphere(k-1) -> disk(k), identity in degree k-1. k >= 1.
inline ChainMap sphere_inclusion(std::size_t k) {
    if (k < 1) throw std::invalid_argument("sphere_inclusion: k must be >= 1");
    std::vector<QMatrix> comps(k);
    comps[k - 1] = QMatrix::identity(1);
    return make_chain_map(sphere_complex(k - 1), disk_complex(k), std::move(comps));
}

// ---------------------------------------------------------------------------
// Direct sums

struct DirectSum {
    ChainComplex total;
    std::vector<ChainMap> inclusions;
    std::vector<ChainMap> projections;
};

inline DirectSum direct_sum(const std::vector<ChainComplex>& parts) {
    std::size_t len = 0;
    for (const auto& p : parts) len = std::max(len, p.graded_length());
    std::vector<std::size_t> dims(len, 0);
    for (const auto& p : parts)
        for (std::size_t n = 0; n < len; ++n) dims[n] += p.dim(n);
    std::vector<QMatrix> ds(len);
    for (std::size_t n = 1; n < len; ++n) {
        QMatrix d(dims[n - 1], dims[n]);
        std::size_t ro = 0, co = 0;
        for (const auto& p : parts) {
            QMatrix pd = p.boundary(n);
            for (std::size_t i = 0; i < pd.rows; ++i)
                for (std::size_t j = 0; j < pd.cols; ++j) d.at(ro + i, co + j) = pd.at(i, j);
            ro += p.dim(n - 1);
            co += p.dim(n);
        }
        ds[n] = std::move(d);
    }
    DirectSum s;
    s.total = ChainComplex(std::move(dims), std::move(ds));
    std::vector<std::size_t> offset(len, 0);
    for (const auto& p : parts) {
        std::vector<QMatrix> inc(len), prj(len);
        for (std::size_t n = 0; n < len; ++n) {
            inc[n] = QMatrix(s.total.dim(n), p.dim(n));
            prj[n] = QMatrix(p.dim(n), s.total.dim(n));
            for (std::size_t j = 0; j < p.dim(n); ++j) {
                inc[n].at(offset[n] + j, j) = 1;
                prj[n].at(j, offset[n] + j) = 1;
            }
        }
        s.inclusions.push_back(make_chain_map(p, s.total, std::move(inc)));
        s.projections.push_back(make_chain_map(s.total, p, std::move(prj)));
        for (std::size_t n = 0; n < len; ++n) offset[n] += p.dim(n);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Tensor products (n-ary, one canonical block order)

/// Flat tensor product of a list of complexes. Degree-n blocks are the
/// multidegrees (p_1,...,p_k) with sum n in lexicographic order; within a
/// block, entries are mixed-radix with the first factor most significant.
struct TensorProduct {
    std::vector<ChainComplex> factors;
    ChainComplex total;
    // per degree: (multidegree, flat offset) in lex order
    std::vector<std::vector<std::pair<std::vector<std::size_t>, std::size_t>>> blocks;

    std::size_t block_offset(std::size_t degree, const std::vector<std::size_t>& multi) const {
        if (degree >= blocks.size()) throw std::out_of_range("block_offset: degree");
        for (const auto& [m, off] : blocks[degree])
            if (m == multi) return off;
        throw std::out_of_range("block_offset: no such block");
    }
    std::size_t block_dim(const std::vector<std::size_t>& multi) const {
        std::size_t d = 1;
        for (std::size_t i = 0; i < factors.size(); ++i) d *= factors[i].dim(multi[i]);
        return d;
    }
};

namespace detail {
inline void enumerate_multidegrees(const std::vector<ChainComplex>& factors, std::size_t degree,
                                   std::size_t pos, std::vector<std::size_t>& cur,
                                   std::vector<std::vector<std::size_t>>& out) {
    if (pos == factors.size()) {
        if (degree == 0) out.push_back(cur);
        return;
    }
    std::size_t top = factors[pos].graded_length();
    for (std::size_t p = 0; p < top && p <= degree; ++p) {
        cur.push_back(p);
        enumerate_multidegrees(factors, degree - p, pos + 1, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

inline TensorProduct make_tensor(std::vector<ChainComplex> factors) {
    TensorProduct t;
    t.factors = std::move(factors);
    std::size_t len = 1;
    bool any_zero = false;
    for (const auto& f : t.factors) {
        if (f.graded_length() == 0) any_zero = true;
        len += f.top_degree();
    }
    if (any_zero) {
        t.total = zero_complex();
        return t;
    }
    std::vector<std::size_t> dims(len, 0);
    t.blocks.resize(len);
    for (std::size_t n = 0; n < len; ++n) {
        std::vector<std::vector<std::size_t>> multis;
        std::vector<std::size_t> cur;
        detail::enumerate_multidegrees(t.factors, n, 0, cur, multis);
        std::size_t off = 0;
        for (auto& m : multis) {
            std::size_t bd = 1;
            for (std::size_t i = 0; i < t.factors.size(); ++i) bd *= t.factors[i].dim(m[i]);
            t.blocks[n].push_back({m, off});
            off += bd;
        }
        dims[n] = off;
    }
    std::vector<QMatrix> ds(len);
    for (std::size_t n = 1; n < len; ++n) {
        QMatrix d(dims[n - 1], dims[n]);
        for (const auto& [multi, src_off] : t.blocks[n]) {
            // Koszul rule: d(x_1 ox ... ox x_k) = sum_i +/- x_1 ox ... d x_i ... ox x_k
            Rational sign = 1;
            for (std::size_t i = 0; i < t.factors.size(); ++i) {
                if (multi[i] >= 1) {
                    auto tgt = multi;
                    tgt[i] -= 1;
                    // block matrix: kron over factors, boundary at slot i
                    QMatrix blk = QMatrix::identity(1);
                    for (std::size_t j = 0; j < t.factors.size(); ++j) {
                        QMatrix piece = (j == i) ? t.factors[j].boundary(multi[j])
                                                 : QMatrix::identity(t.factors[j].dim(multi[j]));
                        blk = kron(blk, piece);
                    }
                    std::size_t tgt_off = t.block_offset(n - 1, tgt);
                    for (std::size_t r = 0; r < blk.rows; ++r)
                        for (std::size_t c = 0; c < blk.cols; ++c)
                            if (blk.at(r, c) != 0) d.at(tgt_off + r, src_off + c) += sign * blk.at(r, c);
                }
                if (multi[i] % 2 == 1) sign = -sign;
            }
        }
        ds[n] = std::move(d);
    }
    t.total = ChainComplex(std::move(dims), std::move(ds));
    return t;
}

inline TensorProduct make_tensor(const ChainComplex& a, const ChainComplex& b) {
    return make_tensor(std::vector<ChainComplex>{a, b});
}

inline ChainComplex tensor(const ChainComplex& a, const ChainComplex& b) {
    return make_tensor(a, b).total;
}

/// Tensor product of chain maps over the canonical block layout (degree-0
/// maps, so no Koszul signs appear).
inline ChainMap tensor_map_many(const std::vector<ChainMap>& maps) {
    std::vector<ChainComplex> src, tgt;
    for (const auto& f : maps) {
        src.push_back(f.source);
        tgt.push_back(f.target);
    }
    TensorProduct ts = make_tensor(src), tt = make_tensor(tgt);
    std::size_t len = std::max(ts.total.graded_length(), tt.total.graded_length());
    std::vector<QMatrix> comps(len);
    for (std::size_t n = 0; n < len; ++n) {
        comps[n] = QMatrix(tt.total.dim(n), ts.total.dim(n));
        if (n >= ts.blocks.size()) continue;
        for (const auto& [multi, src_off] : ts.blocks[n]) {
            QMatrix blk = QMatrix::identity(1);
            for (std::size_t j = 0; j < maps.size(); ++j) blk = kron(blk, maps[j].component(multi[j]));
            if (blk.rows == 0 || blk.cols == 0 || blk.is_zero()) continue;
            std::size_t tgt_off = tt.block_offset(n, multi);
            for (std::size_t r = 0; r < blk.rows; ++r)
                for (std::size_t c = 0; c < blk.cols; ++c) comps[n].at(tgt_off + r, src_off + c) = blk.at(r, c);
        }
    }
    return make_chain_map(ts.total, tt.total, std::move(comps));
}

inline ChainMap tensor_map(const ChainMap& f, const ChainMap& g) {
    return tensor_map_many({f, g});
}

/// Symmetry c (x) d -> d (x) c with the Koszul sign (-1)^{pq} on the
/// (p,q) block.
inline ChainMap braiding(const ChainComplex& c, const ChainComplex& d) {
    TensorProduct s = make_tensor(c, d), t = make_tensor(d, c);
    std::size_t len = s.total.graded_length();
    std::vector<QMatrix> comps(len);
    for (std::size_t n = 0; n < len; ++n) {
        comps[n] = QMatrix(t.total.dim(n), s.total.dim(n));
        for (const auto& [multi, src_off] : s.blocks[n]) {
            std::size_t p = multi[0], q = multi[1];
            std::size_t dp = c.dim(p), dq = d.dim(q);
            if (dp == 0 || dq == 0) continue;
            std::size_t tgt_off = t.block_offset(n, {q, p});
            Rational sign = (p * q) % 2 == 0 ? 1 : -1;
            for (std::size_t i = 0; i < dp; ++i)
                for (std::size_t j = 0; j < dq; ++j)
                    comps[n].at(tgt_off + j * dp + i, src_off + i * dq + j) = sign;
        }
    }
    return make_chain_map(s.total, t.total, std::move(comps));
}

/// Canonical regrouping iso  (ox_j ox(group_j))  ->  ox(all factors flat).
/// Pure permutation of basis vectors; tensor associativity carries no sign.
inline ChainMap flatten_tensor(const std::vector<std::vector<ChainComplex>>& groups) {
    std::vector<ChainComplex> group_totals;
    std::vector<TensorProduct> inner;
    std::vector<ChainComplex> flat_factors;
    for (const auto& g : groups) {
        inner.push_back(make_tensor(g));
        group_totals.push_back(inner.back().total);
        for (const auto& f : g) flat_factors.push_back(f);
    }
    TensorProduct outer = make_tensor(group_totals);
    TensorProduct flat = make_tensor(flat_factors);
    std::size_t len = std::max(outer.total.graded_length(), flat.total.graded_length());
    std::vector<QMatrix> comps(len);
    for (std::size_t n = 0; n < len; ++n)
        comps[n] = QMatrix(flat.total.dim(n), outer.total.dim(n));
    if (outer.total.graded_length() == 0)
        return make_chain_map(outer.total, flat.total, std::move(comps));

    // Walk every nested basis vector: outer block (q_1..q_m), inner blocks
    // (p-bar_j with |p-bar_j| = q_j), inner entry tuples.
    std::size_t m = groups.size();
    for (std::size_t n = 0; n < outer.total.graded_length(); ++n) {
        for (const auto& [qs, outer_off] : outer.blocks[n]) {
            // per group: list of (multidegree, offset) at degree q_j
            std::vector<const std::vector<std::pair<std::vector<std::size_t>, std::size_t>>*> bl(m);
            bool ok = true;
            for (std::size_t j = 0; j < m; ++j) {
                if (qs[j] >= inner[j].blocks.size()) { ok = false; break; }
                bl[j] = &inner[j].blocks[qs[j]];
            }
            if (!ok) continue;
            std::vector<std::size_t> pick(m, 0);
            while (true) {
                // assemble the flat multidegree and block dims
                std::vector<std::size_t> flat_multi;
                std::vector<std::size_t> inner_off(m);
                bool nonzero = true;
                for (std::size_t j = 0; j < m; ++j) {
                    const auto& [md, off] = (*bl[j])[pick[j]];
                    inner_off[j] = off;
                    for (auto p : md) flat_multi.push_back(p);
                }
                std::vector<std::size_t> fdims;
                for (std::size_t i = 0; i < flat_factors.size(); ++i) {
                    fdims.push_back(flat_factors[i].dim(flat_multi[i]));
                    if (fdims.back() == 0) nonzero = false;
                }
                if (nonzero) {
                    std::size_t flat_off = flat.block_offset(n, flat_multi);
                    // iterate entries of each factor
                    std::vector<std::size_t> idx(flat_factors.size(), 0);
                    while (true) {
                        // nested position: mixed radix over group-total entries,
                        // each of which is inner block offset + inner mixed radix
                        std::size_t nested = 0, gpos = 0;
                        for (std::size_t j = 0; j < m; ++j) {
                            std::size_t e = 0;
                            for (std::size_t l = 0; l < groups[j].size(); ++l)
                                e = e * fdims[gpos + l] + idx[gpos + l];
                            e += inner_off[j];
                            nested = nested * group_totals[j].dim(qs[j]) + e;
                            gpos += groups[j].size();
                        }
                        nested += outer_off;
                        std::size_t flat_pos = 0;
                        for (std::size_t i = 0; i < flat_factors.size(); ++i)
                            flat_pos = flat_pos * fdims[i] + idx[i];
                        flat_pos += flat_off;
                        comps[n].at(flat_pos, nested) = 1;
                        // advance entry tuple
                        std::size_t i = flat_factors.size();
                        while (i > 0) {
                            --i;
                            if (++idx[i] < fdims[i]) break;
                            idx[i] = 0;
                            if (i == 0) { i = SIZE_MAX; break; }
                        }
                        if (i == SIZE_MAX || flat_factors.empty()) break;
                    }
                }
                // advance block picks
                std::size_t j = m;
                while (j > 0) {
                    --j;
                    if (++pick[j] < bl[j]->size()) break;
                    pick[j] = 0;
                    if (j == 0) { j = SIZE_MAX; break; }
                }
                if (j == SIZE_MAX || m == 0) break;
            }
        }
    }
    return make_chain_map(outer.total, flat.total, std::move(comps));
}

/// unit (x) c -> c and c (x) unit -> c, the canonical unitors.
inline ChainMap left_unitor(const ChainComplex& c) {
    TensorProduct t = make_tensor(unit_complex(), c);
    std::vector<QMatrix> comps;
    for (std::size_t n = 0; n < t.total.graded_length(); ++n)
        comps.push_back(QMatrix::identity(c.dim(n)));
    return make_chain_map(t.total, c, std::move(comps));
}

inline ChainMap right_unitor(const ChainComplex& c) {
    TensorProduct t = make_tensor(c, unit_complex());
    std::vector<QMatrix> comps;
    for (std::size_t n = 0; n < t.total.graded_length(); ++n)
        comps.push_back(QMatrix::identity(c.dim(n)));
    return make_chain_map(t.total, c, std::move(comps));
}

// ---------------------------------------------------------------------------
// Mapping cylinder

/// Cyl(f) = A ⊕ A[1] ⊕ B with d(a,a',b) = (da + a', -da', db - f(a')).
/// A includes split-injectively, B includes as a deformation retract.
struct MappingCylinder {
    ChainComplex total;
    ChainMap include_source;   // split degreewise injection, q-iso iff f is
    ChainMap include_target;   // always a q-iso
    ChainMap project_target;   // (a,a',b) -> f(a) + b; always a q-iso
};

inline MappingCylinder mapping_cylinder(const ChainMap& f) {
    const ChainComplex& a = f.source;
    const ChainComplex& b = f.target;
    std::size_t len = std::max(a.graded_length() + 1, b.graded_length());
    std::vector<std::size_t> dims(len, 0);
    auto adim = [&](std::size_t n) { return a.dim(n); };
    for (std::size_t n = 0; n < len; ++n)
        dims[n] = adim(n) + (n >= 1 ? adim(n - 1) : 0) + b.dim(n);
    std::vector<QMatrix> ds(len);
    for (std::size_t n = 1; n < len; ++n) {
        QMatrix d(dims[n - 1], dims[n]);
        std::size_t r_a = 0, r_s = adim(n - 1), r_b = r_s + (n >= 2 ? adim(n - 2) : 0);
        std::size_t c_a = 0, c_s = adim(n), c_b = c_s + adim(n - 1);
        QMatrix da = a.boundary(n), da1 = a.boundary(n - 1), db = b.boundary(n);
        QMatrix fc = f.component(n - 1);
        for (std::size_t i = 0; i < da.rows; ++i)
            for (std::size_t j = 0; j < da.cols; ++j) d.at(r_a + i, c_a + j) = da.at(i, j);
        for (std::size_t j = 0; j < adim(n - 1); ++j) d.at(r_a + j, c_s + j) = 1;
        for (std::size_t i = 0; i < da1.rows; ++i)
            for (std::size_t j = 0; j < da1.cols; ++j) d.at(r_s + i, c_s + j) = -da1.at(i, j);
        for (std::size_t i = 0; i < db.rows; ++i)
            for (std::size_t j = 0; j < db.cols; ++j) d.at(r_b + i, c_b + j) = db.at(i, j);
        for (std::size_t i = 0; i < fc.rows; ++i)
            for (std::size_t j = 0; j < fc.cols; ++j) d.at(r_b + i, c_s + j) = -fc.at(i, j);
        ds[n] = std::move(d);
    }
    MappingCylinder cyl;
    cyl.total = ChainComplex(std::move(dims), std::move(ds));
    std::vector<QMatrix> ia(len), ib(len), pb(len);
    for (std::size_t n = 0; n < len; ++n) {
        std::size_t c_s = adim(n), c_b = c_s + (n >= 1 ? adim(n - 1) : 0);
        ia[n] = QMatrix(cyl.total.dim(n), adim(n));
        for (std::size_t j = 0; j < adim(n); ++j) ia[n].at(j, j) = 1;
        ib[n] = QMatrix(cyl.total.dim(n), b.dim(n));
        for (std::size_t j = 0; j < b.dim(n); ++j) ib[n].at(c_b + j, j) = 1;
        pb[n] = QMatrix(b.dim(n), cyl.total.dim(n));
        QMatrix fc = f.component(n);
        for (std::size_t i = 0; i < b.dim(n); ++i) {
            for (std::size_t j = 0; j < adim(n); ++j) pb[n].at(i, j) = fc.at(i, j);
            pb[n].at(i, c_b + i) = 1;
        }
    }
    cyl.include_source = make_chain_map(a, cyl.total, std::move(ia));
    cyl.include_target = make_chain_map(b, cyl.total, std::move(ib));
    cyl.project_target = make_chain_map(cyl.total, b, std::move(pb));
    return cyl;
}

}  // namespace cosegal

#endif
