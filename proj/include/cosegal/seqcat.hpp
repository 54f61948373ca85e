// Combinatorics of the indexing shapes: labeled sequences, monotone
// endpoint-preserving surjections, decompositions under concatenation,
// truncated hom-shapes, latching and lax-latching categories, and the
// surjective functions indexing the symmetric (commutative) case.
//
// Orientation: a shape arrow points from the lower-dimensional sequence w
// to the higher-dimensional z and carries a surjection [dim z] ->> [dim w]
// (the opposite-category direction). Same-dimension arrows are identities
// only. Dimension-0 sequences (single labels) are never shape objects, but
// they do appear as latching-category objects when the endpoints of the
// base sequence coincide; diagram values treat them as zero.

#ifndef COSEGAL_SEQCAT_HPP
#define COSEGAL_SEQCAT_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cosegal/rational.hpp"

namespace cosegal {

struct LabeledSeq {
    std::vector<std::string> labels;  // (x_0, ..., x_n), nonempty

    std::size_t dim() const { return labels.size() - 1; }
    const std::string& first() const { return labels.front(); }
    const std::string& last() const { return labels.back(); }

    bool operator==(const LabeledSeq& o) const { return labels == o.labels; }
    bool operator!=(const LabeledSeq& o) const { return labels != o.labels; }
    bool operator<(const LabeledSeq& o) const {
        if (labels.size() != o.labels.size()) return labels.size() < o.labels.size();
        return labels < o.labels;
    }
};

/// Concatenation glues at the shared endpoint: (A..B) * (B..C) = (A..B..C).
inline LabeledSeq concat(const LabeledSeq& a, const LabeledSeq& b) {
    if (a.last() != b.first())
        throw std::invalid_argument("concat: endpoint mismatch");
    LabeledSeq c = a;
    c.labels.insert(c.labels.end(), b.labels.begin() + 1, b.labels.end());
    return c;
}

struct Surjection {
    std::vector<std::size_t> values;  // f(0..n), monotone onto {0..m}

    std::size_t source_dim() const { return values.size() - 1; }  // n
    std::size_t target_dim() const { return values.back(); }      // m
    std::size_t operator()(std::size_t i) const { return values[i]; }

    bool is_identity() const { return source_dim() == target_dim(); }

    bool operator==(const Surjection& o) const { return values == o.values; }
    bool operator!=(const Surjection& o) const { return values != o.values; }
    bool operator<(const Surjection& o) const {
        if (values.size() != o.values.size()) return values.size() < o.values.size();
        return values < o.values;
    }
};

inline bool valid_surjection(const Surjection& f) {
    if (f.values.empty() || f.values[0] != 0) return false;
    for (std::size_t i = 1; i < f.values.size(); ++i) {
        std::size_t step = f.values[i] - f.values[i - 1];
        if (f.values[i] < f.values[i - 1] || step > 1) return false;
    }
    return true;
}

inline Surjection identity_surjection(std::size_t n) {
    Surjection f;
    for (std::size_t i = 0; i <= n; ++i) f.values.push_back(i);
    return f;
}

/// All monotone endpoint-preserving surjections [n] ->> [m], lexicographic.
/// There are binomial(n, m) of them; empty when n < m.
inline std::vector<Surjection> enumerate_surjections(std::size_t n, std::size_t m) {
    std::vector<Surjection> out;
    if (n < m) return out;
    // choose which of the n steps are rises (exactly m of them)
    std::vector<std::size_t> cur{0};
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            if (cur.back() == m) out.push_back(Surjection{cur});
            return;
        }
        for (std::size_t step = 0; step <= 1; ++step) {
            std::size_t v = cur.back() + step;
            if (v > m) continue;
            if (v + (n - i - 1) < m) continue;  // cannot still reach m
            cur.push_back(v);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    if (n == 0) {
        if (m == 0) out.push_back(Surjection{{0}});
        return out;
    }
    rec(rec, 0);
    return out;
}

/// outer o inner, pointwise; inner: [n]->>[m], outer: [m]->>[k].
inline Surjection compose_surjections(const Surjection& outer, const Surjection& inner) {
    if (outer.source_dim() != inner.target_dim())
        throw std::invalid_argument("compose_surjections: dimension mismatch");
    Surjection c;
    for (auto v : inner.values) c.values.push_back(outer.values[v]);
    return c;
}

/// Splits f: [n]->>[m] at a source cut 0 < c < n into
/// f1: [c]->>[f(c)] and f2: [n-c]->>[m-f(c)].
inline std::pair<Surjection, Surjection> split_surjection(const Surjection& f, std::size_t c) {
    std::size_t n = f.source_dim();
    if (c == 0 || c >= n) throw std::invalid_argument("split_surjection: cut out of range");
    Surjection f1, f2;
    for (std::size_t i = 0; i <= c; ++i) f1.values.push_back(f.values[i]);
    for (std::size_t j = 0; j <= n - c; ++j) f2.values.push_back(f.values[c + j] - f.values[c]);
    return {f1, f2};
}

/// Inverse of split_surjection at the cut dim(f1.source).
inline Surjection rejoin_surjections(const Surjection& f1, const Surjection& f2) {
    Surjection f = f1;
    for (std::size_t j = 1; j < f2.values.size(); ++j)
        f.values.push_back(f2.values[j] + f1.target_dim());
    return f;
}

// ---------------------------------------------------------------------------
// Decompositions

struct Decomposition {
    LabeledSeq seq;
    std::vector<std::size_t> cut_set;  // strictly increasing inner positions

    bool is_proper() const { return !cut_set.empty(); }

    std::vector<LabeledSeq> pieces() const {
        std::vector<LabeledSeq> ps;
        std::size_t start = 0;
        auto cuts = cut_set;
        cuts.push_back(seq.dim());
        for (auto c : cuts) {
            LabeledSeq p;
            p.labels.assign(seq.labels.begin() + start, seq.labels.begin() + c + 1);
            ps.push_back(std::move(p));
            start = c;
        }
        return ps;
    }
};

/// One decomposition per subset of inner positions, ordered by (number of
/// cuts, lexicographic cut set); the trivial one (no cuts) comes first
/// unless proper_only.
inline std::vector<Decomposition> enumerate_decompositions(const LabeledSeq& z, bool proper_only) {
    std::size_t n = z.dim();
    std::vector<std::vector<std::size_t>> subsets;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t next) -> void {
        subsets.push_back(cur);
        for (std::size_t c = next; c < n; ++c) {
            cur.push_back(c);
            self(self, c + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](const auto& a, const auto& b) {
                         if (a.size() != b.size()) return a.size() < b.size();
                         return a < b;
                     });
    std::vector<Decomposition> out;
    for (auto& s : subsets) {
        if (proper_only && s.empty()) continue;
        out.push_back(Decomposition{z, s});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hom shapes

struct ShapeArrow {
    std::size_t from = 0;  // lower-dimensional object index
    std::size_t to = 0;    // higher-dimensional object index
    Surjection surj;       // [dim(to)] ->> [dim(from)]
};

/// All sequences with endpoints (A,B) over X and dimension <= L, dimension
/// then lexicographic. Throws when A or B is not in X.
inline std::vector<LabeledSeq> enumerate_sequences(const std::vector<std::string>& X,
                                                   const std::string& A, const std::string& B,
                                                   std::size_t L) {
    auto in_X = [&](const std::string& s) {
        return std::find(X.begin(), X.end(), s) != X.end();
    };
    if (!in_X(A) || !in_X(B)) throw std::invalid_argument("enumerate_sequences: endpoint not in X");
    if (L < 1) throw std::invalid_argument("enumerate_sequences: L must be >= 1");
    std::vector<std::string> sortedX = X;
    std::sort(sortedX.begin(), sortedX.end());
    std::vector<LabeledSeq> out;
    for (std::size_t d = 1; d <= L; ++d) {
        // inner slots: (d-1) labels from X, lexicographic
        std::vector<std::size_t> idx(d - 1, 0);
        while (true) {
            LabeledSeq s;
            s.labels.push_back(A);
            for (auto i : idx) s.labels.push_back(sortedX[i]);
            s.labels.push_back(B);
            out.push_back(std::move(s));
            std::size_t k = idx.size();
            while (k > 0) {
                --k;
                if (++idx[k] < sortedX.size()) break;
                idx[k] = 0;
                if (k == 0) { k = SIZE_MAX; break; }
            }
            if (idx.empty() || k == SIZE_MAX) break;
        }
    }
    return out;
}

/// The truncated hom-shape: objects are sequences of dimension 1..L with
/// the given endpoints; arrows are all surjections from each strictly
/// lower-dimensional object, oriented upward. Identities are implicit.
struct HomShape {
    std::vector<std::string> X;
    std::string A, B;
    std::size_t L = 1;
    std::vector<LabeledSeq> objects;
    std::vector<ShapeArrow> arrows;

    std::size_t object_index(const LabeledSeq& s) const {
        for (std::size_t i = 0; i < objects.size(); ++i)
            if (objects[i] == s) return i;
        throw std::out_of_range("HomShape: sequence not in shape");
    }
    bool contains(const LabeledSeq& s) const {
        return std::find(objects.begin(), objects.end(), s) != objects.end();
    }
};

inline HomShape make_hom_shape(const std::vector<std::string>& X, const std::string& A,
                               const std::string& B, std::size_t L) {
    HomShape h;
    h.X = X;
    std::sort(h.X.begin(), h.X.end());
    h.A = A;
    h.B = B;
    h.L = L;
    h.objects = enumerate_sequences(X, A, B, L);
    for (std::size_t zi = 0; zi < h.objects.size(); ++zi)
        for (std::size_t wi = 0; wi < h.objects.size(); ++wi) {
            std::size_t dz = h.objects[zi].dim(), dw = h.objects[wi].dim();
            if (dw >= dz) continue;
            for (auto& f : enumerate_surjections(dz, dw))
                h.arrows.push_back(ShapeArrow{wi, zi, f});
        }
    return h;
}

/// Composite of composable shape arrows (a2 after a1, a1.to == a2.from).
inline ShapeArrow compose_arrows(const ShapeArrow& a2, const ShapeArrow& a1) {
    if (a1.to != a2.from) throw std::invalid_argument("compose_arrows: not composable");
    return ShapeArrow{a1.from, a2.to, compose_surjections(a1.surj, a2.surj)};
}

// ---------------------------------------------------------------------------
// Latching categories

/// An object of the latching category at z: a non-identity arrow (w, f)
/// into z. w may have dimension 0 (a single label) when the endpoints of
/// z coincide; such objects carry no diagram data.
struct LatchObj {
    LabeledSeq w;
    Surjection f;  // [dim z] ->> [dim w]
};

struct LatchMor {
    std::size_t src = 0, dst = 0;
    Surjection g;  // [dim w_dst] ->> [dim w_src], with f_dst . g-composite = f_src
};

struct LatchingCategory {
    LabeledSeq z;
    std::vector<LatchObj> objects;
    std::vector<LatchMor> morphisms;  // non-identity morphisms
};

/// Enumerates the slice objects (w, f: w -> z); identity included only when
/// include_identity. Dimension-0 objects appear iff the endpoints of z
/// coincide (then w is the single shared label).
inline std::vector<LatchObj> slice_objects(const LabeledSeq& z, const std::vector<std::string>& X,
                                           bool include_identity) {
    std::vector<LatchObj> out;
    std::size_t dz = z.dim();
    if (z.first() == z.last()) {
        for (auto& f : enumerate_surjections(dz, 0))
            out.push_back(LatchObj{LabeledSeq{{z.first()}}, f});
    }
    for (std::size_t m = 1; m < dz; ++m)
        for (auto& w : enumerate_sequences(X, z.first(), z.last(), m))
            if (w.dim() == m)
                for (auto& f : enumerate_surjections(dz, m)) out.push_back(LatchObj{w, f});
    if (include_identity) out.push_back(LatchObj{z, identity_surjection(dz)});
    return out;
}

inline LatchingCategory latching_category(const LabeledSeq& z, const HomShape& shape) {
    if (!shape.contains(z)) throw std::invalid_argument("latching_category: z not in shape");
    LatchingCategory cat;
    cat.z = z;
    cat.objects = slice_objects(z, shape.X, /*include_identity=*/false);
    for (std::size_t i = 0; i < cat.objects.size(); ++i)
        for (std::size_t j = 0; j < cat.objects.size(); ++j) {
            const auto& a = cat.objects[i];
            const auto& b = cat.objects[j];
            if (a.w.dim() >= b.w.dim()) continue;
            if (a.w.dim() == 0 && (b.w.first() != a.w.first() || b.w.last() != a.w.first()))
                continue;
            for (auto& g : enumerate_surjections(b.w.dim(), a.w.dim()))
                if (compose_surjections(g, b.f) == a.f)
                    cat.morphisms.push_back(LatchMor{i, j, g});
        }
    return cat;
}

// ---------------------------------------------------------------------------
// Lax latching categories

/// An object: a decomposition D of z together with one slice object per
/// piece. For the trivial decomposition the single slice is a non-identity
/// arrow (these objects form the classical latching category); for proper
/// decompositions slices have dimension >= 1 and identities are allowed.
struct LaxLatchObj {
    Decomposition decomp;
    std::vector<LatchObj> slices;  // one per piece

    bool is_trivial_part() const { return !decomp.is_proper(); }
};

/// Generating morphisms: per-piece slice maps and single-cut coarsenings.
struct LaxLatchMor {
    enum Kind { SliceMap, Coarsen } kind = SliceMap;
    std::size_t src = 0, dst = 0;
    // SliceMap: piece index and the mediating arrow g
    std::size_t piece = 0;
    Surjection g;
    // Coarsen: index (into decomp.cut_set of src) of the erased cut
    std::size_t cut_index = 0;
};

struct LaxLatchingCategory {
    LabeledSeq z;
    std::vector<LaxLatchObj> objects;
    std::vector<LaxLatchMor> morphisms;
};

inline LaxLatchingCategory lax_latching_category(const LabeledSeq& z, const HomShape& shape) {
    if (!shape.contains(z)) throw std::invalid_argument("lax_latching_category: z not in shape");
    LaxLatchingCategory cat;
    cat.z = z;
    // trivial-decomposition part: the classical latching objects
    Decomposition trivial{z, {}};
    for (auto& o : slice_objects(z, shape.X, false))
        cat.objects.push_back(LaxLatchObj{trivial, {o}});
    // proper decompositions with identity-inclusive slices of dimension >= 1
    for (auto& d : enumerate_decompositions(z, /*proper_only=*/true)) {
        auto pieces = d.pieces();
        std::vector<std::vector<LatchObj>> per_piece;
        for (auto& p : pieces) {
            std::vector<LatchObj> sl;
            for (auto& o : slice_objects(p, shape.X, true))
                if (o.w.dim() >= 1) sl.push_back(o);
            per_piece.push_back(std::move(sl));
        }
        std::vector<std::size_t> pick(pieces.size(), 0);
        while (true) {
            LaxLatchObj obj{d, {}};
            for (std::size_t i = 0; i < pieces.size(); ++i)
                obj.slices.push_back(per_piece[i][pick[i]]);
            cat.objects.push_back(std::move(obj));
            std::size_t k = pick.size();
            while (k > 0) {
                --k;
                if (++pick[k] < per_piece[k].size()) break;
                pick[k] = 0;
                if (k == 0) { k = SIZE_MAX; break; }
            }
            if (k == SIZE_MAX) break;
        }
    }

    auto find_object = [&](const LaxLatchObj& o) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < cat.objects.size(); ++i) {
            const auto& c = cat.objects[i];
            if (c.decomp.cut_set != o.decomp.cut_set) continue;
            bool same = true;
            for (std::size_t j = 0; j < c.slices.size(); ++j)
                if (c.slices[j].w != o.slices[j].w || c.slices[j].f != o.slices[j].f) {
                    same = false;
                    break;
                }
            if (same) return i;
        }
        return std::nullopt;
    };

    for (std::size_t i = 0; i < cat.objects.size(); ++i) {
        const auto& src = cat.objects[i];
        // per-piece slice maps
        for (std::size_t p = 0; p < src.slices.size(); ++p) {
            const auto& sl = src.slices[p];
            for (std::size_t j = 0; j < cat.objects.size(); ++j) {
                if (j == i) continue;
                const auto& dst = cat.objects[j];
                if (dst.decomp.cut_set != src.decomp.cut_set) continue;
                bool others_equal = true;
                for (std::size_t q = 0; q < src.slices.size(); ++q)
                    if (q != p && (src.slices[q].w != dst.slices[q].w ||
                                   src.slices[q].f != dst.slices[q].f)) {
                        others_equal = false;
                        break;
                    }
                if (!others_equal) continue;
                const auto& tl = dst.slices[p];
                if (sl.w.dim() >= tl.w.dim()) continue;
                if (sl.w.dim() == 0 && tl.w.first() != sl.w.first()) continue;
                for (auto& g : enumerate_surjections(tl.w.dim(), sl.w.dim()))
                    if (compose_surjections(g, tl.f) == sl.f)
                        cat.morphisms.push_back(
                            LaxLatchMor{LaxLatchMor::SliceMap, i, j, p, g, 0});
            }
        }
        // coarsenings: erase one cut, concatenate the adjacent slices
        if (src.decomp.is_proper()) {
            for (std::size_t ci = 0; ci < src.decomp.cut_set.size(); ++ci) {
                LaxLatchObj tgt;
                tgt.decomp.seq = z;
                for (std::size_t k = 0; k < src.decomp.cut_set.size(); ++k)
                    if (k != ci) tgt.decomp.cut_set.push_back(src.decomp.cut_set[k]);
                for (std::size_t k = 0; k < src.slices.size(); ++k) {
                    if (k == ci) {
                        LatchObj merged;
                        merged.w = concat(src.slices[k].w, src.slices[k + 1].w);
                        merged.f = rejoin_surjections(src.slices[k].f, src.slices[k + 1].f);
                        tgt.slices.push_back(std::move(merged));
                        ++k;  // consumed two
                    } else {
                        tgt.slices.push_back(src.slices[k]);
                    }
                }
                // the excluded object (trivial decomposition, identity slice)
                if (!tgt.decomp.is_proper() && tgt.slices[0].f.is_identity()) continue;
                auto j = find_object(tgt);
                if (!j) throw std::logic_error("lax_latching_category: coarsening target missing");
                cat.morphisms.push_back(LaxLatchMor{LaxLatchMor::Coarsen, i, *j, 0, {}, ci});
            }
        }
    }
    return cat;
}

// ---------------------------------------------------------------------------
// Surjective functions (the symmetric indexing)

/// All surjective functions from an n-element set onto an m-element set,
/// as value vectors, lexicographic. Empty when impossible.
inline std::vector<std::vector<std::size_t>> enumerate_surjective_functions(std::size_t n,
                                                                            std::size_t m) {
    std::vector<std::vector<std::size_t>> out;
    if (n < m) return out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    if (m == 0) return out;  // no function from a nonempty set onto the empty set
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self) -> void {
        if (cur.size() == n) {
            std::vector<bool> hit(m, false);
            for (auto v : cur) hit[v] = true;
            if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) out.push_back(cur);
            return;
        }
        for (std::size_t v = 0; v < m; ++v) {
            cur.push_back(v);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

}  // namespace cosegal

#endif
