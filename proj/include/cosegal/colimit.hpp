// Finite colimits of chain-complex diagrams over directed multigraphs.
//
// The colimit is presented degreewise as the cokernel of
//   (+)_{arrows} F(src) --> (+)_{objects} F(obj),   x |-> F(g)(x)@dst - x@src,
// with a deterministic projection/section pair, so maps out of the colimit
// can be computed exactly and reproducibly.

#ifndef COSEGAL_COLIMIT_HPP
#define COSEGAL_COLIMIT_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cosegal/complex.hpp"

namespace cosegal {

struct DiagramArrow {
    std::size_t src = 0;
    std::size_t dst = 0;
};

struct DiagramShape {
    std::size_t num_objects = 0;
    std::vector<DiagramArrow> arrows;
};

struct Colimit {
    ChainComplex complex;
    std::vector<ChainMap> cocone;     // one leg per object
    DirectSum sum;                    // direct sum of the values
    std::vector<QMatrix> proj;        // per degree: colim.dim x sum.dim
    std::vector<QMatrix> section;     // per degree: sum.dim x colim.dim
};

inline Colimit finite_colimit(const DiagramShape& shape, const std::vector<ChainComplex>& values,
                              const std::vector<ChainMap>& arrow_maps) {
    if (values.size() != shape.num_objects)
        throw std::invalid_argument("finite_colimit: one value per object required");
    if (arrow_maps.size() != shape.arrows.size())
        throw std::invalid_argument("finite_colimit: one map per arrow required");
    for (std::size_t a = 0; a < shape.arrows.size(); ++a) {
        const auto& ar = shape.arrows[a];
        if (ar.src >= shape.num_objects || ar.dst >= shape.num_objects)
            throw std::invalid_argument("finite_colimit: arrow endpoint out of range");
        if (arrow_maps[a].source != values[ar.src] || arrow_maps[a].target != values[ar.dst])
            throw std::invalid_argument("finite_colimit: arrow map does not match values at arrow " +
                                        std::to_string(a));
    }

    Colimit out;
    out.sum = direct_sum(values);
    std::size_t len = out.sum.total.graded_length();

    std::vector<QMatrix> phi(len);
    for (std::size_t n = 0; n < len; ++n) {
        std::size_t rel_cols = 0;
        for (const auto& ar : shape.arrows) rel_cols += values[ar.src].dim(n);
        phi[n] = QMatrix(out.sum.total.dim(n), rel_cols);
        std::size_t co = 0;
        for (std::size_t a = 0; a < shape.arrows.size(); ++a) {
            const auto& ar = shape.arrows[a];
            QMatrix pushed = out.sum.inclusions[ar.dst].component(n) * arrow_maps[a].component(n);
            QMatrix kept = out.sum.inclusions[ar.src].component(n);
            for (std::size_t j = 0; j < values[ar.src].dim(n); ++j)
                for (std::size_t i = 0; i < out.sum.total.dim(n); ++i) {
                    Rational v = pushed.at(i, j) - kept.at(i, j);
                    if (v != 0) phi[n].at(i, co + j) = v;
                }
            co += values[ar.src].dim(n);
        }
    }

    std::vector<std::size_t> dims(len);
    out.proj.resize(len);
    out.section.resize(len);
    for (std::size_t n = 0; n < len; ++n) {
        QuotientPresentation q = quotient_by_columns(phi[n]);
        dims[n] = q.proj.rows;
        out.proj[n] = std::move(q.proj);
        out.section[n] = std::move(q.section);
    }
    std::vector<QMatrix> ds(len);
    for (std::size_t n = 1; n < len; ++n)
        ds[n] = out.proj[n - 1] * (out.sum.total.boundary(n) * out.section[n]);
    out.complex = ChainComplex(dims, std::move(ds));
    // proj/section stay at the direct sum's full length even when the
    // complex trims trailing zero degrees; induced maps check those too.

    for (std::size_t o = 0; o < shape.num_objects; ++o) {
        std::vector<QMatrix> comps;
        for (std::size_t n = 0; n < out.complex.graded_length(); ++n)
            comps.push_back(out.proj[n] * out.sum.inclusions[o].component(n));
        out.cocone.push_back(make_chain_map(values[o], out.complex, std::move(comps)));
    }
    return out;
}

/// The unique map colim -> W through a compatible family of legs
/// psi_o : F(o) -> W. Returns nullopt (with no side effects) when the legs
/// are not compatible with the diagram's relations.
inline std::optional<ChainMap> induced_from_colimit(const Colimit& col, const DiagramShape& shape,
                                                    const std::vector<ChainMap>& legs,
                                                    const ChainComplex& target) {
    if (legs.size() != shape.num_objects)
        throw std::invalid_argument("induced_from_colimit: one leg per object required");
    for (const auto& leg : legs)
        if (leg.target != target)
            throw std::invalid_argument("induced_from_colimit: leg target mismatch");
    std::size_t len = col.complex.graded_length();
    std::vector<QMatrix> comps(len);
    for (std::size_t n = 0; n < col.proj.size(); ++n) {
        QMatrix big(target.dim(n), col.sum.total.dim(n));
        std::size_t off = 0;
        for (std::size_t o = 0; o < shape.num_objects; ++o) {
            QMatrix c = legs[o].component(n);
            for (std::size_t i = 0; i < c.rows; ++i)
                for (std::size_t j = 0; j < c.cols; ++j) big.at(i, off + j) = c.at(i, j);
            off += legs[o].source.dim(n);
        }
        // compatibility: big must kill the relation columns, i.e. factor
        // through proj. Equivalent exact check: big == big*section*proj.
        if (big * (col.section[n] * col.proj[n]) != big) return std::nullopt;
        if (n < len) comps[n] = big * col.section[n];
    }
    return make_chain_map(col.complex, target, std::move(comps));
}

}  // namespace cosegal

#endif
