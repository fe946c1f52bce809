#include "kdiff/schemes.hpp"

#include <algorithm>

namespace kdiff {

bool SchemeSpec::reduced_rational() const {
    if (!from_points() || components.empty()) return false;
    for (const auto& c : components) {
        const auto* p = std::get_if<PointComponent>(&c);
        if (!p || p->mult != 1) return false;
    }
    return true;
}

int SchemeSpec::point_count() const {
    int t = 0;
    for (const auto& c : components)
        if (std::holds_alternative<PointComponent>(c)) ++t;
    return t;
}

std::vector<FieldElem> normalize_point(const Field& field,
                                       std::vector<FieldElem> coords) {
    std::size_t first = 0;
    while (first < coords.size() && field.is_zero(coords[first])) ++first;
    if (first == coords.size()) throw Error("point with all coordinates zero");
    if (first != 0) throw PointAtInfinity();
    FieldElem inv = field.inv(coords[0]);
    for (auto& c : coords) c = field.mul(c, inv);
    return coords;
}

Ideal point_ideal(const Ring& proj, const std::vector<FieldElem>& p) {
    if (static_cast<int>(p.size()) != proj.nvars)
        throw Error("point coordinate count does not match the ring");
    const Field& F = proj.field;
    if (F.is_zero(p[0])) throw PointAtInfinity();
    std::vector<Polynomial> gens;
    for (int i = 1; i < proj.nvars; ++i) {
        Polynomial g = Polynomial::variable(proj, i) -
                       Polynomial::variable(proj, 0).scaled(F.div(p[i], p[0]));
        gens.push_back(std::move(g));
    }
    return Ideal(proj, std::move(gens));
}

SchemeCtx compile(const SchemeSpec& spec, int cap) {
    Ring ring = projective_ring(spec.field, spec.n);
    const Field& F = spec.field;

    std::optional<Ideal> ideal;
    bool guaranteed_saturated = true;

    if (!spec.explicit_gens.empty()) {
        if (!spec.components.empty())
            throw Error("scheme spec mixes explicit ideal and components");
        for (const auto& g : spec.explicit_gens) {
            if (g.ring() != ring) throw RingMismatch("scheme ideal generators");
            if (!g.is_homogeneous()) throw NonHomogeneousInput("scheme ideal");
        }
        ideal = Ideal(ring, spec.explicit_gens);
        guaranteed_saturated = false;
    } else {
        if (spec.components.empty()) throw Error("scheme spec has no components");
        std::vector<std::vector<FieldElem>> seen;
        for (const auto& comp : spec.components) {
            std::optional<Ideal> piece;
            if (const auto* pc = std::get_if<PointComponent>(&comp)) {
                auto p = normalize_point(F, pc->coords);
                if (static_cast<int>(p.size()) != ring.nvars)
                    throw Error("point coordinate count does not match n");
                for (const auto& q : seen)
                    if (q == p) throw Error("duplicate point in scheme spec");
                seen.push_back(p);
                if (pc->mult < 1) throw Error("point multiplicity must be >= 1");
                piece = ideal_power(point_ideal(ring, p), pc->mult);
            } else {
                const auto& ic = std::get<IdealComponent>(comp);
                for (const auto& g : ic.gens) {
                    if (g.ring() != ring) throw RingMismatch("component ideal");
                    if (!g.is_homogeneous()) throw NonHomogeneousInput("component ideal");
                }
                piece = Ideal(ring, ic.gens);
                guaranteed_saturated = false;
            }
            ideal = ideal ? intersect(*ideal, *piece) : *piece;
        }
    }

    if (!guaranteed_saturated) {
        Ideal sat = saturate(*ideal, Polynomial::variable(ring, 0));
        if (!sat.same_ideal(*ideal)) throw X0ZeroDivisor();
    }

    HilbertData hf = hf_autostop(*ideal, cap);

    // HF_X is strictly increasing up to r_X and constant afterwards
    for (int i = 1; i <= hf.ri; ++i)
        if (hf.values[i] <= hf.values[i - 1])
            throw InternalInconsistency("Hilbert function of the scheme not strictly increasing");

    SchemeCtx ctx{spec, ring, *ideal, hf, hf.hp, hf.ri};

    if (spec.from_points()) {
        bool pure_points = true;
        FatPointParams params;
        params.n = spec.n;
        params.characteristic = F.characteristic();
        for (const auto& comp : spec.components) {
            if (const auto* pc = std::get_if<PointComponent>(&comp))
                params.mults.push_back(pc->mult);
            else pure_points = false;
        }
        if (pure_points && deg_fat_points(params) != ctx.deg)
            throw InternalInconsistency("fat point degree formula mismatch");
    }
    return ctx;
}

namespace {

void subsets_rec(int n, int k, int start, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) { out.push_back(cur); return; }
    for (int v = start; v < n; ++v) {
        cur.push_back(v);
        subsets_rec(n, k, v + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

int separator_degree(const SchemeCtx& parent, const SchemeCtx& sub,
                     bool assert_unit_step) {
    int limit = std::max(parent.r, sub.r) + 2;
    int alpha = -1;
    for (int i = 0; i <= limit; ++i) {
        if (sub.hf.at(i) != parent.hf.at(i)) { alpha = i; break; }
    }
    if (alpha < 0)
        throw InternalInconsistency("subscheme has the same Hilbert function as its parent");
    if (assert_unit_step) {
        if (alpha > parent.r)
            throw InternalInconsistency("separator degree exceeds the regularity index");
        for (int i = 0; i <= limit; ++i) {
            long long expected = parent.hf.at(i) - (i >= alpha ? 1 : 0);
            if (sub.hf.at(i) != expected)
                throw InternalInconsistency(
                    "colength-1 Hilbert function is not a unit step drop");
        }
    }
    return alpha;
}

std::vector<Subscheme> colength_subschemes(const SchemeCtx& parent, int colength) {
    if (!parent.spec.reduced_rational())
        throw UnsupportedScheme(
            "subscheme enumeration needs a reduced scheme of K-rational points");
    const int t = parent.spec.point_count();
    if (colength < 1 || colength >= t)
        throw Error("colength out of range");

    std::vector<std::vector<int>> picks;
    std::vector<int> cur;
    subsets_rec(t, colength, 0, cur, picks);

    std::vector<Subscheme> out;
    for (const auto& removed : picks) {
        SchemeSpec sub = parent.spec;
        sub.components.clear();
        for (int i = 0; i < t; ++i)
            if (!std::binary_search(removed.begin(), removed.end(), i))
                sub.components.push_back(parent.spec.components[i]);
        SchemeCtx ctx = compile(sub);
        int alpha = separator_degree(parent, ctx, colength == 1);
        out.push_back(Subscheme{removed, std::move(ctx), alpha});
    }
    return out;
}

}  // namespace kdiff
