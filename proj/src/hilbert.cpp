#include "kdiff/hilbert.hpp"

#include <algorithm>

namespace kdiff {

namespace {

long long count_standard(const Ring& ring, int d, const std::vector<Term>& lts) {
    if (d < 0) return 0;
    long long cnt = 0;
    for (const Term& t : terms_of_degree(ring, d)) {
        bool reducible = false;
        for (const Term& lt : lts)
            if (lt.divides(t)) { reducible = true; break; }
        if (!reducible) ++cnt;
    }
    return cnt;
}

// leading terms grouped by position
std::vector<std::vector<Term>> leading_by_position(const Submodule& n) {
    std::vector<std::vector<Term>> lts(n.module()->rank);
    for (const auto& g : n.basis()) {
        if (g.is_zero()) continue;
        std::size_t best = 0;
        for (std::size_t i = 1; i < g.terms().size(); ++i)
            if (compare_modterms(n.order(), *n.module(), g.terms()[i].first,
                                 g.terms()[best].first) > 0)
                best = i;
        const ModTerm& lt = g.terms()[best].first;
        lts[lt.pos].push_back(lt.t);
    }
    return lts;
}

}  // namespace

std::vector<long long> hf_ring_quotient(const Ideal& ideal, int upto) {
    if (!ideal.is_homogeneous())
        throw NonHomogeneousInput("hf_ring_quotient");
    std::vector<Term> lts;
    for (const auto& g : ideal.basis())
        lts.push_back(g.leading_term(MonomialOrder::degrevlex()));
    std::vector<long long> values;
    for (int d = 0; d <= upto; ++d)
        values.push_back(count_standard(ideal.ring(), d, lts));
    return values;
}

std::vector<long long> hf_module_quotient(const Submodule& n, int upto) {
    if (!n.is_homogeneous())
        throw NonHomogeneousInput("hf_module_quotient");
    const FreeModule& mod = *n.module();
    auto lts = leading_by_position(n);
    std::vector<long long> values;
    for (int d = 0; d <= upto; ++d) {
        long long total = 0;
        for (int pos = 0; pos < mod.rank; ++pos)
            total += count_standard(mod.ring, d - mod.twists[pos], lts[pos]);
        values.push_back(total);
    }
    return values;
}

HilbertData stabilize(std::vector<long long> values, int bound) {
    if (values.empty()) throw Error("stabilize on empty value list");
    int idx = std::min<int>(bound, static_cast<int>(values.size()) - 1);
    long long hp = values[idx];
    int last = static_cast<int>(values.size()) - 1;
    if (idx < last) {
        if (values[idx + 1] != hp)
            throw StabilizationViolated(
                "Hilbert function not stable at guaranteed bound " +
                std::to_string(bound));
    } else if (values.size() >= 2 && values[last - 1] != hp) {
        throw StabilizationViolated("Hilbert function still moving at end of data");
    }
    HilbertData h;
    h.hp = hp;
    int ri = idx;
    while (ri > 0 && values[ri - 1] == hp) --ri;
    h.ri = ri;
    h.values = std::move(values);
    for (int i = idx; i < static_cast<int>(h.values.size()); ++i)
        if (h.values[i] != hp)
            throw StabilizationViolated("Hilbert function oscillates past bound");
    return h;
}

HilbertData hf_autostop(const Ideal& ideal, int cap) {
    if (!ideal.is_homogeneous())
        throw NonHomogeneousInput("hf_autostop");
    std::vector<Term> lts;
    for (const auto& g : ideal.basis())
        lts.push_back(g.leading_term(MonomialOrder::degrevlex()));
    std::vector<long long> values;
    values.push_back(count_standard(ideal.ring(), 0, lts));
    if (values[0] != 1)
        throw NotZeroDimensional("quotient ring has dim_K " +
                                 std::to_string(values[0]) + " in degree 0");
    for (int d = 1; d <= cap; ++d) {
        values.push_back(count_standard(ideal.ring(), d, lts));
        if (values[d] == values[d - 1]) {
            HilbertData h;
            h.hp = values[d];
            h.ri = d - 1;
            h.values = std::move(values);
            return h;
        }
    }
    throw NotZeroDimensional("Hilbert function still increasing at degree cap " +
                             std::to_string(cap));
}

long long affine_k_dimension(const Submodule& n) {
    const FreeModule& mod = *n.module();
    const Ring& ring = mod.ring;
    auto lts = leading_by_position(n);
    long long total = 0;
    for (int pos = 0; pos < mod.rank; ++pos) {
        // pure power bounds certify 0-dimensionality
        std::vector<int> bound(ring.nvars, -1);
        for (const Term& lt : lts[pos]) {
            int nz = 0, slot = -1;
            for (int v = 0; v < ring.nvars; ++v)
                if (lt.e[v] > 0) { ++nz; slot = v; }
            if (nz == 0) { bound.assign(ring.nvars, 0); break; }
            if (nz == 1 && (bound[slot] < 0 || lt.e[slot] < bound[slot]))
                bound[slot] = lt.e[slot];
        }
        for (int v = 0; v < ring.nvars; ++v)
            if (bound[v] < 0)
                throw InfiniteDimensional(
                    "no pure power of " + ring.var_name(v) +
                    " among leading terms at component " + std::to_string(pos));
        // enumerate the finite exponent box
        std::vector<int> e(ring.nvars, 0);
        for (;;) {
            Term t{std::vector<int>(e)};
            bool reducible = false;
            for (const Term& lt : lts[pos])
                if (lt.divides(t)) { reducible = true; break; }
            if (!reducible) ++total;
            int v = 0;
            while (v < ring.nvars) {
                if (++e[v] < bound[v]) break;
                e[v] = 0;
                ++v;
            }
            if (v == ring.nvars) break;
        }
    }
    return total;
}

long long affine_k_dimension(const Ideal& ideal) {
    FreeModulePtr mod = rank1_module(ideal.ring());
    std::vector<ModuleElement> gens;
    for (const auto& g : ideal.gens()) gens.push_back(poly_to_rank1(mod, g));
    return affine_k_dimension(Submodule(mod, std::move(gens)));
}

}  // namespace kdiff
