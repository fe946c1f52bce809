#include "kdiff/kaehler.hpp"

#include <algorithm>

namespace kdiff {

namespace {

void combos_rec(int nvars, int k, int start, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int v = start; v < nvars; ++v) {
        cur.push_back(v);
        combos_rec(nvars, k, v + 1, cur, out);
        cur.pop_back();
    }
}

// k-subsets of {0..nvars-1} in lexicographic order
std::vector<std::vector<int>> combos(int nvars, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > nvars) return out;
    std::vector<int> cur;
    combos_rec(nvars, k, 0, cur, out);
    return out;
}

int position_of(const std::vector<std::vector<int>>& labels, const std::vector<int>& lab) {
    auto it = std::lower_bound(labels.begin(), labels.end(), lab);
    return static_cast<int>(it - labels.begin());
}

}  // namespace

KaehlerPresentation omega_presentation(const Ring& ring,
                                       const std::vector<Polynomial>& ideal_gens,
                                       int m) {
    if (m < 1) throw FormDegreeOutOfRange("form degree must be >= 1");
    const int nv = ring.nvars;

    auto labels = combos(nv, m);  // empty when m > nv: the zero module
    const int rank = static_cast<int>(labels.size());
    FreeModulePtr F = make_module(ring, rank, std::vector<int>(rank, m), labels);

    std::vector<ModuleElement> gens;
    if (rank > 0) {
        auto sublabels = combos(nv, m - 1);
        for (const auto& g : ideal_gens) {
            if (g.ring() != ring) throw RingMismatch("omega presentation");
            if (g.is_zero()) continue;
            // dG wedge dX_J, expanded with the wedge-insertion sign rule
            for (const auto& J : sublabels) {
                std::vector<std::pair<ModTerm, FieldElem>> acc;
                for (int l = 0; l < nv; ++l) {
                    if (std::binary_search(J.begin(), J.end(), l)) continue;
                    Polynomial d = g.derivative(l);
                    if (d.is_zero()) continue;
                    std::vector<int> lab = J;
                    int nu = 0;
                    while (nu < static_cast<int>(J.size()) && J[nu] < l) ++nu;
                    lab.insert(lab.begin() + nu, l);
                    int pos = position_of(labels, lab);
                    bool negate = (nu % 2) != 0;
                    for (const auto& [t, c] : d.terms())
                        acc.push_back({ModTerm{pos, t},
                                       negate ? ring.field.neg(c) : c});
                }
                ModuleElement w = ModuleElement::from_terms(F, std::move(acc));
                if (!w.is_zero()) gens.push_back(std::move(w));
            }
            // G * e_L
            for (int pos = 0; pos < rank; ++pos)
                gens.push_back(ModuleElement::basis(F, pos).times_poly(g));
        }
    }
    return KaehlerPresentation{m, F, Submodule(F, std::move(gens))};
}

KaehlerPresentation omega_presentation(const SchemeCtx& ctx, int m) {
    return omega_presentation(ctx.ring, ctx.ideal.basis(), m);
}

HilbertData omega_hilbert(const SchemeCtx& ctx, int m) {
    const int bound = 2 * ctx.r + m;
    KaehlerPresentation pres = omega_presentation(ctx, m);
    auto values = hf_module_quotient(pres.relations, bound + 1);
    return stabilize(std::move(values), bound);
}

namespace {

std::vector<Polynomial> dehomogenized_basis(const SchemeCtx& ctx) {
    std::vector<Polynomial> out;
    for (const auto& g : ctx.ideal.basis()) out.push_back(g.dehomogenized());
    return out;
}

}  // namespace

long long omega_affine_dim(const SchemeCtx& ctx, int m) {
    if (m < 0 || m > ctx.ring.nvars)
        throw FormDegreeOutOfRange("affine form degree out of range");
    Ring aff = affine_ring(ctx.ring.field, ctx.ring.n());
    auto gens = dehomogenized_basis(ctx);
    if (m == 0) return affine_k_dimension(Ideal(aff, std::move(gens)));
    KaehlerPresentation pres = omega_presentation(aff, gens, m);
    return affine_k_dimension(pres.relations);
}

HilbertData torsion_hilbert(const SchemeCtx& ctx) {
    const int upto = 2 * ctx.r + 2;
    KaehlerPresentation pres = omega_presentation(ctx, 1);
    Polynomial x0 = Polynomial::variable(ctx.ring, 0);
    Submodule sat = saturate_submodule(pres.relations, x0);
    auto hf_n = hf_module_quotient(pres.relations, upto);
    auto hf_sat = hf_module_quotient(sat, upto);
    std::vector<long long> values(hf_n.size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = hf_n[i] - hf_sat[i];
    HilbertData h = stabilize(std::move(values), 2 * ctx.r + 1);
    if (h.hp != 0)
        throw StabilizationViolated("torsion submodule has nonzero Hilbert polynomial");
    return h;
}

HilbertData euler_kernel_hilbert(const SchemeCtx& ctx) {
    const int upto = 2 * ctx.r + 2;
    KaehlerPresentation pres = omega_presentation(ctx, 1);
    auto hf_omega = hf_module_quotient(pres.relations, upto);
    std::vector<long long> values(hf_omega.size(), 0);
    for (int i = 1; i <= upto; ++i) {
        values[i] = hf_omega[i] - ctx.hf.at(i);
        if (values[i] < 0)
            throw InternalInconsistency("Euler form image larger than Omega^1");
    }
    return stabilize(std::move(values), 2 * ctx.r + 1);
}

std::vector<ModuleElement> koszul_generators(const FreeModulePtr& f1) {
    const Ring& ring = f1->ring;
    std::vector<ModuleElement> out;
    for (int i = 0; i < ring.nvars; ++i) {
        for (int j = i + 1; j < ring.nvars; ++j) {
            ModuleElement w = ModuleElement::basis(f1, j)
                                  .times_poly(Polynomial::variable(ring, i)) -
                              ModuleElement::basis(f1, i)
                                  .times_poly(Polynomial::variable(ring, j));
            out.push_back(std::move(w));
        }
    }
    return out;
}

HilbertData koszul_submodule_hilbert(const SchemeCtx& ctx) {
    const int upto = 2 * ctx.r + 2;
    KaehlerPresentation pres = omega_presentation(ctx, 1);
    std::vector<ModuleElement> enlarged = pres.relations.gens();
    for (auto& w : koszul_generators(pres.free_module)) enlarged.push_back(std::move(w));
    Submodule with_u(pres.free_module, std::move(enlarged));
    auto hf_n = hf_module_quotient(pres.relations, upto);
    auto hf_nu = hf_module_quotient(with_u, upto);
    std::vector<long long> values(hf_n.size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = hf_n[i] - hf_nu[i];
    return stabilize(std::move(values), 2 * ctx.r + 1);
}

TriangularDecomposition triangular_decompose(const Polynomial& f) {
    const Ring& ring = f.ring();
    std::vector<std::vector<std::pair<Term, FieldElem>>> parts(ring.nvars);
    for (const auto& [t, c] : f.terms()) {
        int least = -1;
        for (int v = 0; v < ring.nvars; ++v)
            if (t.e[v] > 0) { least = v; break; }
        if (least < 0) throw NonzeroConstantTerm();
        Term cof = t;
        cof.e[least] -= 1;
        cof.deg -= 1;
        parts[least].emplace_back(std::move(cof), c);
    }
    TriangularDecomposition out;
    for (int v = 0; v < ring.nvars; ++v)
        out.parts.push_back(Polynomial::from_terms(ring, std::move(parts[v])));
    return out;
}

std::vector<ModuleElement> ker_epsilon_generators(const SchemeCtx& ctx) {
    KaehlerPresentation pres = omega_presentation(ctx, 1);
    std::vector<ModuleElement> out = koszul_generators(pres.free_module);
    for (const auto& g : ctx.ideal.gens()) {
        if (g.is_zero()) continue;
        TriangularDecomposition th = triangular_decompose(g);
        std::vector<std::pair<int, Polynomial>> coords;
        for (int v = 0; v < ctx.ring.nvars; ++v)
            if (!th.parts[v].is_zero()) coords.emplace_back(v, th.parts[v]);
        ModuleElement w = ModuleElement::from_coords(pres.free_module, coords);
        if (!w.is_zero()) out.push_back(std::move(w));
    }
    return out;
}

// --- graded local rings S = A/q^k ---------------------------------------

namespace {

std::vector<Polynomial> power_maximal_ideal(const Ring& aff, int k) {
    std::vector<Polynomial> gens;
    for (const Term& t : terms_of_degree(aff, k))
        gens.push_back(Polynomial::monomial(aff, t, aff.field.one()));
    return gens;
}

}  // namespace

std::vector<long long> local_omega_hf(const Field& field, int n, int k, int m,
                                      int upto) {
    Ring aff = affine_ring(field, n);
    auto q_k = power_maximal_ideal(aff, k);
    if (m == 0) return hf_ring_quotient(Ideal(aff, std::move(q_k)), upto);
    if (m > n) return std::vector<long long>(upto + 1, 0);
    KaehlerPresentation pres = omega_presentation(aff, q_k, m);
    return hf_module_quotient(pres.relations, upto);
}

long long local_omega_dim(const Field& field, int n, int k, int m) {
    Ring aff = affine_ring(field, n);
    auto q_k = power_maximal_ideal(aff, k);
    if (m == 0) return affine_k_dimension(Ideal(aff, std::move(q_k)));
    if (m > n) return 0;
    KaehlerPresentation pres = omega_presentation(aff, q_k, m);
    return affine_k_dimension(pres.relations);
}

long long euler_koszul_alternating_sum(const Field& field, int n, int k, int i) {
    if (i < 1) throw Error("alternating sum needs degree >= 1");
    // in degrees >= 1 the piece (q/q^k)_i agrees with S_i
    long long alt = 0;
    int sign = 1;
    for (int m = 0; m <= n; ++m) {
        auto hf = local_omega_hf(field, n, k, m, i);
        alt += sign * hf[i];
        sign = -sign;
    }
    return alt;
}

}  // namespace kdiff
