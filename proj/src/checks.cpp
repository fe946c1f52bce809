#include <algorithm>
#include <map>

#include "kdiff/kaehler.hpp"

namespace kdiff {

std::string to_string(CurvilinearVerdict v) {
    switch (v) {
        case CurvilinearVerdict::Smooth: return "Smooth";
        case CurvilinearVerdict::CurvilinearNotSmooth: return "CurvilinearNotSmooth";
        case CurvilinearVerdict::No: return "No";
    }
    return "?";
}

SmoothEvidence check_smooth(const SchemeCtx& ctx) {
    SmoothEvidence ev;
    ev.deg = ctx.deg;
    ev.dim_omega1_s = omega_affine_dim(ctx, 1);
    ev.hp_omega1 = omega_hilbert(ctx, 1).hp;
    bool higher_zero = true;
    for (int m = 2; m <= ctx.ring.nvars; ++m) {
        ev.hp_higher.push_back(omega_hilbert(ctx, m).hp);
        if (ev.hp_higher.back() != 0) higher_zero = false;
    }
    bool via_affine = (ev.dim_omega1_s == 0);
    bool via_hp = (ev.hp_omega1 == ev.deg) && higher_zero;
    if (via_affine != via_hp)
        throw InternalInconsistency("smoothness criteria disagree");
    ev.smooth = via_affine;
    return ev;
}

CurvilinearEvidence check_weakly_curvilinear(const SchemeCtx& ctx) {
    const int n = ctx.ring.n();
    CurvilinearEvidence ev;
    ev.deg = ctx.deg;
    for (int m = 1; m <= n; ++m) ev.affine_dims.push_back(omega_affine_dim(ctx, m));
    for (int m = 1; m <= n + 1; ++m) ev.hps.push_back(omega_hilbert(ctx, m).hp);

    bool higher_dims_zero = true;
    for (int m = 2; m <= n; ++m)
        if (ev.affine_dims[m - 1] != 0) higher_dims_zero = false;
    CurvilinearVerdict via_affine;
    if (ev.affine_dims[0] == 0) via_affine = CurvilinearVerdict::Smooth;
    else if (higher_dims_zero) via_affine = CurvilinearVerdict::CurvilinearNotSmooth;
    else via_affine = CurvilinearVerdict::No;

    long long hp1 = ev.hps[0];
    long long hp2 = ev.hps[1];  // m = 2 exists for every n >= 1
    bool hp_tail_zero = true;   // HP(Omega^m) = 0 for m > 2
    for (int m = 3; m <= n + 1; ++m)
        if (ev.hps[m - 1] != 0) hp_tail_zero = false;
    CurvilinearVerdict via_hp;
    if (hp1 == ctx.deg && hp2 == 0 && hp_tail_zero)
        via_hp = CurvilinearVerdict::Smooth;
    else if (hp1 > ctx.deg && hp2 == hp1 - ctx.deg && hp_tail_zero)
        via_hp = CurvilinearVerdict::CurvilinearNotSmooth;
    else
        via_hp = CurvilinearVerdict::No;

    if (via_affine != via_hp)
        throw InternalInconsistency("curvilinearity criteria disagree");
    ev.verdict = via_affine;
    return ev;
}

namespace {

bool char_permits_differential(const SchemeCtx& ctx) {
    long long p = ctx.ring.field.characteristic();
    return p == 0 || p > ctx.r;
}

}  // namespace

CbpEvidence check_cbp(const SchemeCtx& ctx, int d) {
    if (d < 0) throw Error("CBP degree must be >= 0");
    CbpEvidence ev;
    ev.degree = d;
    auto subs = colength_subschemes(ctx, 1);
    ev.min_alpha = ctx.r + 1;
    for (const auto& y : subs) {
        ev.alphas.push_back(y.alpha);
        ev.min_alpha = std::min(ev.min_alpha, y.alpha);
    }
    ev.holds = ev.min_alpha >= d + 1;

    if (char_permits_differential(ctx) && d >= 1 && d <= ctx.r - 1) {
        ev.differential_checked = true;
        long long hf_x = omega_hilbert(ctx, 1).at(d);
        bool all_equal = true;
        for (const auto& y : subs) {
            long long hf_y = omega_hilbert(y.ctx, 1).at(d);
            bool equal = (hf_y == hf_x);
            if (!equal) all_equal = false;
            if (equal != (y.alpha > d))
                throw InternalInconsistency(
                    "separator degree and Omega^1 Hilbert function disagree");
        }
        if (all_equal != ev.holds)
            throw InternalInconsistency("CBP criteria disagree");
    }
    return ev;
}

UniformEvidence check_uniform(const SchemeCtx& ctx, int i, int j) {
    if (i < 1 || j < 1) throw Error("uniformity indices must be >= 1");
    UniformEvidence ev;
    ev.i = i;
    ev.j = j;
    auto subs = colength_subschemes(ctx, i);
    bool diff_ok = char_permits_differential(ctx) && j <= ctx.r - 1;
    long long hf_omega_x = 0;
    if (diff_ok) {
        hf_omega_x = omega_hilbert(ctx, 1).at(j);
        ev.differential_checked = true;
    }
    ev.holds = true;
    for (const auto& y : subs) {
        bool equal_hf = (y.ctx.hf.at(j) == ctx.hf.at(j));
        if (!equal_hf) { ev.holds = false; ++ev.violations; }
        if (diff_ok) {
            bool equal_omega = (omega_hilbert(y.ctx, 1).at(j) == hf_omega_x);
            if (equal_omega != equal_hf)
                throw InternalInconsistency(
                    "uniformity criteria disagree on a subscheme");
        }
    }
    return ev;
}

// --- local ring profiles ------------------------------------------------

namespace {

Polynomial substitute(const Polynomial& f,
                      const std::map<int, Polynomial>& repl) {
    const Ring& ring = f.ring();
    Polynomial acc = Polynomial::zero(ring);
    for (const auto& [t, c] : f.terms()) {
        Polynomial prod = Polynomial::constant(ring, c);
        for (int v = 0; v < ring.nvars; ++v) {
            if (t.e[v] == 0) continue;
            auto it = repl.find(v);
            Polynomial base = it != repl.end() ? it->second
                                               : Polynomial::variable(ring, v);
            for (int e = 0; e < t.e[v]; ++e) prod = prod * base;
        }
        acc = acc + prod;
    }
    return acc;
}

// Tries to read off (kappa, nu) for a component ideal of the shape
// <linear forms, g^nu> where the linear forms cut the component down to one
// variable and g becomes a power of a linear polynomial there. Anything
// richer (residue fields beyond K) must be supplied by the user.
std::pair<long long, long long> profile_of_ideal_component(
    const Field& field, int n, const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> linear, rest;
    for (const auto& g : gens) {
        Polynomial a = g.dehomogenized();
        if (a.is_zero()) continue;
        if (a.degree() <= 1) linear.push_back(a);
        else rest.push_back(a);
    }
    if (static_cast<int>(linear.size()) != n - 1 || rest.size() != 1)
        throw ProfileUnavailable(
            "component ideal is not of the shape <linear forms, g^nu>");
    const Ring aff = rest.front().ring();

    // Gaussian elimination: express n-1 pivot variables through the rest.
    std::vector<std::vector<FieldElem>> m;  // rows: [coeff_1..coeff_n | const]
    for (const auto& l : linear) {
        std::vector<FieldElem> row(n + 1, field.zero());
        for (const auto& [t, c] : l.terms()) {
            if (t.deg == 0) row[n] = c;
            else
                for (int v = 0; v < n; ++v)
                    if (t.e[v] == 1) row[v] = c;
        }
        m.push_back(std::move(row));
    }
    std::vector<int> pivot_of_row;
    std::size_t rpos = 0;
    for (int col = 0; col < n && rpos < m.size(); ++col) {
        std::size_t piv = rpos;
        while (piv < m.size() && field.is_zero(m[piv][col])) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[rpos], m[piv]);
        FieldElem inv = field.inv(m[rpos][col]);
        for (int c = 0; c <= n; ++c) m[rpos][c] = field.mul(m[rpos][c], inv);
        for (std::size_t rr = 0; rr < m.size(); ++rr) {
            if (rr == rpos || field.is_zero(m[rr][col])) continue;
            FieldElem f = m[rr][col];
            for (int c = 0; c <= n; ++c)
                m[rr][c] = field.sub(m[rr][c], field.mul(f, m[rpos][c]));
        }
        pivot_of_row.push_back(col);
        ++rpos;
    }
    if (pivot_of_row.size() != linear.size())
        throw ProfileUnavailable("linear forms of the component are dependent");

    int free_var = -1;
    for (int v = 0; v < n; ++v)
        if (std::find(pivot_of_row.begin(), pivot_of_row.end(), v) ==
            pivot_of_row.end())
            free_var = v;

    std::map<int, Polynomial> repl;
    for (std::size_t r = 0; r < m.size(); ++r) {
        // x_pivot = -const - coeff_free * x_free
        Polynomial rhs = Polynomial::constant(aff, field.neg(m[r][n]));
        if (free_var >= 0 && !field.is_zero(m[r][free_var]))
            rhs = rhs - Polynomial::variable(aff, free_var).scaled(m[r][free_var]);
        repl.insert({pivot_of_row[r], rhs});
    }

    Polynomial h = substitute(rest.front(), repl);
    int nu = h.degree();
    if (nu < 1) throw ProfileUnavailable("component collapses to a constant");

    // match h against lead * (z - a)^nu
    Polynomial z = Polynomial::variable(aff, free_var);
    Term lead_term = Term::var(n, free_var, nu);
    FieldElem lead = h.coeff(lead_term);
    if (field.is_zero(lead))
        throw ProfileUnavailable("component is not univariate after substitution");
    long long p = field.characteristic();
    FieldElem a = field.zero();
    if (p == 0 || nu % p != 0) {
        Term sub_term = Term::var(n, free_var, nu - 1);
        FieldElem c1 = h.coeff(sub_term);
        a = field.neg(field.div(c1, field.mul(lead, field.from_integer(nu))));
    }
    Polynomial probe = Polynomial::constant(aff, lead);
    Polynomial zma = z - Polynomial::constant(aff, a);
    for (int e = 0; e < nu; ++e) probe = probe * zma;
    if (!(probe == h))
        throw ProfileUnavailable(
            "component is not a power of a linear polynomial; supply the "
            "local profile explicitly");
    return {1, nu};
}

}  // namespace

LocalRingProfile local_profile(const SchemeSpec& spec) {
    if (spec.profile) return *spec.profile;
    if (!spec.from_points())
        throw ProfileUnavailable(
            "explicit-ideal schemes need a user-supplied local profile");
    LocalRingProfile out;
    for (const auto& comp : spec.components) {
        if (const auto* pc = std::get_if<PointComponent>(&comp)) {
            if (pc->mult == 1) out.entries.emplace_back(1, 1);
            else if (spec.n == 1) out.entries.emplace_back(1, pc->mult);
            else
                throw ProfileUnavailable(
                    "fat points in P^n (n >= 2) are not curvilinear");
        } else {
            const auto& ic = std::get<IdealComponent>(comp);
            out.entries.push_back(
                profile_of_ideal_component(spec.field, spec.n, ic.gens));
        }
    }
    return out;
}

}  // namespace kdiff
