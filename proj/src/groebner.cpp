#include "kdiff/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace kdiff {

FreeModule FreeModule::make(Ring ring, int rank, std::vector<int> twists,
                            std::vector<std::vector<int>> labels) {
    if (twists.empty()) twists.assign(rank, 0);
    if (labels.empty())
        for (int i = 0; i < rank; ++i) labels.push_back({i});
    if (static_cast<int>(twists.size()) != rank ||
        static_cast<int>(labels.size()) != rank)
        throw Error("free module rank does not match twists/labels");
    return FreeModule{std::move(ring), rank, std::move(twists), std::move(labels)};
}

FreeModulePtr make_module(Ring ring, int rank, std::vector<int> twists,
                          std::vector<std::vector<int>> labels) {
    return std::make_shared<const FreeModule>(
        FreeModule::make(std::move(ring), rank, std::move(twists), std::move(labels)));
}

int true_degree(const FreeModule& mod, const ModTerm& mt) {
    return mt.t.deg + mod.twists[mt.pos];
}

int compare_modterms(const ModuleOrder& order, const FreeModule& mod,
                     const ModTerm& a, const ModTerm& b) {
    if (order.elim_split > 0) {
        int ba = a.pos < order.elim_split ? 0 : 1;
        int bb = b.pos < order.elim_split ? 0 : 1;
        if (ba != bb) return ba < bb ? 1 : -1;
    }
    int c = compare_terms(order.ring_order, a.t, b.t);
    if (c != 0) return c;
    if (a.pos == b.pos) return 0;
    return mod.labels[a.pos] < mod.labels[b.pos] ? 1 : -1;
}

namespace {

// canonical storage comparator: ascending position, descending DegRevLex
bool canonical_before(const ModTerm& a, const ModTerm& b) {
    if (a.pos != b.pos) return a.pos < b.pos;
    return compare_terms(MonomialOrder::degrevlex(), a.t, b.t) > 0;
}

}  // namespace

ModuleElement ModuleElement::basis(FreeModulePtr mod, int pos) {
    ModuleElement w(mod);
    w.terms_.emplace_back(ModTerm{pos, Term::one(mod->ring.nvars)}, mod->ring.field.one());
    return w;
}

ModuleElement ModuleElement::from_terms(FreeModulePtr mod,
                                        std::vector<std::pair<ModTerm, FieldElem>> terms) {
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
        return canonical_before(x.first, y.first);
    });
    ModuleElement w(mod);
    const Field& F = mod->ring.field;
    for (auto& [mt, c] : terms) {
        if (!w.terms_.empty() && w.terms_.back().first == mt) {
            w.terms_.back().second = F.add(w.terms_.back().second, c);
            if (F.is_zero(w.terms_.back().second)) w.terms_.pop_back();
        } else if (!F.is_zero(c)) {
            w.terms_.emplace_back(std::move(mt), std::move(c));
        }
    }
    return w;
}

ModuleElement ModuleElement::from_coords(
    FreeModulePtr mod, const std::vector<std::pair<int, Polynomial>>& coords) {
    std::vector<std::pair<ModTerm, FieldElem>> terms;
    for (const auto& [pos, f] : coords) {
        if (f.ring() != mod->ring) throw RingMismatch("module element coordinates");
        if (pos < 0 || pos >= mod->rank) throw Error("module coordinate out of range");
        for (const auto& [t, c] : f.terms()) terms.push_back({ModTerm{pos, t}, c});
    }
    return from_terms(std::move(mod), std::move(terms));
}

std::vector<std::pair<int, Polynomial>> ModuleElement::coords() const {
    std::vector<std::pair<int, Polynomial>> out;
    for (const auto& [mt, c] : terms_) {
        if (out.empty() || out.back().first != mt.pos)
            out.emplace_back(mt.pos, Polynomial::zero(mod_->ring));
        out.back().second =
            out.back().second + Polynomial::monomial(mod_->ring, mt.t, c);
    }
    return out;
}

Polynomial ModuleElement::coord(int pos) const {
    std::vector<std::pair<Term, FieldElem>> acc;
    for (const auto& [mt, c] : terms_)
        if (mt.pos == pos) acc.emplace_back(mt.t, c);
    return Polynomial::from_terms(mod_->ring, std::move(acc));
}

ModuleElement ModuleElement::operator+(const ModuleElement& w) const {
    if (*mod_ != *w.mod_) throw RingMismatch("module element addition");
    const Field& F = mod_->ring.field;
    ModuleElement r(mod_);
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < w.terms_.size()) {
        bool take_left;
        if (i == terms_.size()) take_left = false;
        else if (j == w.terms_.size()) take_left = true;
        else if (terms_[i].first == w.terms_[j].first) {
            FieldElem s = F.add(terms_[i].second, w.terms_[j].second);
            if (!F.is_zero(s)) r.terms_.emplace_back(terms_[i].first, s);
            ++i; ++j;
            continue;
        } else {
            take_left = canonical_before(terms_[i].first, w.terms_[j].first);
        }
        if (take_left) r.terms_.push_back(terms_[i++]);
        else r.terms_.push_back(w.terms_[j++]);
    }
    return r;
}

ModuleElement ModuleElement::operator-() const {
    ModuleElement r(mod_);
    const Field& F = mod_->ring.field;
    r.terms_.reserve(terms_.size());
    for (const auto& [mt, c] : terms_) r.terms_.emplace_back(mt, F.neg(c));
    return r;
}

ModuleElement ModuleElement::operator-(const ModuleElement& w) const {
    return *this + (-w);
}

ModuleElement ModuleElement::times_term(const Term& t, const FieldElem& c) const {
    const Field& F = mod_->ring.field;
    ModuleElement r(mod_);
    if (F.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [mt, a] : terms_) {
        FieldElem m = F.mul(a, c);
        if (!F.is_zero(m))
            r.terms_.emplace_back(ModTerm{mt.pos, mt.t.mul(t)}, std::move(m));
    }
    // multiplying by a term preserves the canonical sort within positions
    return r;
}

ModuleElement ModuleElement::times_poly(const Polynomial& f) const {
    if (f.ring() != mod_->ring) throw RingMismatch("module scalar multiplication");
    ModuleElement acc = ModuleElement::zero(mod_);
    for (const auto& [t, c] : f.terms()) acc = acc + times_term(t, c);
    return acc;
}

ModuleElement ModuleElement::scaled(const FieldElem& c) const {
    return times_term(Term::one(mod_->ring.nvars), c);
}

std::optional<int> ModuleElement::homogeneous_degree() const {
    if (is_zero()) return std::nullopt;
    int d = true_degree(*mod_, terms_.front().first);
    for (const auto& [mt, c] : terms_)
        if (true_degree(*mod_, mt) != d) return std::nullopt;
    return d;
}

std::string ModuleElement::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [pos, f] : coords()) {
        if (!first) out << " + ";
        first = false;
        out << "(" << f.to_string() << ")*e";
        const auto& lab = mod_->labels[pos];
        for (std::size_t i = 0; i < lab.size(); ++i)
            out << (i ? "," : "[") << lab[i];
        out << "]";
    }
    return out.str();
}

// ---------------------------------------------------------------------
// Buchberger engine. Works on term lists sorted descending by the active
// order; elements of the basis are kept monic.

namespace {

using TermList = std::vector<std::pair<ModTerm, FieldElem>>;

struct Engine {
    const FreeModule& mod;
    ModuleOrder order;
    const Field& F;

    bool before(const ModTerm& a, const ModTerm& b) const {
        return compare_modterms(order, mod, a, b) > 0;
    }

    TermList sorted(const ModuleElement& w) const {
        TermList out(w.terms().begin(), w.terms().end());
        std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
            return before(x.first, y.first);
        });
        return out;
    }

    ModuleElement to_element(const FreeModulePtr& modptr, TermList l) const {
        return ModuleElement::from_terms(modptr, std::move(l));
    }

    // a -= c * t * b, all sorted descending; returns the merge.
    TermList subtract_scaled(const TermList& a, const TermList& b, const Term& t,
                             const FieldElem& c) const {
        TermList out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            ModTerm bt;
            if (j < b.size()) bt = ModTerm{b[j].first.pos, b[j].first.t.mul(t)};
            if (i == a.size()) {
                out.emplace_back(bt, F.neg(F.mul(b[j].second, c)));
                ++j;
            } else if (j == b.size()) {
                out.push_back(a[i++]);
            } else if (a[i].first == bt) {
                FieldElem s = F.sub(a[i].second, F.mul(b[j].second, c));
                if (!F.is_zero(s)) out.emplace_back(a[i].first, s);
                ++i; ++j;
            } else if (before(a[i].first, bt)) {
                out.push_back(a[i++]);
            } else {
                out.emplace_back(bt, F.neg(F.mul(b[j].second, c)));
                ++j;
            }
        }
        return out;
    }

    TermList scale(TermList l, const FieldElem& c) const {
        for (auto& [mt, a] : l) a = F.mul(a, c);
        return l;
    }

    // Full reduction against monic basis elements.
    TermList reduce(TermList w, const std::vector<TermList>& basis) const {
        TermList rem;
        while (!w.empty()) {
            const ModTerm& head = w.front().first;
            bool hit = false;
            for (const auto& g : basis) {
                if (g.empty()) continue;
                if (g.front().first.divides(head)) {
                    Term factor = head.t.div(g.front().first.t);
                    w = subtract_scaled(w, g, factor, w.front().second);
                    hit = true;
                    break;
                }
            }
            if (!hit) {
                rem.push_back(w.front());
                w.erase(w.begin());
            }
        }
        return rem;
    }

    TermList make_monic(TermList l) const {
        if (l.empty()) return l;
        FieldElem c = F.inv(l.front().second);
        return scale(std::move(l), c);
    }
};

struct Pair {
    int i, j;
    ModTerm lcm;
    int degree;  // twisted degree of the S-vector
};

}  // namespace

std::vector<ModuleElement> module_buchberger(const FreeModulePtr& modptr,
                                             std::vector<ModuleElement> gens,
                                             const ModuleOrder& order,
                                             int degree_cutoff) {
    const FreeModule& mod = *modptr;
    Engine eng{mod, order, mod.ring.field};

    if (degree_cutoff >= 0) {
        for (const auto& g : gens)
            if (!g.is_homogeneous())
                throw NonHomogeneousInput("truncated Gröbner basis");
    }

    std::vector<TermList> G;

    auto pair_before = [&](const Pair& a, const Pair& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        int c = compare_modterms(order, mod, a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<Pair> pending;  // kept sorted ascending by pair_before
    std::set<std::pair<int, int>> pending_ids;

    auto push_pairs_for = [&](int idx) {
        const ModTerm& lt = G[idx].front().first;
        for (int i = 0; i < idx; ++i) {
            const ModTerm& lti = G[i].front().first;
            if (lti.pos != lt.pos) continue;
            Pair p;
            p.i = i;
            p.j = idx;
            p.lcm = ModTerm{lt.pos, lti.t.lcm(lt.t)};
            p.degree = true_degree(mod, p.lcm);
            if (degree_cutoff >= 0 && p.degree > degree_cutoff) continue;
            auto it = std::lower_bound(pending.begin(), pending.end(), p, pair_before);
            pending.insert(it, p);
            pending_ids.insert({p.i, p.j});
        }
    };

    auto add_element = [&](TermList l) {
        G.push_back(eng.make_monic(std::move(l)));
        push_pairs_for(static_cast<int>(G.size()) - 1);
    };

    for (const auto& g : gens) {
        TermList r = eng.reduce(eng.sorted(g), G);
        if (!r.empty()) add_element(std::move(r));
    }

    while (!pending.empty()) {
        Pair p = pending.front();
        pending.erase(pending.begin());
        pending_ids.erase({p.i, p.j});

        const ModTerm& lti = G[p.i].front().first;
        const ModTerm& ltj = G[p.j].front().first;

        // Buchberger's first criterion (valid in the polynomial case)
        if (mod.rank == 1 && lti.t.coprime(ltj.t)) continue;

        // chain criterion
        bool skip = false;
        for (int k = 0; k < static_cast<int>(G.size()) && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            const ModTerm& ltk = G[k].front().first;
            if (!ltk.divides(p.lcm)) continue;
            auto id1 = std::minmax(p.i, k);
            auto id2 = std::minmax(p.j, k);
            if (!pending_ids.count({id1.first, id1.second}) &&
                !pending_ids.count({id2.first, id2.second}))
                skip = true;
        }
        if (skip) continue;

        TermList left;
        Term fi = p.lcm.t.div(lti.t);
        for (const auto& [mt, c] : G[p.i])
            left.emplace_back(ModTerm{mt.pos, mt.t.mul(fi)}, c);
        TermList s = eng.subtract_scaled(left, G[p.j], p.lcm.t.div(ltj.t), eng.F.one());

        TermList r = eng.reduce(std::move(s), G);
        if (!r.empty()) add_element(std::move(r));
    }

    // interreduce: keep elements with minimal leading terms
    std::vector<bool> keep(G.size(), true);
    for (std::size_t a = 0; a < G.size(); ++a) {
        for (std::size_t b = 0; b < G.size() && keep[a]; ++b) {
            if (a == b || !keep[b]) continue;
            const ModTerm& la = G[a].front().first;
            const ModTerm& lb = G[b].front().first;
            if (lb.divides(la) && (la != lb || b < a)) keep[a] = false;
        }
    }
    std::vector<TermList> kept;
    for (std::size_t a = 0; a < G.size(); ++a)
        if (keep[a]) kept.push_back(std::move(G[a]));

    // tail-reduce each element against the others
    std::vector<TermList> reduced;
    for (std::size_t a = 0; a < kept.size(); ++a) {
        std::vector<TermList> others;
        for (std::size_t b = 0; b < kept.size(); ++b)
            if (b != a) others.push_back(kept[b]);
        TermList head{kept[a].front()};
        TermList tail(kept[a].begin() + 1, kept[a].end());
        TermList nf = eng.reduce(std::move(tail), others);
        head.insert(head.end(), nf.begin(), nf.end());
        reduced.push_back(std::move(head));
    }

    std::sort(reduced.begin(), reduced.end(), [&](const TermList& x, const TermList& y) {
        return eng.before(x.front().first, y.front().first);
    });

    std::vector<ModuleElement> out;
    out.reserve(reduced.size());
    for (auto& l : reduced) out.push_back(eng.to_element(modptr, std::move(l)));
    return out;
}

ModuleElement module_normal_form(const ModuleElement& w,
                                 const std::vector<ModuleElement>& basis,
                                 const ModuleOrder& order) {
    if (basis.empty()) return w;
    const FreeModulePtr& modptr = basis.front().module();
    if (*w.module() != *modptr) throw RingMismatch("module normal form");
    Engine eng{*modptr, order, modptr->ring.field};
    std::vector<TermList> B;
    for (const auto& g : basis)
        if (!g.is_zero()) B.push_back(eng.make_monic(eng.sorted(g)));
    return eng.to_element(w.module(), eng.reduce(eng.sorted(w), B));
}

// --- polynomial wrappers ----------------------------------------------

FreeModulePtr rank1_module(const Ring& ring) { return make_module(ring, 1); }

ModuleElement poly_to_rank1(const FreeModulePtr& mod, const Polynomial& f) {
    return ModuleElement::from_coords(mod, {{0, f}});
}

Polynomial rank1_to_poly(const ModuleElement& w) { return w.coord(0); }

std::vector<Polynomial> buchberger(const Ring& ring, std::vector<Polynomial> gens,
                                   const MonomialOrder& order) {
    FreeModulePtr mod = rank1_module(ring);
    std::vector<ModuleElement> elems;
    for (auto& g : gens) {
        if (g.ring() != ring) throw RingMismatch("buchberger");
        if (!g.is_zero()) elems.push_back(poly_to_rank1(mod, g));
    }
    ModuleOrder mo;
    mo.ring_order = order;
    auto gb = module_buchberger(mod, std::move(elems), mo);
    std::vector<Polynomial> out;
    out.reserve(gb.size());
    for (const auto& w : gb) out.push_back(rank1_to_poly(w));
    return out;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
    if (basis.empty()) return f;
    FreeModulePtr mod = rank1_module(f.ring());
    std::vector<ModuleElement> B;
    for (const auto& g : basis) B.push_back(poly_to_rank1(mod, g));
    ModuleOrder mo;
    mo.ring_order = order;
    return rank1_to_poly(module_normal_form(poly_to_rank1(mod, f), B, mo));
}

// --- Ideal / Submodule ------------------------------------------------

Ideal::Ideal(Ring ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
    for (const auto& g : gens_)
        if (g.ring() != ring_) throw RingMismatch("ideal generators");
}

const std::vector<Polynomial>& Ideal::basis() const {
    if (!gb_) gb_ = buchberger(ring_, gens_);
    return *gb_;
}

bool Ideal::contains(const Polynomial& f) const {
    return normal_form(f, basis()).is_zero();
}

bool Ideal::is_homogeneous() const {
    for (const auto& g : gens_)
        if (!g.is_homogeneous()) return false;
    return true;
}

bool Ideal::same_ideal(const Ideal& other) const {
    return ring_ == other.ring_ && basis() == other.basis();
}

Submodule::Submodule(FreeModulePtr mod, std::vector<ModuleElement> gens,
                     ModuleOrder order)
    : mod_(std::move(mod)), gens_(std::move(gens)), order_(order) {
    for (const auto& g : gens_)
        if (*g.module() != *mod_) throw RingMismatch("submodule generators");
}

const std::vector<ModuleElement>& Submodule::basis() const {
    if (!gb_) gb_ = module_buchberger(mod_, gens_, order_);
    return *gb_;
}

bool Submodule::contains(const ModuleElement& w) const {
    return module_normal_form(w, basis(), order_).is_zero();
}

bool Submodule::is_homogeneous() const {
    for (const auto& g : gens_)
        if (!g.is_homogeneous()) return false;
    return true;
}

bool Submodule::same_submodule(const Submodule& other) const {
    return *mod_ == *other.mod_ && basis() == other.basis();
}

// --- derived operations -----------------------------------------------

namespace {

// prepend one auxiliary variable (slot 0) for elimination
Polynomial prepend_var(const Polynomial& f, const Ring& ext) {
    std::vector<std::pair<Term, FieldElem>> acc;
    for (const auto& [t, c] : f.terms()) {
        std::vector<int> e(ext.nvars);
        e[0] = 0;
        std::copy(t.e.begin(), t.e.end(), e.begin() + 1);
        acc.emplace_back(Term(std::move(e)), c);
    }
    return Polynomial::from_terms(ext, std::move(acc));
}

Polynomial drop_first_var(const Polynomial& f, const Ring& base) {
    std::vector<std::pair<Term, FieldElem>> acc;
    for (const auto& [t, c] : f.terms()) {
        std::vector<int> e(t.e.begin() + 1, t.e.end());
        acc.emplace_back(Term(std::move(e)), c);
    }
    return Polynomial::from_terms(base, std::move(acc));
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
    if (a.ring() != b.ring()) throw RingMismatch("ideal intersection");
    const Ring& ring = a.ring();
    Ring ext{ring.field, ring.nvars + 1, ring.projective};
    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial one = Polynomial::constant(ext, ring.field.one());
    std::vector<Polynomial> gens;
    for (const auto& g : a.gens()) gens.push_back(t * prepend_var(g, ext));
    for (const auto& h : b.gens()) gens.push_back((one - t) * prepend_var(h, ext));
    auto gb = buchberger(ext, std::move(gens), MonomialOrder::elim(1));
    std::vector<Polynomial> out;
    for (const auto& g : gb) {
        bool has_t = false;
        for (const auto& [tm, c] : g.terms())
            if (tm.e[0] > 0) { has_t = true; break; }
        if (!has_t) out.push_back(drop_first_var(g, ring));
    }
    return Ideal(ring, std::move(out));
}

Ideal ideal_power(const Ideal& a, int m) {
    if (m < 1) throw Error("ideal power expects m >= 1");
    if (m == 1) return a;
    const auto& gens = a.gens();
    std::vector<Polynomial> out;
    // all products of m generators with repetition
    std::vector<int> pick(m, 0);
    while (true) {
        Polynomial prod = Polynomial::constant(a.ring(), a.ring().field.one());
        for (int i = 0; i < m; ++i) prod = prod * gens[pick[i]];
        out.push_back(prod);
        int slot = m - 1;
        while (slot >= 0 && pick[slot] == static_cast<int>(gens.size()) - 1) --slot;
        if (slot < 0) break;
        ++pick[slot];
        for (int i = slot + 1; i < m; ++i) pick[i] = pick[slot];
    }
    return Ideal(a.ring(), std::move(out));
}

Submodule syzygy_module(const std::vector<ModuleElement>& gens) {
    if (gens.empty()) throw Error("syzygy_module of empty generator list");
    const FreeModulePtr& F = gens.front().module();
    const Ring& ring = F->ring;
    const int r = F->rank;
    const int s = static_cast<int>(gens.size());

    bool graded = true;
    std::vector<int> gdeg(s, 0);
    for (int j = 0; j < s; ++j) {
        if (*gens[j].module() != *F) throw RingMismatch("syzygy_module");
        auto d = gens[j].homogeneous_degree();
        if (d) gdeg[j] = *d;
        else graded = false;
    }

    std::vector<int> etwists = F->twists;
    std::vector<int> ttwists;
    for (int j = 0; j < s; ++j) {
        etwists.push_back(graded ? gdeg[j] : 0);
        ttwists.push_back(graded ? gdeg[j] : 0);
    }
    FreeModulePtr E = make_module(ring, r + s, etwists);

    std::vector<ModuleElement> lifted;
    for (int j = 0; j < s; ++j) {
        std::vector<std::pair<ModTerm, FieldElem>> terms;
        for (const auto& [mt, c] : gens[j].terms()) terms.push_back({mt, c});
        terms.push_back({ModTerm{r + j, Term::one(ring.nvars)}, ring.field.one()});
        lifted.push_back(ModuleElement::from_terms(E, std::move(terms)));
    }

    ModuleOrder order;
    order.elim_split = r;
    auto gb = module_buchberger(E, std::move(lifted), order);

    FreeModulePtr T = make_module(ring, s, ttwists);
    std::vector<ModuleElement> syz;
    for (const auto& g : gb) {
        bool pure = true;
        for (const auto& [mt, c] : g.terms())
            if (mt.pos < r) { pure = false; break; }
        if (!pure) continue;
        std::vector<std::pair<ModTerm, FieldElem>> terms;
        for (const auto& [mt, c] : g.terms())
            terms.push_back({ModTerm{mt.pos - r, mt.t}, c});
        syz.push_back(ModuleElement::from_terms(T, std::move(terms)));
    }
    return Submodule(T, std::move(syz));
}

Submodule syzygies(const Ring& ring, const std::vector<Polynomial>& gens) {
    FreeModulePtr mod = rank1_module(ring);
    std::vector<ModuleElement> elems;
    for (const auto& g : gens) elems.push_back(poly_to_rank1(mod, g));
    return syzygy_module(elems);
}

Submodule colon_submodule(const Submodule& n, const Polynomial& f) {
    const FreeModulePtr& F = n.module();
    if (f.ring() != F->ring) throw RingMismatch("module colon");
    if (f.is_zero()) throw Error("colon by zero");
    const int r = F->rank;

    std::vector<ModuleElement> list;
    for (int i = 0; i < r; ++i)
        list.push_back(ModuleElement::basis(F, i).times_poly(f));
    const auto& nb = n.basis();
    for (const auto& w : nb) list.push_back(w);

    Submodule syz = syzygy_module(list);

    std::vector<ModuleElement> qgens = n.gens();
    for (const auto& sy : syz.gens()) {
        std::vector<std::pair<ModTerm, FieldElem>> terms;
        for (const auto& [mt, c] : sy.terms())
            if (mt.pos < r) terms.push_back({mt, c});
        ModuleElement cpart = ModuleElement::from_terms(F, std::move(terms));
        if (!cpart.is_zero()) qgens.push_back(std::move(cpart));
    }
    return Submodule(F, std::move(qgens), n.order());
}

Submodule saturate_submodule(const Submodule& n, const Polynomial& f) {
    Submodule cur = n;
    for (;;) {
        Submodule next = colon_submodule(cur, f);
        if (next.same_submodule(cur)) return cur;
        cur = std::move(next);
    }
}

Ideal colon(const Ideal& a, const Polynomial& f) {
    FreeModulePtr mod = rank1_module(a.ring());
    std::vector<ModuleElement> gens;
    for (const auto& g : a.gens()) gens.push_back(poly_to_rank1(mod, g));
    Submodule n(mod, std::move(gens));
    Submodule q = colon_submodule(n, f);
    std::vector<Polynomial> out;
    for (const auto& w : q.gens()) out.push_back(rank1_to_poly(w));
    return Ideal(a.ring(), std::move(out));
}

Ideal saturate(const Ideal& a, const Polynomial& f) {
    if (f.is_zero()) throw Error("saturation by zero");
    Ideal cur = a;
    for (;;) {
        Ideal next = colon(cur, f);
        if (next.same_ideal(cur)) return cur;
        cur = std::move(next);
    }
}

bool buchberger_postcheck(const std::vector<ModuleElement>& gb,
                          const ModuleOrder& order) {
    if (gb.empty()) return true;
    const FreeModulePtr& modptr = gb.front().module();
    const FreeModule& mod = *modptr;
    auto lt_of = [&](const ModuleElement& g) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < g.terms().size(); ++i)
            if (compare_modterms(order, mod, g.terms()[i].first,
                                 g.terms()[best].first) > 0)
                best = i;
        return g.terms()[best];
    };
    for (std::size_t i = 0; i < gb.size(); ++i) {
        for (std::size_t j = i + 1; j < gb.size(); ++j) {
            auto [lti, ci] = lt_of(gb[i]);
            auto [ltj, cj] = lt_of(gb[j]);
            if (lti.pos != ltj.pos) continue;
            Term l = lti.t.lcm(ltj.t);
            const Field& F = mod.ring.field;
            ModuleElement s =
                gb[i].times_term(l.div(lti.t), F.inv(ci)) -
                gb[j].times_term(l.div(ltj.t), F.inv(cj));
            if (!module_normal_form(s, gb, order).is_zero()) return false;
        }
    }
    return true;
}

bool buchberger_postcheck(const Ring& ring, const std::vector<Polynomial>& gb,
                          const MonomialOrder& order) {
    FreeModulePtr mod = rank1_module(ring);
    std::vector<ModuleElement> elems;
    for (const auto& g : gb) elems.push_back(poly_to_rank1(mod, g));
    ModuleOrder mo;
    mo.ring_order = order;
    return buchberger_postcheck(elems, mo);
}

}  // namespace kdiff
