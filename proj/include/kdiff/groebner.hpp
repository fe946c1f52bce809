#ifndef KDIFF_GROEBNER_HPP
#define KDIFF_GROEBNER_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kdiff/poly.hpp"

namespace kdiff {

// Graded free module over a polynomial ring. `twists[i]` is the degree of
// basis vector e_i; `labels[i]` identifies it (index tuples for exterior
// power bases, singletons by default).
struct FreeModule {
    Ring ring;
    int rank = 0;
    std::vector<int> twists;
    std::vector<std::vector<int>> labels;

    static FreeModule make(Ring ring, int rank, std::vector<int> twists = {},
                           std::vector<std::vector<int>> labels = {});

    bool operator==(const FreeModule& o) const {
        return ring == o.ring && rank == o.rank && twists == o.twists &&
               labels == o.labels;
    }
    bool operator!=(const FreeModule& o) const { return !(*this == o); }
};

using FreeModulePtr = std::shared_ptr<const FreeModule>;

FreeModulePtr make_module(Ring ring, int rank, std::vector<int> twists = {},
                          std::vector<std::vector<int>> labels = {});

// A module term: scalar power product sitting in one component.
struct ModTerm {
    int pos = 0;
    Term t;

    bool operator==(const ModTerm& o) const { return pos == o.pos && t == o.t; }
    bool operator!=(const ModTerm& o) const { return !(*this == o); }
    bool divides(const ModTerm& o) const { return pos == o.pos && t.divides(o.t); }
};

// Term-over-position ordering: scalar parts first (by the ring order),
// ties broken by position with lexicographically smaller label winning.
// `elim_split` > 0 makes positions below the split dominate everything in
// the trailing block; used to read syzygies off an extended module.
struct ModuleOrder {
    MonomialOrder ring_order = MonomialOrder::degrevlex();
    int elim_split = 0;
};

int compare_modterms(const ModuleOrder& order, const FreeModule& mod,
                     const ModTerm& a, const ModTerm& b);

// Element of a graded free module, stored sparsely (no zero coefficients),
// canonically sorted by position then DegRevLex.
class ModuleElement {
public:
    explicit ModuleElement(FreeModulePtr mod) : mod_(std::move(mod)) {}

    static ModuleElement zero(FreeModulePtr mod) { return ModuleElement(std::move(mod)); }
    static ModuleElement basis(FreeModulePtr mod, int pos);
    static ModuleElement from_coords(
        FreeModulePtr mod, const std::vector<std::pair<int, Polynomial>>& coords);
    static ModuleElement from_terms(FreeModulePtr mod,
                                    std::vector<std::pair<ModTerm, FieldElem>> terms);

    const FreeModulePtr& module() const { return mod_; }
    const std::vector<std::pair<ModTerm, FieldElem>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Coordinates as (position, polynomial) pairs, positions increasing.
    std::vector<std::pair<int, Polynomial>> coords() const;
    Polynomial coord(int pos) const;

    ModuleElement operator+(const ModuleElement& w) const;
    ModuleElement operator-(const ModuleElement& w) const;
    ModuleElement operator-() const;
    ModuleElement times_term(const Term& t, const FieldElem& c) const;
    ModuleElement times_poly(const Polynomial& f) const;
    ModuleElement scaled(const FieldElem& c) const;

    // Degree including twists, if all terms agree.
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }

    std::string to_string() const;

    bool operator==(const ModuleElement& w) const {
        return *mod_ == *w.mod_ && terms_ == w.terms_;
    }
    bool operator!=(const ModuleElement& w) const { return !(*this == w); }

private:
    FreeModulePtr mod_;
    std::vector<std::pair<ModTerm, FieldElem>> terms_;
};

int true_degree(const FreeModule& mod, const ModTerm& mt);

// --- Gröbner engine ---------------------------------------------------

// Reduced Gröbner basis of the submodule generated by `gens`. Elements come
// back monic, pairwise tail-reduced, sorted by decreasing leading term.
// `degree_cutoff >= 0` truncates: only S-pairs of (twisted) degree <= cutoff
// are processed, which yields the full leading-term data up to that degree
// for homogeneous input.
std::vector<ModuleElement> module_buchberger(const FreeModulePtr& mod,
                                             std::vector<ModuleElement> gens,
                                             const ModuleOrder& order,
                                             int degree_cutoff = -1);

ModuleElement module_normal_form(const ModuleElement& w,
                                 const std::vector<ModuleElement>& basis,
                                 const ModuleOrder& order);

std::vector<Polynomial> buchberger(const Ring& ring, std::vector<Polynomial> gens,
                                   const MonomialOrder& order = MonomialOrder::degrevlex());

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order = MonomialOrder::degrevlex());

// Ideal of a polynomial ring with a cached reduced DegRevLex Gröbner basis.
class Ideal {
public:
    Ideal(Ring ring, std::vector<Polynomial> gens);

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    const std::vector<Polynomial>& basis() const;  // reduced GB, DegRevLex

    bool contains(const Polynomial& f) const;
    bool is_homogeneous() const;

    bool same_ideal(const Ideal& other) const;  // compares reduced bases

private:
    Ring ring_;
    std::vector<Polynomial> gens_;
    mutable std::optional<std::vector<Polynomial>> gb_;
};

class Submodule {
public:
    Submodule(FreeModulePtr mod, std::vector<ModuleElement> gens,
              ModuleOrder order = {});

    const FreeModulePtr& module() const { return mod_; }
    const std::vector<ModuleElement>& gens() const { return gens_; }
    const ModuleOrder& order() const { return order_; }
    const std::vector<ModuleElement>& basis() const;  // reduced module GB

    bool contains(const ModuleElement& w) const;
    bool is_homogeneous() const;
    bool same_submodule(const Submodule& other) const;

private:
    FreeModulePtr mod_;
    std::vector<ModuleElement> gens_;
    ModuleOrder order_;
    mutable std::optional<std::vector<ModuleElement>> gb_;
};

// Derived operations.
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, int m);
Ideal colon(const Ideal& a, const Polynomial& f);
Ideal saturate(const Ideal& a, const Polynomial& f);

Submodule colon_submodule(const Submodule& n, const Polynomial& f);
Submodule saturate_submodule(const Submodule& n, const Polynomial& f);

// First syzygy module of the given generators; lives in P^s with s = #gens,
// tracking component j twisted by deg(gens[j]) when inputs are homogeneous.
Submodule syzygy_module(const std::vector<ModuleElement>& gens);
Submodule syzygies(const Ring& ring, const std::vector<Polynomial>& gens);

// Rank-1 plumbing shared with the counting code.
FreeModulePtr rank1_module(const Ring& ring);
ModuleElement poly_to_rank1(const FreeModulePtr& mod, const Polynomial& f);
Polynomial rank1_to_poly(const ModuleElement& w);

// Diagnostic: every S-vector of the basis reduces to zero.
bool buchberger_postcheck(const std::vector<ModuleElement>& gb,
                          const ModuleOrder& order);
bool buchberger_postcheck(const Ring& ring, const std::vector<Polynomial>& gb,
                          const MonomialOrder& order = MonomialOrder::degrevlex());

}  // namespace kdiff

#endif
