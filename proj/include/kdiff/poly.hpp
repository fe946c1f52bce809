#ifndef KDIFF_POLY_HPP
#define KDIFF_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kdiff/field.hpp"

namespace kdiff {

// A power product. Slot i of the exponent vector is X_i in the projective
// ring K[X_0..X_n] and x_{i+1} in the affine ring K[x_1..x_n].
struct Term {
    std::vector<int> e;
    int deg = 0;

    Term() = default;
    explicit Term(std::vector<int> exps);
    static Term one(int nvars);
    static Term var(int nvars, int slot, int power = 1);

    int nvars() const { return static_cast<int>(e.size()); }
    bool is_one() const { return deg == 0; }
    bool divides(const Term& t) const;
    Term mul(const Term& t) const;
    Term div(const Term& t) const;  // assumes divisibility
    Term lcm(const Term& t) const;
    bool coprime(const Term& t) const;

    bool operator==(const Term& t) const { return e == t.e; }
    bool operator!=(const Term& t) const { return !(*this == t); }
};

enum class OrderKind { DegRevLex, Lex, Elim };

// Elim compares the first `split` slots as a DegRevLex block, then the rest;
// it eliminates the leading block.
struct MonomialOrder {
    OrderKind kind = OrderKind::DegRevLex;
    int split = 0;

    static MonomialOrder degrevlex() { return {}; }
    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder elim(int split) { return {OrderKind::Elim, split}; }
};

// Returns +1 if a > b, 0 if equal, -1 if a < b.
int compare_terms(const MonomialOrder& order, const Term& a, const Term& b);

struct Ring {
    Field field;
    int nvars = 0;
    bool projective = true;

    // projective n-space dimension: nvars = n+1
    int n() const { return projective ? nvars - 1 : nvars; }
    std::string var_name(int slot) const;
    bool operator==(const Ring& o) const {
        return field == o.field && nvars == o.nvars && projective == o.projective;
    }
    bool operator!=(const Ring& o) const { return !(*this == o); }
};

Ring projective_ring(const Field& field, int n);
Ring affine_ring(const Field& field, int n);

// Sparse polynomial with exact coefficients, terms stored strictly
// decreasing in DegRevLex and free of zero coefficients.
class Polynomial {
public:
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

    static Polynomial zero(const Ring& ring) { return Polynomial(ring); }
    static Polynomial constant(const Ring& ring, const FieldElem& c);
    static Polynomial monomial(const Ring& ring, Term t, FieldElem c);
    static Polynomial variable(const Ring& ring, int slot);

    const Ring& ring() const { return ring_; }
    const std::vector<std::pair<Term, FieldElem>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    std::optional<int> homogeneous_degree() const;

    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial scaled(const FieldElem& c) const;
    Polynomial times_term(const Term& t, const FieldElem& c) const;

    FieldElem coeff(const Term& t) const;

    Polynomial derivative(int slot) const;
    Polynomial dehomogenized() const;          // projective -> affine, X0 -> 1
    Polynomial homogenized(int d) const;       // affine -> projective, degree d

    // Leading data w.r.t. an arbitrary order (linear scan; storage stays
    // DegRevLex-sorted).
    const Term& leading_term(const MonomialOrder& order) const;
    const FieldElem& leading_coeff(const MonomialOrder& order) const;
    Polynomial monic(const MonomialOrder& order) const;

    std::string to_string() const;

    bool operator==(const Polynomial& g) const {
        return ring_ == g.ring_ && terms_ == g.terms_;
    }
    bool operator!=(const Polynomial& g) const { return !(*this == g); }

    // Builds from an unsorted term list, combining duplicates.
    static Polynomial from_terms(const Ring& ring,
                                 std::vector<std::pair<Term, FieldElem>> terms);

private:
    Ring ring_;
    std::vector<std::pair<Term, FieldElem>> terms_;
};

// All terms of degree d, strictly decreasing in DegRevLex.
std::vector<Term> terms_of_degree(const Ring& ring, int d);

// Euler sum  sum_i X_i * df/dX_i  (equals (deg f mod char) * f for
// homogeneous f).
Polynomial euler_sum(const Polynomial& f);

}  // namespace kdiff

#endif
