#include "kdiff/poly.hpp"

#include <algorithm>
#include <sstream>

namespace kdiff {

Term::Term(std::vector<int> exps) : e(std::move(exps)) {
    deg = 0;
    for (int k : e) {
        if (k < 0) throw Error("negative exponent in term");
        deg += k;
    }
}

Term Term::one(int nvars) { return Term(std::vector<int>(nvars, 0)); }

Term Term::var(int nvars, int slot, int power) {
    std::vector<int> e(nvars, 0);
    e[slot] = power;
    return Term(std::move(e));
}

bool Term::divides(const Term& t) const {
    if (e.size() != t.e.size() || deg > t.deg) return false;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > t.e[i]) return false;
    return true;
}

Term Term::mul(const Term& t) const {
    Term r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += t.e[i];
    r.deg += t.deg;
    return r;
}

Term Term::div(const Term& t) const {
    Term r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= t.e[i];
    r.deg -= t.deg;
    return r;
}

Term Term::lcm(const Term& t) const {
    Term r = *this;
    r.deg = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        r.e[i] = std::max(e[i], t.e[i]);
        r.deg += r.e[i];
    }
    return r;
}

bool Term::coprime(const Term& t) const {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0 && t.e[i] > 0) return false;
    return true;
}

namespace {

// DegRevLex on a slot window [lo, hi): higher degree wins, ties broken by
// the last differing slot, smaller exponent there winning.
int cmp_drl(const Term& a, const Term& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) { da += a.e[i]; db += b.e[i]; }
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi - 1; i >= lo; --i) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
}

int cmp_lex(const Term& a, const Term& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    return 0;
}

}  // namespace

int compare_terms(const MonomialOrder& order, const Term& a, const Term& b) {
    const int nv = a.nvars();
    switch (order.kind) {
        case OrderKind::DegRevLex:
            return cmp_drl(a, b, 0, nv);
        case OrderKind::Lex:
            return cmp_lex(a, b);
        case OrderKind::Elim: {
            int c = cmp_drl(a, b, 0, order.split);
            if (c != 0) return c;
            return cmp_drl(a, b, order.split, nv);
        }
    }
    return 0;
}

std::string Ring::var_name(int slot) const {
    return projective ? "X" + std::to_string(slot) : "x" + std::to_string(slot + 1);
}

Ring projective_ring(const Field& field, int n) { return Ring{field, n + 1, true}; }
Ring affine_ring(const Field& field, int n) { return Ring{field, n, false}; }

Polynomial Polynomial::constant(const Ring& ring, const FieldElem& c) {
    Polynomial f(ring);
    if (!ring.field.is_zero(c)) f.terms_.emplace_back(Term::one(ring.nvars), c);
    return f;
}

Polynomial Polynomial::monomial(const Ring& ring, Term t, FieldElem c) {
    Polynomial f(ring);
    if (!ring.field.is_zero(c)) f.terms_.emplace_back(std::move(t), std::move(c));
    return f;
}

Polynomial Polynomial::variable(const Ring& ring, int slot) {
    return monomial(ring, Term::var(ring.nvars, slot), ring.field.one());
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [t, c] : terms_) d = std::max(d, t.deg);
    return d;
}

bool Polynomial::is_homogeneous() const {
    return is_zero() || homogeneous_degree().has_value();
}

std::optional<int> Polynomial::homogeneous_degree() const {
    if (is_zero()) return std::nullopt;
    int d = terms_.front().first.deg;
    for (const auto& [t, c] : terms_)
        if (t.deg != d) return std::nullopt;
    return d;
}

Polynomial Polynomial::from_terms(const Ring& ring,
                                  std::vector<std::pair<Term, FieldElem>> terms) {
    const MonomialOrder canonical = MonomialOrder::degrevlex();
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        return compare_terms(canonical, a.first, b.first) > 0;
    });
    Polynomial f(ring);
    for (auto& [t, c] : terms) {
        if (!f.terms_.empty() && f.terms_.back().first == t) {
            f.terms_.back().second = ring.field.add(f.terms_.back().second, c);
            if (ring.field.is_zero(f.terms_.back().second)) f.terms_.pop_back();
        } else if (!ring.field.is_zero(c)) {
            f.terms_.emplace_back(std::move(t), std::move(c));
        }
    }
    return f;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    if (ring_ != g.ring_) throw RingMismatch("polynomial addition");
    const MonomialOrder canonical = MonomialOrder::degrevlex();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
        int c;
        if (i == terms_.size()) c = -1;
        else if (j == g.terms_.size()) c = 1;
        else c = compare_terms(canonical, terms_[i].first, g.terms_[j].first);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(g.terms_[j++]);
        } else {
            FieldElem s = ring_.field.add(terms_[i].second, g.terms_[j].second);
            if (!ring_.field.is_zero(s)) r.terms_.emplace_back(terms_[i].first, s);
            ++i; ++j;
        }
    }
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& [t, c] : terms_) r.terms_.emplace_back(t, ring_.field.neg(c));
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::times_term(const Term& t, const FieldElem& c) const {
    Polynomial r(ring_);
    if (ring_.field.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [s, a] : terms_) {
        FieldElem m = ring_.field.mul(a, c);
        if (!ring_.field.is_zero(m)) r.terms_.emplace_back(s.mul(t), std::move(m));
    }
    return r;
}

Polynomial Polynomial::scaled(const FieldElem& c) const {
    return times_term(Term::one(ring_.nvars), c);
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
    if (ring_ != g.ring_) throw RingMismatch("polynomial multiplication");
    std::vector<std::pair<Term, FieldElem>> acc;
    acc.reserve(terms_.size() * g.terms_.size());
    for (const auto& [t, a] : terms_)
        for (const auto& [s, b] : g.terms_)
            acc.emplace_back(t.mul(s), ring_.field.mul(a, b));
    return from_terms(ring_, std::move(acc));
}

FieldElem Polynomial::coeff(const Term& t) const {
    for (const auto& [s, c] : terms_)
        if (s == t) return c;
    return ring_.field.zero();
}

Polynomial Polynomial::derivative(int slot) const {
    std::vector<std::pair<Term, FieldElem>> acc;
    for (const auto& [t, c] : terms_) {
        if (t.e[slot] == 0) continue;
        FieldElem k = ring_.field.mul(c, ring_.field.from_integer(t.e[slot]));
        if (ring_.field.is_zero(k)) continue;
        Term s = t;
        s.e[slot] -= 1;
        s.deg -= 1;
        acc.emplace_back(std::move(s), std::move(k));
    }
    return from_terms(ring_, std::move(acc));
}

Polynomial Polynomial::dehomogenized() const {
    if (!ring_.projective) throw WrongRing("dehomogenize expects a projective polynomial");
    Ring aff = affine_ring(ring_.field, ring_.n());
    std::vector<std::pair<Term, FieldElem>> acc;
    for (const auto& [t, c] : terms_) {
        std::vector<int> e(t.e.begin() + 1, t.e.end());
        acc.emplace_back(Term(std::move(e)), c);
    }
    return from_terms(aff, std::move(acc));
}

Polynomial Polynomial::homogenized(int d) const {
    if (ring_.projective) throw WrongRing("homogenize expects an affine polynomial");
    if (d < degree())
        throw DegreeTooSmall("homogenize: target degree " + std::to_string(d) +
                             " below polynomial degree " + std::to_string(degree()));
    Ring proj = projective_ring(ring_.field, ring_.nvars);
    std::vector<std::pair<Term, FieldElem>> acc;
    for (const auto& [t, c] : terms_) {
        std::vector<int> e(proj.nvars);
        e[0] = d - t.deg;
        std::copy(t.e.begin(), t.e.end(), e.begin() + 1);
        acc.emplace_back(Term(std::move(e)), c);
    }
    return from_terms(proj, std::move(acc));
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
    if (is_zero()) throw Error("leading term of zero polynomial");
    if (order.kind == OrderKind::DegRevLex) return terms_.front().first;
    std::size_t best = 0;
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (compare_terms(order, terms_[i].first, terms_[best].first) > 0) best = i;
    return terms_[best].first;
}

const FieldElem& Polynomial::leading_coeff(const MonomialOrder& order) const {
    if (is_zero()) throw Error("leading coefficient of zero polynomial");
    if (order.kind == OrderKind::DegRevLex) return terms_.front().second;
    std::size_t best = 0;
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (compare_terms(order, terms_[i].first, terms_[best].first) > 0) best = i;
    return terms_[best].second;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
    if (is_zero()) return *this;
    return scaled(ring_.field.inv(leading_coeff(order)));
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        std::string cs = ring_.field.to_string(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) { out << "-"; cs = cs.substr(1); }
        } else {
            out << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        first = false;
        bool coeff_one = (cs == "1");
        if (t.is_one()) {
            out << cs;
        } else {
            bool wrote = false;
            if (!coeff_one) { out << cs; wrote = true; }
            for (int i = 0; i < t.nvars(); ++i) {
                if (t.e[i] == 0) continue;
                if (wrote) out << "*";
                out << ring_.var_name(i);
                if (t.e[i] > 1) out << "^" << t.e[i];
                wrote = true;
            }
        }
    }
    return out.str();
}

namespace {

void enumerate_terms(int nvars, int slot, int remaining, std::vector<int>& e,
                     std::vector<Term>& out) {
    if (slot == nvars - 1) {
        e[slot] = remaining;
        out.emplace_back(e);
        e[slot] = 0;
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        e[slot] = k;
        enumerate_terms(nvars, slot + 1, remaining - k, e, out);
    }
    e[slot] = 0;
}

}  // namespace

std::vector<Term> terms_of_degree(const Ring& ring, int d) {
    std::vector<Term> out;
    if (d < 0) return out;
    if (ring.nvars == 0) {
        if (d == 0) out.push_back(Term(std::vector<int>{}));
        return out;
    }
    std::vector<int> e(ring.nvars, 0);
    enumerate_terms(ring.nvars, 0, d, e, out);
    const MonomialOrder canonical = MonomialOrder::degrevlex();
    std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) {
        return compare_terms(canonical, a, b) > 0;
    });
    return out;
}

Polynomial euler_sum(const Polynomial& f) {
    Polynomial acc(f.ring());
    for (int i = 0; i < f.ring().nvars; ++i) {
        acc = acc + f.derivative(i).times_term(Term::var(f.ring().nvars, i),
                                               f.ring().field.one());
    }
    return acc;
}

}  // namespace kdiff
