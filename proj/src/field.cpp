#include "kdiff/field.hpp"

#include <cstdlib>

namespace kdiff {

namespace {

bool is_prime(long long p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (long long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

// a*b mod p without overflow; p is capped at 2^31 so products fit in 64 bits.
long long mulmod(long long a, long long b, long long p) { return (a * b) % p; }

long long invmod(long long a, long long p) {
    // extended Euclid
    long long t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    if (r != 1) throw DivisionByZero();
    return ((t % p) + p) % p;
}

}  // namespace

Field Field::rationals() { return Field(FieldKind::Rationals, 0); }

Field Field::prime(long long p) {
    if (p > (1LL << 31))
        throw Error("prime field characteristic too large: " + std::to_string(p));
    if (!is_prime(p))
        throw Error("not a prime: " + std::to_string(p));
    return Field(FieldKind::PrimeField, p);
}

long long Field::reduce(long long n) const { return ((n % p_) + p_) % p_; }

FieldElem Field::zero() const { return from_integer(0); }
FieldElem Field::one() const { return from_integer(1); }

FieldElem Field::from_integer(long long n) const {
    if (kind_ == FieldKind::Rationals) return FieldElem(mpq_class(static_cast<long>(n)));
    return FieldElem(reduce(n));
}

FieldElem Field::from_ratio(long long num, long long den) const {
    if (den == 0) throw DivisionByZero();
    if (kind_ == FieldKind::Rationals) {
        mpq_class q(static_cast<long>(num), static_cast<long>(den));
        q.canonicalize();
        return FieldElem(q);
    }
    return mul(from_integer(num), inv(from_integer(den)));
}

FieldElem Field::from_string(const std::string& text) const {
    auto slash = text.find('/');
    auto parse_ll = [&](const std::string& s) {
        std::size_t used = 0;
        long long val = std::stoll(s, &used);
        if (used != s.size()) throw Error("bad field element literal: '" + text + "'");
        return val;
    };
    if (slash == std::string::npos) return from_integer(parse_ll(text));
    return from_ratio(parse_ll(text.substr(0, slash)), parse_ll(text.substr(slash + 1)));
}

FieldElem Field::add(const FieldElem& a, const FieldElem& b) const {
    if (kind_ == FieldKind::Rationals) return FieldElem(mpq_class(a.rat() + b.rat()));
    return FieldElem((a.residue() + b.residue()) % p_);
}

FieldElem Field::sub(const FieldElem& a, const FieldElem& b) const {
    if (kind_ == FieldKind::Rationals) return FieldElem(mpq_class(a.rat() - b.rat()));
    return FieldElem(((a.residue() - b.residue()) % p_ + p_) % p_);
}

FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const {
    if (kind_ == FieldKind::Rationals) return FieldElem(mpq_class(a.rat() * b.rat()));
    return FieldElem(mulmod(a.residue(), b.residue(), p_));
}

FieldElem Field::div(const FieldElem& a, const FieldElem& b) const {
    if (is_zero(b)) throw DivisionByZero();
    if (kind_ == FieldKind::Rationals) return FieldElem(mpq_class(a.rat() / b.rat()));
    return FieldElem(mulmod(a.residue(), invmod(b.residue(), p_), p_));
}

FieldElem Field::inv(const FieldElem& a) const { return div(one(), a); }

FieldElem Field::neg(const FieldElem& a) const {
    if (kind_ == FieldKind::Rationals) return FieldElem(mpq_class(-a.rat()));
    return FieldElem((p_ - a.residue()) % p_);
}

bool Field::is_zero(const FieldElem& a) const {
    if (kind_ == FieldKind::Rationals) return sgn(a.rat()) == 0;
    return a.residue() == 0;
}

bool Field::is_one(const FieldElem& a) const { return a == one(); }

std::string Field::to_string(const FieldElem& a) const {
    if (kind_ == FieldKind::Rationals) return a.rat().get_str();
    return std::to_string(a.residue());
}

}  // namespace kdiff
