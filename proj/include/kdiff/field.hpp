#ifndef KDIFF_FIELD_HPP
#define KDIFF_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "kdiff/errors.hpp"

namespace kdiff {

enum class FieldKind { Rationals, PrimeField };

// One element of Q or of F_p. Rationals are mpq values (GMP keeps them in
// lowest terms with positive denominator), prime field elements are residues
// in [0, p). Equality of the stored representation is equality of the element.
class FieldElem {
public:
    FieldElem() : v_(static_cast<long long>(0)) {}
    explicit FieldElem(mpq_class q) : v_(std::move(q)) {}
    explicit FieldElem(long long residue) : v_(residue) {}

    bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
    const mpq_class& rat() const { return std::get<mpq_class>(v_); }
    long long residue() const { return std::get<long long>(v_); }

    bool operator==(const FieldElem& o) const { return v_ == o.v_; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

private:
    std::variant<mpq_class, long long> v_;
};

// The ground field: Q or F_p with p prime (validated at construction).
// All element operations are exact; there is no floating point anywhere.
class Field {
public:
    static Field rationals();
    static Field prime(long long p);

    FieldKind kind() const { return kind_; }
    long long characteristic() const { return kind_ == FieldKind::Rationals ? 0 : p_; }

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_integer(long long n) const;
    FieldElem from_ratio(long long num, long long den) const;
    // Parses "n", "-n" or "n/d" literals.
    FieldElem from_string(const std::string& text) const;

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem div(const FieldElem& a, const FieldElem& b) const;
    FieldElem inv(const FieldElem& a) const;
    FieldElem neg(const FieldElem& a) const;

    bool is_zero(const FieldElem& a) const;
    bool is_one(const FieldElem& a) const;
    bool eq(const FieldElem& a, const FieldElem& b) const { return a == b; }

    std::string to_string(const FieldElem& a) const;

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

private:
    Field(FieldKind kind, long long p) : kind_(kind), p_(p) {}

    long long reduce(long long n) const;

    FieldKind kind_;
    long long p_;  // 0 for the rationals
};

}  // namespace kdiff

#endif
