#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace evolab {

/// Coefficient field: the rationals or a prime field GF(p).
class FieldSpec {
public:
    enum class Kind { Rationals, PrimeField };

    static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
    /// Throws InvalidArgument unless p is a prime below 2^31.
    static FieldSpec prime(std::int64_t p);

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::PrimeField; }
    /// Characteristic; 0 for the rationals.
    std::int64_t characteristic() const { return p_; }
    bool char_ne_2() const { return p_ != 2; }

    /// Raises CharacteristicTwoError when the characteristic is 2.
    void require_char_ne_2(std::string_view what) const;

    std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldSpec(Kind k, std::int64_t p) : kind_(k), p_(p) {}

    Kind kind_;
    std::int64_t p_;
};

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator; residues are kept in [0, p).
class Scalar {
public:
    Scalar(FieldSpec spec, long value);
    Scalar(FieldSpec spec, const mpq_class& value);

    static Scalar zero(FieldSpec spec) { return Scalar(spec, 0L); }
    static Scalar one(FieldSpec spec) { return Scalar(spec, 1L); }
    /// Parses "a", "-a" or "a/b". Over GF(p) only integers are accepted.
    static Scalar parse(FieldSpec spec, std::string_view text);

    const FieldSpec& spec() const { return spec_; }
    bool is_zero() const;
    bool is_one() const;

    /// Residue in [0, p). Only meaningful over a prime field.
    std::int64_t residue() const { return std::get<std::int64_t>(value_); }
    /// Exact rational value. Only meaningful over the rationals.
    const mpq_class& rational() const { return std::get<mpq_class>(value_); }
    /// True for integers (denominator 1) and for every residue.
    bool is_integral() const;

    Scalar operator+(const Scalar& b) const;
    Scalar operator-(const Scalar& b) const;
    Scalar operator*(const Scalar& b) const;
    Scalar operator/(const Scalar& b) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    /// Multiplicative inverse; DivisionByZero on zero.
    Scalar inv() const;
    /// A square root when one exists in the field. Over GF(p) the smaller
    /// residue is returned, over the rationals the non-negative root.
    std::optional<Scalar> sqrt() const;

    bool operator==(const Scalar& b) const;
    /// Total order used for deterministic sorting: residues ascending,
    /// rationals by value. Comparing across fields throws MixedFieldError.
    std::strong_ordering operator<=>(const Scalar& b) const;

    std::string to_string() const;

private:
    void check_same(const Scalar& b) const;

    FieldSpec spec_;
    std::variant<std::int64_t, mpq_class> value_;
};

/// The p-1 nonzero residues, ascending. InfiniteFieldError over the rationals.
std::vector<Scalar> all_nonzero_scalars(FieldSpec spec);

/// All p residues, ascending. InfiniteFieldError over the rationals.
std::vector<Scalar> all_scalars(FieldSpec spec);

}  // namespace evolab
