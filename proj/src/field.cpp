#include "evolab/field.hpp"

#include <charconv>

#include "evolab/errors.hpp"

namespace evolab {

namespace {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
    std::int64_t result = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

// Tonelli-Shanks; `a` must be a nonzero quadratic residue mod an odd prime p.
std::int64_t tonelli_shanks(std::int64_t a, std::int64_t p) {
    std::int64_t q = p - 1;
    int s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    std::int64_t z = 2;
    while (mod_pow(z, (p - 1) / 2, p) != p - 1) ++z;
    std::int64_t m = s;
    std::int64_t c = mod_pow(z, q, p);
    std::int64_t t = mod_pow(a, q, p);
    std::int64_t r = mod_pow(a, (q + 1) / 2, p);
    while (t != 1) {
        std::int64_t i = 0;
        std::int64_t t2 = t;
        while (t2 != 1) {
            t2 = t2 * t2 % p;
            ++i;
        }
        std::int64_t b = c;
        for (std::int64_t j = 0; j < m - i - 1; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

std::int64_t reduce(long long v, std::int64_t p) {
    long long r = v % p;
    return r < 0 ? r + p : r;
}

}  // namespace

FieldSpec FieldSpec::prime(std::int64_t p) {
    if (p >= (std::int64_t{1} << 31) || !is_prime(p)) {
        throw InvalidArgument("GF(p) requires a prime p < 2^31, got " + std::to_string(p));
    }
    return FieldSpec(Kind::PrimeField, p);
}

void FieldSpec::require_char_ne_2(std::string_view what) const {
    if (!char_ne_2()) {
        throw CharacteristicTwoError(std::string(what) + " requires characteristic different from 2");
    }
}

std::string FieldSpec::to_string() const {
    return kind_ == Kind::Rationals ? "Q" : "GF(" + std::to_string(p_) + ")";
}

Scalar::Scalar(FieldSpec spec, long value) : spec_(spec) {
    if (spec_.is_finite()) {
        value_ = reduce(value, spec_.characteristic());
    } else {
        value_ = mpq_class(value);
    }
}

Scalar::Scalar(FieldSpec spec, const mpq_class& value) : spec_(spec) {
    if (spec_.is_finite()) {
        mpz_class num = value.get_num() % spec_.characteristic();
        mpz_class den = value.get_den() % spec_.characteristic();
        if (den == 0) throw DivisionByZero("denominator vanishes in " + spec_.to_string());
        Scalar n(spec_, num.get_si());
        Scalar d(spec_, den.get_si());
        *this = n / d;
    } else {
        mpq_class v = value;
        v.canonicalize();
        value_ = std::move(v);
    }
}

Scalar Scalar::parse(FieldSpec spec, std::string_view text) {
    auto trimmed = text;
    while (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
    while (!trimmed.empty() && trimmed.back() == ' ') trimmed.remove_suffix(1);
    if (trimmed.empty()) throw ParseError("empty scalar");
    if (spec.is_finite()) {
        long long v = 0;
        auto [ptr, ec] = std::from_chars(trimmed.data(), trimmed.data() + trimmed.size(), v);
        if (ec != std::errc() || ptr != trimmed.data() + trimmed.size()) {
            throw ParseError("not an integer residue: '" + std::string(text) + "'");
        }
        return Scalar(spec, static_cast<long>(reduce(v, spec.characteristic())));
    }
    auto valid = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char ch : s) {
            if (ch < '0' || ch > '9') return false;
        }
        return true;
    };
    auto slash = trimmed.find('/');
    std::string_view num = trimmed.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trimmed.substr(slash + 1);
    if (!valid(num) || !valid(den) || den.front() == '-' || den.front() == '+') {
        throw ParseError("not a rational: '" + std::string(text) + "'");
    }
    std::string num_s(num.front() == '+' ? num.substr(1) : num);
    mpz_class n(num_s, 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Scalar(spec, mpq_class(n, d));
}

bool Scalar::is_zero() const {
    if (spec_.is_finite()) return residue() == 0;
    return rational() == 0;
}

bool Scalar::is_one() const {
    if (spec_.is_finite()) return residue() == 1;
    return rational() == 1;
}

bool Scalar::is_integral() const {
    return spec_.is_finite() || rational().get_den() == 1;
}

void Scalar::check_same(const Scalar& b) const {
    if (!(spec_ == b.spec_)) {
        throw MixedFieldError("mixing " + spec_.to_string() + " and " + b.spec_.to_string());
    }
}

Scalar Scalar::operator+(const Scalar& b) const {
    check_same(b);
    Scalar r = *this;
    if (spec_.is_finite()) {
        std::int64_t s = residue() + b.residue();
        if (s >= spec_.characteristic()) s -= spec_.characteristic();
        r.value_ = s;
    } else {
        r.value_ = mpq_class(rational() + b.rational());
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& b) const {
    check_same(b);
    Scalar r = *this;
    if (spec_.is_finite()) {
        std::int64_t s = residue() - b.residue();
        if (s < 0) s += spec_.characteristic();
        r.value_ = s;
    } else {
        r.value_ = mpq_class(rational() - b.rational());
    }
    return r;
}

Scalar Scalar::operator*(const Scalar& b) const {
    check_same(b);
    Scalar r = *this;
    if (spec_.is_finite()) {
        r.value_ = residue() * b.residue() % spec_.characteristic();
    } else {
        r.value_ = mpq_class(rational() * b.rational());
    }
    return r;
}

Scalar Scalar::operator/(const Scalar& b) const { return *this * b.inv(); }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (spec_.is_finite()) {
        r.value_ = residue() == 0 ? 0 : spec_.characteristic() - residue();
    } else {
        r.value_ = mpq_class(-rational());
    }
    return r;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in " + spec_.to_string());
    Scalar r = *this;
    if (spec_.is_finite()) {
        r.value_ = mod_pow(residue(), spec_.characteristic() - 2, spec_.characteristic());
    } else {
        r.value_ = mpq_class(1 / rational());
    }
    return r;
}

std::optional<Scalar> Scalar::sqrt() const {
    if (is_zero()) return *this;
    if (spec_.is_finite()) {
        const std::int64_t p = spec_.characteristic();
        const std::int64_t a = residue();
        if (p == 2) return *this;
        if (mod_pow(a, (p - 1) / 2, p) != 1) return std::nullopt;
        std::int64_t r = tonelli_shanks(a, p);
        Scalar s = *this;
        s.value_ = std::min(r, p - r);
        return s;
    }
    const mpq_class& q = rational();
    if (q < 0) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
        return std::nullopt;
    }
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    return Scalar(spec_, mpq_class(n, d));
}

bool Scalar::operator==(const Scalar& b) const {
    check_same(b);
    if (spec_.is_finite()) return residue() == b.residue();
    return rational() == b.rational();
}

std::strong_ordering Scalar::operator<=>(const Scalar& b) const {
    check_same(b);
    if (spec_.is_finite()) return residue() <=> b.residue();
    int c = cmp(rational(), b.rational());
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
    if (spec_.is_finite()) return std::to_string(residue());
    return rational().get_str();
}

std::vector<Scalar> all_scalars(FieldSpec spec) {
    if (!spec.is_finite()) throw InfiniteFieldError("cannot enumerate the elements of Q");
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(spec.characteristic()));
    for (std::int64_t v = 0; v < spec.characteristic(); ++v) out.emplace_back(spec, static_cast<long>(v));
    return out;
}

std::vector<Scalar> all_nonzero_scalars(FieldSpec spec) {
    auto all = all_scalars(spec);
    all.erase(all.begin());
    return all;
}

}  // namespace evolab
