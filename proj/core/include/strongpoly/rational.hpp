#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace strongpoly {

using BigInt = mpz_class;

/// Exact rational number. Values whose numerator and denominator fit in
/// 64 bits are kept inline; anything larger lives in a shared immutable mpq.
class Rational {
public:
    Rational() = default;
    Rational(int v) : num_(v) {}
    Rational(long v) : num_(v) {}
    Rational(long long v) : num_(v) {}
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const BigInt& v);
    explicit Rational(const mpq_class& v);
    Rational(const BigInt& num, const BigInt& den);

    /// Accepts "p", "-p", "p/q". Throws ParseError on malformed input or q == 0.
    static Rational parse(std::string_view text);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    bool is_small() const { return !big_; }
    int sign() const;

    /// Numerator and denominator when both fit in int64.
    std::optional<std::int64_t> small_num() const { return big_ ? std::nullopt : std::optional(num_); }
    std::optional<std::int64_t> small_den() const { return big_ ? std::nullopt : std::optional(den_); }
    /// Value as int64 when it is an integer in range.
    std::optional<std::int64_t> to_int64() const;

    BigInt numerator() const;
    BigInt denominator() const;
    mpq_class to_mpq() const;
    double to_double() const;
    std::string str() const;
    std::size_t hash() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    Rational pow(std::uint64_t e) const;

private:
    void set_mpq(mpq_class v);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

std::string to_string(const BigInt& v);
BigInt parse_bigint(std::string_view text);

}  // namespace strongpoly

template <>
struct std::hash<strongpoly::Rational> {
    std::size_t operator()(const strongpoly::Rational& r) const noexcept { return r.hash(); }
};
