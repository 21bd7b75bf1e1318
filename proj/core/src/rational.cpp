#include "strongpoly/rational.hpp"

#include <cctype>
#include <climits>
#include <cmath>
#include <limits>
#include <ostream>

#include "strongpoly/errors.hpp"

namespace strongpoly {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 uabs(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

BigInt from_u128(u128 v) {
    BigInt hi = static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64));
    BigInt lo = static_cast<unsigned long>(static_cast<std::uint64_t>(v));
    return (hi << 64) + lo;
}

BigInt from_i128(i128 v) {
    BigInt r = from_u128(uabs(v));
    return v < 0 ? BigInt(-r) : r;
}

BigInt from_i64(std::int64_t v) { return from_i128(v); }

bool fits(const BigInt& v) { return v.fits_slong_p() && v != LONG_MIN; }

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    i128 n = num, d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    u128 g = gcd128(uabs(n), u128(d));
    if (g > 1) {
        n /= i128(g);
        d /= i128(g);
    }
    if (n > kMin && n <= kMax && d <= kMax) {
        num_ = std::int64_t(n);
        den_ = std::int64_t(d);
    } else {
        set_mpq(mpq_class(from_i128(n), from_i128(d)));
    }
}

Rational::Rational(const BigInt& v) { set_mpq(mpq_class(v)); }

Rational::Rational(const mpq_class& v) {
    mpq_class c = v;
    c.canonicalize();
    set_mpq(std::move(c));
}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    set_mpq(std::move(q));
}

void Rational::set_mpq(mpq_class v) {
    if (fits(v.get_num()) && fits(v.get_den())) {
        num_ = v.get_num().get_si();
        den_ = v.get_den().get_si();
        big_.reset();
    } else {
        num_ = 0;
        den_ = 1;
        big_ = std::make_shared<const mpq_class>(std::move(v));
    }
}

Rational Rational::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    BigInt n = parse_bigint(num), d = parse_bigint(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
}

BigInt parse_bigint(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (body.empty()) throw ParseError("expected integer, got '" + std::string(text) + "'");
    for (char c : body)
        if (c < '0' || c > '9') throw ParseError("expected integer, got '" + std::string(text) + "'");
    std::string s(text.front() == '+' ? text.substr(1) : text);
    return BigInt(s, 10);
}

std::string to_string(const BigInt& v) { return v.get_str(10); }

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

std::optional<std::int64_t> Rational::to_int64() const {
    if (big_ || den_ != 1) return std::nullopt;
    return num_;
}

BigInt Rational::numerator() const { return big_ ? BigInt(big_->get_num()) : from_i64(num_); }
BigInt Rational::denominator() const { return big_ ? BigInt(big_->get_den()) : from_i64(den_); }

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(from_i64(num_), from_i64(den_));
}

double Rational::to_double() const {
    if (big_) return big_->get_d();
    return double(num_) / double(den_);
}

std::string Rational::str() const {
    if (big_) {
        if (big_->get_den() == 1) return big_->get_num().get_str();
        return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    }
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t Rational::hash() const {
    if (big_) return std::hash<std::string>{}(str());
    std::uint64_t h = std::uint64_t(num_) * 0x9E3779B97F4A7C15ULL;
    h ^= std::uint64_t(den_) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return std::size_t(h);
}

Rational Rational::operator-() const {
    Rational r;
    if (big_) {
        r.set_mpq(-*big_);
    } else {
        r.num_ = -num_;
        r.den_ = den_;
    }
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            std::int64_t s;
            if (!__builtin_add_overflow(num_, o.num_, &s) && s != kMin) {
                num_ = s;
                return *this;
            }
        }
        u128 g = gcd128(u128(den_), u128(o.den_));
        i128 a = i128(num_) * (i128(o.den_) / i128(g));
        i128 b = i128(o.num_) * (i128(den_) / i128(g));
        i128 n = a + b;
        i128 d = i128(den_) * (i128(o.den_) / i128(g));
        u128 h = gcd128(uabs(n), u128(d));
        if (h > 1) {
            n /= i128(h);
            d /= i128(h);
        }
        if (n > kMin && n <= kMax && d <= kMax) {
            num_ = std::int64_t(n);
            den_ = std::int64_t(d);
        } else {
            set_mpq(mpq_class(from_i128(n), from_i128(d)));
        }
        return *this;
    }
    set_mpq(to_mpq() + o.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            std::int64_t p;
            if (!__builtin_mul_overflow(num_, o.num_, &p) && p != kMin) {
                num_ = p;
                return *this;
            }
        }
        u128 g1 = gcd128(uabs(num_), u128(o.den_));
        u128 g2 = gcd128(uabs(o.num_), u128(den_));
        if (g1 == 0) g1 = 1;
        if (g2 == 0) g2 = 1;
        i128 n = (i128(num_) / i128(g1)) * (i128(o.num_) / i128(g2));
        i128 d = (i128(den_) / i128(g2)) * (i128(o.den_) / i128(g1));
        if (n == 0) d = 1;
        if (n > kMin && n <= kMax && d <= kMax) {
            num_ = std::int64_t(n);
            den_ = std::int64_t(d);
        } else {
            set_mpq(mpq_class(from_i128(n), from_i128(d)));
        }
        return *this;
    }
    set_mpq(to_mpq() * o.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    if (!o.big_) {
        Rational inv;
        if (o.num_ < 0) {
            inv.num_ = -o.den_;
            inv.den_ = -o.num_;
        } else {
            inv.num_ = o.den_;
            inv.den_ = o.num_;
        }
        return *this *= inv;
    }
    set_mpq(to_mpq() / o.to_mpq());
    return *this;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical: a big value never equals a small one
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        i128 l = i128(a.num_) * b.den_;
        i128 r = i128(b.num_) * a.den_;
        return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Rational Rational::pow(std::uint64_t e) const {
    Rational base = *this, acc = 1;
    while (e) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace strongpoly
