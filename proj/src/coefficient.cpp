#include "prelie/coefficient.hpp"

namespace prelie {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Ring Ring::Zp(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus must be prime, got " + std::to_string(p));
    if (p >= (1ull << 31)) throw std::invalid_argument("modulus too large");
    return Ring(Kind::mod_p, p);
}

std::string Ring::name() const {
    switch (kind_) {
        case Kind::integers: return "Z";
        case Kind::rationals: return "Q";
        case Kind::mod_p: return "Z/" + std::to_string(p_);
    }
    return "?";
}

Coefficient Coefficient::from_integer(Ring r, Integer v) {
    if (r.kind() == Ring::Kind::mod_p) {
        std::uint64_t m = v.mod_u64(r.p());
        return Coefficient(r, Integer(static_cast<long long>(m)), Integer(1));
    }
    return Coefficient(r, std::move(v), Integer(1));
}

Coefficient Coefficient::rational(Integer num, Integer den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    Coefficient c(Ring::Q(), std::move(num), std::move(den));
    c.reduce();
    return c;
}

void Coefficient::reduce() {
    if (ring_.kind() != Ring::Kind::rationals) return;
    if (num_.is_zero()) {
        den_ = Integer(1);
        return;
    }
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    Integer g = Integer::gcd(num_, den_);
    num_ = num_.div_exact(g);
    den_ = den_.div_exact(g);
}

bool Coefficient::is_one() const { return num_.is_one() && den_.is_one(); }

void Coefficient::require_same(const Coefficient& a, const Coefficient& b) {
    if (!(a.ring_ == b.ring_))
        throw ring_mismatch_error("coefficient rings differ: " + a.ring_.name() + " vs " +
                                  b.ring_.name());
}

Coefficient Coefficient::operator-() const {
    if (ring_.kind() == Ring::Kind::mod_p) return from_integer(ring_, -num_);
    Coefficient c(ring_, -num_, den_);
    return c;
}

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
    Coefficient::require_same(a, b);
    switch (a.ring_.kind()) {
        case Ring::Kind::integers:
            return Coefficient(a.ring_, a.num_ + b.num_, Integer(1));
        case Ring::Kind::mod_p:
            return Coefficient::from_integer(a.ring_, a.num_ + b.num_);
        case Ring::Kind::rationals: {
            Coefficient c(a.ring_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
            c.reduce();
            return c;
        }
    }
    throw std::logic_error("unreachable");
}

Coefficient operator-(const Coefficient& a, const Coefficient& b) { return a + (-b); }

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    Coefficient::require_same(a, b);
    switch (a.ring_.kind()) {
        case Ring::Kind::integers:
            return Coefficient(a.ring_, a.num_ * b.num_, Integer(1));
        case Ring::Kind::mod_p:
            return Coefficient::from_integer(a.ring_, a.num_ * b.num_);
        case Ring::Kind::rationals: {
            Coefficient c(a.ring_, a.num_ * b.num_, a.den_ * b.den_);
            c.reduce();
            return c;
        }
    }
    throw std::logic_error("unreachable");
}

Coefficient Coefficient::divide_exact(const Integer& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero");
    switch (ring_.kind()) {
        case Ring::Kind::integers:
            return Coefficient(ring_, num_.div_exact(d), Integer(1));
        case Ring::Kind::rationals: {
            Coefficient c(ring_, num_, den_ * d);
            c.reduce();
            return c;
        }
        case Ring::Kind::mod_p: {
            // multiply by the inverse of d mod p
            std::uint64_t p = ring_.p();
            std::uint64_t dv = d.mod_u64(p);
            if (dv == 0) throw non_integral_error("division by multiple of modulus");
            // Fermat inverse, p prime and small
            std::uint64_t inv = 1, base = dv, e = p - 2;
            while (e) {
                if (e & 1) inv = inv * base % p;
                base = base * base % p;
                e >>= 1;
            }
            return from_integer(ring_, num_ * Integer(static_cast<long long>(inv)));
        }
    }
    throw std::logic_error("unreachable");
}

Coefficient Coefficient::pow(unsigned e) const {
    Coefficient r = one(ring_);
    Coefficient b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool Coefficient::operator==(const Coefficient& o) const {
    return ring_ == o.ring_ && num_ == o.num_ && den_ == o.den_;
}

std::string Coefficient::str() const {
    if (ring_.kind() == Ring::Kind::rationals && !den_.is_one())
        return num_.str() + "/" + den_.str();
    return num_.str();
}

}  // namespace prelie
