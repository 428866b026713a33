#ifndef PRELIE_COEFFICIENT_HPP
#define PRELIE_COEFFICIENT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "prelie/integer.hpp"

namespace prelie {

struct ring_mismatch_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Coefficient domain: Z, Q, or Z/p for a prime p.
class Ring {
  public:
    enum class Kind { integers, rationals, mod_p };

    static Ring Z() { return Ring(Kind::integers, 0); }
    static Ring Q() { return Ring(Kind::rationals, 0); }
    static Ring Zp(std::uint64_t p);

    Kind kind() const { return kind_; }
    std::uint64_t p() const { return p_; }
    bool operator==(const Ring&) const = default;

    std::string name() const;

  private:
    Ring(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// Exact scalar tagged with its ring.  Q values are stored reduced with a
/// positive denominator; Z/p values are stored in [0, p).
class Coefficient {
  public:
    static Coefficient zero(Ring r) { return from_integer(r, Integer(0)); }
    static Coefficient one(Ring r) { return from_integer(r, Integer(1)); }
    static Coefficient from_integer(Ring r, Integer v);
    static Coefficient rational(Integer num, Integer den);

    const Ring& ring() const { return ring_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    Coefficient operator-() const;
    friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator-(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator*(const Coefficient& a, const Coefficient& b);

    /// Division by a nonzero integer: exact in Z (throws non_integral_error
    /// on remainder), a unit multiplication in Q and Z/p.
    Coefficient divide_exact(const Integer& d) const;

    Coefficient pow(unsigned e) const;

    bool operator==(const Coefficient& o) const;

    std::string str() const;

  private:
    Coefficient(Ring r, Integer num, Integer den)
        : ring_(r), num_(std::move(num)), den_(std::move(den)) {}

    Ring ring_ = Ring::Z();
    Integer num_;
    Integer den_ = Integer(1);  // 1 unless ring is Q

    void reduce();
    static void require_same(const Coefficient& a, const Coefficient& b);
};

}  // namespace prelie

#endif
