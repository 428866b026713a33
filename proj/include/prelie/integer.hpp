#ifndef PRELIE_INTEGER_HPP
#define PRELIE_INTEGER_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace prelie {

/// Raised when an exact division has a nonzero remainder.  A failing exact
/// division anywhere in the invariant-basis composition is a bug signal,
/// never something to rationalize away.
struct non_integral_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Arbitrary-precision signed integer, sign + magnitude in base 2^32.
/// Values in this project stay small (products of factorials of desk-scale
/// trees) but the type never overflows regardless.
class Integer {
  public:
    Integer() = default;
    Integer(long long v);
    explicit Integer(const std::string& decimal);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_one() const;

    Integer operator-() const;
    Integer abs() const;

    friend Integer operator+(const Integer& a, const Integer& b);
    friend Integer operator-(const Integer& a, const Integer& b);
    friend Integer operator*(const Integer& a, const Integer& b);
    Integer& operator+=(const Integer& o) { return *this = *this + o; }
    Integer& operator-=(const Integer& o) { return *this = *this - o; }
    Integer& operator*=(const Integer& o) { return *this = *this * o; }

    /// Truncated division: a = q*b + r with |r| < |b| and sign(r) = sign(a).
    static void divmod(const Integer& a, const Integer& b, Integer& q, Integer& r);

    /// Quotient of an exact division; throws non_integral_error on remainder.
    Integer div_exact(const Integer& d) const;

    /// Remainder in [0, m) for m > 0.
    std::uint64_t mod_u64(std::uint64_t m) const;

    bool divisible_by(const Integer& d) const;

    Integer pow(unsigned e) const;
    static Integer gcd(Integer a, Integer b);

    bool operator==(const Integer& o) const;
    std::strong_ordering operator<=>(const Integer& o) const;

    std::string str() const;

    /// Value as long long; throws std::overflow_error if it does not fit.
    long long to_longlong() const;

  private:
    int sign_ = 0;                    // -1, 0, +1
    std::vector<std::uint32_t> mag_;  // little-endian limbs, no leading zeros

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    void trim();
};

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
/// (k_0 + ... + k_r)! / (k_0! ... k_r!)
Integer multinomial(std::span<const int> ks);

}  // namespace prelie

#endif
