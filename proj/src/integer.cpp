#include "prelie/integer.hpp"

#include <algorithm>
#include <cassert>

namespace prelie {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

Integer::Integer(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // careful with LLONG_MIN
    std::uint64_t u = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    while (u) {
        mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffu));
        u >>= 32;
    }
}

Integer::Integer(const std::string& decimal) {
    std::size_t i = 0;
    int sg = 1;
    if (i < decimal.size() && (decimal[i] == '-' || decimal[i] == '+')) {
        sg = decimal[i] == '-' ? -1 : 1;
        ++i;
    }
    if (i == decimal.size()) throw std::invalid_argument("empty integer literal");
    Integer acc;
    for (; i < decimal.size(); ++i) {
        char c = decimal[i];
        if (c < '0' || c > '9') throw std::invalid_argument("bad digit in integer literal");
        acc = acc * Integer(10) + Integer(c - '0');
    }
    *this = acc;
    if (sign_ != 0) sign_ = sg;
}

bool Integer::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

void Integer::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int Integer::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> Integer::add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
        carry = s >> 32;
    }
    return r;
}

// requires |a| >= |b|
std::vector<std::uint32_t> Integer::sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        borrow = 0;
        if (s < 0) {
            s += static_cast<std::int64_t>(kBase);
            borrow = 1;
        }
        r.push_back(static_cast<std::uint32_t>(s));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

Integer Integer::operator-() const {
    Integer r = *this;
    r.sign_ = -r.sign_;
    return r;
}

Integer Integer::abs() const {
    Integer r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

Integer operator+(const Integer& a, const Integer& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    Integer r;
    if (a.sign_ == b.sign_) {
        r.sign_ = a.sign_;
        r.mag_ = Integer::add_mag(a.mag_, b.mag_);
    } else {
        int c = Integer::cmp_mag(a.mag_, b.mag_);
        if (c == 0) return Integer();
        if (c > 0) {
            r.sign_ = a.sign_;
            r.mag_ = Integer::sub_mag(a.mag_, b.mag_);
        } else {
            r.sign_ = b.sign_;
            r.mag_ = Integer::sub_mag(b.mag_, a.mag_);
        }
    }
    r.trim();
    return r;
}

Integer operator-(const Integer& a, const Integer& b) { return a + (-b); }

Integer operator*(const Integer& a, const Integer& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return Integer();
    Integer r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (std::size_t i = 0; i < a.mag_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.mag_.size() || carry; ++j) {
            std::uint64_t cur = r.mag_[i + j] + carry;
            if (j < b.mag_.size())
                cur += static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j];
            r.mag_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
    }
    r.trim();
    return r;
}

// schoolbook long division on 32-bit limbs, values stay tiny here
void Integer::divmod(const Integer& a, const Integer& b, Integer& q, Integer& r) {
    if (b.sign_ == 0) throw std::domain_error("division by zero");
    q = Integer();
    r = Integer();
    if (a.sign_ == 0) return;
    int c = cmp_mag(a.mag_, b.mag_);
    if (c < 0) {
        r = a;
        return;
    }
    // divide magnitudes, bit by bit from the top
    std::vector<std::uint32_t> qm(a.mag_.size(), 0);
    Integer rem;  // nonnegative accumulator
    for (std::size_t bit = a.mag_.size() * 32; bit-- > 0;) {
        // rem = rem*2 + bit of |a|
        rem = rem + rem;
        if ((a.mag_[bit / 32] >> (bit % 32)) & 1u) rem = rem + Integer(1);
        if (cmp_mag(rem.mag_, b.mag_) >= 0) {
            rem.mag_ = sub_mag(rem.mag_, b.mag_);
            rem.trim();
            qm[bit / 32] |= (1u << (bit % 32));
        }
    }
    q.mag_ = std::move(qm);
    q.sign_ = 1;
    q.trim();
    if (!q.is_zero()) q.sign_ = a.sign_ * b.sign_;
    r = rem;
    if (!r.is_zero()) r.sign_ = a.sign_;
}

Integer Integer::div_exact(const Integer& d) const {
    Integer q, r;
    divmod(*this, d, q, r);
    if (!r.is_zero())
        throw non_integral_error("exact division failed: " + str() + " / " + d.str());
    return q;
}

bool Integer::divisible_by(const Integer& d) const {
    Integer q, r;
    divmod(*this, d, q, r);
    return r.is_zero();
}

std::uint64_t Integer::mod_u64(std::uint64_t m) const {
    if (m == 0) throw std::domain_error("mod 0");
    std::uint64_t r = 0;
    for (std::size_t i = mag_.size(); i-- > 0;)
        r = ((r << 32) | mag_[i]) % m;
    if (sign_ < 0 && r != 0) r = m - r;
    return r;
}

Integer Integer::pow(unsigned e) const {
    Integer r(1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Integer Integer::gcd(Integer a, Integer b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        Integer q, r;
        divmod(a, b, q, r);
        a = b;
        b = r;
    }
    return a;
}

bool Integer::operator==(const Integer& o) const {
    return sign_ == o.sign_ && mag_ == o.mag_;
}

std::strong_ordering Integer::operator<=>(const Integer& o) const {
    if (sign_ != o.sign_) return sign_ <=> o.sign_;
    int c = cmp_mag(mag_, o.mag_) * (sign_ < 0 ? -1 : 1);
    return c <=> 0;
}

std::string Integer::str() const {
    if (sign_ == 0) return "0";
    std::string digits;
    Integer cur = abs();
    Integer ten(10);
    while (!cur.is_zero()) {
        Integer q, r;
        divmod(cur, ten, q, r);
        digits.push_back(static_cast<char>('0' + (r.is_zero() ? 0 : r.mag_[0])));
        cur = q;
    }
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

long long Integer::to_longlong() const {
    if (mag_.size() > 2) throw std::overflow_error("Integer too large for long long");
    std::uint64_t u = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
    if (sign_ >= 0) {
        if (u > 0x7fffffffffffffffull) throw std::overflow_error("Integer too large for long long");
        return static_cast<long long>(u) * (sign_ == 0 ? 0 : 1);
    }
    if (u > 0x8000000000000000ull) throw std::overflow_error("Integer too large for long long");
    return -static_cast<long long>(u - 1) - 1;
}

Integer factorial(unsigned n) {
    Integer r(1);
    for (unsigned i = 2; i <= n; ++i) r = r * Integer(i);
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return Integer(0);
    Integer r(1);
    for (unsigned i = 0; i < k; ++i)
        r = (r * Integer(n - i)).div_exact(Integer(i + 1));
    return r;
}

Integer multinomial(std::span<const int> ks) {
    unsigned total = 0;
    Integer denom(1);
    for (int k : ks) {
        assert(k >= 0);
        total += static_cast<unsigned>(k);
        denom = denom * factorial(static_cast<unsigned>(k));
    }
    return factorial(total).div_exact(denom);
}

}  // namespace prelie
