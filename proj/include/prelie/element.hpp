#ifndef PRELIE_ELEMENT_HPP
#define PRELIE_ELEMENT_HPP

#include <map>
#include <string>

#include "prelie/coefficient.hpp"

namespace prelie {

/// Formal linear combination of canonical terms with exact coefficients.
/// Keys must expose key() (a collision-free canonical encoding used for
/// ordering and equality) and display().  Zero coefficients are never stored.
template <typename Key>
class Element {
  public:
    explicit Element(Ring ring) : ring_(ring) {}

    static Element term(Ring ring, const Key& k, Coefficient c) {
        Element e(ring);
        e.add_term(k, c);
        return e;
    }
    static Element unit_term(Ring ring, const Key& k) {
        return term(ring, k, Coefficient::one(ring));
    }

    const Ring& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<Key, Coefficient>& terms() const { return terms_; }

    Coefficient coefficient(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Coefficient::zero(ring_) : it->second;
    }

    Element& add_term(const Key& k, const Coefficient& c) {
        if (!(c.ring() == ring_))
            throw ring_mismatch_error("term coefficient ring " + c.ring().name() +
                                      " does not match element ring " + ring_.name());
        if (c.is_zero()) return *this;
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
        return *this;
    }

    Element& operator+=(const Element& o) {
        if (!(o.ring_ == ring_))
            throw ring_mismatch_error("cannot add elements over " + ring_.name() + " and " +
                                      o.ring_.name());
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a += b.scaled_by_int(-1); }

    Element scaled(const Coefficient& c) const {
        Element r(ring_);
        if (c.is_zero()) return r;
        for (const auto& [k, v] : terms_) r.add_term(k, v * c);
        return r;
    }
    Element scaled_by_int(long long n) const {
        return scaled(Coefficient::from_integer(ring_, Integer(n)));
    }

    /// Divide every coefficient exactly (Z: throws non_integral_error on a
    /// remainder, which signals an algorithmic bug upstream).
    Element divided_exact(const Integer& d) const {
        Element r(ring_);
        for (const auto& [k, v] : terms_) r.add_term(k, v.divide_exact(d));
        return r;
    }

    /// Carry a Z element to Z/p.
    Element reduced_mod(std::uint64_t p) const {
        if (ring_.kind() != Ring::Kind::integers)
            throw ring_mismatch_error("reduce mod p expects an element over Z");
        Ring zp = Ring::Zp(p);
        Element r(zp);
        for (const auto& [k, v] : terms_) r.add_term(k, Coefficient::from_integer(zp, v.num()));
        return r;
    }

    /// Carry a Z element to Q.
    Element over_rationals() const {
        if (ring_.kind() != Ring::Kind::integers)
            throw ring_mismatch_error("rationalize expects an element over Z");
        Element r(Ring::Q());
        for (const auto& [k, v] : terms_)
            r.add_term(k, Coefficient::from_integer(Ring::Q(), v.num()));
        return r;
    }

    bool operator==(const Element& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : terms_) {
            bool neg = c.num().is_negative();
            Coefficient a = neg ? -c : c;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            if (!a.is_one()) out += a.str() + "*";
            out += k.display();
        }
        return out;
    }

  private:
    Ring ring_;
    std::map<Key, Coefficient> terms_;
};

}  // namespace prelie

#endif
