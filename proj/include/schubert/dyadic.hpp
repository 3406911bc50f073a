#pragma once
// Exact arithmetic over Z[1/2]: integers divided by a power of two.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace schubert {

using BigInt = boost::multiprecision::cpp_int;

// Value = num / 2^exp.  Canonical form: the fraction is fully reduced
// (num odd whenever exp > 0) and exp == 0 when num == 0, so value-equal
// instances have identical fields.
class Dyadic {
public:
    Dyadic() : num_(0), exp_(0) {}
    Dyadic(long long n) : num_(n), exp_(0) {}
    Dyadic(BigInt n) : num_(std::move(n)), exp_(0) {}
    Dyadic(BigInt n, unsigned e) : num_(std::move(n)), exp_(e) { reduce(); }

    static Dyadic half_power(unsigned e) { return Dyadic(BigInt(1), e); }

    const BigInt& numerator() const { return num_; }
    unsigned exponent() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return exp_ == 0; }
    // Exact integer value; throws when the denominator is nontrivial.
    BigInt to_integer() const {
        if (exp_ != 0) throw std::domain_error("Dyadic: not an integer: " + str());
        return num_;
    }

    Dyadic operator-() const { return raw(-num_, exp_); }

    Dyadic operator+(const Dyadic& o) const {
        unsigned e = std::max(exp_, o.exp_);
        BigInt a = num_ << (e - exp_);
        BigInt b = o.num_ << (e - o.exp_);
        return Dyadic(a + b, e);
    }
    Dyadic operator-(const Dyadic& o) const { return *this + (-o); }
    Dyadic operator*(const Dyadic& o) const { return Dyadic(num_ * o.num_, exp_ + o.exp_); }

    Dyadic& operator+=(const Dyadic& o) { *this = *this + o; return *this; }
    Dyadic& operator-=(const Dyadic& o) { *this = *this - o; return *this; }
    Dyadic& operator*=(const Dyadic& o) { *this = *this * o; return *this; }

    // Division by 2^e (the only division the ring admits).
    Dyadic div_pow2(unsigned e) const { return Dyadic(num_, exp_ + e); }

    bool operator==(const Dyadic& o) const { return num_ == o.num_ && exp_ == o.exp_; }
    bool operator!=(const Dyadic& o) const { return !(*this == o); }

    // Text form: "a" for integers, "a/2^e" otherwise.
    std::string str() const {
        std::string s = num_.str();
        if (exp_ > 0) s += "/2^" + std::to_string(exp_);
        return s;
    }

private:
    static Dyadic raw(BigInt n, unsigned e) {
        Dyadic d;
        d.num_ = std::move(n);
        d.exp_ = e;
        return d;
    }
    void reduce() {
        if (num_ == 0) { exp_ = 0; return; }
        while (exp_ > 0 && (num_ & 1) == 0) { num_ >>= 1; --exp_; }
    }

    BigInt num_;
    unsigned exp_;
};

} // namespace schubert
