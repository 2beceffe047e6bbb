#pragma once

// Arbitrary-precision integer scalar for exact linear algebra.
//
// boost::multiprecision::cpp_int cannot be used directly as an Eigen scalar
// (its sfinae-unfriendly byte-container constructor blows up inside Eigen's
// scalar-promotion machinery), so we wrap it in a plain value type with a
// closed set of conversions and register NumTraits for that.

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

namespace treespace {

class Int {
public:
    using rep = boost::multiprecision::cpp_int;

    Int() = default;
    Int(int v) : v_(v) {}
    Int(long v) : v_(v) {}
    Int(long long v) : v_(v) {}
    explicit Int(rep r) : v_(std::move(r)) {}
    explicit Int(const std::string& decimal) : v_(decimal) {}

    const rep& raw() const { return v_; }

    bool is_zero() const { return v_.is_zero(); }
    int sign() const { return v_.sign(); }

    /// Decimal string; the canonical serialized form.
    std::string str() const { return v_.str(); }

    /// Value as long long; only valid when the value fits.
    long long to_ll() const { return static_cast<long long>(v_); }

    Int& operator+=(const Int& o) { v_ += o.v_; return *this; }
    Int& operator-=(const Int& o) { v_ -= o.v_; return *this; }
    Int& operator*=(const Int& o) { v_ *= o.v_; return *this; }
    Int& operator/=(const Int& o) { v_ /= o.v_; return *this; }
    Int& operator%=(const Int& o) { v_ %= o.v_; return *this; }

    friend Int operator+(const Int& a, const Int& b) { return Int(a.v_ + b.v_); }
    friend Int operator-(const Int& a, const Int& b) { return Int(a.v_ - b.v_); }
    friend Int operator*(const Int& a, const Int& b) { return Int(a.v_ * b.v_); }
    friend Int operator/(const Int& a, const Int& b) { return Int(a.v_ / b.v_); }  // truncated
    friend Int operator%(const Int& a, const Int& b) { return Int(a.v_ % b.v_); }
    friend Int operator-(const Int& a) { return Int(rep(-a.v_)); }

    friend bool operator==(const Int& a, const Int& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Int& a, const Int& b) { return a.v_ != b.v_; }
    friend bool operator<(const Int& a, const Int& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Int& a, const Int& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Int& a, const Int& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Int& a, const Int& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Int& a) { return os << a.v_; }

private:
    rep v_;
};

inline Int abs(const Int& a) { return a.sign() < 0 ? -a : a; }

inline Int gcd(const Int& a, const Int& b) {
    return Int(boost::multiprecision::gcd(a.raw(), b.raw()));
}

/// True iff b divides a exactly (b != 0).
inline bool divides(const Int& b, const Int& a) { return (a % b).is_zero(); }

}  // namespace treespace

namespace Eigen {

template <>
struct NumTraits<treespace::Int> : GenericNumTraits<treespace::Int> {
    typedef treespace::Int Real;
    typedef treespace::Int NonInteger;
    typedef treespace::Int Nested;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 60,
        MulCost = 120
    };
    static inline Real epsilon() { return treespace::Int(0); }
    static inline Real dummy_precision() { return treespace::Int(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
