#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <ostream>
#include <string>
#include <utility>

#include "redhom/errors.hpp"

namespace redhom {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar: arbitrary-precision, always reduced, denominator > 0,
// zero canonically 0/1. The ground field for everything except matrix_exp.hpp.
class Rational {
public:
    Rational() = default;
    Rational(int n) : v_(n) {}
    Rational(long long n) : v_(n) {}
    Rational(BigInt n) : v_(std::move(n)) {}
    Rational(BigInt num, BigInt den) {
        if (den.is_zero())
            throw BadParameter("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        v_ = boost::multiprecision::cpp_rational(num, den);
    }

    // Accepts exactly -?digits or -?digits/digits, no whitespace, sign on the
    // numerator only, denominator positive. Reduces on construction.
    static Rational parse(const std::string& s) {
        const auto fail = [&s]() -> Rational {
            throw ParseError("malformed rational '" + s + "'");
        };
        std::size_t pos = 0;
        if (pos < s.size() && s[pos] == '-') ++pos;
        const std::size_t num_begin = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == num_begin) return fail();
        BigInt num(s.substr(0, pos));
        if (pos == s.size()) return Rational(std::move(num));
        if (s[pos] != '/') return fail();
        const std::size_t den_begin = ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == den_begin || pos != s.size()) return fail();
        BigInt den(s.substr(den_begin));
        if (den.is_zero()) return fail();
        return Rational(std::move(num), std::move(den));
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }
    bool is_zero() const { return v_.is_zero(); }
    int sign() const { return v_.sign(); }

    // "p/q", or just "p" when q = 1.
    std::string str() const {
        std::string out = numerator().str();
        const BigInt den = denominator();
        if (den != 1) {
            out += '/';
            out += den.str();
        }
        return out;
    }

    double to_double() const { return v_.convert_to<double>(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero())
            throw BadParameter("rational division by zero");
        return Rational(a.v_ / b.v_);
    }
    Rational operator-() const { return Rational(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}

    boost::multiprecision::cpp_rational v_;
};

} // namespace redhom
