#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace conekit {

/// 1-based index into the canonical basis {e_1, e_2, ...}.
using index_t = std::uint64_t;

/// Exact nonnegative rational. Matrix entries, weights and vector
/// coordinates all use this type; negativity is rejected at construction
/// so cone positivity is a type invariant, and the representation is the
/// canonical reduced fraction (gcd(num, den) = 1, den > 0).
class scalar {
public:
    using rep = boost::multiprecision::cpp_rational;

    scalar() : v_(0) {}

    scalar(long long n) : v_(n) {
        if (n < 0) throw std::domain_error("scalar: negative value " + std::to_string(n));
    }

    scalar(long long num, long long den) {
        if (den == 0) throw std::domain_error("scalar: zero denominator");
        if ((num < 0) != (den < 0) && num != 0)
            throw std::domain_error("scalar: negative value " + std::to_string(num) + "/" +
                                    std::to_string(den));
        v_ = rep(num, den);
    }

    explicit scalar(rep v) : v_(std::move(v)) {
        if (v_ < 0) throw std::domain_error("scalar: negative value " + str());
    }

    /// Parses "num" or "num/den" with plain decimal digits (no sign).
    static scalar parse(std::string_view text) {
        const auto bad = [&] {
            return std::domain_error("scalar: malformed rational '" + std::string(text) + "'");
        };
        if (text.empty()) throw bad();
        const auto slash = text.find('/');
        const std::string_view num = text.substr(0, slash == std::string_view::npos ? text.size() : slash);
        const std::string_view den =
            slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
        if (num.empty() || den.empty()) throw bad();
        for (const char c : num)
            if (c < '0' || c > '9') throw bad();
        for (const char c : den)
            if (c < '0' || c > '9') throw bad();
        const boost::multiprecision::cpp_int n{std::string(num)};
        const boost::multiprecision::cpp_int d{std::string(den)};
        if (d == 0) throw std::domain_error("scalar: zero denominator in '" + std::string(text) + "'");
        return scalar(rep(n, d));
    }

    /// Canonical serialization, always "num/den".
    std::string str() const {
        return numerator(v_).str() + "/" + denominator(v_).str();
    }

    bool is_zero() const { return v_.is_zero(); }
    bool is_positive() const { return v_ > 0; }

    double to_double() const { return v_.convert_to<double>(); }

    const rep& value() const { return v_; }

    friend scalar operator+(const scalar& a, const scalar& b) { return scalar(rep(a.v_ + b.v_)); }
    friend scalar operator*(const scalar& a, const scalar& b) { return scalar(rep(a.v_ * b.v_)); }

    scalar& operator+=(const scalar& b) {
        v_ += b.v_;
        return *this;
    }
    scalar& operator*=(const scalar& b) {
        v_ *= b.v_;
        return *this;
    }

    friend bool operator==(const scalar& a, const scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const scalar& a, const scalar& b) { return a.v_ != b.v_; }
    friend bool operator<(const scalar& a, const scalar& b) { return a.v_ < b.v_; }
    friend bool operator<=(const scalar& a, const scalar& b) { return a.v_ <= b.v_; }
    friend bool operator>(const scalar& a, const scalar& b) { return a.v_ > b.v_; }
    friend bool operator>=(const scalar& a, const scalar& b) { return a.v_ >= b.v_; }

    static scalar max(const scalar& a, const scalar& b) { return a < b ? b : a; }

private:
    rep v_;
};

} // namespace conekit
