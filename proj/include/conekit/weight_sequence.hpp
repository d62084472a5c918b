#pragma once

#include "conekit/scalar.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace conekit {

/// lcm with an overflow guard; structural window sizes are products of small
/// periods and must stay representable.
inline index_t lcm_checked(index_t a, index_t b) {
    if (a == 0 || b == 0) throw std::domain_error("lcm of zero");
    const index_t g = std::gcd(a, b);
    const index_t r = (a / g) * b;
    if (r > (index_t{1} << 32)) throw std::overflow_error("lcm overflow in structural window");
    return r;
}

/// Eventually periodic sequence of nonnegative rationals, indexed from 1:
/// the prefix while available, then the period cycled forever. Stored in
/// canonical form (primitive period, shortest prefix), so structural
/// equality coincides with pointwise equality.
class weight_sequence {
public:
    weight_sequence(std::vector<scalar> prefix, std::vector<scalar> period)
        : prefix_(std::move(prefix)), period_(std::move(period)) {
        if (period_.empty()) throw std::domain_error("weight_sequence: empty period");
        canonicalize();
    }

    static weight_sequence constant(scalar c) { return weight_sequence({}, {std::move(c)}); }

    const scalar& at(index_t n) const {
        if (n == 0) throw std::out_of_range("weight_sequence: indices start at 1");
        if (n <= prefix_.size()) return prefix_[n - 1];
        return period_[(n - prefix_.size() - 1) % period_.size()];
    }

    index_t prefix_length() const { return prefix_.size(); }
    index_t period_length() const { return period_.size(); }

    const std::vector<scalar>& prefix() const { return prefix_; }
    const std::vector<scalar>& period() const { return period_; }

    /// Position of the first zero entry, decided over prefix + one period.
    std::optional<index_t> first_zero() const {
        for (index_t i = 0; i < prefix_.size(); ++i)
            if (prefix_[i].is_zero()) return i + 1;
        for (index_t i = 0; i < period_.size(); ++i)
            if (period_[i].is_zero()) return prefix_.size() + i + 1;
        return std::nullopt;
    }

    bool all_positive() const { return !first_zero().has_value(); }

    bool identically_zero() const {
        for (const auto& v : prefix_)
            if (!v.is_zero()) return false;
        for (const auto& v : period_)
            if (!v.is_zero()) return false;
        return true;
    }

    weight_sequence scaled(const scalar& c) const {
        std::vector<scalar> p = prefix_, q = period_;
        for (auto& v : p) v *= c;
        for (auto& v : q) v *= c;
        return weight_sequence(std::move(p), std::move(q));
    }

    /// Pointwise sum; prefix/period grow to the common refinement and the
    /// result is re-canonicalized.
    friend weight_sequence pointwise_sum(const weight_sequence& a, const weight_sequence& b) {
        const index_t pre = std::max(a.prefix_length(), b.prefix_length());
        const index_t per = lcm_checked(a.period_length(), b.period_length());
        std::vector<scalar> prefix, period;
        for (index_t n = 1; n <= pre; ++n) prefix.push_back(a.at(n) + b.at(n));
        for (index_t n = pre + 1; n <= pre + per; ++n) period.push_back(a.at(n) + b.at(n));
        return weight_sequence(std::move(prefix), std::move(period));
    }

    bool operator==(const weight_sequence&) const = default;

private:
    void canonicalize() {
        // primitive period
        for (index_t d = 1; d < period_.size(); ++d) {
            if (period_.size() % d != 0) continue;
            bool repeats = true;
            for (index_t i = d; i < period_.size() && repeats; ++i)
                repeats = period_[i] == period_[i % d];
            if (repeats) {
                period_.resize(d);
                break;
            }
        }
        // fold prefix entries that already match the cycled period
        while (!prefix_.empty() && prefix_.back() == period_.back()) {
            prefix_.pop_back();
            std::rotate(period_.begin(), period_.end() - 1, period_.end());
        }
    }

    std::vector<scalar> prefix_;
    std::vector<scalar> period_;
};

} // namespace conekit
