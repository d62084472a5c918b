#pragma once

#include "conekit/scalar.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace conekit {

/// Total map on the positive integers given by a finite head table plus
/// residue-class translation tails: f(n) = head[n] for n < tail_start, and
/// f(n) = n + offset[n mod p] for n >= tail_start. Not necessarily a
/// bijection (the phi-map of a lattice homomorphism lives here).
class modular_map {
public:
    modular_map(std::vector<index_t> head, index_t modulus, std::vector<std::int64_t> offsets)
        : head_(std::move(head)), modulus_(modulus), offsets_(std::move(offsets)) {
        if (modulus_ == 0) throw std::invalid_argument("modular_map: modulus must be >= 1");
        if (offsets_.size() != modulus_)
            throw std::invalid_argument("modular_map: need one offset per residue class");
        for (index_t i = 0; i < head_.size(); ++i)
            if (head_[i] == 0)
                throw std::invalid_argument("modular_map: image of " + std::to_string(i + 1) +
                                            " must be positive");
        for (index_t r = 0; r < modulus_; ++r) {
            const index_t n = first_tail_index(r);
            if (static_cast<std::int64_t>(n) + offsets_[r] < 1)
                throw std::invalid_argument("modular_map: tail rule for residue " +
                                            std::to_string(r) + " maps below 1");
        }
        canonicalize();
    }

    index_t operator()(index_t n) const {
        if (n == 0) throw std::out_of_range("modular_map: indices start at 1");
        if (n < tail_start()) return head_[n - 1];
        return static_cast<index_t>(static_cast<std::int64_t>(n) + offsets_[n % modulus_]);
    }

    /// First index governed by the tail rules (N_head).
    index_t tail_start() const { return head_.size() + 1; }
    index_t modulus() const { return modulus_; }
    const std::vector<index_t>& head() const { return head_; }
    const std::vector<std::int64_t>& offsets() const { return offsets_; }

    /// Smallest n >= tail_start with n ≡ r (mod modulus).
    index_t first_tail_index(index_t r) const {
        const index_t base = tail_start();
        const index_t rem = base % modulus_;
        return base + (r + modulus_ - rem) % modulus_;
    }

    std::int64_t max_abs_offset() const {
        std::int64_t m = 0;
        for (const auto d : offsets_) m = std::max(m, std::abs(d));
        return m;
    }

    /// Bound R with |f(n) - n| <= R for every n.
    index_t max_reach() const {
        std::int64_t m = max_abs_offset();
        for (index_t i = 0; i < head_.size(); ++i) {
            const auto dev = static_cast<std::int64_t>(head_[i]) - static_cast<std::int64_t>(i + 1);
            m = std::max(m, std::abs(dev));
        }
        return static_cast<index_t>(m);
    }

    bool operator==(const modular_map&) const = default;

private:
    void canonicalize() {
        // smallest modulus the offsets factor through
        for (index_t d = 1; d < modulus_; ++d) {
            if (modulus_ % d != 0) continue;
            bool ok = true;
            for (index_t r = 0; r < modulus_ && ok; ++r) ok = offsets_[r] == offsets_[r % d];
            if (ok) {
                offsets_.resize(d);
                modulus_ = d;
                break;
            }
        }
        // drop head entries the tail rule already produces
        while (!head_.empty()) {
            const index_t n = head_.size();
            const auto tail_value = static_cast<std::int64_t>(n) + offsets_[n % modulus_];
            if (tail_value >= 1 && head_.back() == static_cast<index_t>(tail_value))
                head_.pop_back();
            else
                break;
        }
    }

    std::vector<index_t> head_;
    index_t modulus_;
    std::vector<std::int64_t> offsets_;
};

/// Bijection of the positive integers in modular_map form.
///
/// Construction validates bijectivity exactly: the induced residue map must
/// permute Z_p, head values must be pairwise distinct and disjoint from the
/// structural tail image, and every index up to N_head + p + max(0, max d_r)
/// must have a preimage. Together with the per-class monotonicity of the
/// tails this is sufficient, not just a finite spot-check.
class modular_permutation {
public:
    modular_permutation(std::vector<index_t> head, index_t modulus,
                        std::vector<std::int64_t> offsets)
        : fwd_(std::move(head), modulus, std::move(offsets)) {
        validate();
    }

    explicit modular_permutation(modular_map m) : fwd_(std::move(m)) { validate(); }

    static modular_permutation identity() { return modular_permutation({}, 1, {0}); }

    index_t operator()(index_t n) const { return fwd_(n); }

    const modular_map& map() const { return fwd_; }

    index_t tail_start() const { return fwd_.tail_start(); }
    index_t modulus() const { return fwd_.modulus(); }
    index_t max_reach() const { return fwd_.max_reach(); }

    /// Constructively derived inverse, again a modular_permutation.
    modular_permutation inverse() const {
        const index_t p = fwd_.modulus();
        const auto& d = fwd_.offsets();
        // residue r maps onto class sigma(r); the inverse tail rule on class
        // sigma(r) subtracts d[r]
        std::vector<std::int64_t> inv_offsets(p, 0);
        index_t inv_tail_start = 1;
        for (index_t r = 0; r < p; ++r) {
            const index_t image_class = sigma(r);
            inv_offsets[image_class] = -d[r];
            const index_t first_tail_value =
                static_cast<index_t>(static_cast<std::int64_t>(fwd_.first_tail_index(r)) + d[r]);
            inv_tail_start = std::max(inv_tail_start, first_tail_value);
        }
        // below inv_tail_start the inverse is tabulated by searching a window
        // that provably contains every preimage
        std::vector<index_t> inv_head(inv_tail_start - 1, 0);
        const index_t window = search_window();
        for (index_t n = 1; n <= window; ++n) {
            const index_t v = fwd_(n);
            if (v < inv_tail_start) inv_head[v - 1] = n;
        }
        for (index_t v = 1; v < inv_tail_start; ++v)
            if (inv_head[v - 1] == 0)
                throw std::logic_error("modular_permutation: no preimage for " + std::to_string(v));
        return modular_permutation(std::move(inv_head), p, std::move(inv_offsets));
    }

    bool operator==(const modular_permutation&) const = default;

private:
    /// Residue class hit by the tail rule of class r.
    index_t sigma(index_t r) const {
        const index_t p = fwd_.modulus();
        const std::int64_t s = (static_cast<std::int64_t>(r) + fwd_.offsets()[r]) % static_cast<std::int64_t>(p);
        return static_cast<index_t>((s + static_cast<std::int64_t>(p)) % static_cast<std::int64_t>(p));
    }

    /// Window [1, W] that contains every preimage of every index up to the
    /// surjectivity bound.
    index_t search_window() const {
        const index_t p = fwd_.modulus();
        return fwd_.tail_start() + 2 * p * (1 + static_cast<index_t>(fwd_.max_abs_offset()));
    }

    /// True when v is produced by some tail rule.
    bool tail_image_contains(index_t v) const {
        const index_t p = fwd_.modulus();
        for (index_t r = 0; r < p; ++r) {
            if (sigma(r) != v % p) continue;
            const auto first =
                static_cast<std::int64_t>(fwd_.first_tail_index(r)) + fwd_.offsets()[r];
            return static_cast<std::int64_t>(v) >= first;
        }
        return false;
    }

    void validate() {
        const index_t p = fwd_.modulus();
        // residue map must permute Z_p
        std::vector<bool> hit(p, false);
        for (index_t r = 0; r < p; ++r) {
            const index_t s = sigma(r);
            if (hit[s])
                throw std::invalid_argument(
                    "modular_permutation: residue map is not a permutation of Z_" +
                    std::to_string(p));
            hit[s] = true;
        }
        // head values pairwise distinct and outside the tail image
        std::set<index_t> head_values;
        for (index_t n = 1; n < fwd_.tail_start(); ++n) {
            const index_t v = fwd_(n);
            if (!head_values.insert(v).second)
                throw std::invalid_argument("modular_permutation: head repeats value " +
                                            std::to_string(v));
            if (tail_image_contains(v))
                throw std::invalid_argument("modular_permutation: head value " + std::to_string(v) +
                                            " collides with a tail image");
        }
        // every small index must be covered (beyond the bound the tails cover
        // each class cofinally)
        std::int64_t max_d = 0;
        for (const auto d : fwd_.offsets()) max_d = std::max(max_d, d);
        const index_t surjectivity_bound = fwd_.tail_start() + p + static_cast<index_t>(max_d);
        for (index_t m = 1; m <= surjectivity_bound; ++m) {
            if (head_values.count(m) || tail_image_contains(m)) continue;
            throw std::invalid_argument("modular_permutation: " + std::to_string(m) +
                                        " has no preimage");
        }
    }

    modular_map fwd_;
};

} // namespace conekit
