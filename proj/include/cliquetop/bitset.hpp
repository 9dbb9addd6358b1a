#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace cliquetop {

// Dynamic bitset over a fixed universe [0, n). Binary operations require
// both operands to share the same universe size.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int universe) : n_(universe), w_((universe + 63) / 64, 0) {
        assert(universe >= 0);
    }

    int universe() const { return n_; }

    bool test(int i) const {
        assert(i >= 0 && i < n_);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(i >= 0 && i < n_);
        w_[i >> 6] |= std::uint64_t(1) << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < n_);
        w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (std::uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool subset_of(const Bitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator^=(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }

    // Complement within the universe; tail bits stay clear.
    Bitset flipped() const {
        Bitset r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.trim();
        return r;
    }

    bool operator==(const Bitset&) const = default;

    // First member, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64) + std::countr_zero(w_[i]);
        return -1;
    }
    // First member strictly greater than i, or -1.
    int next(int i) const {
        ++i;
        if (i >= n_) return -1;
        std::size_t k = std::size_t(i) >> 6;
        std::uint64_t w = w_[k] & (~std::uint64_t(0) << (i & 63));
        while (true) {
            if (w) return int(k * 64) + std::countr_zero(w);
            if (++k == w_.size()) return -1;
            w = w_[k];
        }
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = first(); v != -1; v = next(v)) out.push_back(v);
        return out;
    }

    // Order on the ascending member sequences ({0,1,2} < {0,2} < {1}).
    static bool lex_less(const Bitset& a, const Bitset& b) {
        assert(a.n_ == b.n_);
        for (std::size_t i = 0; i < a.w_.size(); ++i) {
            std::uint64_t diff = a.w_[i] ^ b.w_[i];
            if (!diff) continue;
            int e = int(i * 64) + std::countr_zero(diff);
            // e is the smallest element present in exactly one of the two;
            // a proper prefix sorts before its extension.
            if (a.test(e)) return b.next(e) != -1;
            return a.next(e) == -1;
        }
        return false;
    }

    const std::vector<std::uint64_t>& words() const { return w_; }
    std::vector<std::uint64_t>& words() { return w_; }

private:
    void trim() {
        if (n_ & 63) w_.back() &= (~std::uint64_t(0)) >> (64 - (n_ & 63));
        if (n_ == 0 && !w_.empty()) w_.back() = 0;
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace cliquetop
