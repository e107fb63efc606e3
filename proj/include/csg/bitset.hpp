#pragma once

#include <cassert>
#include <cstdint>
#include <bit>
#include <initializer_list>
#include <vector>

namespace csg {

// Fixed-universe set of vertex ids backed by 64-bit words.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    static Bitset full(int universe) {
        Bitset s(universe);
        for (int i = 0; i < universe; ++i) s.set(i);
        return s;
    }

    static Bitset of(int universe, std::initializer_list<int> bits) {
        Bitset s(universe);
        for (int b : bits) s.set(b);
        return s;
    }

    int universe() const { return n_; }

    bool test(int i) const {
        assert(i >= 0 && i < n_);
        return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1ULL;
    }

    void set(int i) {
        assert(i >= 0 && i < n_);
        w_[static_cast<size_t>(i) >> 6] |= 1ULL << (i & 63);
    }

    void reset(int i) {
        assert(i >= 0 && i < n_);
        w_[static_cast<size_t>(i) >> 6] &= ~(1ULL << (i & 63));
    }

    void clear() {
        for (auto& w : w_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator|=(const Bitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator^=(const Bitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }

    // Set difference.
    Bitset minus(const Bitset& o) const {
        assert(n_ == o.n_);
        Bitset r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & ~o.w_[i];
        return r;
    }

    Bitset complemented() const {
        Bitset r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.trim();
        return r;
    }

    bool intersects(const Bitset& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool subset_of(const Bitset& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    // Smallest member, or -1.
    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
        return -1;
    }

    // Smallest member > i, or -1.
    int next(int i) const {
        ++i;
        if (i >= n_) return -1;
        size_t wi = static_cast<size_t>(i) >> 6;
        uint64_t w = w_[wi] & (~0ULL << (i & 63));
        while (true) {
            if (w) return static_cast<int>(wi * 64 + std::countr_zero(w));
            if (++wi >= w_.size()) return -1;
            w = w_[wi];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        for (int i = first(); i >= 0; i = next(i)) v.push_back(i);
        return v;
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

    uint64_t hash() const {
        uint64_t h = 1469598103934665603ULL;
        for (auto w : w_) {
            h ^= w;
            h *= 1099511628211ULL;
        }
        return h;
    }

    // Low 64 bits; only meaningful when universe <= 64.
    uint64_t low_word() const { return w_.empty() ? 0 : w_[0]; }

    class iterator {
    public:
        iterator(const Bitset* s, int v) : s_(s), v_(v) {}
        int operator*() const { return v_; }
        iterator& operator++() {
            v_ = s_->next(v_);
            return *this;
        }
        bool operator!=(const iterator& o) const { return v_ != o.v_; }

    private:
        const Bitset* s_;
        int v_;
    };

    iterator begin() const { return iterator(this, first()); }
    iterator end() const { return iterator(this, -1); }

private:
    void trim() {
        if (n_ % 64 != 0 && !w_.empty()) w_.back() &= (~0ULL >> (64 - (n_ % 64)));
    }

    int n_ = 0;
    std::vector<uint64_t> w_;
};

struct BitsetHash {
    size_t operator()(const Bitset& s) const { return static_cast<size_t>(s.hash()); }
};

} // namespace csg
