#pragma once

#include <cstdint>
#include <vector>

namespace ecom {

// Fixed-universe bitset over element ids {0..n-1}. Subgroup membership sets,
// centralizers and coset members all live here, so intersection, inclusion and
// equality are word-wise operations.
class Bitset {
  public:
    Bitset() = default;
    explicit Bitset(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    int universe() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }

    bool none() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }

    bool any() const { return !none(); }

    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    Bitset& subtract(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend Bitset minus(Bitset a, const Bitset& b) { return a.subtract(b); }

    static Bitset full(int universe) {
        Bitset s(universe);
        for (auto& w : s.w_) w = ~uint64_t(0);
        if (universe & 63) s.w_.back() = (uint64_t(1) << (universe & 63)) - 1;
        return s;
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

    bool is_subset_of(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    // First set bit, or -1.
    int first() const { return next(-1); }

    // First set bit strictly after i, or -1.
    int next(int i) const {
        int word = (i + 1) >> 6;
        if (word >= (int)w_.size()) return -1;
        uint64_t w = w_[word] & (~uint64_t(0) << ((i + 1) & 63));
        while (true) {
            if (w) return (word << 6) + __builtin_ctzll(w);
            if (++word >= (int)w_.size()) return -1;
            w = w_[word];
        }
    }

    // Lexicographic order on the ascending member lists, e.g.
    // {0} < {0,2} < {0,3} < {1}.
    static bool lex_less(const Bitset& a, const Bitset& b) {
        int x = a.first(), y = b.first();
        while (x != -1 && y != -1) {
            if (x != y) return x < y;
            x = a.next(x);
            y = b.next(y);
        }
        return x == -1 && y != -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        for (int i = first(); i != -1; i = next(i)) v.push_back(i);
        return v;
    }

    static Bitset of(int universe, std::initializer_list<int> bits) {
        Bitset s(universe);
        for (int b : bits) s.set(b);
        return s;
    }

  private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace ecom
