#ifndef PCUBE_BITS_HPP
#define PCUBE_BITS_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace pcube {

// Fixed-width bit mask over Theta-class coordinates. Two words, so up to
// 128 classes per graph/system.
struct CoordSet {
    static constexpr int max_bits = 128;

    std::uint64_t w0 = 0, w1 = 0;

    static CoordSet low_bits(int k) {
        CoordSet c;
        if (k >= 64) {
            c.w0 = ~0ULL;
            c.w1 = (k >= 128) ? ~0ULL : ((k == 64) ? 0ULL : ((1ULL << (k - 64)) - 1));
        } else {
            c.w0 = (k == 0) ? 0ULL : ((1ULL << k) - 1);
        }
        return c;
    }
    static CoordSet bit(int i) {
        CoordSet c;
        (i < 64 ? c.w0 : c.w1) |= 1ULL << (i & 63);
        return c;
    }

    bool test(int i) const { return ((i < 64 ? w0 : w1) >> (i & 63)) & 1ULL; }
    void set(int i) { (i < 64 ? w0 : w1) |= 1ULL << (i & 63); }
    void reset(int i) { (i < 64 ? w0 : w1) &= ~(1ULL << (i & 63)); }
    bool none() const { return w0 == 0 && w1 == 0; }
    bool any() const { return !none(); }
    int count() const { return std::popcount(w0) + std::popcount(w1); }

    friend CoordSet operator&(CoordSet a, CoordSet b) { return {a.w0 & b.w0, a.w1 & b.w1}; }
    friend CoordSet operator|(CoordSet a, CoordSet b) { return {a.w0 | b.w0, a.w1 | b.w1}; }
    friend CoordSet operator^(CoordSet a, CoordSet b) { return {a.w0 ^ b.w0, a.w1 ^ b.w1}; }
    CoordSet andnot(CoordSet b) const { return {w0 & ~b.w0, w1 & ~b.w1}; }
    bool subset_of(CoordSet b) const { return andnot(b).none(); }
    bool intersects(CoordSet b) const { return (*this & b).any(); }

    friend bool operator==(const CoordSet& a, const CoordSet& b) {
        return a.w0 == b.w0 && a.w1 == b.w1;
    }
    friend bool operator!=(const CoordSet& a, const CoordSet& b) { return !(a == b); }
    friend bool operator<(const CoordSet& a, const CoordSet& b) {
        return a.w1 != b.w1 ? a.w1 < b.w1 : a.w0 < b.w0;
    }

    int lowest() const {  // -1 when empty
        if (w0) return std::countr_zero(w0);
        if (w1) return 64 + std::countr_zero(w1);
        return -1;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::uint64_t w = w0; w;) {
            int i = std::countr_zero(w);
            w &= w - 1;
            f(i);
        }
        for (std::uint64_t w = w1; w;) {
            int i = std::countr_zero(w);
            w &= w - 1;
            f(64 + i);
        }
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    // Delete the bits outside `keep` and pack the kept ones densely,
    // preserving order. Used when coordinates are dropped.
    CoordSet compress(CoordSet keep) const {
        CoordSet out;
        int j = 0;
        keep.for_each([&](int i) {
            if (test(i)) out.set(j);
            ++j;
        });
        return out;
    }
};

struct CoordSetHash {
    std::size_t operator()(const CoordSet& c) const {
        std::uint64_t h = c.w0 * 0x9e3779b97f4a7c15ULL;
        h ^= (c.w1 + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
        return static_cast<std::size_t>(h);
    }
};

// Dynamic bit set over the vertices of one host graph.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

    static VertexSet full(int n) {
        VertexSet s(n);
        for (auto& w : s.w_) w = ~0ULL;
        s.trim();
        return s;
    }

    int universe() const { return n_; }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1ULL; }
    void set(int i) { w_[i >> 6] |= 1ULL << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
    bool none() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }
    bool any() const { return !none(); }
    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

    bool subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }
    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }
    friend bool operator<(const VertexSet& a, const VertexSet& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        for (std::size_t i = a.w_.size(); i-- > 0;)
            if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
        return false;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t b = 0; b < w_.size(); ++b)
            for (std::uint64_t w = w_[b]; w;) {
                int i = std::countr_zero(w);
                w &= w - 1;
                f(static_cast<int>(b * 64) + i);
            }
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    std::size_t hash() const {
        std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(n_);
        for (auto w : w_) {
            h ^= w;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }

private:
    void trim() {
        int rem = n_ & 63;
        if (rem && !w_.empty()) w_.back() &= (1ULL << rem) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace pcube

#endif
