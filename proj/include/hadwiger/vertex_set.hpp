#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <vector>

namespace hadwiger {

/// Largest vertex count any graph in this library may have.
inline constexpr int kMaxVertices = 128;

/// Fixed-width set of vertex ids in [0, kMaxVertices). All operations are
/// word-parallel; the set carries no notion of which graph it belongs to.
class VertexSet {
public:
    static constexpr int kWords = kMaxVertices / 64;

    constexpr VertexSet() = default;

    VertexSet(std::initializer_list<int> vs)
    {
        for (int v : vs) insert(v);
    }

    template <class Range>
    static VertexSet from_range(const Range& vs)
    {
        VertexSet s;
        for (int v : vs) s.insert(v);
        return s;
    }

    /// The set {0, 1, ..., n-1}.
    static VertexSet prefix(int n)
    {
        check(n == kMaxVertices ? 0 : n);
        VertexSet s;
        for (int w = 0; w < kWords; ++w) {
            int lo = w * 64;
            if (n >= lo + 64)
                s.words_[w] = ~std::uint64_t{0};
            else if (n > lo)
                s.words_[w] = (std::uint64_t{1} << (n - lo)) - 1;
        }
        return s;
    }

    bool contains(int v) const
    {
        return v >= 0 && v < kMaxVertices && ((words_[v >> 6] >> (v & 63)) & 1u);
    }

    void insert(int v)
    {
        check(v);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void erase(int v)
    {
        check(v);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int size() const
    {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const
    {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    /// Smallest member, or -1 when empty.
    int first() const
    {
        for (int w = 0; w < kWords; ++w)
            if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
        return -1;
    }

    /// Smallest member strictly greater than v, or -1.
    int next(int v) const
    {
        int start = v + 1;
        if (start >= kMaxVertices) return -1;
        int w = start >> 6;
        std::uint64_t word = words_[w] & (~std::uint64_t{0} << (start & 63));
        while (true) {
            if (word) return w * 64 + std::countr_zero(word);
            if (++w == kWords) return -1;
            word = words_[w];
        }
    }

    bool intersects(const VertexSet& o) const
    {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const
    {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] & ~o.words_[w]) return false;
        return true;
    }

    VertexSet& operator&=(const VertexSet& o)
    {
        for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o)
    {
        for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o)
    {
        for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
        return *this;
    }
    VertexSet& operator^=(const VertexSet& o)
    {
        for (int w = 0; w < kWords; ++w) words_[w] ^= o.words_[w];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Orders sets by their members read as a sorted sequence, lexicographically.
    friend bool lex_less(const VertexSet& a, const VertexSet& b)
    {
        VertexSet diff = a ^ b;
        int v = diff.first();
        return v >= 0 && a.contains(v);
    }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v : *this) out.push_back(v);
        return out;
    }

    const std::array<std::uint64_t, kWords>& words() const { return words_; }

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        iterator() = default;
        iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
        int operator*() const { return v_; }
        iterator& operator++()
        {
            v_ = set_->next(v_);
            return *this;
        }
        iterator operator++(int)
        {
            auto old = *this;
            ++*this;
            return old;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.v_ == b.v_; }

    private:
        const VertexSet* set_ = nullptr;
        int v_ = -1;
    };

    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, -1}; }

private:
    static void check(int v)
    {
        if (v < 0 || v >= kMaxVertices) throw std::out_of_range("vertex id out of range");
    }

    std::array<std::uint64_t, kWords> words_{};
};

}  // namespace hadwiger
