#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <vector>

namespace tough {

using Vertex = int;

/// Fixed-width bit-vector over vertex indices 0..n-1 (n <= 512).
///
/// All words are stored inline so a set can be copied into worker-local
/// scratch without allocation. Bits at positions >= size() are always zero.
class VertexSet {
public:
    static constexpr std::size_t max_vertices = 512;
    static constexpr std::size_t word_bits = 64;
    static constexpr std::size_t max_words = max_vertices / word_bits;

    VertexSet() = default;
    explicit VertexSet(std::size_t n) : size_(static_cast<std::uint16_t>(n))
    {
        if (n > max_vertices)
            throw std::length_error("VertexSet: more than 512 vertices");
    }
    VertexSet(std::size_t n, std::initializer_list<Vertex> members) : VertexSet(n)
    {
        for (Vertex v : members) insert(v);
    }

    static VertexSet full(std::size_t n)
    {
        VertexSet s(n);
        for (std::size_t w = 0; w < s.word_count(); ++w) s.words_[w] = ~std::uint64_t{0};
        s.trim();
        return s;
    }
    /// Low 64 vertices from a mask; bits at or above n are dropped.
    static VertexSet from_mask(std::size_t n, std::uint64_t mask)
    {
        VertexSet s(n);
        s.words_[0] = mask;
        s.trim();
        return s;
    }

    std::size_t size() const noexcept { return size_; }
    std::size_t word_count() const noexcept { return (size_ + word_bits - 1) / word_bits; }
    std::uint64_t word(std::size_t i) const noexcept { return words_[i]; }
    /// Low word; the whole set when size() <= 64.
    std::uint64_t mask() const noexcept { return words_[0]; }

    bool contains(Vertex v) const noexcept
    {
        auto u = static_cast<std::size_t>(v);
        return u < size_ && ((words_[u / word_bits] >> (u % word_bits)) & 1U) != 0;
    }
    void insert(Vertex v)
    {
        check(v);
        auto u = static_cast<std::size_t>(v);
        words_[u / word_bits] |= std::uint64_t{1} << (u % word_bits);
    }
    void erase(Vertex v)
    {
        check(v);
        auto u = static_cast<std::size_t>(v);
        words_[u / word_bits] &= ~(std::uint64_t{1} << (u % word_bits));
    }

    std::size_t count() const noexcept
    {
        std::size_t c = 0;
        for (std::size_t w = 0; w < word_count(); ++w) c += static_cast<std::size_t>(std::popcount(words_[w]));
        return c;
    }
    bool empty() const noexcept
    {
        for (std::size_t w = 0; w < word_count(); ++w)
            if (words_[w] != 0) return false;
        return true;
    }
    /// Smallest member, or -1 when empty.
    Vertex first() const noexcept
    {
        for (std::size_t w = 0; w < word_count(); ++w)
            if (words_[w] != 0)
                return static_cast<Vertex>(w * word_bits + static_cast<std::size_t>(std::countr_zero(words_[w])));
        return -1;
    }
    bool is_subset_of(const VertexSet& o) const noexcept
    {
        for (std::size_t w = 0; w < word_count(); ++w)
            if ((words_[w] & ~o.words_[w]) != 0) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const noexcept
    {
        for (std::size_t w = 0; w < word_count(); ++w)
            if ((words_[w] & o.words_[w]) != 0) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) noexcept
    {
        for (std::size_t w = 0; w < word_count(); ++w) words_[w] |= o.words_[w];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) noexcept
    {
        for (std::size_t w = 0; w < word_count(); ++w) words_[w] &= o.words_[w];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) noexcept
    {
        for (std::size_t w = 0; w < word_count(); ++w) words_[w] &= ~o.words_[w];
        return *this;
    }
    VertexSet complement() const noexcept
    {
        VertexSet s(*this);
        for (std::size_t w = 0; w < word_count(); ++w) s.words_[w] = ~s.words_[w];
        s.trim();
        return s;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) noexcept { return a -= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept
    {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }
    /// Orders by the bit-vector read as an unsigned integer (highest index most significant).
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) noexcept
    {
        for (std::size_t w = max_words; w-- > 0;)
            if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
        return a.size_ <=> b.size_;
    }

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        iterator() = default;
        iterator(const VertexSet* s, std::size_t word) : set_(s), word_(word) { settle(); }
        Vertex operator*() const noexcept
        {
            return static_cast<Vertex>(word_ * word_bits + static_cast<std::size_t>(std::countr_zero(bits_)));
        }
        iterator& operator++() noexcept
        {
            bits_ &= bits_ - 1;
            if (bits_ == 0) {
                ++word_;
                settle();
            }
            return *this;
        }
        iterator operator++(int) noexcept
        {
            iterator t = *this;
            ++*this;
            return t;
        }
        friend bool operator==(const iterator& a, const iterator& b) noexcept
        {
            return a.word_ == b.word_ && a.bits_ == b.bits_;
        }

    private:
        void settle() noexcept
        {
            while (word_ < set_->word_count() && (bits_ = set_->words_[word_]) == 0) ++word_;
            if (word_ >= set_->word_count()) {
                word_ = set_->word_count();
                bits_ = 0;
            }
        }
        const VertexSet* set_ = nullptr;
        std::size_t word_ = 0;
        std::uint64_t bits_ = 0;
    };

    /// Members in ascending order.
    iterator begin() const { return iterator(this, 0); }
    iterator end() const { return iterator(this, word_count()); }
    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

private:
    void check(Vertex v) const
    {
        if (v < 0 || static_cast<std::size_t>(v) >= size_) throw std::out_of_range("VertexSet: vertex out of range");
    }
    void trim() noexcept
    {
        std::size_t wc = word_count();
        for (std::size_t w = wc; w < max_words; ++w) words_[w] = 0;
        if (size_ % word_bits != 0) words_[wc - 1] &= (std::uint64_t{1} << (size_ % word_bits)) - 1;
    }

    std::array<std::uint64_t, max_words> words_{};
    std::uint16_t size_ = 0;
};

}  // namespace tough
