#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace kntw {

/// Fixed-universe bitset over vertex indices 0..universe-1.
class VertexSet {
public:
    using Word = std::uint64_t;

    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~Word{0};
        s.trim();
        return s;
    }

    template <typename Range>
    static VertexSet of(std::size_t universe, const Range& members) {
        VertexSet s(universe);
        for (auto v : members) s.insert(static_cast<std::size_t>(v));
        return s;
    }

    std::size_t universe() const noexcept { return n_; }

    void insert(std::size_t v) noexcept { words_[v >> 6] |= Word{1} << (v & 63); }
    void erase(std::size_t v) noexcept { words_[v >> 6] &= ~(Word{1} << (v & 63)); }
    bool contains(std::size_t v) const noexcept {
        return v < n_ && ((words_[v >> 6] >> (v & 63)) & 1U);
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const noexcept {
        for (Word w : words_)
            if (w) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) noexcept { return a -= b; }

    VertexSet complement() const {
        VertexSet s(*this);
        for (auto& w : s.words_) w = ~w;
        s.trim();
        return s;
    }

    bool intersects(const VertexSet& o) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    std::size_t intersection_count(const VertexSet& o) const noexcept {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return c;
    }
    bool is_subset_of(const VertexSet& o) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    /// Smallest member, or universe() when empty.
    std::size_t first() const noexcept { return next(0); }
    /// Smallest member >= from, or universe() if none.
    std::size_t next(std::size_t from) const noexcept {
        if (from >= n_) return n_;
        std::size_t i = from >> 6;
        Word w = words_[i] & (~Word{0} << (from & 63));
        while (true) {
            if (w) return (i << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++i == words_.size()) return n_;
            w = words_[i];
        }
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            Word w = words_[i];
            while (w) {
                fn((i << 6) + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](std::size_t v) { out.push_back(static_cast<int>(v)); });
        return out;
    }

    const std::vector<Word>& words() const noexcept { return words_; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

private:
    void trim() noexcept {
        if (n_ % 64 != 0) words_.back() &= (Word{1} << (n_ % 64)) - 1;
    }

    std::size_t n_ = 0;
    std::vector<Word> words_;
};

}  // namespace kntw
