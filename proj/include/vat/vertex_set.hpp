#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace vat {

// Subset of a fixed vertex universe 0..n-1, backed by 64-bit words.
// Supports the set algebra the solvers need plus cheap complement and
// ascending iteration.
class VertexSet {
public:
    VertexSet() : universe_(0) {}

    explicit VertexSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {
        assert(universe >= 0);
    }

    VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
        for (int v : members) add(v);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int w = 0; w < static_cast<int>(s.words_.size()); ++w) s.words_[w] = ~0ULL;
        s.trim();
        return s;
    }

    int universe() const noexcept { return universe_; }

    int size() const noexcept {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const noexcept {
        for (std::uint64_t w : words_)
            if (w != 0) return false;
        return true;
    }

    bool contains(int v) const noexcept {
        assert(v >= 0 && v < universe_);
        return (words_[v >> 6] >> (v & 63)) & 1ULL;
    }

    void add(int v) {
        assert(v >= 0 && v < universe_);
        words_[v >> 6] |= 1ULL << (v & 63);
    }

    void remove(int v) {
        assert(v >= 0 && v < universe_);
        words_[v >> 6] &= ~(1ULL << (v & 63));
    }

    VertexSet complement() const {
        VertexSet r(universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    // set difference
    VertexSet& operator-=(const VertexSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }
    friend bool operator!=(const VertexSet& a, const VertexSet& b) noexcept { return !(a == b); }

    bool intersects(const VertexSet& o) const noexcept {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const noexcept {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    // Smallest member, or -1 when empty.
    int first() const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] != 0) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w != 0) {
                const int v = static_cast<int>(i * 64 + std::countr_zero(w));
                f(v);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    // Lexicographic order on the ascending member lists; this is the last
    // tie-break key for witness reporting.
    static bool lex_less(const VertexSet& a, const VertexSet& b) {
        return a.to_vector() < b.to_vector();
    }

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

private:
    void trim() {
        const int r = universe_ & 63;
        if (r != 0 && !words_.empty()) words_.back() &= (1ULL << r) - 1;
    }

    int universe_;
    std::vector<std::uint64_t> words_;
};

}  // namespace vat
