#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace centra {

/// Subset of a group's elements as a fixed-width bitset over element
/// indices 0..universe-1. Two sets over the same group compare equal iff
/// their bit patterns are identical; unused tail bits are kept zero so the
/// comparison is canonical.
class ElementSet {
public:
    ElementSet() = default;

    explicit ElementSet(int universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static ElementSet full(int universe) {
        ElementSet s(universe);
        for (int i = 0; i < universe; ++i) s.add(i);
        return s;
    }

    static ElementSet single(int universe, int element) {
        ElementSet s(universe);
        s.add(element);
        return s;
    }

    int universe() const { return universe_; }

    void add(int e) { words_[static_cast<size_t>(e) >> 6] |= (uint64_t{1} << (e & 63)); }
    void remove(int e) { words_[static_cast<size_t>(e) >> 6] &= ~(uint64_t{1} << (e & 63)); }
    bool contains(int e) const {
        return (words_[static_cast<size_t>(e) >> 6] >> (e & 63)) & 1u;
    }

    int count() const {
        int total = 0;
        for (uint64_t w : words_) total += __builtin_popcountll(w);
        return total;
    }

    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    ElementSet operator&(const ElementSet& other) const {
        ElementSet out(universe_);
        for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & other.words_[i];
        return out;
    }

    ElementSet operator|(const ElementSet& other) const {
        ElementSet out(universe_);
        for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] | other.words_[i];
        return out;
    }

    bool is_subset_of(const ElementSet& other) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for (int e = 0; e < universe_; ++e)
            if (contains(e)) out.push_back(e);
        return out;
    }

    bool operator==(const ElementSet& other) const = default;

    // Lexicographic on the word array; any strict total order works for
    // deterministic deduplication.
    std::strong_ordering operator<=>(const ElementSet& other) const {
        if (auto c = universe_ <=> other.universe_; c != 0) return c;
        for (size_t i = 0; i < words_.size(); ++i)
            if (auto c = words_[i] <=> other.words_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

private:
    int universe_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace centra
