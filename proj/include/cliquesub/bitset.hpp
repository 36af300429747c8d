#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cliquesub {

/// Fixed-size bitset whose size is chosen at runtime. Bits past size() are always zero.
class Bitset {
  public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + word_bits - 1) / word_bits, 0) {}

    std::size_t size() const noexcept { return size_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    const Word * data() const noexcept { return words_.data(); }
    Word * data() noexcept { return words_.data(); }

    bool test(std::size_t i) const noexcept { return (words_[i / word_bits] >> (i % word_bits)) & 1u; }
    void set(std::size_t i) noexcept { words_[i / word_bits] |= Word{1} << (i % word_bits); }
    void reset(std::size_t i) noexcept { words_[i / word_bits] &= ~(Word{1} << (i % word_bits)); }
    void assign(std::size_t i, bool value) noexcept { value ? set(i) : reset(i); }

    void set_all() noexcept
    {
        for (auto & w : words_)
            w = ~Word{0};
        trim();
    }
    void reset_all() noexcept
    {
        for (auto & w : words_)
            w = 0;
    }

    std::size_t count() const noexcept
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const noexcept
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }
    bool any() const noexcept { return ! none(); }

    /// Index of the lowest set bit at or after `from`, or size() if none.
    std::size_t find_next(std::size_t from) const noexcept
    {
        if (from >= size_)
            return size_;
        std::size_t wi = from / word_bits;
        Word w = words_[wi] & (~Word{0} << (from % word_bits));
        while (true) {
            if (w)
                return wi * word_bits + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size())
                return size_;
            w = words_[wi];
        }
    }
    std::size_t find_first() const noexcept { return find_next(0); }

    template <typename F>
    void for_each(F && f) const
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            Word w = words_[wi];
            while (w) {
                std::size_t bit = static_cast<std::size_t>(std::countr_zero(w));
                f(wi * word_bits + bit);
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> indices() const
    {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    Bitset & operator&=(const Bitset & o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    Bitset & operator|=(const Bitset & o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    /// this := this \ o
    Bitset & subtract(const Bitset & o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }
    void flip_all() noexcept
    {
        for (auto & w : words_)
            w = ~w;
        trim();
    }

    friend Bitset operator&(Bitset a, const Bitset & b) noexcept { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset & b) noexcept { return a |= b; }

    bool operator==(const Bitset & o) const noexcept = default;

  private:
    void trim() noexcept
    {
        if (size_ % word_bits && ! words_.empty())
            words_.back() &= (Word{1} << (size_ % word_bits)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<Word> words_;
};

/// |a ∩ b| without materialising the intersection.
inline std::size_t intersection_count(const Bitset & a, const Bitset & b) noexcept
{
    std::size_t c = 0;
    const auto * x = a.data();
    const auto * y = b.data();
    for (std::size_t i = 0, e = a.word_count(); i < e; ++i)
        c += static_cast<std::size_t>(std::popcount(x[i] & y[i]));
    return c;
}

/// |a ∩ b ∩ c|
inline std::size_t intersection_count(const Bitset & a, const Bitset & b, const Bitset & c) noexcept
{
    std::size_t n = 0;
    const auto * x = a.data();
    const auto * y = b.data();
    const auto * z = c.data();
    for (std::size_t i = 0, e = a.word_count(); i < e; ++i)
        n += static_cast<std::size_t>(std::popcount(x[i] & y[i] & z[i]));
    return n;
}

inline bool intersects(const Bitset & a, const Bitset & b) noexcept
{
    const auto * x = a.data();
    const auto * y = b.data();
    for (std::size_t i = 0, e = a.word_count(); i < e; ++i)
        if (x[i] & y[i])
            return true;
    return false;
}

/// Lowest index in a ∩ b ∩ c, or a.size() if empty.
inline std::size_t first_common(const Bitset & a, const Bitset & b, const Bitset & c) noexcept
{
    const auto * x = a.data();
    const auto * y = b.data();
    const auto * z = c.data();
    for (std::size_t i = 0, e = a.word_count(); i < e; ++i)
        if (auto w = x[i] & y[i] & z[i])
            return i * Bitset::word_bits + static_cast<std::size_t>(std::countr_zero(w));
    return a.size();
}

} // namespace cliquesub
