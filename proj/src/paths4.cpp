#include <cliquesub/paths4.hpp>

#include <bit>

namespace cliquesub {

namespace {

    // Lowest index in a ∩ b other than `skip`, or a.size().
    std::size_t first_common_except(const Bitset & a, const Bitset & b, std::size_t skip)
    {
        const auto * x = a.data();
        const auto * y = b.data();
        for (std::size_t i = 0, e = a.word_count(); i < e; ++i) {
            auto w = x[i] & y[i];
            if (skip / Bitset::word_bits == i)
                w &= ~(Bitset::Word{1} << (skip % Bitset::word_bits));
            if (w)
                return i * Bitset::word_bits + static_cast<std::size_t>(std::countr_zero(w));
        }
        return a.size();
    }

} // namespace

std::optional<std::array<Vertex, 3>> first_path4(const Graph & g, Vertex u, Vertex v, const Bitset & avail)
{
    Bitset ends = g.neighbours(v) & avail;
    if (ends.none())
        return std::nullopt;
    // Middle vertices must see at least one possible last interior vertex.
    Bitset middles(g.order());
    ends.for_each([&](std::size_t c) { middles |= g.neighbours(static_cast<Vertex>(c)); });
    middles &= avail;
    Bitset starts = g.neighbours(u) & avail;
    for (std::size_t a = starts.find_first(); a < starts.size(); a = starts.find_next(a + 1)) {
        Bitset mids = g.neighbours(static_cast<Vertex>(a)) & middles;
        for (std::size_t b = mids.find_first(); b < mids.size(); b = mids.find_next(b + 1)) {
            std::size_t c = first_common_except(g.neighbours(static_cast<Vertex>(b)), ends, a);
            if (c < ends.size())
                return std::array<Vertex, 3>{static_cast<Vertex>(a), static_cast<Vertex>(b), static_cast<Vertex>(c)};
        }
    }
    return std::nullopt;
}

} // namespace cliquesub
