#include <cliquesub/dense_subset.hpp>
#include <cliquesub/errors.hpp>
#include <cliquesub/exact.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace cliquesub {

namespace {

    void check_rho(double rho)
    {
        if (! (rho > 0.0 && rho < 1.0))
            throw InputError("rho must lie in (0, 1), got " + std::to_string(rho));
    }

} // namespace

PeelResult peel_sequence(const Graph & g, double rho) { return peel_sequence(g, rho, VertexSet::range(static_cast<Vertex>(g.order()))); }

PeelResult peel_sequence(const Graph & g, double rho, const VertexSet & start)
{
    check_rho(rho);
    start.check_range(g.order());
    Rational r(rho);
    PeelResult out;
    Bitset current = start.to_bitset(g.order());
    while (true) {
        std::size_t size = current.count();
        out.chain.push_back(VertexSet::from_bitset(current));
        std::size_t best_nd = 0;
        Vertex pivot = 0;
        std::uint64_t twice_missing = 0;
        current.for_each([&](std::size_t v) {
            std::size_t nd = size - 1 - intersection_count(g.neighbours(static_cast<Vertex>(v)), current);
            twice_missing += nd;
            if (nd > best_nd) {
                best_nd = nd;
                pivot = static_cast<Vertex>(v);
            }
        });
        if (size == 0 || Rational(best_nd) < r * size) {
            out.terminal_missing = twice_missing / 2;
            // Every vertex has fewer than rho|T| non-neighbours.
            if (size > 0 && ! (Rational(out.terminal_missing) < r * size * size / 2))
                throw InternalError("peel terminal set has at least rho |T|^2 / 2 missing pairs");
            return out;
        }
        out.pivots.push_back(pivot);
        Bitset next = current;
        next.subtract(g.neighbours(pivot));
        next.reset(pivot);
        current = std::move(next);
    }
}

VertexSet ShrinkSequence::at_size(std::size_t k) const
{
    std::vector<Vertex> gone(deleted.begin(), deleted.begin() + static_cast<std::ptrdiff_t>(start.size() - k));
    return set_difference(start, VertexSet(std::move(gone)));
}

ShrinkSequence shrink_sequence(const Graph & g, const VertexSet & start)
{
    start.check_range(g.order());
    ShrinkSequence out;
    out.start = start;
    std::size_t t = start.size();
    out.missing.assign(t + 1, 0);

    Bitset alive = start.to_bitset(g.order());
    std::vector<std::size_t> nd(t);
    std::uint64_t missing = 0;
    for (std::size_t i = 0; i < t; ++i) {
        nd[i] = t - 1 - intersection_count(g.neighbours(start[i]), alive);
        missing += nd[i];
    }
    missing /= 2;
    out.missing[t] = missing;
    std::vector<char> gone(t, 0);
    for (std::size_t k = t; k > 0; --k) {
        std::size_t pick = t;
        for (std::size_t i = t; i-- > 0;)
            if (! gone[i] && (pick == t || nd[i] > nd[pick]))
                pick = i;
        Vertex v = start[pick];
        gone[pick] = 1;
        alive.reset(v);
        missing -= nd[pick];
        for (std::size_t i = 0; i < t; ++i)
            if (! gone[i] && ! g.adjacent(v, start[i]))
                --nd[i];
        out.deleted.push_back(v);
        out.missing[k - 1] = missing;
        // missing(k-1)/C(k-1,2) <= missing(k)/C(k,2), cross-multiplied.
        if (k - 1 >= 2) {
            std::uint64_t before = out.missing[k], pairs_before = k * (k - 1) / 2, pairs_after = (k - 1) * (k - 2) / 2;
            if (BigInt(missing) * pairs_before > BigInt(before) * pairs_after)
                throw InternalError("greedy shrink increased the missing-pair density");
        }
    }
    return out;
}

std::size_t dense_subset_limit(std::size_t n, double rho, std::size_t alpha)
{
    check_rho(rho);
    if (alpha == 0)
        return n == 0 ? 0 : 1;
    // Exact in the binary value of rho, so a product like 0.3^2 * 100 is not rounded up past 9.
    Rational limit = pow_of(Rational(rho), static_cast<unsigned>(alpha - 1)) * n;
    return static_cast<std::size_t>(std::min<BigInt>(ceil_of(limit), BigInt(n)));
}

VertexSet dense_subset(const Graph & g, double rho, std::size_t s, std::size_t alpha)
{
    std::size_t limit = dense_subset_limit(g.order(), rho, alpha);
    if (s < 1 || s > limit)
        throw InputError("s = " + std::to_string(s) + " outside [1, " + std::to_string(limit) + "]");

    PeelResult peel = peel_sequence(g, rho);
    const VertexSet & terminal = peel.terminal();
    if (peel.steps() + 1 > alpha) {
        // The pivots and any terminal vertex are pairwise nonadjacent.
        std::vector<Vertex> witness(peel.pivots);
        witness.push_back(terminal[0]);
        throw ContractError("independence bound " + std::to_string(alpha) + " is wrong: peeling found an independent set of size " +
                            std::to_string(witness.size()));
    }
    if (terminal.size() < s)
        throw InternalError("peel terminal set smaller than s");

    VertexSet out = shrink_sequence(g, terminal).at_size(s);
    if (Rational(missing_pairs(g, out)) > Rational(rho) * s * s)
        throw InternalError("dense subset has more than rho s^2 missing pairs");
    return out;
}

} // namespace cliquesub
