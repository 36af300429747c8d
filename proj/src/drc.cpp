#include <cliquesub/drc.hpp>
#include <cliquesub/exact.hpp>
#include <cliquesub/paths4.hpp>
#include <cliquesub/random.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace cliquesub {

namespace {

    std::uint64_t crossing_count(const Graph & g, const VertexSet & v1, const Bitset & v2_bits)
    {
        std::uint64_t e = 0;
        for (auto x : v1)
            e += intersection_count(g.neighbours(x), v2_bits);
        return e;
    }

    BigInt big(std::uint64_t x) { return BigInt(x); }

} // namespace

bool crossing_bound_holds(const Graph & g, const Partition & p)
{
    return 2 * p.crossing >= g.edge_count();
}

Partition drc_partition(const Graph & g, std::uint64_t seed, std::size_t max_attempts)
{
    std::size_t n = g.order();
    if (n < 2)
        throw InputError("drc_partition needs at least two vertices");
    Rng rng(seed);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::size_t half = (n + 1) / 2;

    Partition best;
    for (std::size_t attempt = 1; attempt <= std::max<std::size_t>(max_attempts, 1); ++attempt) {
        rng.shuffle(order);
        VertexSet v1(std::vector<Vertex>(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(half)));
        VertexSet v2(std::vector<Vertex>(order.begin() + static_cast<std::ptrdiff_t>(half), order.end()));
        Partition p{std::move(v1), std::move(v2), 0, attempt};
        p.crossing = crossing_count(g, p.v1, p.v2.to_bitset(n));
        if (crossing_bound_holds(g, p))
            return p;
        if (attempt == 1 || p.crossing > best.crossing)
            best = std::move(p);
    }
    best.attempts = std::max<std::size_t>(max_attempts, 1);
    throw PartitionError("no split met the crossing bound in " + std::to_string(best.attempts) + " attempts",
                         std::move(best));
}

bool drc_hypothesis(const Graph & g)
{
    // d^2 n >= 1600  <=>  (2m)^2 n >= 1600 (n(n-1))^2  <=>  m^2 >= 400 n (n-1)^2
    std::uint64_t n = g.order();
    if (n < 2)
        return false;
    return big(g.edge_count()) * g.edge_count() >= big(400) * n * (n - 1) * (n - 1);
}

DrcCertificate drc_select(const Graph & g, const Partition & part, Mode mode, const Rational & u_fraction)
{
    std::size_t n = g.order();
    if (n < 2)
        throw InputError("drc_select needs at least two vertices");
    part.v1.check_range(n);
    part.v2.check_range(n);
    if (! disjoint(part.v1, part.v2) || part.v1.size() + part.v2.size() != n || part.v2.empty())
        throw InputError("V1, V2 must split the vertex set with V2 nonempty");

    std::uint64_t m = g.edge_count();
    bool guaranteed = drc_hypothesis(g);
    if (mode == Mode::paper && ! guaranteed)
        throw PreconditionError("d²n ≥ 1600", "m = " + std::to_string(m) + ", n = " + std::to_string(n));
    if (u_fraction <= 0 || u_fraction > 1 || (mode == Mode::paper && u_fraction != Rational(1, 5)))
        throw InputError("U fraction must be 1/5 in paper mode and in (0, 1] otherwise");

    Bitset v2_bits = part.v2.to_bitset(n);
    std::uint64_t crossing = crossing_count(g, part.v1, v2_bits);
    if (2 * crossing < m)
        throw ContractError("partition does not meet the crossing bound e(V1,V2) >= (d/2) C(n,2)");

    DrcCertificate cert;
    cert.v1 = part.v1;
    cert.v2 = part.v2;
    cert.guaranteed = guaranteed;
    cert.u_fraction = to_double(u_fraction);

    // floor(d^2 n / 800) = floor(m^2 / (200 n (n-1)^2))
    BigInt nn = n, n1 = n - 1;
    cert.good_threshold = (big(m) * m / (200 * nn * n1 * n1)).convert_to<std::uint64_t>();
    // ceil(1e-9 d^5 n) = ceil(32 m^5 / (1e9 n^4 (n-1)^5))
    BigInt m5 = pow(big(m), 5);
    cert.path_bound =
        ceil_of(Rational(32 * m5, BigInt(1'000'000'000) * pow(nn, 4) * pow(n1, 5))).convert_to<std::uint64_t>();

    // Bad pairs of V1, with common neighbourhoods taken inside V2.
    std::size_t k = part.v1.size();
    std::vector<Bitset> side(k);
    std::vector<std::uint32_t> local(n, UINT32_MAX);
    for (std::size_t i = 0; i < k; ++i) {
        side[i] = g.neighbours(part.v1[i]) & v2_bits;
        local[part.v1[i]] = static_cast<std::uint32_t>(i);
    }
    std::vector<Bitset> bad(k, Bitset(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (intersection_count(side[i], side[j]) <= cert.good_threshold) {
                bad[i].set(j);
                bad[j].set(i);
            }

    Bitset v1_bits = part.v1.to_bitset(n);
    auto local_x = [&](Vertex hub) {
        Bitset x(k);
        (g.neighbours(hub) & v1_bits).for_each([&](std::size_t w) { x.set(local[w]); });
        return x;
    };

    bool have = false;
    std::int64_t best_score = 0;
    for (auto hub : part.v2) {
        Bitset x = local_x(hub);
        std::uint64_t twice_b = 0;
        x.for_each([&](std::size_t i) { twice_b += intersection_count(bad[i], x); });
        auto size = static_cast<std::int64_t>(x.count());
        std::int64_t score = size * size - 40 * static_cast<std::int64_t>(twice_b / 2);
        if (! have || score > best_score) {
            have = true;
            best_score = score;
            cert.hub = hub;
            cert.bad_pair_count = twice_b / 2;
        }
    }
    cert.score = best_score;

    // |X|^2 - 40b >= d^2 n^2 / 80  <=>  20 score (n-1)^2 >= m^2
    if (BigInt(20) * cert.score * n1 * n1 < big(m) * m)
        throw InternalError("no hub reaches |X|^2 - 40b >= d^2 n^2 / 80 although the partition meets its bound");

    Bitset x = local_x(cert.hub);
    std::size_t x_size = x.count();
    cert.x_set = VertexSet::from_bitset(g.neighbours(cert.hub) & v1_bits);

    std::vector<Vertex> survivors;
    // U is the first ceil(|X|/5) survivors in label order; the local order of V1 is label order.
    x.for_each([&](std::size_t i) {
        if (4 * intersection_count(bad[i], x) >= x_size)
            ++cert.bad_vertices;
        else
            survivors.push_back(part.v1[i]);
    });
    std::size_t u_size = (x_size + 4) / 5;
    if (survivors.size() < u_size)
        throw InternalError("more than |X|/5 bad vertices in X");
    std::size_t wanted = std::max(u_size, ceil_of(u_fraction * x_size).convert_to<std::size_t>());
    survivors.resize(std::min(wanted, survivors.size()));
    cert.u_set = VertexSet(std::move(survivors));

    if (10 * big(x_size) * n1 < 2 * big(m))
        throw InternalError("chosen hub has |X| < dn/10");
    if (40 * big(cert.bad_pair_count) > big(x_size) * x_size)
        throw InternalError("chosen hub has b > |X|^2/40");
    if (50 * big(cert.u_set.size()) * n1 < 2 * big(m))
        throw InternalError("|U| < dn/50");
    return cert;
}

DrcCheck check_drc_certificate(const Graph & g, const DrcCertificate & cert)
{
    auto fail = [](std::string clause) { return DrcCheck{false, std::move(clause)}; };
    std::size_t n = g.order();
    if (n < 2)
        return fail("graph has fewer than two vertices");
    for (const auto * s : {&cert.v1, &cert.v2, &cert.x_set, &cert.u_set})
        for (auto v : *s)
            if (v >= n)
                return fail("vertex out of range");
    if (! disjoint(cert.v1, cert.v2) || cert.v1.size() + cert.v2.size() != n)
        return fail("V1, V2 do not partition V");
    std::uint64_t m = g.edge_count();
    Bitset v2_bits = cert.v2.to_bitset(n);
    if (2 * crossing_count(g, cert.v1, v2_bits) < m)
        return fail("crossing bound e(V1,V2) >= (d/2) C(n,2)");
    if (! cert.v2.contains(cert.hub))
        return fail("hub not in V2");
    if (cert.x_set != VertexSet::from_bitset(g.neighbours(cert.hub) & cert.v1.to_bitset(n)))
        return fail("X is not N(hub) ∩ V1");

    BigInt n1 = n - 1;
    if (cert.good_threshold != (big(m) * m / (200 * BigInt(n) * n1 * n1)).convert_to<std::uint64_t>())
        return fail("good threshold is not floor(d²n/800)");

    const auto & x = cert.x_set.members();
    std::vector<Bitset> side;
    side.reserve(x.size());
    for (auto v : x)
        side.push_back(g.neighbours(v) & v2_bits);
    std::uint64_t b = 0;
    std::vector<std::size_t> bad_partners(x.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (intersection_count(side[i], side[j]) <= cert.good_threshold) {
                ++b;
                ++bad_partners[i];
                ++bad_partners[j];
            }
    if (b != cert.bad_pair_count)
        return fail("bad pair count b");
    auto size = static_cast<std::int64_t>(x.size());
    if (cert.score != size * size - 40 * static_cast<std::int64_t>(b))
        return fail("score is not |X|^2 - 40b");
    if (BigInt(20) * cert.score * n1 * n1 < big(m) * m)
        return fail("|X|^2 - 40b >= d²n²/80");

    for (auto u : cert.u_set) {
        auto it = std::lower_bound(x.begin(), x.end(), u);
        if (it == x.end() || *it != u)
            return fail("U is not a subset of X");
        if (4 * bad_partners[static_cast<std::size_t>(it - x.begin())] >= x.size())
            return fail("vertex of U is bad-paired with at least |X|/4 vertices of X");
    }
    if (cert.u_set.size() < (x.size() + 4) / 5)
        return fail("|U| < |X|/5");
    if (50 * big(cert.u_set.size()) * n1 < 2 * big(m))
        return fail("|U| >= dn/50");
    if (10 * big(x.size()) * n1 < 2 * big(m))
        return fail("|X| >= dn/10");
    if (40 * big(b) > big(x.size()) * x.size())
        return fail("b <= |X|^2/40");
    return {};
}

namespace {

    // Dinic on a unit-capacity network; sufficient for the layered relaxation.
    class Dinic {
      public:
        explicit Dinic(std::size_t nodes) : head_(nodes, -1), level_(nodes), iter_(nodes) {}

        void add(std::size_t from, std::size_t to)
        {
            arcs_.push_back({static_cast<std::uint32_t>(to), head_[from], 1});
            head_[from] = static_cast<std::int64_t>(arcs_.size() - 1);
            arcs_.push_back({static_cast<std::uint32_t>(from), head_[to], 0});
            head_[to] = static_cast<std::int64_t>(arcs_.size() - 1);
        }

        std::size_t run(std::size_t s, std::size_t t, std::size_t cap)
        {
            std::size_t flow = 0;
            while (flow < cap && bfs(s, t)) {
                iter_ = head_;
                while (flow < cap && dfs(s, t))
                    ++flow;
            }
            return flow;
        }

      private:
        struct Arc {
            std::uint32_t to;
            std::int64_t next;
            std::uint8_t cap;
        };

        bool bfs(std::size_t s, std::size_t t)
        {
            std::fill(level_.begin(), level_.end(), -1);
            std::vector<std::size_t> queue{s};
            level_[s] = 0;
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                auto x = queue[qi];
                for (auto a = head_[x]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
                    const auto & arc = arcs_[static_cast<std::size_t>(a)];
                    if (arc.cap && level_[arc.to] < 0) {
                        level_[arc.to] = level_[x] + 1;
                        queue.push_back(arc.to);
                    }
                }
            }
            return level_[t] >= 0;
        }

        // Iterative augmenting search along the level graph.
        bool dfs(std::size_t s, std::size_t t)
        {
            std::vector<std::size_t> stack{s};
            std::vector<std::int64_t> via;
            while (! stack.empty()) {
                auto x = stack.back();
                if (x == t) {
                    for (auto a : via) {
                        arcs_[static_cast<std::size_t>(a)].cap ^= 1;
                        arcs_[static_cast<std::size_t>(a ^ 1)].cap ^= 1;
                    }
                    return true;
                }
                bool advanced = false;
                for (auto & a = iter_[x]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
                    const auto & arc = arcs_[static_cast<std::size_t>(a)];
                    if (arc.cap && level_[arc.to] == level_[x] + 1) {
                        stack.push_back(arc.to);
                        via.push_back(a);
                        advanced = true;
                        break;
                    }
                }
                if (! advanced) {
                    level_[x] = -1;
                    stack.pop_back();
                    if (! via.empty()) {
                        auto & a = iter_[stack.back()];
                        a = arcs_[static_cast<std::size_t>(a)].next;
                        via.pop_back();
                    }
                }
            }
            return false;
        }

        std::vector<Arc> arcs_;
        std::vector<std::int64_t> head_;
        std::vector<int> level_;
        std::vector<std::int64_t> iter_;
    };

    constexpr std::uint64_t flow_arc_limit = 4'000'000;

    // Max flow through layers L1 = A, L2 = avail, L3 = C with unit vertex capacities per layer copy.
    // A vertex may sit in several layers, so this bounds the true packing from above.
    std::optional<std::size_t> layered_flow_bound(const Graph & g, const Bitset & a_set, const Bitset & avail,
                                                  const Bitset & c_set, std::size_t cap)
    {
        std::uint64_t arcs = 0;
        a_set.for_each([&](std::size_t a) { arcs += intersection_count(g.neighbours(static_cast<Vertex>(a)), avail); });
        avail.for_each([&](std::size_t b) { arcs += intersection_count(g.neighbours(static_cast<Vertex>(b)), c_set); });
        if (arcs > flow_arc_limit)
            return std::nullopt;

        std::size_t n = g.order();
        // Node ids: 0 source, 1 sink, then (layer, vertex, in/out).
        auto node = [n](int layer, std::size_t v, bool out) { return 2 + (static_cast<std::size_t>(layer) * n + v) * 2 + (out ? 1 : 0); };
        Dinic net(2 + 6 * n);
        a_set.for_each([&](std::size_t a) {
            net.add(0, node(0, a, false));
            net.add(node(0, a, false), node(0, a, true));
            (g.neighbours(static_cast<Vertex>(a)) & avail).for_each([&](std::size_t b) { net.add(node(0, a, true), node(1, b, false)); });
        });
        avail.for_each([&](std::size_t b) {
            net.add(node(1, b, false), node(1, b, true));
            (g.neighbours(static_cast<Vertex>(b)) & c_set).for_each([&](std::size_t c) { net.add(node(1, b, true), node(2, c, false)); });
        });
        c_set.for_each([&](std::size_t c) {
            net.add(node(2, c, false), node(2, c, true));
            net.add(node(2, c, true), 1);
        });
        return net.run(0, 1, cap);
    }

    class PathPacker {
      public:
        PathPacker(const Graph & g, const Bitset & ends, std::size_t ceiling, std::uint64_t budget, std::size_t start)
            : g_(g), ends_(ends), ceiling_(ceiling), budget_(budget), best_(start)
        {
        }

        void search(Bitset avail, Bitset firsts)
        {
            if (best_ >= ceiling_ || exceeded_)
                return;
            if (++nodes_ > budget_) {
                exceeded_ = true;
                return;
            }
            firsts &= avail;
            Bitset ends = ends_ & avail;
            std::size_t room = std::min({firsts.count(), ends.count(), avail.count() / 3});
            if (current_.size() + room <= best_)
                return;
            auto a = static_cast<Vertex>(firsts.find_first());
            Bitset mids = g_.neighbours(a) & avail;
            for (std::size_t b = mids.find_first(); b < mids.size(); b = mids.find_next(b + 1)) {
                Bitset lasts = g_.neighbours(static_cast<Vertex>(b)) & ends;
                lasts.reset(a);
                for (std::size_t c = lasts.find_first(); c < lasts.size(); c = lasts.find_next(c + 1)) {
                    Bitset next = avail;
                    next.reset(a);
                    next.reset(b);
                    next.reset(c);
                    current_.push_back({a, static_cast<Vertex>(b), static_cast<Vertex>(c)});
                    if (current_.size() > best_) {
                        best_ = current_.size();
                        best_paths_ = current_;
                    }
                    search(next, firsts);
                    current_.pop_back();
                    if (best_ >= ceiling_ || exceeded_)
                        return;
                }
            }
            firsts.reset(a);
            search(std::move(avail), std::move(firsts));
        }

        std::size_t best() const noexcept { return best_; }
        const std::vector<std::array<Vertex, 3>> & best_paths() const noexcept { return best_paths_; }
        bool exceeded() const noexcept { return exceeded_; }

      private:
        const Graph & g_;
        const Bitset & ends_;
        std::size_t ceiling_;
        std::uint64_t budget_;
        std::uint64_t nodes_ = 0;
        std::size_t best_;
        bool exceeded_ = false;
        std::vector<std::array<Vertex, 3>> current_;
        std::vector<std::array<Vertex, 3>> best_paths_;
    };

} // namespace

PathPacking count_disjoint_paths4(const Graph & g, Vertex u, Vertex v, const VertexSet & forbidden,
                                  const PathCountOptions & options)
{
    std::size_t n = g.order();
    if (u >= n || v >= n)
        throw InputError("endpoint out of range");
    if (u == v)
        throw InputError("count_disjoint_paths4 needs distinct endpoints");
    forbidden.check_range(n);
    if (forbidden.contains(u) || forbidden.contains(v))
        throw InputError("an endpoint is forbidden");

    Bitset avail = forbidden.to_bitset(n);
    avail.flip_all();
    avail.reset(u);
    avail.reset(v);
    Bitset a_set = g.neighbours(u) & avail;
    Bitset c_set = g.neighbours(v) & avail;

    PathPacking out;
    out.upper = std::min({a_set.count(), c_set.count(), avail.count() / 3});

    Bitset pool = avail;
    while (auto path = first_path4(g, u, v, pool)) {
        out.paths.push_back(*path);
        for (auto x : *path)
            pool.reset(x);
        if (options.stop_at && out.paths.size() >= *options.stop_at)
            break;
    }
    out.lower = out.paths.size();
    if (out.lower >= out.upper || (options.stop_at && out.lower >= *options.stop_at))
        return out;

    if (options.flow_bound)
        if (auto flow = layered_flow_bound(g, a_set, avail, c_set, out.upper))
            out.upper = std::min(out.upper, *flow);
    if (out.lower >= out.upper)
        return out;

    std::size_t ceiling = out.upper;
    if (options.stop_at)
        ceiling = std::min(ceiling, *options.stop_at);
    PathPacker packer(g, c_set, ceiling, options.budget_nodes, out.lower);
    packer.search(avail, a_set);
    if (packer.best() > out.lower) {
        out.paths = packer.best_paths();
        out.lower = out.paths.size();
    }
    if (! packer.exceeded() && out.lower < ceiling)
        out.upper = out.lower;
    return out;
}

} // namespace cliquesub
