#include <cliquesub/errors.hpp>
#include <cliquesub/oracles.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace cliquesub {

std::string_view to_string(Certainty c)
{
    switch (c) {
    case Certainty::exact: return "exact";
    case Certainty::heuristic: return "heuristic";
    case Certainty::exceeded: return "exceeded";
    }
    return "?";
}

std::string_view to_string(Containment c)
{
    switch (c) {
    case Containment::present: return "present";
    case Containment::absent: return "absent";
    case Containment::exceeded: return "exceeded";
    }
    return "?";
}

namespace {

    // Bitset branch and bound with a greedy colouring bound over candidate sets, vertices
    // relabelled by non-increasing degree.
    class CliqueSearch {
      public:
        CliqueSearch(const Graph & g, std::uint64_t budget) : budget_(budget)
        {
            std::size_t n = g.order();
            order_.resize(n);
            std::iota(order_.begin(), order_.end(), Vertex{0});
            std::stable_sort(order_.begin(), order_.end(),
                             [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
            std::vector<Vertex> position(n);
            for (std::size_t i = 0; i < n; ++i)
                position[order_[i]] = static_cast<Vertex>(i);
            adj_.assign(n, Bitset(n));
            for (std::size_t i = 0; i < n; ++i)
                g.neighbours(order_[i]).for_each([&](std::size_t w) { adj_[i].set(position[w]); });
        }

        SetSearchResult run()
        {
            std::size_t n = adj_.size();
            SetSearchResult out;
            Bitset all(n);
            all.set_all();
            if (n > 0) {
                std::vector<std::size_t> verts, bounds;
                colour(all, verts, bounds);
                root_bound_ = bounds.empty() ? 0 : bounds.back();
                expand(all);
            }
            std::vector<Vertex> witness;
            for (auto i : best_)
                witness.push_back(order_[i]);
            out.witness = VertexSet(std::move(witness));
            out.value = best_.size();
            out.nodes = nodes_;
            out.tag = aborted_ ? Certainty::heuristic : Certainty::exact;
            out.upper_bound = aborted_ ? std::max(root_bound_, out.value) : out.value;
            return out;
        }

      private:
        void colour(const Bitset & p, std::vector<std::size_t> & verts, std::vector<std::size_t> & bounds) const
        {
            verts.clear();
            bounds.clear();
            Bitset uncoloured = p;
            std::size_t k = 0;
            while (uncoloured.any()) {
                ++k;
                Bitset q = uncoloured;
                for (std::size_t v = q.find_first(); v < q.size(); v = q.find_next(v + 1)) {
                    q.subtract(adj_[v]);
                    uncoloured.reset(v);
                    verts.push_back(v);
                    bounds.push_back(k);
                }
            }
        }

        void expand(Bitset p)
        {
            if (++nodes_ > budget_) {
                aborted_ = true;
                return;
            }
            std::vector<std::size_t> verts, bounds;
            colour(p, verts, bounds);
            for (std::size_t i = verts.size(); i-- > 0;) {
                if (current_.size() + bounds[i] <= best_.size())
                    return;
                std::size_t v = verts[i];
                current_.push_back(v);
                Bitset next = p & adj_[v];
                if (next.none()) {
                    if (current_.size() > best_.size())
                        best_ = current_;
                }
                else
                    expand(std::move(next));
                current_.pop_back();
                p.reset(v);
                if (aborted_)
                    return;
            }
        }

        std::vector<Vertex> order_;
        std::vector<Bitset> adj_;
        std::vector<std::size_t> current_, best_;
        std::uint64_t nodes_ = 0;
        std::uint64_t budget_;
        std::size_t root_bound_ = 0;
        bool aborted_ = false;
    };

} // namespace

SetSearchResult omega_exact(const Graph & g, std::uint64_t budget_nodes) { return CliqueSearch(g, budget_nodes).run(); }

SetSearchResult alpha_exact(const Graph & g, std::uint64_t budget_nodes)
{
    return CliqueSearch(complement(g), budget_nodes).run();
}

bool is_proper_colouring(const Graph & g, const std::vector<std::uint32_t> & colour_of)
{
    if (colour_of.size() != g.order())
        return false;
    for (auto [u, v] : g.edges())
        if (colour_of[u] == colour_of[v])
            return false;
    return true;
}

Colouring dsatur_upper(const Graph & g)
{
    std::size_t n = g.order();
    Colouring out;
    constexpr auto none = std::uint32_t(-1);
    out.colour_of.assign(n, none);
    std::vector<std::vector<std::uint32_t>> seen(n); // neighbour colour multiplicities, grown on demand
    std::vector<std::size_t> saturation(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (out.colour_of[v] != none)
                continue;
            if (pick == n || saturation[v] > saturation[pick] ||
                (saturation[v] == saturation[pick] &&
                 g.degree(static_cast<Vertex>(v)) > g.degree(static_cast<Vertex>(pick))))
                pick = v;
        }
        std::uint32_t c = 0;
        while (c < seen[pick].size() && seen[pick][c] > 0)
            ++c;
        out.colour_of[pick] = c;
        out.colours = std::max<std::size_t>(out.colours, c + 1);
        g.neighbours(static_cast<Vertex>(pick)).for_each([&](std::size_t w) {
            if (seen[w].size() <= c)
                seen[w].resize(c + 1, 0);
            if (seen[w][c]++ == 0)
                ++saturation[w];
        });
    }
    return out;
}

namespace {

    class ColouringSearch {
      public:
        ColouringSearch(const Graph & g, std::size_t lower, Colouring initial, std::uint64_t budget)
            : g_(g), n_(g.order()), lower_(lower), best_(std::move(initial)), budget_(budget),
              colour_(n_, none), counts_(n_, std::vector<std::uint32_t>(best_.colours + 1, 0)), saturation_(n_, 0)
        {
        }

        void run() { recurse(0, 0); }
        bool aborted() const { return aborted_; }
        std::uint64_t nodes() const { return nodes_; }
        const Colouring & best() const { return best_; }

      private:
        static constexpr auto none = std::uint32_t(-1);

        void recurse(std::size_t coloured, std::size_t used)
        {
            if (++nodes_ > budget_) {
                aborted_ = true;
                return;
            }
            if (used >= best_.colours)
                return;
            if (coloured == n_) {
                best_.colours = used;
                best_.colour_of = colour_;
                return;
            }
            std::size_t pick = n_;
            for (std::size_t v = 0; v < n_; ++v) {
                if (colour_[v] != none)
                    continue;
                if (pick == n_ || saturation_[v] > saturation_[pick] ||
                    (saturation_[v] == saturation_[pick] &&
                     g_.degree(static_cast<Vertex>(v)) > g_.degree(static_cast<Vertex>(pick))))
                    pick = v;
            }
            for (std::uint32_t c = 0; c <= used && c < best_.colours; ++c) {
                if (counts_[pick][c])
                    continue;
                std::size_t now_used = std::max<std::size_t>(used, c + 1);
                if (now_used >= best_.colours)
                    break;
                assign(pick, c, +1);
                recurse(coloured + 1, now_used);
                assign(pick, c, -1);
                if (aborted_ || best_.colours <= lower_)
                    return;
            }
        }

        void assign(std::size_t v, std::uint32_t c, int dir)
        {
            colour_[v] = dir > 0 ? c : none;
            g_.neighbours(static_cast<Vertex>(v)).for_each([&](std::size_t w) {
                if (dir > 0) {
                    if (counts_[w][c]++ == 0)
                        ++saturation_[w];
                }
                else if (--counts_[w][c] == 0)
                    --saturation_[w];
            });
        }

        const Graph & g_;
        std::size_t n_;
        std::size_t lower_;
        Colouring best_;
        std::uint64_t budget_;
        std::uint64_t nodes_ = 0;
        bool aborted_ = false;
        std::vector<std::uint32_t> colour_;
        std::vector<std::vector<std::uint32_t>> counts_;
        std::vector<std::size_t> saturation_;
    };

} // namespace

ChromaticResult chi_exact(const Graph & g, std::uint64_t budget_nodes, const ChromaticOptions & options)
{
    ChromaticResult out;
    std::size_t n = g.order();
    auto clique = omega_exact(g, budget_nodes);
    out.nodes = clique.nodes;
    std::size_t lower = clique.value;
    if (options.use_independence_bound && n > 0) {
        auto indep = alpha_exact(g, budget_nodes);
        out.nodes += indep.nodes;
        std::size_t alpha_upper = indep.upper_bound;
        lower = std::max(lower, (n + alpha_upper - 1) / alpha_upper);
    }
    auto initial = dsatur_upper(g);
    ColouringSearch search(g, lower, initial, budget_nodes);
    if (initial.colours > lower)
        search.run();
    out.colouring = search.best();
    out.upper = out.colouring.colours;
    out.nodes += search.nodes();
    out.lower = search.aborted() ? lower : out.upper;
    out.tag = out.lower == out.upper ? Certainty::exact : Certainty::exceeded;
    return out;
}

namespace {

    class SubdivisionSearcher {
      public:
        SubdivisionSearcher(const Graph & g, std::size_t t, std::uint64_t budget) : g_(g), t_(t), budget_(budget)
        {
            std::size_t need = t ? t - 1 : 0;
            for (Vertex v = 0; v < g.order(); ++v)
                if (g.degree(v) >= need)
                    candidates_.push_back(v);
            std::stable_sort(candidates_.begin(), candidates_.end(),
                             [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        }

        SubdivisionSearch run()
        {
            SubdivisionSearch out;
            if (t_ > g_.order())
                out.status = Containment::absent;
            else if (choose(0))
                out.status = Containment::present;
            else
                out.status = aborted_ ? Containment::exceeded : Containment::absent;
            if (out.status == Containment::present)
                out.certificate = SubdivisionCertificate{VertexSet(chosen_), found_};
            out.nodes = nodes_;
            return out;
        }

      private:
        struct Pair {
            Vertex u, v;
        };

        bool tick()
        {
            if (++nodes_ > budget_)
                aborted_ = true;
            return ! aborted_;
        }

        bool choose(std::size_t from)
        {
            if (chosen_.size() == t_)
                return try_branch();
            for (std::size_t i = from; i < candidates_.size(); ++i) {
                if (candidates_.size() - i < t_ - chosen_.size())
                    break;
                chosen_.push_back(candidates_[i]);
                bool ok = choose(i + 1);
                if (ok)
                    return true;
                chosen_.pop_back();
                if (aborted_)
                    return false;
            }
            return false;
        }

        bool try_branch()
        {
            if (! tick())
                return false;
            std::size_t n = g_.order();
            pairs_.clear();
            auto sorted = chosen_;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t i = 0; i < sorted.size(); ++i)
                for (std::size_t j = i + 1; j < sorted.size(); ++j)
                    if (! g_.adjacent(sorted[i], sorted[j]))
                        pairs_.push_back({sorted[i], sorted[j]});
            free_ = Bitset(n);
            free_.set_all();
            for (auto s : chosen_)
                free_.reset(s);
            if (pairs_.size() > free_.count())
                return false;
            done_.assign(pairs_.size(), false);
            found_.clear();
            return feasible() && pack(pairs_.size());
        }

        // Each branch vertex leaves through a distinct free neighbour for every path it ends.
        bool feasible() const
        {
            std::size_t remaining = 0;
            for (std::size_t i = 0; i < pairs_.size(); ++i)
                remaining += done_[i] ? 0 : 1;
            if (remaining > free_.count())
                return false;
            for (auto s : chosen_) {
                std::size_t need = 0;
                for (std::size_t i = 0; i < pairs_.size(); ++i)
                    if (! done_[i] && (pairs_[i].u == s || pairs_[i].v == s))
                        ++need;
                if (intersection_count(g_.neighbours(s), free_) < need)
                    return false;
            }
            return true;
        }

        // Distance from u to v through free interior vertices, or 0 if unreachable.
        std::size_t distance(Vertex u, Vertex v) const
        {
            std::size_t n = g_.order();
            Bitset frontier(n), seen(n);
            frontier.set(u);
            seen.set(u);
            for (std::size_t d = 1; frontier.any(); ++d) {
                Bitset next(n);
                frontier.for_each([&](std::size_t x) { next |= g_.neighbours(static_cast<Vertex>(x)); });
                if (next.test(v))
                    return d;
                next &= free_;
                next.subtract(seen);
                seen |= next;
                frontier = std::move(next);
            }
            return 0;
        }

        void induced_paths(Vertex u, Vertex v, std::vector<std::vector<Vertex>> & out)
        {
            std::vector<Vertex> path{u};
            Bitset on_path(g_.order());
            on_path.set(u);
            extend(path, on_path, v, out);
            std::stable_sort(out.begin(), out.end(),
                             [](const auto & a, const auto & b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });
        }

        void extend(std::vector<Vertex> & path, Bitset & on_path, Vertex target, std::vector<std::vector<Vertex>> & out)
        {
            if (! tick())
                return;
            Vertex last = path.back();
            // Stepping anywhere but the target would leave a chord from `last` to it.
            if (path.size() > 1 && g_.adjacent(last, target)) {
                Bitset others = on_path;
                others.reset(last);
                if (! intersects(g_.neighbours(target), others))
                    out.emplace_back(path.begin() + 1, path.end());
                return;
            }
            Bitset next = g_.neighbours(last) & free_;
            next.subtract(on_path);
            for (std::size_t w = next.find_first(); w < next.size(); w = next.find_next(w + 1)) {
                Bitset others = on_path;
                others.reset(last);
                if (intersects(g_.neighbours(static_cast<Vertex>(w)), others))
                    continue;
                path.push_back(static_cast<Vertex>(w));
                on_path.set(w);
                extend(path, on_path, target, out);
                on_path.reset(w);
                path.pop_back();
                if (aborted_)
                    return;
            }
        }

        bool pack(std::size_t remaining)
        {
            if (remaining == 0)
                return true;
            if (! tick() || ! feasible())
                return false;
            std::size_t pick = pairs_.size(), best_distance = 0;
            for (std::size_t i = 0; i < pairs_.size(); ++i) {
                if (done_[i])
                    continue;
                std::size_t d = distance(pairs_[i].u, pairs_[i].v);
                if (d == 0)
                    return false;
                if (pick == pairs_.size() || d < best_distance) {
                    pick = i;
                    best_distance = d;
                }
            }
            std::vector<std::vector<Vertex>> options;
            induced_paths(pairs_[pick].u, pairs_[pick].v, options);
            done_[pick] = true;
            for (const auto & via : options) {
                if (aborted_)
                    break;
                for (auto x : via)
                    free_.reset(x);
                found_.push_back({pairs_[pick].u, pairs_[pick].v, via});
                if (pack(remaining - 1))
                    return true;
                found_.pop_back();
                for (auto x : via)
                    free_.set(x);
            }
            done_[pick] = false;
            return false;
        }

        const Graph & g_;
        std::size_t t_;
        std::uint64_t budget_;
        std::uint64_t nodes_ = 0;
        bool aborted_ = false;
        std::vector<Vertex> candidates_;
        std::vector<Vertex> chosen_;
        std::vector<Pair> pairs_;
        std::vector<bool> done_;
        Bitset free_;
        std::vector<RoutedPath> found_;
    };

} // namespace

SubdivisionSearch sigma_exact_tiny(const Graph & g, std::size_t t, std::uint64_t budget_nodes)
{
    auto out = SubdivisionSearcher(g, t, budget_nodes).run();
    if (out.certificate)
        std::sort(out.certificate->paths.begin(), out.certificate->paths.end(),
                  [](const RoutedPath & a, const RoutedPath & b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    return out;
}

SigmaValue sigma_exact_value(const Graph & g, std::uint64_t budget_nodes)
{
    SigmaValue out;
    for (std::size_t t = 1;; ++t) {
        std::uint64_t left = budget_nodes > out.nodes ? budget_nodes - out.nodes : 0;
        auto r = sigma_exact_tiny(g, t, left);
        out.nodes += r.nodes;
        if (r.status == Containment::present) {
            out.sigma = t;
            out.certificate = std::move(r.certificate);
            continue;
        }
        out.tag = r.status == Containment::absent ? Certainty::exact : Certainty::exceeded;
        return out;
    }
}

std::optional<SigmaUpperCert> sigma_upper_cert(const Graph & g, std::size_t omega, Certainty omega_tag)
{
    if (omega_tag != Certainty::exact)
        throw ContractError("sigma_upper_cert needs an exact clique number, got a " + std::string(to_string(omega_tag)) +
                            " value");
    std::size_t n = g.order();
    if (omega == 0)
        return n == 0 ? std::optional<SigmaUpperCert>(SigmaUpperCert{1, 0, 0, 0}) : std::nullopt;
    for (std::size_t t = 1; t <= n; ++t) {
        std::uint64_t forced = 0;
        if (t > omega) {
            std::uint64_t num = static_cast<std::uint64_t>(t) * (t - omega);
            std::uint64_t den = 2 * static_cast<std::uint64_t>(omega);
            forced = (num + den - 1) / den;
        }
        if (t + forced > n)
            return SigmaUpperCert{t, omega, forced, n};
    }
    return std::nullopt;
}

TuranBound turan_density_bound(std::size_t n, std::size_t alpha)
{
    if (alpha < 1 || 2 * alpha > n)
        throw DomainError("Turán density bound needs 1 <= alpha <= n/2 (n=" + std::to_string(n) +
                          ", alpha=" + std::to_string(alpha) + ")");
    Rational exact = (Rational(BigInt(n), BigInt(alpha)) - 1) / Rational(BigInt(n - 1));
    Rational simplified(BigInt(1), BigInt(2 * alpha));
    return {exact, simplified};
}

GraphStats compute_stats(const Graph & g, std::uint64_t budget_nodes, std::size_t exact_chi_limit)
{
    GraphStats s;
    s.n = g.order();
    s.m = g.edge_count();
    s.density = g.density().value();
    s.alpha = alpha_exact(g, budget_nodes);
    s.omega = omega_exact(g, budget_nodes);
    auto upper = dsatur_upper(g);
    s.chi_upper = upper.colours;
    s.chi_upper_tag = Certainty::heuristic;
    std::size_t lower = s.omega->value;
    if (s.n > 0)
        lower = std::max(lower, (s.n + s.alpha->upper_bound - 1) / s.alpha->upper_bound);
    s.chi_lower = lower;
    s.chi_lower_tag = (s.alpha->tag == Certainty::exact) ? Certainty::exact : Certainty::heuristic;
    if (s.n <= exact_chi_limit) {
        auto chi = chi_exact(g, budget_nodes);
        s.chi_lower = std::max(s.chi_lower, chi.lower);
        s.chi_upper = std::min(s.chi_upper, chi.upper);
        if (chi.tag == Certainty::exact) {
            s.chi_lower_tag = Certainty::exact;
            s.chi_upper_tag = Certainty::exact;
        }
    }
    return s;
}

} // namespace cliquesub
