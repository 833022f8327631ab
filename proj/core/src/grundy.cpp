#include "glab/grundy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace glab {

namespace {

int ctz(VertexSet s) { return std::countr_zero(s); }

}  // namespace

int Coloring::class_of(int v) const {
    for (size_t i = 0; i < classes.size(); ++i)
        if (classes[i] & vbit(v)) return static_cast<int>(i);
    return -1;
}

bool Coloring::is_partition_of(const Graph& g) const {
    VertexSet seen = 0;
    for (const VertexSet cls : classes) {
        if (!cls) return false;
        if (cls & seen) return false;
        seen |= cls;
    }
    return seen == g.vertex_set();
}

bool Coloring::is_proper(const Graph& g) const {
    if (!is_partition_of(g)) return false;
    for (const VertexSet cls : classes)
        for (VertexSet s = cls; s; s &= s - 1)
            if (g.neighbors(ctz(s)) & cls) return false;
    return true;
}

Coloring greedy_coloring(const Graph& g, const std::vector<int>& order) {
    const int n = g.order();
    VertexSet seen = 0;
    if (static_cast<int>(order.size()) != n) throw std::invalid_argument("order is not a permutation");
    for (const int v : order) {
        if (v < 0 || v >= n || (seen & vbit(v)))
            throw std::invalid_argument("order is not a permutation");
        seen |= vbit(v);
    }
    std::vector<int> color(static_cast<size_t>(n), -1);
    std::uint64_t any = 0;  // colors in use, to size the result
    for (const int v : order) {
        std::uint64_t used = 0;
        for (VertexSet s = g.neighbors(v); s; s &= s - 1) {
            const int u = ctz(s);
            if (color[static_cast<size_t>(u)] >= 0) used |= std::uint64_t{1} << color[static_cast<size_t>(u)];
        }
        const int c = std::countr_one(used);
        color[static_cast<size_t>(v)] = c;
        any |= std::uint64_t{1} << c;
    }
    Coloring result;
    result.classes.assign(static_cast<size_t>(std::popcount(any)), 0);
    for (int v = 0; v < n; ++v)
        result.classes[static_cast<size_t>(color[static_cast<size_t>(v)])] |= vbit(v);
    return result;
}

GrundyVerdict is_grundy_coloring(const Graph& g, const Coloring& c) {
    if (!c.is_partition_of(g))
        throw std::invalid_argument("coloring is not a partition of the vertex set");
    for (size_t i = 0; i < c.classes.size(); ++i) {
        for (VertexSet s = c.classes[i]; s; s &= s - 1) {
            const int v = ctz(s);
            if (g.neighbors(v) & c.classes[i])
                return {false, {GrundyViolationKind::ClassNotIndependent, v, static_cast<int>(i)}};
            for (size_t j = 0; j < i; ++j)
                if (!(g.neighbors(v) & c.classes[j]))
                    return {false,
                            {GrundyViolationKind::MissingLowerNeighbor, v, static_cast<int>(j)}};
        }
    }
    return {true, {}};
}

namespace {

struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

// Upper bounds on the Grundy number of the subgraph induced on `mask`,
// evaluated only when that subgraph has at least one edge.
struct ExactGrundy {
    const Graph& g;
    std::unordered_map<VertexSet, std::pair<int, VertexSet>> memo;  // gamma, first class

    bool edgeless(VertexSet mask) const {
        for (VertexSet s = mask; s; s &= s - 1)
            if (g.neighbors(ctz(s)) & mask) return false;
        return true;
    }

    int clique_bound(VertexSet mask) const {
        int best = 0;
        clique_rec(0, mask, best);
        return best;
    }

    void clique_rec(int rsize, VertexSet p, int& best) const {
        if (rsize > best) best = rsize;
        while (p) {
            if (rsize + std::popcount(p) <= best) return;
            const int v = ctz(p);
            clique_rec(rsize + 1, p & g.neighbors(v), best);
            p &= ~vbit(v);
        }
    }

    int upper_bound(VertexSet mask) const {
        const int nh = std::popcount(mask);
        int d2 = 0;
        double randic = 0.0;
        for (VertexSet s = mask; s; s &= s - 1) {
            const int u = ctz(s);
            const int du = std::popcount(g.neighbors(u) & mask);
            for (VertexSet t = g.neighbors(u) & mask; t; t &= t - 1) {
                const int v = ctz(t);
                const int dv = std::popcount(g.neighbors(v) & mask);
                if (dv <= du) d2 = std::max(d2, dv);
                if (u < v) randic += 1.0 / std::sqrt(static_cast<double>(du) * dv);
            }
        }
        const int omega = clique_bound(mask);
        int ub = d2 + 1;
        ub = std::min(ub, (nh + omega) / 2);
        ub = std::min(ub, static_cast<int>(std::floor(2.0 * randic + 1e-9)));
        return std::max(ub, 1);
    }

    void maximal_independent_sets(VertexSet mask, std::vector<VertexSet>& out) const {
        std::vector<VertexSet> cadj(static_cast<size_t>(g.order()), 0);
        for (VertexSet s = mask; s; s &= s - 1) {
            const int v = ctz(s);
            cadj[static_cast<size_t>(v)] = mask & ~g.neighbors(v) & ~vbit(v);
        }
        mis_rec(0, mask, 0, cadj, out);
    }

    void mis_rec(VertexSet r, VertexSet p, VertexSet x, const std::vector<VertexSet>& cadj,
                 std::vector<VertexSet>& out) const {
        if (!p && !x) {
            out.push_back(r);
            return;
        }
        int pivot = -1, best = -1;
        for (VertexSet s = p | x; s; s &= s - 1) {
            const int u = ctz(s);
            const int cnt = std::popcount(p & cadj[static_cast<size_t>(u)]);
            if (cnt > best) {
                best = cnt;
                pivot = u;
            }
        }
        for (VertexSet cand = p & ~cadj[static_cast<size_t>(pivot)]; cand; cand &= cand - 1) {
            const int v = ctz(cand);
            mis_rec(r | vbit(v), p & cadj[static_cast<size_t>(v)], x & cadj[static_cast<size_t>(v)],
                    cadj, out);
            p &= ~vbit(v);
            x |= vbit(v);
        }
    }

    int solve(VertexSet mask) {
        if (!mask) return 0;
        if (const auto it = memo.find(mask); it != memo.end()) return it->second.first;
        if (edgeless(mask)) {
            memo.emplace(mask, std::pair{1, mask});
            return 1;
        }
        const int ub = upper_bound(mask);
        std::vector<VertexSet> sets;
        maximal_independent_sets(mask, sets);
        std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
            const int pa = std::popcount(a), pb = std::popcount(b);
            return pa != pb ? pa < pb : a < b;
        });
        int best = 0;
        VertexSet best_class = 0;
        for (const VertexSet cls : sets) {
            const int value = 1 + solve(mask & ~cls);
            if (value > best) {
                best = value;
                best_class = cls;
                if (best >= ub) break;  // proven optimum for this subproblem
            }
        }
        memo.emplace(mask, std::pair{best, best_class});
        return best;
    }
};

GrundyCertificate certify(const Graph& g, const Coloring& c) {
    GrundyCertificate cert;
    cert.coloring = c;
    cert.witnesses.assign(static_cast<size_t>(g.order()), {});
    for (size_t i = 0; i < c.classes.size(); ++i) {
        for (VertexSet s = c.classes[i]; s; s &= s - 1) {
            const int v = ctz(s);
            auto& w = cert.witnesses[static_cast<size_t>(v)];
            for (size_t j = 0; j < i; ++j) {
                const VertexSet in_class = g.neighbors(v) & c.classes[j];
                if (!in_class) throw std::logic_error("grundy certificate witness missing");
                w.push_back(ctz(in_class));
            }
        }
    }
    return cert;
}

}  // namespace

GrundyResult grundy_number(const Graph& g, int limit) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("Grundy number undefined for the empty graph");
    if (n > limit) throw std::invalid_argument("grundy solver refused above vertex limit");
    if (g.is_edgeless()) {
        Coloring c{{g.vertex_set()}};
        return {1, certify(g, c)};
    }

    // Incumbent lower bound: one degeneracy-order greedy run plus 32 shuffles.
    std::vector<int> order(static_cast<size_t>(n));
    VertexSet remaining = g.vertex_set();
    for (int i = n - 1; i >= 0; --i) {
        int pick = -1, deg = kMaxVertices + 1;
        for (VertexSet s = remaining; s; s &= s - 1) {
            const int v = ctz(s);
            const int d = std::popcount(g.neighbors(v) & remaining);
            if (d < deg) {
                deg = d;
                pick = v;
            }
        }
        order[static_cast<size_t>(i)] = pick;
        remaining &= ~vbit(pick);
    }
    Coloring incumbent = greedy_coloring(g, order);
    SplitMix64 rng{0x5EEDull};
    std::iota(order.begin(), order.end(), 0);
    for (int trial = 0; trial < 32; ++trial) {
        for (int i = n - 1; i > 0; --i)
            std::swap(order[static_cast<size_t>(i)],
                      order[static_cast<size_t>(rng.next() % static_cast<std::uint64_t>(i + 1))]);
        Coloring c = greedy_coloring(g, order);
        if (c.k() > incumbent.k()) incumbent = std::move(c);
    }

    ExactGrundy solver{g, {}};
    GrundyResult result;
    if (incumbent.k() == solver.upper_bound(g.vertex_set())) {
        result = {incumbent.k(), certify(g, incumbent)};
    } else {
        const int gamma = solver.solve(g.vertex_set());
        Coloring c;
        VertexSet mask = g.vertex_set();
        while (mask) {
            const auto& entry = solver.memo.at(mask);
            c.classes.push_back(entry.second);
            mask &= ~entry.second;
        }
        if (static_cast<int>(c.classes.size()) != gamma)
            throw std::logic_error("grundy reconstruction mismatch");
        result = {gamma, certify(g, c)};
    }
    const GrundyVerdict verdict = is_grundy_coloring(g, result.certificate.coloring);
    if (!verdict.valid) throw std::logic_error("grundy certificate failed validation");
    if (result.gamma < incumbent.k()) throw std::logic_error("grundy below greedy incumbent");
    return result;
}

namespace {

struct AchromaticSearch {
    const Graph& g;
    int n, k, m;
    std::vector<int> order;
    std::vector<VertexSet> classes;
    std::vector<int> color;
    std::vector<std::vector<int>> paircount;
    int missing;        // color pairs not yet realized on an edge
    int open_edges;     // edges with at least one uncolored endpoint
    int used_colors;
    int max_used;

    bool dfs(int pos) {
        if (missing > open_edges) return false;
        if (k - used_colors > n - pos) return false;
        if (pos == n) return missing == 0;
        const int v = order[static_cast<size_t>(pos)];
        const int top = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= top; ++c) {
            if (classes[static_cast<size_t>(c)] & g.neighbors(v)) continue;
            // place v in class c
            const int prev_max = max_used;
            classes[static_cast<size_t>(c)] |= vbit(v);
            color[static_cast<size_t>(v)] = c;
            if (c > max_used) {
                max_used = c;
                ++used_colors;
            }
            int newly = 0, closed = 0;
            for (VertexSet s = g.neighbors(v); s; s &= s - 1) {
                const int u = ctz(s);
                const int cu = color[static_cast<size_t>(u)];
                if (cu < 0) continue;
                ++closed;
                const int a = std::min(c, cu), b = std::max(c, cu);
                if (paircount[static_cast<size_t>(a)][static_cast<size_t>(b)]++ == 0) ++newly;
            }
            missing -= newly;
            open_edges -= closed;
            if (dfs(pos + 1)) return true;
            open_edges += closed;
            missing += newly;
            for (VertexSet s = g.neighbors(v); s; s &= s - 1) {
                const int u = ctz(s);
                const int cu = color[static_cast<size_t>(u)];
                if (cu < 0) continue;
                const int a = std::min(c, cu), b = std::max(c, cu);
                --paircount[static_cast<size_t>(a)][static_cast<size_t>(b)];
            }
            if (c > prev_max) --used_colors;
            max_used = prev_max;
            color[static_cast<size_t>(v)] = -1;
            classes[static_cast<size_t>(c)] &= ~vbit(v);
        }
        return false;
    }
};

}  // namespace

int achromatic_number(const Graph& g, int limit) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("achromatic number undefined for the empty graph");
    if (n > limit) throw std::invalid_argument("achromatic solver refused above vertex limit");
    const int m = g.size();
    int ub = 1;
    while (ub < n && (ub + 1) * ub / 2 <= m) ++ub;  // complete k-coloring needs k(k-1)/2 edges
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    for (int k = ub; k >= 2; --k) {
        AchromaticSearch s{g,
                           n,
                           k,
                           m,
                           order,
                           std::vector<VertexSet>(static_cast<size_t>(k), 0),
                           std::vector<int>(static_cast<size_t>(n), -1),
                           std::vector<std::vector<int>>(static_cast<size_t>(k),
                                                          std::vector<int>(static_cast<size_t>(k), 0)),
                           k * (k - 1) / 2,
                           m,
                           0,
                           -1};
        if (s.dfs(0)) return k;
    }
    return 1;  // reached only for edgeless graphs: any chi-coloring is complete,
               // so the loop succeeds at some k >= chi >= 2 whenever an edge exists
}

int grundy_brute_force(const Graph& g, int limit) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("Grundy number undefined for the empty graph");
    if (n > limit) throw std::invalid_argument("brute-force grundy refused above vertex limit");
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    int best = 1;
    do {
        best = std::max(best, greedy_coloring(g, order).k());
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

std::string to_json(const GrundyCertificate& cert) {
    nlohmann::json j;
    j["classes"] = nlohmann::json::array();
    for (const VertexSet cls : cert.coloring.classes) j["classes"].push_back(vertices_of(cls));
    nlohmann::json w = nlohmann::json::object();
    for (size_t v = 0; v < cert.witnesses.size(); ++v) {
        if (cert.witnesses[v].empty()) continue;
        nlohmann::json per = nlohmann::json::object();
        for (size_t cj = 0; cj < cert.witnesses[v].size(); ++cj)
            per[std::to_string(cj)] = cert.witnesses[v][cj];
        w[std::to_string(v)] = std::move(per);
    }
    j["witnesses"] = std::move(w);
    return j.dump();
}

}  // namespace glab
