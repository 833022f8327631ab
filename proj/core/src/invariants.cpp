#include "glab/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "glab/grundy.hpp"

namespace glab {

namespace {

int ctz(VertexSet s) { return std::countr_zero(s); }

}  // namespace

DegeneracyResult degeneracy(const Graph& g) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("degeneracy undefined for the empty graph");
    DegeneracyResult r;
    VertexSet remaining = g.vertex_set();
    std::vector<int> removal;
    removal.reserve(static_cast<size_t>(n));
    while (remaining) {
        int best = -1, bestdeg = kMaxVertices + 1;
        for (VertexSet s = remaining; s; s &= s - 1) {
            const int v = ctz(s);
            const int d = std::popcount(g.neighbors(v) & remaining);
            if (d < bestdeg) {
                bestdeg = d;
                best = v;
            }
        }
        r.degeneracy = std::max(r.degeneracy, bestdeg);
        removal.push_back(best);
        remaining &= ~vbit(best);
    }
    r.ordering.assign(removal.rbegin(), removal.rend());
    r.coloring_number = r.degeneracy + 1;
    // each vertex must have fewer than col earlier neighbors
    VertexSet placed = 0;
    for (const int v : r.ordering) {
        if (std::popcount(g.neighbors(v) & placed) >= r.coloring_number)
            throw std::logic_error("degeneracy ordering violates coloring number");
        placed |= vbit(v);
    }
    return r;
}

namespace {

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
    if (!p && !x) {
        out.push_back(r);
        return;
    }
    int pivot = -1, best = -1;
    for (VertexSet s = p | x; s; s &= s - 1) {
        const int u = ctz(s);
        const int cnt = std::popcount(p & g.neighbors(u));
        if (cnt > best) {
            best = cnt;
            pivot = u;
        }
    }
    for (VertexSet cand = p & ~g.neighbors(pivot); cand; cand &= cand - 1) {
        const int v = ctz(cand);
        bron_kerbosch(g, r | vbit(v), p & g.neighbors(v), x & g.neighbors(v), out);
        p &= ~vbit(v);
        x |= vbit(v);
    }
}

void max_clique_rec(const Graph& g, VertexSet r, int rsize, VertexSet p, VertexSet& best,
                    int& bestsize) {
    if (rsize > bestsize) {
        bestsize = rsize;
        best = r;
    }
    while (p) {
        if (rsize + std::popcount(p) <= bestsize) return;
        const int v = ctz(p);
        max_clique_rec(g, r | vbit(v), rsize + 1, p & g.neighbors(v), best, bestsize);
        p &= ~vbit(v);
    }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    if (g.order() == 0) return out;
    bron_kerbosch(g, 0, g.vertex_set(), 0, out);
    return out;
}

VertexSet max_clique(const Graph& g) {
    if (g.order() == 0) return 0;
    VertexSet best = vbit(0);
    int bestsize = 1;
    max_clique_rec(g, 0, 0, g.vertex_set(), best, bestsize);
    return best;
}

int clique_number(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("clique number undefined for the empty graph");
    return std::popcount(max_clique(g));
}

int independence_number(const Graph& g) { return clique_number(g.complement()); }

namespace {

struct ChromaticSearch {
    const Graph& g;
    int k = 0;
    std::vector<int> order;       // vertices still to color, after the clique
    std::vector<VertexSet> used;  // used[c] = vertices with color c
    std::vector<int> color;
    int max_used = -1;

    bool dfs(size_t pos) {
        if (pos == order.size()) return true;
        const int v = order[pos];
        const int top = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= top; ++c) {
            if (used[static_cast<size_t>(c)] & g.neighbors(v)) continue;
            used[static_cast<size_t>(c)] |= vbit(v);
            color[static_cast<size_t>(v)] = c;
            const int prev = max_used;
            max_used = std::max(max_used, c);
            if (dfs(pos + 1)) return true;
            max_used = prev;
            used[static_cast<size_t>(c)] &= ~vbit(v);
        }
        return false;
    }
};

Coloring coloring_from_colors(const std::vector<int>& color, int k) {
    Coloring c;
    c.classes.assign(static_cast<size_t>(k), 0);
    for (size_t v = 0; v < color.size(); ++v)
        c.classes[static_cast<size_t>(color[v])] |= vbit(static_cast<int>(v));
    return c;
}

}  // namespace

ChromaticResult chromatic_number(const Graph& g, int limit) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("chromatic number undefined for the empty graph");
    if (n > limit) throw std::invalid_argument("chromatic solver refused above vertex limit");
    const DegeneracyResult dr = degeneracy(g);
    const Coloring greedy = greedy_coloring(g, dr.ordering);
    const int ub = greedy.k();
    const VertexSet clique = max_clique(g);
    const int lb = std::popcount(clique);
    if (lb == ub) return {ub, greedy};
    for (int k = lb; k < ub; ++k) {
        ChromaticSearch s{g, k, {}, {}, {}, -1};
        s.used.assign(static_cast<size_t>(k), 0);
        s.color.assign(static_cast<size_t>(n), -1);
        int c = 0;
        for (VertexSet q = clique; q; q &= q - 1, ++c) {
            const int v = ctz(q);
            s.used[static_cast<size_t>(c)] |= vbit(v);
            s.color[static_cast<size_t>(v)] = c;
        }
        s.max_used = lb - 1;
        for (int v = 0; v < n; ++v)
            if (!(clique & vbit(v))) s.order.push_back(v);
        std::sort(s.order.begin(), s.order.end(), [&](int a, int b) {
            return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
        });
        if (s.dfs(0)) return {k, coloring_from_colors(s.color, k)};
    }
    return {ub, greedy};
}

double randic_index(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("Randic index undefined for the empty graph");
    double sum = 0.0;
    for (int u = 0; u < g.order(); ++u)
        for (VertexSet s = g.neighbors(u); s; s &= s - 1) {
            const int v = ctz(s);
            if (u < v) sum += 1.0 / std::sqrt(static_cast<double>(g.degree(u)) * g.degree(v));
        }
    return sum;
}

int delta2(const Graph& g) {
    int best = 0;
    for (int u = 0; u < g.order(); ++u) {
        const int du = g.degree(u);
        for (VertexSet s = g.neighbors(u); s; s &= s - 1) {
            const int dv = g.degree(ctz(s));
            if (dv <= du) best = std::max(best, dv);
        }
    }
    return best;
}

double chang_hsu_bound(const Graph& g) {
    if (g.order() == 0 || g.is_edgeless())
        throw std::invalid_argument("bound undefined: requires nonempty graph");
    const double col = degeneracy(g).coloring_number;
    return std::log(static_cast<double>(g.order())) / std::log(col / (col - 1.0)) + 2.0;
}

InvariantReport compute_report(const Graph& g, const SolverLimits& limits) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("invariant report undefined for the empty graph");
    InvariantReport r;
    r.n = n;
    r.m = g.size();
    r.min_degree = g.min_degree();
    r.max_degree = g.max_degree();
    r.delta2 = delta2(g);
    const DegeneracyResult dr = degeneracy(g);
    r.degeneracy = dr.degeneracy;
    r.col = dr.coloring_number;
    r.omega = clique_number(g);
    r.alpha = independence_number(g);
    r.randic = randic_index(g);
    r.maximal_clique_count = static_cast<long long>(maximal_cliques(g).size());
    if (n <= limits.chromatic) r.chi = chromatic_number(g, limits.chromatic).chi;
    else throw std::invalid_argument("invariant report requires n within the chromatic cap");
    if (n <= limits.grundy) r.gamma = grundy_number(g, limits.grundy).gamma;
    if (n <= limits.achromatic) r.psi = achromatic_number(g, limits.achromatic);
    // bound cross-checks (all proved): omega <= chi <= col <= Delta+1,
    // chi <= Gamma <= Delta2+1 <= Delta+1, Gamma <= psi
    if (!(r.omega <= r.chi && r.chi <= r.col && r.col <= r.max_degree + 1))
        throw std::logic_error("invariant chain omega<=chi<=col<=Delta+1 violated");
    if (r.gamma) {
        if (!(r.chi <= *r.gamma && *r.gamma <= r.delta2 + 1 && r.delta2 <= r.max_degree))
            throw std::logic_error("invariant chain chi<=Gamma<=Delta2+1<=Delta+1 violated");
        if (r.psi && !(*r.gamma <= *r.psi))
            throw std::logic_error("invariant Gamma<=psi violated");
    }
    return r;
}

namespace {

double round_sig12(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

}  // namespace

std::string to_json(const InvariantReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["min_degree"] = r.min_degree;
    j["max_degree"] = r.max_degree;
    j["delta2"] = r.delta2;
    j["omega"] = r.omega;
    j["alpha"] = r.alpha;
    j["chi"] = r.chi;
    j["col"] = r.col;
    j["degeneracy"] = r.degeneracy;
    j["randic"] = round_sig12(r.randic);
    j["maximal_clique_count"] = r.maximal_clique_count;
    if (r.gamma) j["gamma"] = *r.gamma;
    if (r.psi) j["psi"] = *r.psi;
    return j.dump();
}

std::string invariant_csv_header() {
    return "n,m,min_degree,max_degree,delta2,omega,alpha,chi,col,degeneracy,randic,"
           "maximal_clique_count,gamma,psi";
}

std::string to_csv_row(const InvariantReport& r) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", r.randic);
    std::string row;
    row += std::to_string(r.n) + ',' + std::to_string(r.m) + ',';
    row += std::to_string(r.min_degree) + ',' + std::to_string(r.max_degree) + ',';
    row += std::to_string(r.delta2) + ',' + std::to_string(r.omega) + ',';
    row += std::to_string(r.alpha) + ',' + std::to_string(r.chi) + ',';
    row += std::to_string(r.col) + ',' + std::to_string(r.degeneracy) + ',';
    row += std::string(buf) + ',' + std::to_string(r.maximal_clique_count) + ',';
    row += (r.gamma ? std::to_string(*r.gamma) : std::string{}) + ',';
    row += r.psi ? std::to_string(*r.psi) : std::string{};
    return row;
}

}  // namespace glab
