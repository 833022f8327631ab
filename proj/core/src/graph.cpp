#include "glab/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace glab {

namespace {

int ctz(VertexSet s) { return std::countr_zero(s); }

}  // namespace

std::vector<int> vertices_of(VertexSet s) {
    std::vector<int> out;
    while (s) {
        out.push_back(ctz(s));
        s &= s - 1;
    }
    return out;
}

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(std::max(n, 0)), 0) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be between 0 and 64");
}

void Graph::set_edge(int u, int v) {
    adj_[u] |= vbit(v);
    adj_[v] |= vbit(u);
}

void Graph::check_invariants() const {
    const VertexSet all = full_set(n_);
    for (int v = 0; v < n_; ++v) {
        if (adj_[v] & ~all) throw std::logic_error("adjacency bit out of range");
        if (adj_[v] & vbit(v)) throw std::logic_error("loop in simple graph");
        for (VertexSet s = adj_[v]; s; s &= s - 1)
            if (!(adj_[ctz(s)] & vbit(v))) throw std::logic_error("asymmetric adjacency");
    }
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loops are not allowed");
        g.set_edge(u, v);
    }
    g.check_invariants();
    return g;
}

int Graph::size() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

int Graph::min_degree() const {
    if (n_ == 0) throw std::invalid_argument("min_degree of empty graph");
    int d = kMaxVertices;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    if (n_ == 0) throw std::invalid_argument("max_degree of empty graph");
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(static_cast<size_t>(n_));
    for (int v = 0; v < n_; ++v) d[static_cast<size_t>(v)] = degree(v);
    return d;
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    VertexSet seen = vbit(0);
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for (VertexSet s = frontier; s; s &= s - 1) next |= adj_[ctz(s)];
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen == vertex_set();
}

bool Graph::is_edgeless() const {
    for (int v = 0; v < n_; ++v)
        if (adj_[v]) return false;
    return true;
}

bool Graph::is_complete() const {
    const VertexSet all = vertex_set();
    for (int v = 0; v < n_; ++v)
        if (adj_[v] != (all & ~vbit(v))) return false;
    return true;
}

bool Graph::is_regular() const {
    if (n_ == 0) throw std::invalid_argument("is_regular of empty graph");
    const int d = degree(0);
    for (int v = 1; v < n_; ++v)
        if (degree(v) != d) return false;
    return true;
}

bool Graph::is_bipartite() const {
    std::array<int, kMaxVertices> side{};
    side.fill(-1);
    for (int start = 0; start < n_; ++start) {
        if (side[static_cast<size_t>(start)] != -1) continue;
        side[static_cast<size_t>(start)] = 0;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (VertexSet s = adj_[u]; s; s &= s - 1) {
                const int w = ctz(s);
                if (side[static_cast<size_t>(w)] == -1) {
                    side[static_cast<size_t>(w)] = 1 - side[static_cast<size_t>(u)];
                    stack.push_back(w);
                } else if (side[static_cast<size_t>(w)] == side[static_cast<size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Graph Graph::complement() const {
    Graph c(n_);
    const VertexSet all = vertex_set();
    for (int v = 0; v < n_; ++v) c.adj_[v] = all & ~adj_[v] & ~vbit(v);
    c.check_invariants();
    return c;
}

Graph Graph::induced(VertexSet s) const {
    if (s & ~vertex_set()) throw std::invalid_argument("vertex set not within graph");
    const std::vector<int> keep = vertices_of(s);
    Graph h(static_cast<int>(keep.size()));
    std::array<int, kMaxVertices> newid{};
    for (size_t i = 0; i < keep.size(); ++i) newid[static_cast<size_t>(keep[i])] = static_cast<int>(i);
    for (size_t i = 0; i < keep.size(); ++i)
        for (VertexSet t = adj_[keep[i]] & s; t; t &= t - 1)
            h.adj_[i] |= vbit(newid[static_cast<size_t>(ctz(t))]);
    h.check_invariants();
    return h;
}

Graph join(const Graph& g, const Graph& h) {
    const int n = g.order() + h.order();
    if (n > kMaxVertices) throw std::invalid_argument("join exceeds 64 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.order(); ++u)
        for (VertexSet s = g.neighbors(u); s; s &= s - 1) {
            const int v = std::countr_zero(s);
            if (u < v) edges.emplace_back(u, v);
        }
    const int off = g.order();
    for (int u = 0; u < h.order(); ++u)
        for (VertexSet s = h.neighbors(u); s; s &= s - 1) {
            const int v = std::countr_zero(s);
            if (u < v) edges.emplace_back(off + u, off + v);
        }
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) edges.emplace_back(u, off + v);
    return Graph::from_edges(n, edges);
}

// ---------------------------------------------------------------------------
// graph6

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6 short form supports n <= 62");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
        line.remove_suffix(1);
    if (line.empty()) throw std::invalid_argument("graph6: empty line");
    const unsigned char head = static_cast<unsigned char>(line[0]);
    if (head < 63 || head > 126) throw std::invalid_argument("graph6: malformed header byte");
    if (head == 126) throw std::invalid_argument("graph6: extended header forms not supported");
    const int n = head - 63;
    const int nbits = n * (n - 1) / 2;
    const size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
    if (line.size() < 1 + nbytes) throw std::invalid_argument("graph6: truncated bit vector");
    if (line.size() > 1 + nbytes) throw std::invalid_argument("graph6: trailing characters");
    Graph g(n);
    int bitpos = 0;
    for (size_t b = 0; b < nbytes; ++b) {
        const unsigned char c = static_cast<unsigned char>(line[1 + b]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: data byte out of range");
        const int val = c - 63;
        for (int k = 5; k >= 0; --k, ++bitpos) {
            const int bitval = (val >> k) & 1;
            if (bitpos >= nbits) {
                if (bitval) throw std::invalid_argument("graph6: nonzero padding");
                continue;
            }
            if (bitval) {
                // column-major upper triangle: bit t covers pair (i, j)
                int t = bitpos, j = 1;
                while (t >= j) t -= j, ++j;
                g.set_edge(t, j);
            }
        }
    }
    g.check_invariants();
    return g;
}

// ---------------------------------------------------------------------------
// edge-list text format

Graph parse_edge_list(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("edge list: order out of range");
    if (m < 0) throw std::invalid_argument("edge list: negative edge count");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated edge lines");
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (int u = 0; u < g.order(); ++u)
        for (VertexSet s = g.neighbors(u); s; s &= s - 1) {
            const int v = std::countr_zero(s);
            if (u < v) out << u << ' ' << v << '\n';
        }
    return out.str();
}

std::vector<Graph> read_graph_file(std::istream& in) {
    std::string first;
    while (std::getline(in, first)) {
        if (first.find_first_not_of(" \t\r\n") != std::string::npos) break;
        first.clear();
    }
    if (first.empty()) throw std::invalid_argument("corpus: no graphs in input");
    const char c = first[first.find_first_not_of(" \t")];
    if (c >= '0' && c <= '9') {
        // Edge list: re-parse the whole stream including the header line.
        std::ostringstream rest;
        rest << first << '\n' << in.rdbuf();
        std::istringstream whole(rest.str());
        return {parse_edge_list(whole)};
    }
    std::vector<Graph> out;
    out.push_back(parse_graph6(first));
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

// ---------------------------------------------------------------------------
// isomorphism

namespace {

std::vector<std::vector<int>> neighbor_degree_profiles(const Graph& g) {
    std::vector<std::vector<int>> prof(static_cast<size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        for (VertexSet s = g.neighbors(v); s; s &= s - 1)
            prof[static_cast<size_t>(v)].push_back(g.degree(std::countr_zero(s)));
        std::sort(prof[static_cast<size_t>(v)].begin(), prof[static_cast<size_t>(v)].end());
    }
    return prof;
}

bool iso_dfs(const Graph& g, const Graph& h, std::vector<int>& map, VertexSet used, int u) {
    const int n = g.order();
    if (u == n) return true;
    for (int w = 0; w < n; ++w) {
        if (used & vbit(w)) continue;
        if (g.degree(u) != h.degree(w)) continue;
        bool ok = true;
        for (int p = 0; p < u && ok; ++p)
            if (g.has_edge(p, u) != h.has_edge(map[static_cast<size_t>(p)], w)) ok = false;
        if (!ok) continue;
        map[static_cast<size_t>(u)] = w;
        if (iso_dfs(g, h, map, used | vbit(w), u + 1)) return true;
    }
    return false;
}

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h, int limit) {
    if (g.order() != h.order()) return false;
    const int n = g.order();
    if (n > limit) throw std::invalid_argument("isomorphism search refused above vertex limit");
    if (n == 0) return true;
    if (g.size() != h.size()) return false;
    std::vector<int> dg = g.degrees(), dh = h.degrees();
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    auto pg = neighbor_degree_profiles(g), ph = neighbor_degree_profiles(h);
    std::sort(pg.begin(), pg.end());
    std::sort(ph.begin(), ph.end());
    if (pg != ph) return false;
    std::vector<int> map(static_cast<size_t>(n), -1);
    return iso_dfs(g, h, map, 0, 0);
}

// ---------------------------------------------------------------------------
// canonical form and enumeration

namespace {

// Packed upper-triangle bits in graph6 column-major order; the first bit is
// the most significant so integer order equals lexicographic string order.
struct Canonizer {
    int n = 0;
    int total_bits = 0;
    const VertexSet* adj = nullptr;
    std::uint64_t best = ~std::uint64_t{0};
    std::array<int, kCanonicalLimit> perm{};
    std::array<std::array<bool, kCanonicalLimit>, kCanonicalLimit> twin{};

    std::uint64_t run() {
        if (n <= 1) return 0;
        for (int u = 0; u < n; ++u)
            for (int w = 0; w < n; ++w) {
                const VertexSet strip = ~(vbit(u) | vbit(w));
                twin[static_cast<size_t>(u)][static_cast<size_t>(w)] =
                    (adj[u] & strip) == (adj[w] & strip);
            }
        dfs(0, 0, 0);
        return best;
    }

    void dfs(int level, std::uint64_t cur, VertexSet used) {
        if (level == n) {
            if (cur < best) best = cur;
            return;
        }
        const int bits_after = level * (level + 1) / 2;
        struct Cand {
            std::uint64_t col;
            int v;
        };
        std::array<Cand, kCanonicalLimit> cands{};
        int ncand = 0;
        for (int v = 0; v < n; ++v) {
            if (used & vbit(v)) continue;
            bool dup = false;
            for (int c = 0; c < ncand && !dup; ++c)
                if (twin[static_cast<size_t>(cands[static_cast<size_t>(c)].v)][static_cast<size_t>(v)])
                    dup = true;
            if (dup) continue;
            std::uint64_t col = 0;
            for (int i = 0; i < level; ++i)
                col = (col << 1) | ((adj[perm[static_cast<size_t>(i)]] >> v) & 1);
            cands[static_cast<size_t>(ncand++)] = {col, v};
        }
        std::sort(cands.begin(), cands.begin() + ncand,
                  [](const Cand& a, const Cand& b) {
                      return a.col != b.col ? a.col < b.col : a.v < b.v;
                  });
        for (int c = 0; c < ncand; ++c) {
            const std::uint64_t next = (cur << level) | cands[static_cast<size_t>(c)].col;
            if (next > (best >> (total_bits - bits_after))) continue;
            perm[static_cast<size_t>(level)] = cands[static_cast<size_t>(c)].v;
            dfs(level + 1, next, used | vbit(cands[static_cast<size_t>(c)].v));
        }
    }
};

std::uint64_t canonical_key_raw(int n, const VertexSet* adj) {
    Canonizer c;
    c.n = n;
    c.total_bits = n * (n - 1) / 2;
    c.adj = adj;
    return c.run();
}

Graph graph_from_key(int n, std::uint64_t key) {
    const int total = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> edges;
    int t = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++t)
            if ((key >> (total - 1 - t)) & 1) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

}  // namespace

std::uint64_t canonical_key(const Graph& g) {
    if (g.order() > kCanonicalLimit)
        throw std::invalid_argument("canonical form limited to n <= 10");
    std::array<VertexSet, kCanonicalLimit> adj{};
    for (int v = 0; v < g.order(); ++v) adj[static_cast<size_t>(v)] = g.neighbors(v);
    return canonical_key_raw(g.order(), adj.data());
}

Graph canonical_form(const Graph& g) { return graph_from_key(g.order(), canonical_key(g)); }

std::string canonical_graph6(const Graph& g) { return to_graph6(canonical_form(g)); }

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
    if (n < 1 || n > kEnumerationLimit)
        throw std::invalid_argument("enumeration limited to 1 <= n <= 8");
    // Augment each (m-1)-vertex representative by one vertex with every
    // possible neighborhood; canonical keys deduplicate isomorphs.
    std::vector<std::uint64_t> keys{0};  // K1
    for (int m = 2; m <= n; ++m) {
        std::set<std::uint64_t> next;
        std::array<VertexSet, kCanonicalLimit> adj{};
        for (const std::uint64_t key : keys) {
            const int total = (m - 1) * (m - 2) / 2;
            adj.fill(0);
            int t = 0;
            for (int j = 1; j < m - 1; ++j)
                for (int i = 0; i < j; ++i, ++t)
                    if ((key >> (total - 1 - t)) & 1) {
                        adj[static_cast<size_t>(i)] |= vbit(j);
                        adj[static_cast<size_t>(j)] |= vbit(i);
                    }
            const int nv = m - 1;
            for (VertexSet s = 0; s < (VertexSet{1} << nv); ++s) {
                adj[static_cast<size_t>(nv)] = s;
                for (int v = 0; v < nv; ++v) {
                    if (s & vbit(v))
                        adj[static_cast<size_t>(v)] |= vbit(nv);
                    else
                        adj[static_cast<size_t>(v)] &= ~vbit(nv);
                }
                next.insert(canonical_key_raw(m, adj.data()));
            }
        }
        keys.assign(next.begin(), next.end());
    }
    std::vector<Graph> out;
    out.reserve(keys.size());
    for (const std::uint64_t key : keys) {
        Graph g = graph_from_key(n, key);
        if (!connected_only || g.connected()) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace glab
