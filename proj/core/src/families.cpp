#include "glab/families.hpp"

#include <stdexcept>

#include <json.hpp>

namespace glab {

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph empty_graph(int n) {
    if (n < 1) throw std::invalid_argument("empty graph requires n >= 1");
    return Graph(n);
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite requires a, b >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph::from_edges(a + b, edges);
}

Graph crown(int t) {
    if (t < 1) throw std::invalid_argument("crown requires t >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            if (i != j) edges.emplace_back(i, t + j);
    return Graph::from_edges(2 * t, edges);
}

Graph b_graph(int k) {
    if (k < 2) throw std::invalid_argument("b_graph requires k >= 2");
    const int side = k - 1;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j) {
            if (i == j && i < k - 2) continue;  // deleted matching a_i b_i, i = 1..k-2
            edges.emplace_back(i, side + j);
        }
    return Graph::from_edges(2 * side, edges);
}

Graph zaker_soltani(int k, int n) {
    if (k < 2) throw std::invalid_argument("zaker_soltani requires k >= 2");
    if (k > n) throw std::invalid_argument("zaker_soltani requires k <= n");
    if ((n - k) % 2 != 0) throw std::invalid_argument("zaker_soltani requires n - k even");
    const int t = (n - k) / 2;
    const int half_a = (k + 1) / 2;  // |A| = ceil(k/2), vertices 0..half_a-1
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
    for (int i = 0; i < t; ++i) {
        const int ai = k + i, bi = k + t + i;
        for (int j = 0; j < t; ++j)
            if (i != j) edges.emplace_back(ai, k + t + j);
        for (int u = 0; u < half_a; ++u) edges.emplace_back(u, ai);
        for (int u = half_a; u < k; ++u) edges.emplace_back(u, bi);
    }
    return Graph::from_edges(n, edges);
}

Graph ng_sharp(int n, int k) {
    if (k < 1 || k > n - 1) throw std::invalid_argument("ng_sharp requires 1 <= k <= n-1");
    return join(complete_graph(k), empty_graph(n - k));
}

const std::vector<std::string>& family_ids() {
    static const std::vector<std::string> ids{
        "complete", "empty",   "path",         "cycle", "complete_bipartite",
        "crown",    "b_graph", "zaker_soltani", "ng_sharp"};
    return ids;
}

namespace {

int need(const FamilySpec& spec, const std::string& key) {
    const auto it = spec.params.find(key);
    if (it == spec.params.end())
        throw std::invalid_argument("family '" + spec.family + "' requires parameter --" + key);
    return it->second;
}

}  // namespace

FamilyInstance make_family(const FamilySpec& spec) {
    FamilyInstance inst;
    inst.spec = spec;
    const std::string& f = spec.family;
    if (f == "complete") {
        const int n = need(spec, "n");
        inst.graph = complete_graph(n);
        inst.expected = {{"gamma", n}, {"chi", n}, {"omega", n}};
    } else if (f == "empty") {
        inst.graph = empty_graph(need(spec, "n"));
        inst.expected = {{"gamma", 1}, {"chi", 1}};
    } else if (f == "path") {
        const int n = need(spec, "n");
        inst.graph = path_graph(n);
        if (n == 4) inst.expected = {{"gamma", 3}, {"psi", 3}, {"col", 2}};
    } else if (f == "cycle") {
        const int n = need(spec, "n");
        inst.graph = cycle_graph(n);
        if (n == 4) inst.expected = {{"gamma", 2}, {"psi", 2}, {"col", 3}};
    } else if (f == "complete_bipartite") {
        inst.graph = complete_bipartite(need(spec, "a"), need(spec, "b"));
        inst.expected = {{"gamma", 2}, {"chi", 2}};
    } else if (f == "crown") {
        const int t = need(spec, "t");
        inst.graph = crown(t);
        inst.expected = {{"gamma", t}};
    } else if (f == "b_graph") {
        const int k = need(spec, "k");
        inst.graph = b_graph(k);
        inst.expected = {{"gamma", k}, {"omega", 2}};
    } else if (f == "zaker_soltani") {
        const int k = need(spec, "k"), n = need(spec, "n");
        inst.graph = zaker_soltani(k, n);
        inst.expected = {{"omega", k}, {"gamma", (n + k) / 2}, {"max_degree", (n - k) / 2 + k - 1}};
    } else if (f == "ng_sharp") {
        const int n = need(spec, "n"), k = need(spec, "k");
        inst.graph = ng_sharp(n, k);
        inst.expected = {{"gamma", k + 1}, {"chi_complement", n - k}};
    } else {
        throw std::invalid_argument("unknown family '" + f + "'");
    }
    return inst;
}

std::string to_json(const FamilyInstance& inst) {
    nlohmann::json j;
    j["family"] = inst.spec.family;
    j["params"] = inst.spec.params;
    j["n"] = inst.graph.order();
    j["m"] = inst.graph.size();
    j["graph6"] = to_graph6(inst.graph);
    j["expected"] = inst.expected;
    return j.dump();
}

}  // namespace glab
