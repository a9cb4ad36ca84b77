#include "hopfrg/forest.hpp"

#include "hopfrg/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

namespace hopfrg {

Tree::Tree(std::vector<Tree> children) : children_(std::move(children)) {
    std::sort(children_.begin(), children_.end());
    vertex_count_ = 1;
    std::string r = "[";
    for (const Tree& c : children_) {
        vertex_count_ += c.vertex_count();
        r += c.render();
    }
    r += "]";
    render_ = std::move(r);
}

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
    std::sort(trees_.begin(), trees_.end());
    vertex_count_ = 0;
    if (trees_.empty()) {
        render_ = "1";
        return;
    }
    std::string r;
    for (std::size_t i = 0; i < trees_.size(); ++i) {
        if (i > 0) r += ' ';
        r += trees_[i].render();
        vertex_count_ += trees_[i].vertex_count();
    }
    render_ = std::move(r);
}

bool Forest::is_k_normal() const {
    return std::all_of(trees_.begin(), trees_.end(),
                       [](const Tree& t) { return t.edge_count() >= 1; });
}

Forest k_normalize(const Forest& f) {
    std::vector<Tree> kept;
    for (const Tree& t : f.trees())
        if (t.edge_count() >= 1) kept.push_back(t);
    return Forest(std::move(kept));
}

Forest forest_product(const Forest& a, const Forest& b) {
    std::vector<Tree> trees = a.trees();
    trees.insert(trees.end(), b.trees().begin(), b.trees().end());
    return Forest(std::move(trees));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() { return text[pos]; }

    // forest := "1" | tree+ ; returns the trees ("1" -> none)
    std::vector<Tree> parse_trees() {
        skip_ws();
        if (pos < text.size() && text[pos] == '1') {
            ++pos;
            return {};
        }
        std::vector<Tree> trees;
        skip_ws();
        while (pos < text.size() && text[pos] == '[') {
            trees.push_back(parse_tree());
            skip_ws();
        }
        if (trees.empty())
            throw ParseError("expected forest ('1' or '[')", pos);
        return trees;
    }

    Tree parse_tree() {
        // caller guarantees '['
        ++pos;
        skip_ws();
        if (pos < text.size() && text[pos] == ']') {
            ++pos;
            return Tree();
        }
        std::vector<Tree> children = parse_trees();
        skip_ws();
        if (pos >= text.size() || text[pos] != ']')
            throw ParseError("unbalanced bracket, expected ']'", pos);
        ++pos;
        return Tree(std::move(children));
    }
};

} // namespace

Forest parse_forest(std::string_view text) {
    Parser p{text};
    std::vector<Tree> trees = p.parse_trees();
    if (!p.at_end())
        throw ParseError("unexpected character after forest", p.pos);
    return Forest(std::move(trees));
}

// ---------------------------------------------------------------------------
// Edge-indexed flat view
//
// Vertices and edges are numbered by DFS preorder over the canonical form;
// the edge into a child gets its index when the walk descends into it. This
// makes edge subsets reproducible across runs.

namespace {

struct Flat {
    std::vector<int> parent;                 // -1 for roots
    std::vector<std::vector<int>> children;  // canonical order
    std::vector<std::pair<int, int>> edges;  // (parent, child)
};

void flatten_tree(const Tree& t, int parent, Flat& flat) {
    int v = static_cast<int>(flat.parent.size());
    flat.parent.push_back(parent);
    flat.children.emplace_back();
    if (parent >= 0) {
        flat.children[parent].push_back(v);
        flat.edges.emplace_back(parent, v);
    }
    for (const Tree& c : t.children()) flatten_tree(c, v, flat);
}

Flat flatten(const Forest& f) {
    Flat flat;
    for (const Tree& t : f.trees()) flatten_tree(t, -1, flat);
    return flat;
}

} // namespace

std::vector<Edge> edges_of(const Forest& host) {
    Flat flat = flatten(host);
    std::vector<Edge> edges;
    edges.reserve(flat.edges.size());
    for (const auto& [p, c] : flat.edges) edges.push_back(Edge{p, c});
    return edges;
}

int EdgeSubset::count() const {
    int n = 0;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) ++n;
    return n;
}

namespace {

// Rebuild a canonical Tree from a child-list table.
Tree build_tree(int root, const std::vector<std::vector<int>>& children) {
    std::vector<Tree> kids;
    kids.reserve(children[root].size());
    for (int c : children[root]) kids.push_back(build_tree(c, children));
    return Tree(std::move(kids));
}

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(std::size_t n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int v) {
        while (up[v] != v) v = up[v] = up[up[v]];
        return v;
    }
    void unite(int a, int b) { up[find(a)] = find(b); }
};

} // namespace

std::vector<SubforestTerm> subforests(const Forest& host) {
    Flat flat = flatten(host);
    const int n_vertices = static_cast<int>(flat.parent.size());
    const int n_edges = static_cast<int>(flat.edges.size());
    std::vector<SubforestTerm> out;
    out.reserve(std::size_t(1) << n_edges);

    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n_edges); ++mask) {
        UnionFind uf(static_cast<std::size_t>(n_vertices));
        for (int e = 0; e < n_edges; ++e)
            if (mask >> e & 1) uf.unite(flat.edges[e].second, flat.edges[e].first);

        // Extracted part: components of the chosen-edge subgraph. A
        // component's root is its unique vertex whose parent edge is
        // absent or unchosen.
        std::vector<std::vector<int>> sub_children(static_cast<std::size_t>(n_vertices));
        std::vector<bool> touched(static_cast<std::size_t>(n_vertices), false);
        std::vector<bool> has_chosen_parent(static_cast<std::size_t>(n_vertices), false);
        for (int e = 0; e < n_edges; ++e) {
            if (!(mask >> e & 1)) continue;
            auto [p, c] = flat.edges[e];
            sub_children[static_cast<std::size_t>(p)].push_back(c);
            touched[static_cast<std::size_t>(p)] = touched[static_cast<std::size_t>(c)] = true;
            has_chosen_parent[static_cast<std::size_t>(c)] = true;
        }
        std::vector<Tree> extracted;
        for (int v = 0; v < n_vertices; ++v)
            if (touched[static_cast<std::size_t>(v)] && !has_chosen_parent[static_cast<std::size_t>(v)])
                extracted.push_back(build_tree(v, sub_children));

        // Contracted part: one vertex per union-find class; an unchosen
        // edge links the classes of its endpoints.
        std::vector<std::vector<int>> q_children(static_cast<std::size_t>(n_vertices));
        std::vector<int> q_roots;
        for (int v = 0; v < n_vertices; ++v) {
            if (uf.find(v) != v) continue;
            // class root vertex: the shallowest member; its parent edge is unchosen
            int shallow = v;
            for (int w = 0; w < n_vertices; ++w)
                if (uf.find(w) == v && !has_chosen_parent[static_cast<std::size_t>(w)]) shallow = w;
            int p = flat.parent[static_cast<std::size_t>(shallow)];
            if (p < 0)
                q_roots.push_back(v);
            else
                q_children[static_cast<std::size_t>(uf.find(p))].push_back(v);
        }
        std::vector<Tree> contracted;
        for (int r : q_roots) contracted.push_back(build_tree(r, q_children));

        out.push_back(SubforestTerm{EdgeSubset{mask}, Forest(std::move(extracted)),
                                    Forest(std::move(contracted))});
    }
    return out;
}

std::vector<CutTerm> admissible_cuts(const Tree& t) {
    Flat flat = flatten(Forest::single(t));
    const int n_vertices = static_cast<int>(flat.parent.size());
    const int n_edges = static_cast<int>(flat.edges.size());

    // ancestors[e] = edges strictly above e on the path to the root
    std::vector<std::uint64_t> ancestors(static_cast<std::size_t>(n_edges), 0);
    std::vector<int> parent_edge(static_cast<std::size_t>(n_vertices), -1);
    for (int e = 0; e < n_edges; ++e) parent_edge[static_cast<std::size_t>(flat.edges[e].second)] = e;
    for (int e = 0; e < n_edges; ++e) {
        int v = flat.edges[e].first;
        while (v >= 0) {
            int pe = parent_edge[static_cast<std::size_t>(v)];
            if (pe < 0) break;
            ancestors[static_cast<std::size_t>(e)] |= std::uint64_t(1) << pe;
            v = flat.edges[pe].first;
        }
    }

    std::vector<CutTerm> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n_edges); ++mask) {
        bool admissible = true;
        for (int e = 0; e < n_edges && admissible; ++e)
            if ((mask >> e & 1) && (ancestors[static_cast<std::size_t>(e)] & mask)) admissible = false;
        if (!admissible) continue;

        // pruned components are the full subtrees below the cut edges
        std::vector<bool> removed(static_cast<std::size_t>(n_vertices), false);
        for (int e = 0; e < n_edges; ++e) {
            if (!(mask >> e & 1)) continue;
            // mark the subtree below the child endpoint (contiguous DFS range)
            int c = flat.edges[e].second;
            std::vector<int> stack{c};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                removed[static_cast<std::size_t>(v)] = true;
                for (int w : flat.children[static_cast<std::size_t>(v)]) stack.push_back(w);
            }
        }
        std::vector<std::vector<int>> kept_children(static_cast<std::size_t>(n_vertices));
        for (int e = 0; e < n_edges; ++e) {
            auto [p, c] = flat.edges[e];
            if (!(mask >> e & 1) && !removed[static_cast<std::size_t>(c)] && !removed[static_cast<std::size_t>(p)])
                kept_children[static_cast<std::size_t>(p)].push_back(c);
        }
        Tree root_part = build_tree(0, kept_children);

        std::vector<std::vector<int>> pruned_children(static_cast<std::size_t>(n_vertices));
        for (int e = 0; e < n_edges; ++e) {
            auto [p, c] = flat.edges[e];
            if (!(mask >> e & 1) && removed[static_cast<std::size_t>(c)] && removed[static_cast<std::size_t>(p)])
                pruned_children[static_cast<std::size_t>(p)].push_back(c);
        }
        std::vector<Tree> pruned;
        for (int e = 0; e < n_edges; ++e)
            if (mask >> e & 1) pruned.push_back(build_tree(flat.edges[e].second, pruned_children));

        out.push_back(CutTerm{EdgeSubset{mask}, Forest(std::move(pruned)), std::move(root_part)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// forests_by_size[n] = all canonical forests with exactly n vertices
std::vector<std::set<Forest>> forests_by_size(int max_vertices) {
    std::vector<std::set<Forest>> forests(static_cast<std::size_t>(max_vertices) + 1);
    std::vector<std::set<Tree>> trees(static_cast<std::size_t>(max_vertices) + 1);
    forests[0].insert(Forest::unit());
    for (int n = 1; n <= max_vertices; ++n) {
        // trees with n vertices: a root over any forest with n-1 vertices
        for (const Forest& f : forests[static_cast<std::size_t>(n - 1)])
            trees[static_cast<std::size_t>(n)].insert(Tree(f.trees()));
        // forests with n vertices: a tree with k vertices joined to a forest with n-k
        for (int k = 1; k <= n; ++k)
            for (const Tree& t : trees[static_cast<std::size_t>(k)])
                for (const Forest& rest : forests[static_cast<std::size_t>(n - k)]) {
                    std::vector<Tree> ts = rest.trees();
                    ts.push_back(t);
                    forests[static_cast<std::size_t>(n)].insert(Forest(std::move(ts)));
                }
    }
    return forests;
}

} // namespace

std::vector<Tree> enumerate_trees(int max_vertices) {
    if (max_vertices < 0) throw DomainError("enumerate_trees: negative bound");
    auto forests = forests_by_size(std::max(max_vertices - 1, 0));
    std::vector<Tree> out;
    for (int n = 1; n <= max_vertices; ++n) {
        std::set<Tree> level;
        for (const Forest& f : forests[static_cast<std::size_t>(n - 1)]) level.insert(Tree(f.trees()));
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<Forest> enumerate_forests(int max_vertices) {
    if (max_vertices < 0) throw DomainError("enumerate_forests: negative bound");
    auto forests = forests_by_size(max_vertices);
    std::vector<Forest> out;
    for (int n = 0; n <= max_vertices; ++n)
        out.insert(out.end(), forests[static_cast<std::size_t>(n)].begin(),
                   forests[static_cast<std::size_t>(n)].end());
    return out;
}

std::vector<Forest> enumerate_k_forests(int max_edges) {
    if (max_edges < 0) throw DomainError("enumerate_k_forests: negative bound");
    // K-forests with e edges total: multisets of trees with >= 1 edge each.
    std::vector<std::set<Forest>> by_edges(static_cast<std::size_t>(max_edges) + 1);
    by_edges[0].insert(Forest::unit());
    std::vector<Tree> gens = enumerate_trees(max_edges + 1);
    for (int e = 1; e <= max_edges; ++e)
        for (const Tree& t : gens) {
            if (t.edge_count() < 1 || t.edge_count() > e) continue;
            for (const Forest& rest : by_edges[static_cast<std::size_t>(e - t.edge_count())]) {
                std::vector<Tree> ts = rest.trees();
                ts.push_back(t);
                by_edges[static_cast<std::size_t>(e)].insert(Forest(std::move(ts)));
            }
        }
    std::vector<Forest> out;
    for (int e = 0; e <= max_edges; ++e)
        out.insert(out.end(), by_edges[static_cast<std::size_t>(e)].begin(),
                   by_edges[static_cast<std::size_t>(e)].end());
    return out;
}

} // namespace hopfrg
