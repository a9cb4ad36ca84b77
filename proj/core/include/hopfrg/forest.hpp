#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hopfrg {

// Rooted trees and forests in canonical form.
//
// A tree is unordered; we canonicalize by sorting children by their
// rendered form, so rendering is a total isomorphism invariant and
// string comparison decides equality. The bracket grammar is
//
//   forest := "1" | tree (ws tree)*
//   tree   := "[" forest? "]"
//
// Canonical rendering puts single spaces between top-level trees and no
// spaces inside brackets: "[] [[]]", "[[][]]", "1".
class Tree {
public:
    Tree() : render_("[]"), vertex_count_(1) {}
    explicit Tree(std::vector<Tree> children);

    const std::vector<Tree>& children() const { return children_; }
    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return vertex_count_ - 1; }
    const std::string& render() const { return render_; }

    bool operator==(const Tree& o) const { return render_ == o.render_; }
    bool operator<(const Tree& o) const { return render_ < o.render_; }

private:
    std::vector<Tree> children_;
    std::string render_;
    int vertex_count_;
};

// Multiset of trees, stored sorted by rendering. The empty forest is the
// unit of H; a forest with no single-vertex tree is a K-basis element.
class Forest {
public:
    Forest() : render_("1"), vertex_count_(0) {}
    explicit Forest(std::vector<Tree> trees);

    static Forest unit() { return Forest(); }
    static Forest single(Tree t) { return Forest(std::vector<Tree>{std::move(t)}); }

    const std::vector<Tree>& trees() const { return trees_; }
    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return vertex_count_ - static_cast<int>(trees_.size()); }
    bool is_unit() const { return trees_.empty(); }
    bool is_single_tree() const { return trees_.size() == 1; }

    // True when no tree is a bare vertex (every tree has >= 1 edge).
    bool is_k_normal() const;

    const std::string& render() const { return render_; }

    bool operator==(const Forest& o) const { return render_ == o.render_; }
    bool operator<(const Forest& o) const { return render_ < o.render_; }

private:
    std::vector<Tree> trees_;
    std::string render_;
    int vertex_count_;
};

Forest parse_forest(std::string_view text); // throws ParseError

Forest forest_product(const Forest& a, const Forest& b);

// Drop single-vertex trees (they are the unit of K).
Forest k_normalize(const Forest& f);

// Edges of a host in canonical order: vertices are numbered by DFS
// preorder over the canonical form and the edge into a child takes the
// next index when the walk descends. Identical across runs for equal
// hosts.
struct Edge {
    int parent_vertex;
    int child_vertex;
};
std::vector<Edge> edges_of(const Forest& host);

// A subset of the edges of a fixed host, as a bitmask over the canonical
// edge indices. Subsets of the same host compare by index set.
struct EdgeSubset {
    std::uint64_t mask = 0;

    bool contains(int edge_index) const { return mask >> edge_index & 1; }
    int count() const;
    bool operator==(const EdgeSubset& o) const { return mask == o.mask; }
    bool operator<(const EdgeSubset& o) const { return mask < o.mask; }
};

// One entry per subset of the host's edges, in subset-mask order. The
// extracted part is the forest of connected components spanned by the
// chosen edges (so it is K-normal; the empty subset extracts the unit);
// the contracted part is the host with each component collapsed to a
// single vertex.
struct SubforestTerm {
    EdgeSubset subset;
    Forest extracted;
    Forest contracted;
};
std::vector<SubforestTerm> subforests(const Forest& host);

// Admissible cuts of a tree: nonempty edge subsets meeting each
// root-to-vertex path at most once. `pruned` collects the subtrees below
// the cut edges, `root_part` is the component of the root. The trivial
// terms t (x) 1 and 1 (x) t are not included.
struct CutTerm {
    EdgeSubset subset;
    Forest pruned;
    Tree root_part;
};
std::vector<CutTerm> admissible_cuts(const Tree& t);

// All canonical trees / forests up to the bound, deduplicated, ordered
// by (size, rendering).
std::vector<Tree> enumerate_trees(int max_vertices);
std::vector<Forest> enumerate_forests(int max_vertices);
// K-basis forests (every tree with >= 1 edge) with at most max_edges edges.
std::vector<Forest> enumerate_k_forests(int max_edges);

} // namespace hopfrg
