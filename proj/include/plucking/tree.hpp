#ifndef PLUCKING_TREE_HPP
#define PLUCKING_TREE_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace plucking {

struct SyntaxError : std::runtime_error {
    std::size_t offset;
    SyntaxError(const std::string& what, std::size_t offset_)
        : std::runtime_error(what + " at offset " + std::to_string(offset_)), offset(offset_) {}
};

struct ZeroDelay : std::runtime_error {
    explicit ZeroDelay(std::size_t offset)
        : std::runtime_error("delay value must be >= 1 at offset " + std::to_string(offset)) {}
};

struct InvalidLeaf : std::out_of_range {
    explicit InvalidLeaf(std::size_t index)
        : std::out_of_range("no leaf with index " + std::to_string(index)) {}
};

struct TreeNode {
    std::vector<TreeNode> children;
    bool operator==(const TreeNode&) const = default;
};

/// Rooted tree with ordered child lists; the child order is the plane
/// embedding. Immutable after construction.
class PlaneRootedTree {
public:
    PlaneRootedTree() = default;  // single vertex
    explicit PlaneRootedTree(TreeNode root) : root_(std::move(root)) {}

    const TreeNode& root() const { return root_; }
    std::size_t edge_count() const;
    bool operator==(const PlaneRootedTree&) const = default;

private:
    TreeNode root_;
};

/// Positive delay values, one per leaf in left-to-right order.
struct DelayAssignment {
    std::vector<int> values;
    bool operator==(const DelayAssignment&) const = default;
};

/// Child indices from the root down to a leaf.
using LeafPath = std::vector<std::size_t>;

/// Grammar: tree ::= '(' tree* ')'. Whitespace ignored.
PlaneRootedTree parse_tree(std::string_view text);
std::string serialize_tree(const PlaneRootedTree& tree);

/// Delayed grammar: dtree ::= '(' item* ')', item ::= dtree | digit-run.
/// Each digit in a run is one leaf with that delay ('0' is rejected);
/// '()' in non-root position is a leaf with delay 1.
std::pair<PlaneRootedTree, DelayAssignment> parse_delayed_tree(std::string_view text);

/// Space-separated delayed form, e.g. "(2 ((3)) 1)". Unambiguous for delay
/// values >= 10, unlike the compact digit-run input form.
std::string serialize_delayed_tree(const PlaneRootedTree& tree, const DelayAssignment& delays);

/// Left-to-right enumeration of the leaves (childless non-root vertices).
std::vector<LeafPath> leaf_paths(const PlaneRootedTree& tree);
std::size_t leaf_count(const PlaneRootedTree& tree);

/// Number of edges strictly to the right of the root-to-leaf path: at each
/// path vertex, every sibling subtree right of the path contributes its edge
/// count plus its attaching edge.
std::size_t r_value(const PlaneRootedTree& tree, const LeafPath& path);
std::size_t r_value(const PlaneRootedTree& tree, std::size_t leaf_index);

PlaneRootedTree remove_leaf(const PlaneRootedTree& tree, const LeafPath& path);
PlaneRootedTree remove_leaf(const PlaneRootedTree& tree, std::size_t leaf_index);

/// AHU-style canonical encoding; equal keys iff the trees are isomorphic as
/// unordered rooted trees.
std::string canonical_key(const PlaneRootedTree& tree);

/// Deterministically permutes every child list with a generator seeded by
/// `seed`; same seed, same result.
PlaneRootedTree random_embedding(const PlaneRootedTree& tree, std::uint64_t seed);

/// Root with one leaf child per delay value, assigned left to right.
std::pair<PlaneRootedTree, DelayAssignment> hedgehog(const std::vector<int>& delays);
PlaneRootedTree hedgehog_tree(std::size_t leaves);

/// Path of `edges` edges hanging from the root.
PlaneRootedTree chain_tree(std::size_t edges);

/// Root with two branches: a left chain of `left_edges` and a right chain of
/// `right_edges`, one leaf each.
PlaneRootedTree two_branch_tree(std::size_t left_edges, std::size_t right_edges);

/// Uniform attachment: each new vertex picks a uniformly random parent and a
/// uniformly random child slot.
PlaneRootedTree random_tree(std::size_t edges, std::mt19937_64& rng);

/// Deterministic integer in [0, n); n must be positive.
std::uint64_t bounded_random(std::mt19937_64& rng, std::uint64_t n);

}  // namespace plucking

#endif
