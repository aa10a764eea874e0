#include "plucking/tree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace plucking {

namespace {

std::size_t count_edges(const TreeNode& node) {
    std::size_t n = 0;
    for (const TreeNode& c : node.children) n += 1 + count_edges(c);
    return n;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }

}  // namespace

std::size_t PlaneRootedTree::edge_count() const { return count_edges(root_); }

PlaneRootedTree parse_tree(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && is_space(text[pos])) ++pos;
    };
    std::function<TreeNode()> node = [&]() -> TreeNode {
        if (pos >= text.size() || text[pos] != '(') throw SyntaxError("expected '('", pos);
        ++pos;
        TreeNode n;
        for (skip_ws(); pos < text.size() && text[pos] != ')'; skip_ws())
            n.children.push_back(node());
        if (pos >= text.size()) throw SyntaxError("unbalanced '('", pos);
        ++pos;  // ')'
        return n;
    };
    skip_ws();
    TreeNode root = node();
    skip_ws();
    if (pos != text.size()) throw SyntaxError("trailing characters", pos);
    return PlaneRootedTree(std::move(root));
}

std::string serialize_tree(const PlaneRootedTree& tree) {
    std::string out;
    std::function<void(const TreeNode&)> emit = [&](const TreeNode& n) {
        out += '(';
        for (const TreeNode& c : n.children) emit(c);
        out += ')';
    };
    emit(tree.root());
    return out;
}

std::pair<PlaneRootedTree, DelayAssignment> parse_delayed_tree(std::string_view text) {
    std::size_t pos = 0;
    DelayAssignment delays;
    auto skip_ws = [&] {
        while (pos < text.size() && is_space(text[pos])) ++pos;
    };
    std::function<TreeNode(bool)> node = [&](bool root) -> TreeNode {
        if (pos >= text.size() || text[pos] != '(') throw SyntaxError("expected '('", pos);
        ++pos;
        TreeNode n;
        for (skip_ws(); pos < text.size() && text[pos] != ')'; skip_ws()) {
            if (text[pos] == '(') {
                n.children.push_back(node(false));
            } else if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
                // a run of digits is one single-digit leaf per character
                if (text[pos] == '0') throw ZeroDelay(pos);
                delays.values.push_back(text[pos] - '0');
                n.children.emplace_back();
                ++pos;
            } else {
                throw SyntaxError("unexpected character", pos);
            }
        }
        if (pos >= text.size()) throw SyntaxError("unbalanced '('", pos);
        ++pos;  // ')'
        if (!root && n.children.empty()) delays.values.push_back(1);  // '()' is a delay-1 leaf
        return n;
    };
    skip_ws();
    TreeNode root = node(true);
    skip_ws();
    if (pos != text.size()) throw SyntaxError("trailing characters", pos);
    return {PlaneRootedTree(std::move(root)), std::move(delays)};
}

std::string serialize_delayed_tree(const PlaneRootedTree& tree, const DelayAssignment& delays) {
    std::ostringstream out;
    std::size_t leaf = 0;
    std::function<void(const TreeNode&, bool)> emit = [&](const TreeNode& n, bool root) {
        if (!root && n.children.empty()) {
            out << delays.values.at(leaf++);
            return;
        }
        out << '(';
        for (std::size_t i = 0; i < n.children.size(); ++i) {
            if (i > 0) out << ' ';
            emit(n.children[i], false);
        }
        out << ')';
    };
    emit(tree.root(), true);
    return out.str();
}

std::vector<LeafPath> leaf_paths(const PlaneRootedTree& tree) {
    std::vector<LeafPath> out;
    LeafPath path;
    std::function<void(const TreeNode&)> walk = [&](const TreeNode& n) {
        if (n.children.empty() && !path.empty()) {
            out.push_back(path);
            return;
        }
        for (std::size_t i = 0; i < n.children.size(); ++i) {
            path.push_back(i);
            walk(n.children[i]);
            path.pop_back();
        }
    };
    walk(tree.root());
    return out;
}

std::size_t leaf_count(const PlaneRootedTree& tree) { return leaf_paths(tree).size(); }

std::size_t r_value(const PlaneRootedTree& tree, const LeafPath& path) {
    std::size_t r = 0;
    const TreeNode* node = &tree.root();
    for (std::size_t idx : path) {
        for (std::size_t s = idx + 1; s < node->children.size(); ++s)
            r += count_edges(node->children[s]) + 1;
        node = &node->children[idx];
    }
    return r;
}

namespace {

LeafPath path_for_index(const PlaneRootedTree& tree, std::size_t leaf_index) {
    auto paths = leaf_paths(tree);
    if (leaf_index >= paths.size()) throw InvalidLeaf(leaf_index);
    return paths[leaf_index];
}

}  // namespace

std::size_t r_value(const PlaneRootedTree& tree, std::size_t leaf_index) {
    return r_value(tree, path_for_index(tree, leaf_index));
}

PlaneRootedTree remove_leaf(const PlaneRootedTree& tree, const LeafPath& path) {
    if (path.empty()) throw InvalidLeaf(0);
    TreeNode root = tree.root();
    TreeNode* node = &root;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) node = &node->children.at(path[i]);
    if (!node->children.at(path.back()).children.empty())
        throw InvalidLeaf(path.back());  // path points at an internal vertex
    node->children.erase(node->children.begin() + static_cast<std::ptrdiff_t>(path.back()));
    return PlaneRootedTree(std::move(root));
}

PlaneRootedTree remove_leaf(const PlaneRootedTree& tree, std::size_t leaf_index) {
    return remove_leaf(tree, path_for_index(tree, leaf_index));
}

std::string canonical_key(const PlaneRootedTree& tree) {
    std::function<std::string(const TreeNode&)> key = [&](const TreeNode& n) {
        std::vector<std::string> child_keys;
        child_keys.reserve(n.children.size());
        for (const TreeNode& c : n.children) child_keys.push_back(key(c));
        std::sort(child_keys.begin(), child_keys.end());
        std::string out = "(";
        for (const std::string& k : child_keys) out += k;
        out += ')';
        return out;
    };
    return key(tree.root());
}

std::uint64_t bounded_random(std::mt19937_64& rng, std::uint64_t n) {
    // deterministic across platforms, unlike std::uniform_int_distribution
    return rng() % n;
}

PlaneRootedTree random_embedding(const PlaneRootedTree& tree, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    TreeNode root = tree.root();
    std::function<void(TreeNode&)> shuffle = [&](TreeNode& n) {
        for (std::size_t i = n.children.size(); i > 1; --i)
            std::swap(n.children[i - 1], n.children[bounded_random(rng, i)]);
        for (TreeNode& c : n.children) shuffle(c);
    };
    shuffle(root);
    return PlaneRootedTree(std::move(root));
}

std::pair<PlaneRootedTree, DelayAssignment> hedgehog(const std::vector<int>& delays) {
    for (int d : delays)
        if (d < 1) throw std::invalid_argument("delay values must be >= 1");
    return {hedgehog_tree(delays.size()), DelayAssignment{delays}};
}

PlaneRootedTree hedgehog_tree(std::size_t leaves) {
    TreeNode root;
    root.children.resize(leaves);
    return PlaneRootedTree(std::move(root));
}

PlaneRootedTree chain_tree(std::size_t edges) {
    TreeNode node;
    for (std::size_t i = 0; i < edges; ++i) {
        TreeNode parent;
        parent.children.push_back(std::move(node));
        node = std::move(parent);
    }
    return PlaneRootedTree(std::move(node));
}

PlaneRootedTree two_branch_tree(std::size_t left_edges, std::size_t right_edges) {
    TreeNode root;
    if (left_edges > 0) root.children.push_back(chain_tree(left_edges - 1).root());
    if (right_edges > 0) root.children.push_back(chain_tree(right_edges - 1).root());
    return PlaneRootedTree(std::move(root));
}

PlaneRootedTree random_tree(std::size_t edges, std::mt19937_64& rng) {
    // parent[i] and slot[i] describe where vertex i was attached
    std::vector<std::vector<std::size_t>> children(1);
    for (std::size_t v = 1; v <= edges; ++v) {
        const std::size_t parent = bounded_random(rng, v);
        const std::size_t slot = bounded_random(rng, children[parent].size() + 1);
        children[parent].insert(children[parent].begin() + static_cast<std::ptrdiff_t>(slot), v);
        children.emplace_back();
    }
    std::function<TreeNode(std::size_t)> build = [&](std::size_t v) {
        TreeNode n;
        n.children.reserve(children[v].size());
        for (std::size_t c : children[v]) n.children.push_back(build(c));
        return n;
    };
    return PlaneRootedTree(build(0));
}

}  // namespace plucking
