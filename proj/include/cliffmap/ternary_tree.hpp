// Copyright 2026 The cliffmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cliffmap/majorana_mapping.hpp"
#include "cliffmap/pauli_string.hpp"
#include "cliffmap/rational.hpp"

namespace cliffmap {

/// Thrown for trees that are not full ternary trees with bijective labels.
class TreeStructureError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// One child slot: either a parent node (by qubit label) or a leaf (by
/// Majorana label j, meaning gamma_{j+1}).
struct TreeSlot {
    enum class Kind : uint8_t { Leaf, Qubit };

    Kind kind = Kind::Leaf;
    uint32_t index = 0;

    static TreeSlot leaf(uint32_t j) {
        return {Kind::Leaf, j};
    }
    static TreeSlot qubit(uint32_t q) {
        return {Kind::Qubit, q};
    }
    bool is_leaf() const {
        return kind == Kind::Leaf;
    }
    bool is_qubit() const {
        return kind == Kind::Qubit;
    }
    bool operator==(const TreeSlot &) const = default;
};

/// Slot order is left, middle, right; stepping into them appends X, Y, Z on
/// the parent's qubit.
enum ChildSlot : int { kLeft = 0, kMiddle = 1, kRight = 2 };

using Children = std::array<TreeSlot, 3>;

/// A labeled full ternary tree. Parents are identified by their qubit label,
/// so `children(q)` is the slot triple of the parent carrying qubit q.
class TernaryTree {
   public:
    TernaryTree(uint32_t root, std::vector<Children> children) : root_(root), children_(std::move(children)) {
        validate();
    }

    size_t num_qubits() const {
        return children_.size();
    }
    size_t num_leaves() const {
        return 2 * children_.size() + 1;
    }
    uint32_t root() const {
        return root_;
    }
    const Children &children(uint32_t q) const {
        return children_.at(q);
    }
    const TreeSlot &child(uint32_t q, int slot) const {
        return children_.at(q).at(slot);
    }
    const std::vector<Children> &all_children() const {
        return children_;
    }

    /// (parent qubit, slot) holding qubit q; empty for the root.
    std::optional<std::pair<uint32_t, int>> parent(uint32_t q) const {
        for (uint32_t p = 0; p < children_.size(); ++p) {
            for (int s = 0; s < 3; ++s) {
                if (children_[p][s] == TreeSlot::qubit(q)) {
                    return std::make_pair(p, s);
                }
            }
        }
        return std::nullopt;
    }

    /// Qubits in inorder: left subtree, node, middle subtree, right subtree.
    std::vector<uint32_t> inorder_qubits() const {
        std::vector<uint32_t> out;
        std::function<void(uint32_t)> visit = [&](uint32_t q) {
            const auto &c = children_[q];
            if (c[kLeft].is_qubit()) {
                visit(c[kLeft].index);
            }
            out.push_back(q);
            for (int s : {kMiddle, kRight}) {
                if (c[s].is_qubit()) {
                    visit(c[s].index);
                }
            }
        };
        visit(root_);
        return out;
    }

    /// Leaf labels from left to right.
    std::vector<uint32_t> inorder_leaves() const {
        std::vector<uint32_t> out;
        std::function<void(uint32_t)> visit = [&](uint32_t q) {
            for (const auto &slot : children_[q]) {
                if (slot.is_leaf()) {
                    out.push_back(slot.index);
                } else {
                    visit(slot.index);
                }
            }
        };
        visit(root_);
        return out;
    }

    /// depths[j] is the number of parents above leaf j.
    std::vector<size_t> leaf_depths() const {
        std::vector<size_t> depths(num_leaves(), 0);
        std::function<void(uint32_t, size_t)> visit = [&](uint32_t q, size_t d) {
            for (const auto &slot : children_[q]) {
                if (slot.is_leaf()) {
                    depths[slot.index] = d + 1;
                } else {
                    visit(slot.index, d + 1);
                }
            }
        };
        visit(root_, 0);
        return depths;
    }

    /// Nested text form such as "0(g0,g1,1(g2,g3,g4))".
    std::string str() const {
        std::function<std::string(uint32_t)> render = [&](uint32_t q) {
            std::string s = std::to_string(q) + "(";
            for (int i = 0; i < 3; ++i) {
                const auto &slot = children_[q][i];
                s += slot.is_leaf() ? "g" + std::to_string(slot.index) : render(slot.index);
                s += i < 2 ? "," : ")";
            }
            return s;
        };
        return render(root_);
    }

    /// Preorder code of the ordered shape with labels erased.
    std::string shape_code() const {
        std::function<std::string(uint32_t)> render = [&](uint32_t q) {
            std::string s = "(";
            for (const auto &slot : children_[q]) {
                s += slot.is_leaf() ? std::string(".") : render(slot.index);
            }
            return s + ")";
        };
        return render(root_);
    }

    bool operator==(const TernaryTree &other) const = default;

   private:
    void validate() const {
        size_t n = children_.size();
        if (n == 0) {
            throw TreeStructureError("tree needs at least one parent");
        }
        if (root_ >= n) {
            throw TreeStructureError("root qubit out of range");
        }
        std::vector<int> qubit_refs(n, 0);
        std::vector<int> leaf_refs(2 * n + 1, 0);
        for (const auto &c : children_) {
            for (const auto &slot : c) {
                if (slot.is_qubit()) {
                    if (slot.index >= n) {
                        throw TreeStructureError("child qubit label out of range");
                    }
                    ++qubit_refs[slot.index];
                } else {
                    if (slot.index >= 2 * n + 1) {
                        throw TreeStructureError("leaf label out of range");
                    }
                    ++leaf_refs[slot.index];
                }
            }
        }
        for (size_t q = 0; q < n; ++q) {
            int expected = q == root_ ? 0 : 1;
            if (qubit_refs[q] != expected) {
                throw TreeStructureError("qubit " + std::to_string(q) + " is referenced " +
                                         std::to_string(qubit_refs[q]) + " times");
            }
        }
        for (size_t j = 0; j < leaf_refs.size(); ++j) {
            if (leaf_refs[j] != 1) {
                throw TreeStructureError("leaf " + std::to_string(j) + " is referenced " +
                                         std::to_string(leaf_refs[j]) + " times");
            }
        }
        // Reference counts alone admit detached cycles; require reachability.
        std::vector<bool> seen(n, false);
        std::vector<uint32_t> stack{root_};
        size_t visited = 0;
        while (!stack.empty()) {
            uint32_t q = stack.back();
            stack.pop_back();
            if (seen[q]) {
                throw TreeStructureError("cycle in tree");
            }
            seen[q] = true;
            ++visited;
            for (const auto &slot : children_[q]) {
                if (slot.is_qubit()) {
                    stack.push_back(slot.index);
                }
            }
        }
        if (visited != n) {
            throw TreeStructureError("tree is not connected");
        }
    }

    uint32_t root_;
    std::vector<Children> children_;

    friend TernaryTree rotate_left(const TernaryTree &, uint32_t, uint32_t);
    friend TernaryTree rotate_middle(const TernaryTree &, uint32_t, uint32_t);
    friend TernaryTree relabel_qubits(const TernaryTree &, const std::vector<uint32_t> &);
};

/// An unlabeled ordered full ternary tree. Node 0 is the root and -1 marks a
/// leaf slot.
struct TreeShape {
    std::vector<std::array<int32_t, 3>> kids;

    size_t num_parents() const {
        return kids.size();
    }
};

/// Labels qubits by inorder traversal and leaves left to right.
inline TernaryTree label_inorder(const TreeShape &shape) {
    size_t n = shape.num_parents();
    std::vector<uint32_t> qubit_of(n);
    uint32_t next_qubit = 0;
    std::function<void(int32_t)> number = [&](int32_t v) {
        const auto &k = shape.kids[v];
        if (k[kLeft] >= 0) {
            number(k[kLeft]);
        }
        qubit_of[v] = next_qubit++;
        for (int s : {kMiddle, kRight}) {
            if (k[s] >= 0) {
                number(k[s]);
            }
        }
    };
    number(0);
    std::vector<Children> children(n);
    uint32_t next_leaf = 0;
    std::function<void(int32_t)> fill = [&](int32_t v) {
        for (int s = 0; s < 3; ++s) {
            int32_t c = shape.kids[v][s];
            if (c < 0) {
                children[qubit_of[v]][s] = TreeSlot::leaf(next_leaf++);
            } else {
                children[qubit_of[v]][s] = TreeSlot::qubit(qubit_of[c]);
                fill(c);
            }
        }
    };
    fill(0);
    return TernaryTree(qubit_of[0], std::move(children));
}

/// Labels qubits top to bottom then left to right, leaves left to right.
inline TernaryTree label_level_order(const TreeShape &shape) {
    size_t n = shape.num_parents();
    std::vector<uint32_t> qubit_of(n);
    std::deque<int32_t> queue{0};
    uint32_t next_qubit = 0;
    while (!queue.empty()) {
        int32_t v = queue.front();
        queue.pop_front();
        qubit_of[v] = next_qubit++;
        for (int32_t c : shape.kids[v]) {
            if (c >= 0) {
                queue.push_back(c);
            }
        }
    }
    std::vector<Children> children(n);
    uint32_t next_leaf = 0;
    std::function<void(int32_t)> fill = [&](int32_t v) {
        for (int s = 0; s < 3; ++s) {
            int32_t c = shape.kids[v][s];
            if (c < 0) {
                children[qubit_of[v]][s] = TreeSlot::leaf(next_leaf++);
            } else {
                children[qubit_of[v]][s] = TreeSlot::qubit(qubit_of[c]);
                fill(c);
            }
        }
    };
    fill(0);
    return TernaryTree(qubit_of[0], std::move(children));
}

/// Ordered shape of a labeled tree, nodes numbered in preorder.
inline TreeShape shape_of(const TernaryTree &tree) {
    TreeShape shape;
    shape.kids.resize(tree.num_qubits());
    int32_t next = 0;
    std::function<int32_t(uint32_t)> visit = [&](uint32_t q) {
        int32_t id = next++;
        for (int s = 0; s < 3; ++s) {
            const auto &slot = tree.child(q, s);
            shape.kids[id][s] = slot.is_leaf() ? -1 : visit(slot.index);
        }
        return id;
    };
    visit(tree.root());
    return shape;
}

inline void require_positive(size_t n) {
    if (n == 0) {
        throw std::domain_error("tree needs n >= 1 qubits");
    }
}

/// Jordan-Wigner tree: a spine of right children.
inline TernaryTree jw_tree(size_t n) {
    require_positive(n);
    TreeShape shape;
    shape.kids.resize(n);
    for (size_t i = 0; i < n; ++i) {
        shape.kids[i] = {-1, -1, i + 1 < n ? static_cast<int32_t>(i + 1) : -1};
    }
    return label_inorder(shape);
}

/// Bravyi-Kitaev tree: the first n preorder nodes of a perfect binary tree
/// of height floor(log2 n), placed in the left and right slots.
inline TernaryTree bk_tree(size_t n) {
    require_positive(n);
    size_t height = 0;
    while ((size_t{2} << height) <= n) {
        ++height;
    }
    TreeShape shape;
    shape.kids.reserve(n);
    std::function<int32_t(size_t)> build = [&](size_t depth) -> int32_t {
        if (shape.kids.size() == n) {
            return -1;
        }
        auto id = static_cast<int32_t>(shape.kids.size());
        shape.kids.push_back({-1, -1, -1});
        if (depth < height) {
            int32_t left = build(depth + 1);
            shape.kids[id][kLeft] = left;
            int32_t right = build(depth + 1);
            shape.kids[id][kRight] = right;
        }
        return id;
    };
    build(0);
    return label_inorder(shape);
}

/// Balanced ternary tree: layers filled top to bottom, the last layer
/// flushed right. Qubits are labeled in level order, leaves left to right.
inline TernaryTree balanced_tree(size_t n) {
    require_positive(n);
    TreeShape shape;
    shape.kids.push_back({-1, -1, -1});
    std::vector<int32_t> layer{0};
    while (shape.kids.size() < n) {
        size_t slots = 3 * layer.size();
        size_t take = std::min(slots, n - shape.kids.size());
        std::vector<int32_t> next_layer;
        for (size_t pos = slots - take; pos < slots; ++pos) {
            auto id = static_cast<int32_t>(shape.kids.size());
            shape.kids.push_back({-1, -1, -1});
            shape.kids[layer[pos / 3]][pos % 3] = id;
            next_layer.push_back(id);
        }
        layer = std::move(next_layer);
    }
    return label_level_order(shape);
}

/// Pauli string of every leaf, built by walking down from the root.
inline MajoranaMapping compile(const TernaryTree &tree) {
    size_t n = tree.num_qubits();
    MajoranaMapping m;
    m.n = n;
    m.includes_redundant = true;
    m.paulis.assign(tree.num_leaves(), PauliString(n));
    std::function<void(uint32_t, const PauliString &)> visit = [&](uint32_t q, const PauliString &prefix) {
        for (int s = 0; s < 3; ++s) {
            PauliString path = prefix;
            path.set(q, s != kMiddle ? s == kLeft : true, s != kLeft);
            const auto &slot = tree.child(q, s);
            if (slot.is_leaf()) {
                m.paulis[slot.index] = std::move(path);
            } else {
                visit(slot.index, path);
            }
        }
    };
    visit(tree.root(), PauliString(n));
    return m;
}

/// Node j must be the left child of node k. Afterwards j takes k's place,
/// keeps its left and middle subtrees, and k becomes j's right child holding
/// j's former right subtree on its left. Equivalent to conjugation by CNOT_{jk}.
inline TernaryTree rotate_left(const TernaryTree &tree, uint32_t j, uint32_t k) {
    if (k >= tree.num_qubits() || j >= tree.num_qubits() || tree.child(k, kLeft) != TreeSlot::qubit(j)) {
        throw std::invalid_argument("rotate_left: qubit " + std::to_string(j) + " is not the left child of " +
                                    std::to_string(k));
    }
    TernaryTree out = tree;
    auto above = tree.parent(k);
    Children jc = tree.children(j);
    Children kc = tree.children(k);
    out.children_[j] = {jc[kLeft], jc[kMiddle], TreeSlot::qubit(k)};
    out.children_[k] = {jc[kRight], kc[kMiddle], kc[kRight]};
    if (above) {
        out.children_[above->first][above->second] = TreeSlot::qubit(j);
    } else {
        out.root_ = j;
    }
    out.validate();
    return out;
}

/// Node j must be the middle child of node k. Afterwards k holds
/// (left, j's right subtree, j) and j holds (j's middle, j's left, k's
/// right). Equivalent to conjugation by CNOT_{jk}.
inline TernaryTree rotate_middle(const TernaryTree &tree, uint32_t j, uint32_t k) {
    if (k >= tree.num_qubits() || j >= tree.num_qubits() || tree.child(k, kMiddle) != TreeSlot::qubit(j)) {
        throw std::invalid_argument("rotate_middle: qubit " + std::to_string(j) + " is not the middle child of " +
                                    std::to_string(k));
    }
    TernaryTree out = tree;
    Children jc = tree.children(j);
    Children kc = tree.children(k);
    out.children_[k] = {kc[kLeft], jc[kRight], TreeSlot::qubit(j)};
    out.children_[j] = {jc[kMiddle], jc[kLeft], kc[kRight]};
    out.validate();
    return out;
}

/// Renames qubit q to new_label[q].
inline TernaryTree relabel_qubits(const TernaryTree &tree, const std::vector<uint32_t> &new_label) {
    size_t n = tree.num_qubits();
    if (new_label.size() != n) {
        throw std::invalid_argument("relabel_qubits: label vector has wrong size");
    }
    std::vector<Children> children(n);
    for (uint32_t q = 0; q < n; ++q) {
        Children c = tree.children(q);
        for (auto &slot : c) {
            if (slot.is_qubit()) {
                slot.index = new_label.at(slot.index);
            }
        }
        children.at(new_label[q]) = c;
    }
    return TernaryTree(new_label.at(tree.root()), std::move(children));
}

/// Recovers the labeled tree whose compilation equals `m` up to signs, if
/// `m` is a tree mapping with its redundant leaf.
inline std::optional<TernaryTree> tree_from_mapping(const MajoranaMapping &m) {
    size_t n = m.n;
    if (n == 0 || m.paulis.size() != 2 * n + 1) {
        return std::nullopt;
    }
    std::vector<Children> children(n);
    std::vector<bool> used(n, false);
    // Returns the slot for a group of leaves whose strings agree above this point.
    std::function<std::optional<TreeSlot>(const std::vector<uint32_t> &, std::vector<bool> &)> build =
        [&](const std::vector<uint32_t> &group, std::vector<bool> &removed) -> std::optional<TreeSlot> {
        std::optional<uint32_t> root;
        size_t remaining = 0;
        for (uint32_t q = 0; q < n; ++q) {
            if (removed[q]) {
                continue;
            }
            bool in_all = true;
            bool in_any = false;
            for (uint32_t j : group) {
                bool present = m.paulis[j].x(q) || m.paulis[j].z(q);
                in_all = in_all && present;
                in_any = in_any || present;
            }
            remaining += in_any;
            if (in_all && in_any) {
                if (root) {
                    return std::nullopt;
                }
                root = q;
            }
        }
        if (group.size() == 1 && remaining == 0) {
            return TreeSlot::leaf(group[0]);
        }
        if (!root || used[*root]) {
            return std::nullopt;
        }
        used[*root] = true;
        std::array<std::vector<uint32_t>, 3> parts;
        for (uint32_t j : group) {
            char letter = m.paulis[j].letter(*root);
            parts[letter == 'X' ? kLeft : letter == 'Y' ? kMiddle : kRight].push_back(j);
        }
        removed[*root] = true;
        for (int s = 0; s < 3; ++s) {
            if (parts[s].empty()) {
                return std::nullopt;
            }
            auto sub = build(parts[s], removed);
            if (!sub) {
                return std::nullopt;
            }
            children[*root][s] = *sub;
        }
        removed[*root] = false;
        return TreeSlot::qubit(*root);
    };
    std::vector<uint32_t> all(2 * n + 1);
    for (uint32_t j = 0; j < all.size(); ++j) {
        all[j] = j;
    }
    std::vector<bool> removed(n, false);
    auto top = build(all, removed);
    if (!top || top->is_leaf()) {
        return std::nullopt;
    }
    try {
        TernaryTree tree(top->index, std::move(children));
        if (!same_up_to_sign(compile(tree), m)) {
            return std::nullopt;
        }
        return tree;
    } catch (const TreeStructureError &) {
        return std::nullopt;
    }
}

/// Mean leaf depth over gamma_1..gamma_{2n}, i.e. the average weight of the
/// single creation and annihilation operators.
inline Rational single_op_avg_weight(const TernaryTree &tree) {
    auto depths = tree.leaf_depths();
    int64_t total = 0;
    for (size_t j = 0; j + 1 < depths.size(); ++j) {
        total += static_cast<int64_t>(depths[j]);
    }
    return Rational(total, static_cast<int64_t>(2 * tree.num_qubits()));
}

}  // namespace cliffmap
