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

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffmap/majorana_mapping.hpp"
#include "cliffmap/ternary_tree.hpp"

namespace cliffmap {

inline constexpr size_t kDefaultShapeBound = 6;
inline constexpr size_t kDefaultMappingBound = 4;

/// Thrown when an enumeration is requested beyond its configured bound.
class EnumerationBoundError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

// Shape codes: "." is a leaf and "(abc)" a parent with children a, b, c.
// A parent with s descendants-or-self has code length 4s+1, so ordering by
// (length, text) orders by size first and puts leaves before parents.
inline bool code_less(const std::string &a, const std::string &b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
}

inline size_t code_parents(const std::string &code) {
    return (code.size() - 1) / 4;
}

inline TreeShape shape_from_code(const std::string &code) {
    TreeShape shape;
    size_t pos = 0;
    std::function<int32_t()> parse = [&]() -> int32_t {
        if (code.at(pos) == '.') {
            ++pos;
            return -1;
        }
        if (code.at(pos) != '(') {
            throw std::invalid_argument("malformed shape code");
        }
        ++pos;
        auto id = static_cast<int32_t>(shape.kids.size());
        shape.kids.push_back({-1, -1, -1});
        for (int s = 0; s < 3; ++s) {
            int32_t c = parse();
            shape.kids[id][s] = c;
        }
        if (code.at(pos) != ')') {
            throw std::invalid_argument("malformed shape code");
        }
        ++pos;
        return id;
    };
    parse();
    return shape;
}

}  // namespace detail

/// Code of the shape with every parent's children sorted: leaves first,
/// then parent subtrees by size and code. Two shapes are equal modulo child
/// order exactly when their canonical codes match.
inline std::string canonical_code(const TreeShape &shape) {
    std::function<std::string(int32_t)> code = [&](int32_t v) -> std::string {
        if (v < 0) {
            return ".";
        }
        std::array<std::string, 3> parts;
        for (int s = 0; s < 3; ++s) {
            parts[s] = code(shape.kids[v][s]);
        }
        std::sort(parts.begin(), parts.end(), detail::code_less);
        return "(" + parts[0] + parts[1] + parts[2] + ")";
    };
    return code(0);
}

inline std::string canonical_code(const TernaryTree &tree) {
    return canonical_code(shape_of(tree));
}

/// One representative per child-order equivalence class of full ternary
/// trees with n parents, in canonical flushed-right form (leaf children to
/// the left of parent children), ordered by canonical code.
inline std::vector<TreeShape> enumerate_shapes(size_t n, size_t bound = kDefaultShapeBound) {
    if (n == 0) {
        throw std::domain_error("shape enumeration needs n >= 1");
    }
    if (n > bound) {
        throw EnumerationBoundError("shape enumeration for n=" + std::to_string(n) + " exceeds the bound " +
                                    std::to_string(bound) + "; raise the bound explicitly");
    }
    // by_size[s] holds the canonical codes with s parents, sorted.
    std::vector<std::vector<std::string>> by_size{{"."}};
    for (size_t size = 1; size <= n; ++size) {
        std::vector<std::string> all;
        for (size_t s = 0; s < size; ++s) {
            all.insert(all.end(), by_size[s].begin(), by_size[s].end());
        }
        std::sort(all.begin(), all.end(), detail::code_less);
        std::vector<std::string> codes;
        for (size_t a = 0; a < all.size(); ++a) {
            for (size_t b = a; b < all.size(); ++b) {
                for (size_t c = b; c < all.size(); ++c) {
                    size_t parents = detail::code_parents(all[a]) + detail::code_parents(all[b]) +
                                     detail::code_parents(all[c]);
                    if (parents + 1 == size) {
                        codes.push_back("(" + all[a] + all[b] + all[c] + ")");
                    }
                }
            }
        }
        std::sort(codes.begin(), codes.end(), detail::code_less);
        by_size.push_back(std::move(codes));
    }
    std::vector<TreeShape> shapes;
    for (const auto &code : by_size[n]) {
        shapes.push_back(detail::shape_from_code(code));
    }
    return shapes;
}

/// Walks every (canonical shape, leaf labeling) pair on n qubits: each shape
/// is labeled in inorder and its 2n+1 leaf positions receive every
/// permutation of the Majorana labels. Single consumer.
class MappingEnumerator {
   public:
    explicit MappingEnumerator(size_t n, size_t bound = kDefaultMappingBound) : n_(n) {
        if (n > bound) {
            throw EnumerationBoundError("mapping enumeration for n=" + std::to_string(n) + " exceeds the bound " +
                                        std::to_string(bound) + "; raise the bound explicitly");
        }
        shapes_ = enumerate_shapes(n, std::max(n, kDefaultShapeBound));
        labels_.resize(2 * n + 1);
        load_shape(0);
    }

    /// Advances to the next mapping; false once every pair has been visited.
    /// The first call positions on the first mapping.
    bool next() {
        if (!started_) {
            started_ = true;
            ++count_;
            return true;
        }
        if (std::next_permutation(labels_.begin(), labels_.end())) {
            ++count_;
            return true;
        }
        if (shape_index_ + 1 >= shapes_.size()) {
            return false;
        }
        load_shape(shape_index_ + 1);
        ++count_;
        return true;
    }

    size_t num_qubits() const {
        return n_;
    }
    size_t shape_index() const {
        return shape_index_;
    }
    size_t num_shapes() const {
        return shapes_.size();
    }
    uint64_t count() const {
        return count_;
    }

    /// labels()[p] is the Majorana label of the p-th leaf from the left.
    const std::vector<uint32_t> &labels() const {
        return labels_;
    }
    /// Pauli string of the p-th leaf from the left.
    const std::vector<PauliString> &position_strings() const {
        return position_strings_;
    }

    MajoranaMapping mapping() const {
        MajoranaMapping m;
        m.n = n_;
        m.includes_redundant = true;
        m.paulis.resize(2 * n_ + 1);
        for (size_t p = 0; p < labels_.size(); ++p) {
            m.paulis[labels_[p]] = position_strings_[p];
        }
        return m;
    }

    TernaryTree tree() const {
        std::vector<Children> children = base_.all_children();
        for (auto &c : children) {
            for (auto &slot : c) {
                if (slot.is_leaf()) {
                    slot.index = labels_[slot.index];
                }
            }
        }
        return TernaryTree(base_.root(), std::move(children));
    }

   private:
    void load_shape(size_t index) {
        shape_index_ = index;
        base_ = label_inorder(shapes_[index]);
        std::iota(labels_.begin(), labels_.end(), 0u);
        // label_inorder numbers leaves left to right, so position == base label.
        position_strings_ = compile(base_).paulis;
    }

    size_t n_;
    std::vector<TreeShape> shapes_;
    size_t shape_index_ = 0;
    TernaryTree base_{0, {Children{TreeSlot::leaf(0), TreeSlot::leaf(1), TreeSlot::leaf(2)}}};
    std::vector<uint32_t> labels_;
    std::vector<PauliString> position_strings_;
    bool started_ = false;
    uint64_t count_ = 0;
};

}  // namespace cliffmap
