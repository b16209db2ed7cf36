#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "lcf/common.hpp"

namespace lcf {

using ColorList = std::vector<Color>;

/// One color list per vertex. Lists are kept sorted and duplicate-free;
/// colors must be positive.
class ListAssignment {
public:
    ListAssignment() = default;
    explicit ListAssignment(std::vector<ColorList> lists);
    ListAssignment(std::initializer_list<ColorList> lists) : ListAssignment(std::vector<ColorList>(lists)) {}

    std::size_t size() const { return lists_.size(); }
    const ColorList& operator[](std::size_t v) const { return lists_[v]; }
    const std::vector<ColorList>& lists() const { return lists_; }

    /// True when every list has exactly k colors.
    bool is_k_assignment(std::size_t k) const;

    /// Same lists with one extra vertex appended.
    ListAssignment with_appended(ColorList list) const;

    /// Constant assignment {1..m} on every one of n vertices.
    static ListAssignment constant(std::size_t n, int m);

    auto operator<=>(const ListAssignment&) const = default;

private:
    std::vector<ColorList> lists_;
};

ColorList normalize_list(ColorList list);

} // namespace lcf
