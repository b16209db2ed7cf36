#include "lcf/list_assignment.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace lcf {

ColorList normalize_list(ColorList list)
{
    for (Color c : list)
        if (c < 1)
            throw InvalidArgument("colors must be positive integers, got " + std::to_string(c));
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
        throw InvalidArgument("color repeated within a list");
    return list;
}

ListAssignment::ListAssignment(std::vector<ColorList> lists)
{
    lists_.reserve(lists.size());
    for (auto& l : lists)
        lists_.push_back(normalize_list(std::move(l)));
}

bool ListAssignment::is_k_assignment(std::size_t k) const
{
    return std::all_of(lists_.begin(), lists_.end(), [k](const ColorList& l) { return l.size() == k; });
}

ListAssignment ListAssignment::with_appended(ColorList list) const
{
    ListAssignment out = *this;
    out.lists_.push_back(normalize_list(std::move(list)));
    return out;
}

ListAssignment ListAssignment::constant(std::size_t n, int m)
{
    ColorList all(std::max(m, 0));
    std::iota(all.begin(), all.end(), 1);
    ListAssignment out;
    out.lists_.assign(n, all);
    return out;
}

} // namespace lcf
