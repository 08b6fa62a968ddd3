#pragma once

#include "paltx/colorspace.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace paltx {

struct NearestHit {
    std::size_t index = 0;
    double squared_distance = 0.0;
};

/// Exact nearest-neighbour index over a fixed set of Lab points.
///
/// Queries return the point of minimum squared distance; among equal
/// distances the lowest point index wins, so results are identical to a
/// linear scan in index order.
class KdTree {
public:
    KdTree() = default;
    explicit KdTree(std::span<const Lab> points);

    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }

    /// Precondition: !empty().
    NearestHit nearest(const Lab& query) const;

private:
    struct Node {
        std::uint32_t point = 0;
        std::int32_t left = -1;
        std::int32_t right = -1;
        std::uint8_t axis = 0;
    };

    std::int32_t build(std::span<std::uint32_t> ids, int depth);
    void search(std::int32_t node, const Lab& q, NearestHit& best) const;

    std::vector<Lab> points_;
    std::vector<Node> nodes_;
    std::int32_t root_ = -1;
};

/// Reference implementation used for small sets and by tests.
NearestHit linear_nearest(std::span<const Lab> points, const Lab& query);

}  // namespace paltx
