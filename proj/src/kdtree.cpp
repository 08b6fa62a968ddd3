#include "paltx/kdtree.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace paltx {

namespace {

double coord(const Lab& p, int axis) {
    switch (axis) {
        case 0: return p.l;
        case 1: return p.a;
        default: return p.b;
    }
}

bool better(double d2, std::size_t index, const NearestHit& best) {
    return d2 < best.squared_distance || (d2 == best.squared_distance && index < best.index);
}

}  // namespace

NearestHit linear_nearest(std::span<const Lab> points, const Lab& query) {
    if (points.empty()) throw std::invalid_argument("linear_nearest: empty point set");
    NearestHit best{0, squared_distance(query, points[0])};
    for (std::size_t i = 1; i < points.size(); ++i) {
        const double d2 = squared_distance(query, points[i]);
        if (d2 < best.squared_distance) best = {i, d2};
    }
    return best;
}

KdTree::KdTree(std::span<const Lab> points) : points_(points.begin(), points.end()) {
    if (points_.size() > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max())) {
        throw std::length_error("KdTree: too many points");
    }
    std::vector<std::uint32_t> ids(points_.size());
    std::iota(ids.begin(), ids.end(), 0u);
    nodes_.reserve(points_.size());
    root_ = build(ids, 0);
}

std::int32_t KdTree::build(std::span<std::uint32_t> ids, int depth) {
    if (ids.empty()) return -1;
    const int axis = depth % 3;
    const std::size_t mid = ids.size() / 2;
    std::nth_element(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(mid), ids.end(),
                     [&](std::uint32_t x, std::uint32_t y) {
                         const double cx = coord(points_[x], axis);
                         const double cy = coord(points_[y], axis);
                         return cx < cy || (cx == cy && x < y);
                     });
    const auto self = static_cast<std::int32_t>(nodes_.size());
    nodes_.push_back({ids[mid], -1, -1, static_cast<std::uint8_t>(axis)});
    const std::int32_t left = build(ids.subspan(0, mid), depth + 1);
    const std::int32_t right = build(ids.subspan(mid + 1), depth + 1);
    nodes_[self].left = left;
    nodes_[self].right = right;
    return self;
}

NearestHit KdTree::nearest(const Lab& query) const {
    if (root_ < 0) throw std::logic_error("KdTree::nearest on empty tree");
    NearestHit best{std::numeric_limits<std::size_t>::max(), std::numeric_limits<double>::infinity()};
    search(root_, query, best);
    return best;
}

// Left subtree holds coordinates <= split, right subtree >= split. Points on
// the far side are at least |q - split| away along the axis, and rounding is
// monotone, so skipping when that bound exceeds the best distance is exact.
void KdTree::search(std::int32_t node_id, const Lab& q, NearestHit& best) const {
    const Node& node = nodes_[static_cast<std::size_t>(node_id)];
    const Lab& p = points_[node.point];
    const double d2 = squared_distance(q, p);
    if (better(d2, node.point, best)) best = {node.point, d2};

    const double diff = coord(q, node.axis) - coord(p, node.axis);
    const std::int32_t near = diff <= 0.0 ? node.left : node.right;
    const std::int32_t far = diff <= 0.0 ? node.right : node.left;
    if (near >= 0) search(near, q, best);
    if (far >= 0 && diff * diff <= best.squared_distance) search(far, q, best);
}

}  // namespace paltx
