#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pog/address.hpp"

namespace pog {

// Contraction ratio rho = 1/(2+sqrt(2)) and the translation scale 1+sqrt(2).
inline const double kRho = 1.0 / (2.0 + std::sqrt(2.0));
inline const double kTrans = 1.0 + std::sqrt(2.0);
// Coincidence tolerance for point identity (see PointIndex).
inline constexpr double kPointTol = 1e-9;

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline double dist(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Fixed point of F_n: the unit-circle point at angle (5-2n)pi/8. These are the
// vertices of the level-0 octagon, so cell vertex k sits at angle (2k+1)pi/8
// from its center and side k (vertices k -> k+1) has outward normal (k+1)pi/4.
Point2 contraction_fixed_point(int n);

// F_n(p) = rho * (p + (1+sqrt 2) * (cos theta_n, sin theta_n)).
Point2 apply_contraction(int n, Point2 p);

struct CellOctagon {
    Address address;
    Point2 center;
    std::array<Point2, 8> vertices;  // clockwise when walked 0,7,6,... ; index k at angle (2k+1)pi/8

    std::pair<Point2, Point2> side(int k) const {
        return {vertices[k], vertices[(k + 1) % 8]};
    }
    std::array<std::pair<Point2, Point2>, 8> side_segments() const {
        std::array<std::pair<Point2, Point2>, 8> s;
        for (int k = 0; k < 8; ++k) s[k] = side(k);
        return s;
    }
};

CellOctagon cell_octagon(const Address& addr);

// Identification centers active at level m: the origin, the centers of all
// k-cells for k = 1..m-1, and the pseudo-cell centers (P offsets, rotated to
// the eight level-1 gaps, pushed down by F-words).
struct CenterSet {
    Point2 origin;
    std::map<int, std::vector<Point2>> cell_centers;  // level k -> centers of k-cells
    std::vector<Point2> pseudo_centers;

    std::size_t total() const {
        std::size_t n = 1 + pseudo_centers.size();
        for (auto& [k, v] : cell_centers) n += v.size();
        return n;
    }
};

// max_birth: keep only pseudo-centers whose square hole exists by that level
// (word length + offset depth + 2 <= max_birth); 0 keeps the spec truncation
// (offset depth <= m, word length <= m-1) with no birth pruning.
CenterSet center_catalog(int m, int max_birth = 0);

struct PlanarEmbedding {
    int level = 0;
    std::vector<CellOctagon> octagons;  // cell-index order
};

PlanarEmbedding build_embedding(int m);

// Quantized point interning: bucket key = round(coord / 1e-7), true-distance
// verification < 1e-9 over the 3x3 neighborhood of buckets.
class PointIndex {
public:
    // Returns the id of an existing point within kPointTol, or -1.
    std::int64_t lookup(Point2 p) const;
    // Returns an existing id or registers a fresh point.
    std::int64_t intern(Point2 p);

    Point2 at(std::int64_t id) const { return points_[static_cast<std::size_t>(id)]; }
    std::int64_t size() const { return static_cast<std::int64_t>(points_.size()); }

private:
    static std::uint64_t bucket_key(long qx, long qy);
    std::vector<Point2> points_;
    std::unordered_map<std::uint64_t, std::vector<std::int64_t>> buckets_;
};

}  // namespace pog
