#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace hikf {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(const Point2& a, const Point2& b) noexcept {
  return std::hypot(a.x - b.x, a.y - b.y);
}

/// Axis-aligned box [lo, hi].
struct Box2 {
  Point2 lo;
  Point2 hi;

  bool contains(const Point2& p) const noexcept {
    return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
  }
};

/// Finite 2D coordinates with a derived bounding box.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point2> coordinates);

  const std::vector<Point2>& coordinates() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  const Point2& operator[](std::size_t i) const { return coords_[i]; }
  const Box2& bounding_box() const noexcept { return bbox_; }

 private:
  std::vector<Point2> coords_;
  Box2 bbox_{};
};

/// Uniform rectilinear grid. Cells are indexed row-major with x fastest:
/// k = i + nx * j, centre at origin + ((i + 1/2) dx, (j + 1/2) dy).
class Grid2D {
 public:
  Grid2D(std::size_t nx, std::size_t ny, double dx, double dy, Point2 origin = {});

  std::size_t nx() const noexcept { return nx_; }
  std::size_t ny() const noexcept { return ny_; }
  double dx() const noexcept { return dx_; }
  double dy() const noexcept { return dy_; }
  Point2 origin() const noexcept { return origin_; }
  std::size_t cell_count() const noexcept { return nx_ * ny_; }

  std::size_t flat_index(std::size_t i, std::size_t j) const noexcept { return i + nx_ * j; }
  std::size_t column_of(std::size_t k) const noexcept { return k % nx_; }
  std::size_t row_of(std::size_t k) const noexcept { return k / nx_; }

  Point2 cell_center(std::size_t i, std::size_t j) const noexcept {
    return {origin_.x + (static_cast<double>(i) + 0.5) * dx_,
            origin_.y + (static_cast<double>(j) + 0.5) * dy_};
  }

  Box2 extent() const noexcept {
    return {origin_, {origin_.x + static_cast<double>(nx_) * dx_,
                      origin_.y + static_cast<double>(ny_) * dy_}};
  }

 private:
  std::size_t nx_;
  std::size_t ny_;
  double dx_;
  double dy_;
  Point2 origin_;
};

PointSet cell_centers(const Grid2D& grid);

}  // namespace hikf
