#include "cgeom/types.hpp"

#include <cmath>

namespace cgeom {

Direction Direction::normalize(const Vec& v) {
  const double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw GeometryError("direction must be a nonzero finite vector");
  }
  return Direction(v / norm, Unchecked{});
}

Direction::Direction(Vec unit) : coords_(std::move(unit)) {
  if (std::abs(coords_.norm() - 1.0) > kUnitTolerance) {
    throw GeometryError("direction is not a unit vector");
  }
}

LinearMap::LinearMap(Mat matrix) : matrix_(std::move(matrix)), determinant_(0.0) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1) {
    throw GeometryError("linear map must be square");
  }
  determinant_ = matrix_.determinant();
  if (!(std::abs(determinant_) > kMinDeterminant)) {
    throw GeometryError("singular map");
  }
}

LinearMap LinearMap::identity(int n) { return LinearMap(Mat::Identity(n, n)); }

LinearMap LinearMap::scaling(int n, double r) { return LinearMap(r * Mat::Identity(n, n)); }

LinearMap LinearMap::diagonal(const Vec& d) { return LinearMap(Mat(d.asDiagonal())); }

LinearMap LinearMap::rotation_x1x2(int n, double angle) {
  Mat m = Mat::Identity(n, n);
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  m(0, 0) = c;
  m(0, 1) = -s;
  m(1, 0) = s;
  m(1, 1) = c;
  return LinearMap(std::move(m));
}

LinearMap LinearMap::inverse() const { return LinearMap(matrix_.inverse()); }

LinearMap LinearMap::inverse_transpose() const {
  return LinearMap(matrix_.transpose().inverse());
}

LinearMap LinearMap::operator*(const LinearMap& rhs) const {
  return LinearMap(matrix_ * rhs.matrix_);
}

LinearMap LinearMap::scaled(double r) const { return LinearMap(r * matrix_); }

}  // namespace cgeom
