#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace cgeom {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Base class for every error raised by the library.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input is lower-dimensional where a body (nonempty interior) is required.
class DegenerateBody : public GeometryError {
 public:
  DegenerateBody() : GeometryError("not full-dimensional") {}
  explicit DegenerateBody(const std::string& what) : GeometryError(what) {}
};

/// A measure violates a precondition (Minkowski conditions, evenness, ...).
class InvalidMeasure : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// The Minkowski solver did not reach its area tolerance.
class SolverStalled : public GeometryError {
 public:
  SolverStalled(const std::string& what, double residual, int iterations)
      : GeometryError(what), residual_(residual), iterations_(iterations) {}

  double residual() const { return residual_; }
  int iterations() const { return iterations_; }

 private:
  double residual_;
  int iterations_;
};

/// A unit vector in R^n.
class Direction {
 public:
  static constexpr double kUnitTolerance = 1e-12;

  /// Normalizes `v`; throws on a zero vector.
  static Direction normalize(const Vec& v);

  /// Wraps an already-unit vector; throws if |v| differs from 1 by more than 1e-12.
  explicit Direction(Vec unit);

  const Vec& coords() const { return coords_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_[i]; }

 private:
  struct Unchecked {};
  Direction(Vec v, Unchecked) : coords_(std::move(v)) {}

  Vec coords_;
};

/// Invertible n x n matrix acting on R^n.
class LinearMap {
 public:
  static constexpr double kMinDeterminant = 1e-10;

  explicit LinearMap(Mat matrix);

  static LinearMap identity(int n);
  static LinearMap scaling(int n, double r);
  static LinearMap diagonal(const Vec& d);
  /// Rotation by `angle` in the {x1, x2}-plane, fixing the remaining coordinates.
  static LinearMap rotation_x1x2(int n, double angle);

  const Mat& matrix() const { return matrix_; }
  double determinant() const { return determinant_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }

  Vec apply(const Vec& x) const { return matrix_ * x; }
  LinearMap inverse() const;
  /// phi^{-t}: inverse of the transpose.
  LinearMap inverse_transpose() const;
  LinearMap operator*(const LinearMap& rhs) const;
  /// Scalar multiple r * phi, r != 0.
  LinearMap scaled(double r) const;

 private:
  Mat matrix_;
  double determinant_;
};

}  // namespace cgeom
