#pragma once

#include <cmath>
#include <string>

#include "dyncharge/dimension.hpp"
#include "dyncharge/errors.hpp"

namespace dyncharge {

// Magnitude plus exact dimension; the carrier of every parsed or computed
// physical value. Addition requires equal dimensions.
struct Quantity {
  double magnitude = 0.0;
  Dimension dim;
};

inline Quantity operator*(const Quantity& a, const Quantity& b) {
  return {a.magnitude * b.magnitude, dim_mul(a.dim, b.dim)};
}

inline Quantity operator/(const Quantity& a, const Quantity& b) {
  return {a.magnitude / b.magnitude, dim_div(a.dim, b.dim)};
}

inline Quantity operator*(double s, const Quantity& a) {
  return {s * a.magnitude, a.dim};
}

inline Quantity operator*(const Quantity& a, double s) { return s * a; }

inline Quantity operator/(const Quantity& a, double s) {
  return {a.magnitude / s, a.dim};
}

inline Quantity operator+(const Quantity& a, const Quantity& b) {
  if (!(a.dim == b.dim))
    throw DimensionError("cannot add quantities of dimension [" +
                         to_string(a.dim) + "] and [" + to_string(b.dim) + "]");
  return {a.magnitude + b.magnitude, a.dim};
}

inline Quantity operator-(const Quantity& a, const Quantity& b) {
  if (!(a.dim == b.dim))
    throw DimensionError("cannot subtract quantities of dimension [" +
                         to_string(a.dim) + "] and [" + to_string(b.dim) +
                         "]");
  return {a.magnitude - b.magnitude, a.dim};
}

inline Quantity pow(const Quantity& a, const Rational& p) {
  return {std::pow(a.magnitude, boost::rational_cast<double>(p)),
          dim_pow(a.dim, p)};
}

// Plain cartesian triple.
struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }

inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}

inline double norm(Vec3 a) {
  return std::sqrt(a.x * a.x + a.y * a.y + a.z * a.z);
}

// Vector whose components share one dimension.
struct VectorQuantity {
  Vec3 value;
  Dimension dim;
};

inline VectorQuantity operator+(const VectorQuantity& a,
                                const VectorQuantity& b) {
  if (!(a.dim == b.dim))
    throw DimensionError("cannot add vector quantities of dimension [" +
                         to_string(a.dim) + "] and [" + to_string(b.dim) +
                         "]");
  return {a.value + b.value, a.dim};
}

inline VectorQuantity cross(const VectorQuantity& a, const VectorQuantity& b) {
  return {cross(a.value, b.value), dim_mul(a.dim, b.dim)};
}

inline VectorQuantity operator*(const Quantity& s, const VectorQuantity& a) {
  return {s.magnitude * a.value, dim_mul(s.dim, a.dim)};
}

}  // namespace dyncharge
