#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "bosonstar/errors.hpp"
#include "bosonstar/grid.hpp"

namespace bosonstar {

/// Which variable the samples of a field are attached to.
enum class Space { position, frequency };

namespace detail {
inline bool is_finite(double v) { return std::isfinite(v); }
inline bool is_finite(std::complex<double> v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}
}  // namespace detail

/**
 * Samples of a rotation-invariant function on the nodes of a RadialGrid.
 *
 * Position fields live on r_j, frequency fields on xi_k. Values are finite
 * and there is exactly one per node; both are checked on construction and
 * preserved by every member operation.
 */
template <Space S, typename T>
class Field {
 public:
  using value_type = T;
  static constexpr Space space = S;

  Field(RadialGrid grid, std::vector<T> values)
      : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != grid_.size()) {
      throw InvalidArgument("field: " + std::to_string(values_.size()) +
                            " samples for a grid of " + std::to_string(grid_.size()) +
                            " nodes");
    }
    for (std::size_t j = 0; j < values_.size(); ++j) {
      if (!detail::is_finite(values_[j])) {
        throw InvalidArgument("field: non-finite sample at node " + std::to_string(j + 1));
      }
    }
  }

  static Field zeros(RadialGrid grid) {
    std::vector<T> v(grid.size(), T{});
    return Field(std::move(grid), std::move(v));
  }

  /// Evaluates fn at every node coordinate.
  template <typename Fn>
  static Field sample(RadialGrid grid, Fn&& fn) {
    const auto x = coordinates_of(grid);
    std::vector<T> v(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) v[j] = static_cast<T>(fn(x[j]));
    return Field(std::move(grid), std::move(v));
  }

  const RadialGrid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const T> values() const noexcept { return values_; }
  const T& operator[](std::size_t j) const { return values_[j]; }

  /// r_j for position fields, xi_k for frequency fields.
  std::span<const double> coordinates() const noexcept { return coordinates_of(grid_); }

  Field& operator+=(const Field& o) {
    require_same_grid(grid_, o.grid_, "field +=");
    for (std::size_t j = 0; j < values_.size(); ++j) values_[j] += o.values_[j];
    return *this;
  }
  Field& operator-=(const Field& o) {
    require_same_grid(grid_, o.grid_, "field -=");
    for (std::size_t j = 0; j < values_.size(); ++j) values_[j] -= o.values_[j];
    return *this;
  }
  Field& operator*=(T c) {
    for (auto& v : values_) v *= c;
    return *this;
  }

  friend Field operator+(Field a, const Field& b) { return a += b; }
  friend Field operator-(Field a, const Field& b) { return a -= b; }
  friend Field operator*(T c, Field a) { return a *= c; }
  friend Field operator*(Field a, T c) { return a *= c; }

  /// Pointwise product.
  friend Field operator*(const Field& a, const Field& b) {
    require_same_grid(a.grid_, b.grid_, "field product");
    std::vector<T> v(a.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = a.values_[j] * b.values_[j];
    return Field(a.grid_, std::move(v));
  }

  /// Applies fn to every sample; the result must stay finite.
  template <typename Fn>
  auto map(Fn&& fn) const {
    using U = std::decay_t<decltype(fn(std::declval<T>()))>;
    std::vector<U> v(values_.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = fn(values_[j]);
    return Field<S, U>(grid_, std::move(v));
  }

 private:
  static std::span<const double> coordinates_of(const RadialGrid& g) noexcept {
    if constexpr (S == Space::position) {
      return g.r();
    } else {
      return g.xi();
    }
  }

  RadialGrid grid_;
  std::vector<T> values_;
};

using RadialField = Field<Space::position, double>;
using SpectralField = Field<Space::frequency, double>;
using ComplexRadialField = Field<Space::position, std::complex<double>>;
using ComplexSpectralField = Field<Space::frequency, std::complex<double>>;

/// Real part, imaginary part and modulus of a complex field.
template <Space S>
Field<S, double> real_part(const Field<S, std::complex<double>>& u) {
  return u.map([](std::complex<double> z) { return z.real(); });
}
template <Space S>
Field<S, double> imag_part(const Field<S, std::complex<double>>& u) {
  return u.map([](std::complex<double> z) { return z.imag(); });
}
template <Space S>
Field<S, double> modulus(const Field<S, std::complex<double>>& u) {
  return u.map([](std::complex<double> z) { return std::abs(z); });
}
template <Space S>
Field<S, std::complex<double>> complexify(const Field<S, double>& u) {
  return u.map([](double x) { return std::complex<double>(x, 0.0); });
}

}  // namespace bosonstar
