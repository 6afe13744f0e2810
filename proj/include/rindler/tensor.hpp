#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace rindler {

using Vec3 = std::array<double, 3>;

// Cartesian axes of the two-atom frame: x is the acceleration direction,
// z the separation direction.
enum Axis : std::size_t { X = 0, Y = 1, Z = 2 };

inline constexpr Vec3 kAccelerationAxis{1.0, 0.0, 0.0}; // q
inline constexpr Vec3 kSeparationAxis{0.0, 0.0, 1.0};   // n

template <typename T> struct BasicTensor3 {
  std::array<std::array<T, 3>, 3> entries{};

  constexpr T &operator()(std::size_t l, std::size_t m) { return entries[l][m]; }
  constexpr const T &operator()(std::size_t l, std::size_t m) const { return entries[l][m]; }

  constexpr BasicTensor3 &operator+=(const BasicTensor3 &o) {
    for (std::size_t l = 0; l < 3; ++l)
      for (std::size_t m = 0; m < 3; ++m)
        entries[l][m] += o.entries[l][m];
    return *this;
  }
  constexpr BasicTensor3 &operator-=(const BasicTensor3 &o) {
    for (std::size_t l = 0; l < 3; ++l)
      for (std::size_t m = 0; m < 3; ++m)
        entries[l][m] -= o.entries[l][m];
    return *this;
  }
  constexpr BasicTensor3 &operator*=(T s) {
    for (auto &row : entries)
      for (auto &v : row)
        v *= s;
    return *this;
  }

  friend constexpr BasicTensor3 operator+(BasicTensor3 a, const BasicTensor3 &b) { return a += b; }
  friend constexpr BasicTensor3 operator-(BasicTensor3 a, const BasicTensor3 &b) { return a -= b; }
  friend constexpr BasicTensor3 operator*(BasicTensor3 a, T s) { return a *= s; }
  friend constexpr BasicTensor3 operator*(T s, BasicTensor3 a) { return a *= s; }
  friend constexpr bool operator==(const BasicTensor3 &, const BasicTensor3 &) = default;

  constexpr BasicTensor3 transposed() const {
    BasicTensor3 t;
    for (std::size_t l = 0; l < 3; ++l)
      for (std::size_t m = 0; m < 3; ++m)
        t.entries[m][l] = entries[l][m];
    return t;
  }

  static constexpr BasicTensor3 diagonal(T xx, T yy, T zz) {
    BasicTensor3 t;
    t.entries[0][0] = xx;
    t.entries[1][1] = yy;
    t.entries[2][2] = zz;
    return t;
  }
};

using Tensor3 = BasicTensor3<double>;
using ComplexTensor3 = BasicTensor3<std::complex<double>>;

// a_l T_lm b_m
inline double contract(const Vec3 &a, const Tensor3 &t, const Vec3 &b) {
  double s = 0.0;
  for (std::size_t l = 0; l < 3; ++l)
    for (std::size_t m = 0; m < 3; ++m)
      s += a[l] * t(l, m) * b[m];
  return s;
}

inline Tensor3 real_part(const ComplexTensor3 &t) {
  Tensor3 r;
  for (std::size_t l = 0; l < 3; ++l)
    for (std::size_t m = 0; m < 3; ++m)
      r(l, m) = t(l, m).real();
  return r;
}

inline Tensor3 imag_part(const ComplexTensor3 &t) {
  Tensor3 r;
  for (std::size_t l = 0; l < 3; ++l)
    for (std::size_t m = 0; m < 3; ++m)
      r(l, m) = t(l, m).imag();
  return r;
}

// The five entries that the two-atom geometry allows to be nonzero.
inline constexpr std::array<std::array<std::size_t, 2>, 5> kActiveComponents{
    {{X, X}, {Y, Y}, {Z, Z}, {X, Z}, {Z, X}}};

inline constexpr bool is_active_component(std::size_t l, std::size_t m) {
  return l == m || (l == X && m == Z) || (l == Z && m == X);
}

// True when every entry outside xx, yy, zz, xz, zx is exactly zero.
template <typename T> bool has_two_atom_sparsity(const BasicTensor3<T> &t) {
  for (std::size_t l = 0; l < 3; ++l)
    for (std::size_t m = 0; m < 3; ++m)
      if (!is_active_component(l, m) && t(l, m) != T{})
        return false;
  return true;
}

inline const char *component_name(std::size_t l, std::size_t m) {
  static constexpr const char *names[3][3] = {
      {"xx", "xy", "xz"}, {"yx", "yy", "yz"}, {"zx", "zy", "zz"}};
  return names[l][m];
}

} // namespace rindler
