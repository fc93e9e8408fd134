#pragma once

#include "hb/bigreal.hpp"

namespace hb {

struct Complex {
  BigReal re;
  BigReal im;

  Complex() = default;
  Complex(BigReal r) : re(std::move(r)), im(0L) {}
  Complex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}

  static Complex i() { return {BigReal(0L), BigReal(1L)}; }
  static Complex polar(const BigReal& r, const BigReal& theta) { return {r * cos(theta), r * sin(theta)}; }

  Complex conj() const { return {re, -im}; }
  BigReal norm2() const { return re * re + im * im; }
  BigReal abs() const { return sqrt(norm2()); }
  BigReal arg() const { return atan2(im, re); }

  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) { return *this = Complex{re * o.re - im * o.im, re * o.im + im * o.re}; }
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex operator*(const Complex& a, const BigReal& s) { return {a.re * s, a.im * s}; }
inline Complex operator*(const BigReal& s, const Complex& a) { return a * s; }
inline Complex operator/(const Complex& a, const BigReal& s) { return {a.re / s, a.im / s}; }
inline Complex operator/(const Complex& a, const Complex& b) {
  BigReal d = b.norm2();
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

inline Complex exp(const Complex& z) { return Complex::polar(exp(z.re), z.im); }
inline Complex sqrt(const Complex& z) { return Complex::polar(sqrt(z.abs()), z.arg() / 2); }
inline BigReal abs(const Complex& z) { return z.abs(); }

}  // namespace hb
