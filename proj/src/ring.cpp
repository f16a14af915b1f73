#include "tri/ring.hpp"

#include <ostream>

namespace tri {

RingElem2 operator+(const RingElem2& a, const RingElem2& b) {
  return {checked_add(a.x, b.x), checked_add(a.y, b.y)};
}

RingElem2 operator-(const RingElem2& a, const RingElem2& b) {
  return {checked_sub(a.x, b.x), checked_sub(a.y, b.y)};
}

RingElem2 operator*(const RingElem2& a, const RingElem2& b) {
  return {checked_add(checked_mul(a.x, b.x), checked_mul(a.y, b.y)),
          checked_add(checked_mul(a.x, b.y), checked_mul(b.x, a.y))};
}

RingElem2 operator-(const RingElem2& a) { return {checked_neg(a.x), checked_neg(a.y)}; }

OrthoPair operator+(const OrthoPair& a, const OrthoPair& b) {
  return {checked_add(a.s2, b.s2), checked_add(a.s1, b.s1)};
}

OrthoPair operator-(const OrthoPair& a, const OrthoPair& b) {
  return {checked_sub(a.s2, b.s2), checked_sub(a.s1, b.s1)};
}

OrthoPair operator*(const OrthoPair& a, const OrthoPair& b) {
  return {checked_mul(a.s2, b.s2), checked_mul(a.s1, b.s1)};
}

OrthoPair operator*(Int k, const OrthoPair& a) { return {checked_mul(k, a.s2), checked_mul(k, a.s1)}; }

TriVec3 operator+(const TriVec3& a, const TriVec3& b) {
  return {checked_add(a.a, b.a), checked_add(a.b, b.b), checked_add(a.c, b.c)};
}

TriVec3 operator-(const TriVec3& a, const TriVec3& b) {
  return {checked_sub(a.a, b.a), checked_sub(a.b, b.b), checked_sub(a.c, b.c)};
}

TriVec3 operator*(const TriVec3& a, const TriVec3& b) {
  return {checked_mul(a.a, b.a), checked_mul(a.b, b.b), checked_mul(a.c, b.c)};
}

TriVec3 operator*(Int k, const TriVec3& a) {
  return {checked_mul(k, a.a), checked_mul(k, a.b), checked_mul(k, a.c)};
}

TriVec3 operator-(const TriVec3& a) { return {checked_neg(a.a), checked_neg(a.b), checked_neg(a.c)}; }

OrthoPair to_ortho(const RingElem2& a) { return {checked_add(a.x, a.y), checked_sub(a.x, a.y)}; }

RingElem2 from_ortho(const OrthoPair& p) {
  if (((p.s2 ^ p.s1) & 1) != 0) {
    throw ParityError("orthogonal pair (" + std::to_string(p.s2) + "," + std::to_string(p.s1) +
                      ") has odd coordinate sum");
  }
  const __int128 x = (static_cast<__int128>(p.s2) + p.s1) / 2;
  const __int128 y = (static_cast<__int128>(p.s2) - p.s1) / 2;
  if (x > INT64_MAX || x < INT64_MIN || y > INT64_MAX || y < INT64_MIN) {
    throw OverflowError("from_ortho: result out of range");
  }
  return {static_cast<Int>(x), static_cast<Int>(y)};
}

RingElem2 embed2_basis(const TriangleLabel& l) {
  RingElem2 r{triangular(l.n), triangular(checked_sub(l.n, 1))};
  return l.sign < 0 ? -r : r;
}

OrthoPair embed2(const TriangleLabel& l) {
  const OrthoPair r{checked_mul(l.n, l.n), l.n};
  return l.sign < 0 ? OrthoPair{-r.s2, -r.s1} : r;
}

TriVec3 embed3(const TriangleLabel& l) {
  const TriVec3 r{checked_mul(l.n, l.n), l.n, 1};
  return l.sign < 0 ? -r : r;
}

namespace {

bool square_equals(Int base, Int target) {
  Int sq;
  if (__builtin_mul_overflow(base, base, &sq)) return false;
  return sq == target;
}

}  // namespace

std::optional<TriangleLabel> is_n2(const OrthoPair& v) {
  if (square_equals(v.s1, v.s2)) return TriangleLabel{1, v.s1};
  if (v.s2 != INT64_MIN && square_equals(v.s1, -v.s2)) return TriangleLabel{-1, checked_neg(v.s1)};
  return std::nullopt;
}

std::optional<TriangleLabel> is_n20(const TriVec3& v) {
  if (v.c == 1 && square_equals(v.b, v.a)) return TriangleLabel{1, v.b};
  if (v.c == -1 && v.a != INT64_MIN && square_equals(v.b, -v.a)) return TriangleLabel{-1, checked_neg(v.b)};
  return std::nullopt;
}

TriangleLabel mul_label(Int n, Int m) {
  const TriangleLabel product{1, checked_mul(n, m)};
  // The product law must agree with ring multiplication of the embeddings.
  if (embed2_basis({1, n}) * embed2_basis({1, m}) != embed2_basis(product)) {
    throw std::logic_error("mul_label: product law disagrees with mul2");
  }
  return product;
}

TriVec3 b_vec(Int a, Int t) {
  const Int a2 = checked_mul(a, a);
  const Int two_at = checked_mul(2, checked_mul(a, t));
  const Int two_t2 = checked_mul(2, checked_mul(t, t));
  return {checked_sub(checked_sub(a2, two_at), two_t2), checked_sub(checked_neg(a), checked_mul(2, t)), -2};
}

std::string to_string(const TriangleLabel& l) {
  return std::string(l.sign < 0 ? "-" : "") + "<" + std::to_string(l.n) + ">";
}

std::ostream& operator<<(std::ostream& os, const RingElem2& a) { return os << "(" << a.x << "," << a.y << ")"; }
std::ostream& operator<<(std::ostream& os, const OrthoPair& a) { return os << "(" << a.s2 << "," << a.s1 << ")"; }
std::ostream& operator<<(std::ostream& os, const TriVec3& a) {
  return os << "(" << a.a << "," << a.b << "," << a.c << ")";
}
std::ostream& operator<<(std::ostream& os, const TriangleLabel& l) { return os << to_string(l); }

}  // namespace tri
