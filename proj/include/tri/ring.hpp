#pragma once

// Rings carrying triangle labels: P2(Z) in the <1>,<-1> basis, its orthogonal
// (idempotent) coordinates, and Z x Z x Z for the vertex-aware embedding.

#include <compare>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "tri/checked.hpp"

namespace tri {

/// x<1> + y<-1>.
struct RingElem2 {
  Int x = 0;
  Int y = 0;
  friend bool operator==(const RingElem2&, const RingElem2&) = default;
};

/// s2*A2 + s1*A1 with A2 = (<1>+<-1>)/2 and A1 = (<1>-<-1>)/2.
struct OrthoPair {
  Int s2 = 0;
  Int s1 = 0;
  friend bool operator==(const OrthoPair&, const OrthoPair&) = default;
};

/// Components (i=2, i=1, i=0).
struct TriVec3 {
  Int a = 0;
  Int b = 0;
  Int c = 0;
  friend bool operator==(const TriVec3&, const TriVec3&) = default;
};

/// sign * <n>. sign=-1 is the red (negated) triangle, n<0 the mirrored one.
struct TriangleLabel {
  int sign = 1;
  Int n = 0;
  friend bool operator==(const TriangleLabel&, const TriangleLabel&) = default;
};

class ParityError : public std::domain_error {
 public:
  explicit ParityError(const std::string& what) : std::domain_error(what) {}
};

RingElem2 operator+(const RingElem2& a, const RingElem2& b);
RingElem2 operator-(const RingElem2& a, const RingElem2& b);
RingElem2 operator*(const RingElem2& a, const RingElem2& b);
RingElem2 operator-(const RingElem2& a);

OrthoPair operator+(const OrthoPair& a, const OrthoPair& b);
OrthoPair operator-(const OrthoPair& a, const OrthoPair& b);
OrthoPair operator*(const OrthoPair& a, const OrthoPair& b);
OrthoPair operator*(Int k, const OrthoPair& a);

TriVec3 operator+(const TriVec3& a, const TriVec3& b);
TriVec3 operator-(const TriVec3& a, const TriVec3& b);
TriVec3 operator*(const TriVec3& a, const TriVec3& b);
TriVec3 operator*(Int k, const TriVec3& a);
TriVec3 operator-(const TriVec3& a);

inline RingElem2 add2(const RingElem2& a, const RingElem2& b) { return a + b; }
inline RingElem2 mul2(const RingElem2& a, const RingElem2& b) { return a * b; }

inline constexpr RingElem2 kRingZero{0, 0};
inline constexpr RingElem2 kRingOne{1, 0};
inline constexpr TriVec3 kTriOne{1, 1, 1};

OrthoPair to_ortho(const RingElem2& a);
/// Throws ParityError when s2+s1 is odd.
RingElem2 from_ortho(const OrthoPair& p);

/// sign*(n(n+1)/2, n(n-1)/2) in the <1>,<-1> basis.
RingElem2 embed2_basis(const TriangleLabel& l);
/// sign*(n^2, n).
OrthoPair embed2(const TriangleLabel& l);
/// sign*(n^2, n, 1).
TriVec3 embed3(const TriangleLabel& l);

/// Membership in N2 = {±(n^2, n)}. (0,0) resolves to +<0>.
std::optional<TriangleLabel> is_n2(const OrthoPair& v);
/// Membership in N20 = {±(n^2, n, 1)}.
std::optional<TriangleLabel> is_n20(const TriVec3& v);

/// <n>*<m> = <nm>, cross-checked against mul2 of the basis embeddings.
TriangleLabel mul_label(Int n, Int m);

/// <b_{a,t}> = <2a+t> - 3<a+t> = <-a+t> - 3<t> = (a^2 - 2at - 2t^2, -a - 2t, -2).
TriVec3 b_vec(Int a, Int t);

std::string to_string(const TriangleLabel& l);
std::ostream& operator<<(std::ostream& os, const RingElem2& a);
std::ostream& operator<<(std::ostream& os, const OrthoPair& a);
std::ostream& operator<<(std::ostream& os, const TriVec3& a);
std::ostream& operator<<(std::ostream& os, const TriangleLabel& l);

}  // namespace tri
