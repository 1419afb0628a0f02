#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <string_view>
#include <utility>

#include "curvesys/error.hpp"

namespace curvesys {

template <typename Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Mat2 = Eigen::Matrix<Scalar, 2, 2>;
template <typename Scalar>
using Point = std::complex<Scalar>;

inline constexpr double kGeomTol = 1e-9;
inline constexpr double kExactTol = 1e-12;

template <typename Scalar>
Scalar cross(const Vec2<Scalar>& u, const Vec2<Scalar>& v) {
  return u(0) * v(1) - u(1) * v(0);
}

/// Point of RP^1 = R u {inf} in homogeneous coordinates (x : y); y == 0 is infinity.
template <typename Scalar>
struct IdealPoint {
  Vec2<Scalar> h = Vec2<Scalar>(1, 0);

  static IdealPoint real(Scalar x) { return {Vec2<Scalar>(x, 1)}; }
  static IdealPoint infinity() { return {Vec2<Scalar>(1, 0)}; }

  bool is_infinity(Scalar tol = Scalar(kExactTol)) const {
    return std::abs(h(1)) <= tol * h.norm();
  }
  Scalar value() const { return h(0) / h(1); }
  Vec2<Scalar> unit() const { return h.normalized(); }

  template <typename Other>
  IdealPoint<Other> cast() const {
    return {h.template cast<Other>()};
  }
};

template <typename Scalar>
bool same_point(const IdealPoint<Scalar>& p, const IdealPoint<Scalar>& q,
                Scalar tol = Scalar(kExactTol)) {
  return std::abs(cross(p.h, q.h)) <= tol * p.h.norm() * q.h.norm();
}

enum class IsometryType { elliptic, parabolic, hyperbolic, glide_reflection, reflection };

inline std::string_view to_string(IsometryType t) {
  switch (t) {
    case IsometryType::elliptic: return "elliptic";
    case IsometryType::parabolic: return "parabolic";
    case IsometryType::hyperbolic: return "hyperbolic";
    case IsometryType::glide_reflection: return "glide_reflection";
    case IsometryType::reflection: return "reflection";
  }
  return "unknown";
}

/// Isometry of the upper half-plane: z -> M.z, or z -> M.conj(z) when reversing.
/// The matrix is scaled to |det| = 1; reversing maps have det = -1, which is exactly
/// the condition for z -> M.conj(z) to preserve the upper half-plane.
template <typename Scalar>
class Mobius {
 public:
  Mobius() : m_(Mat2<Scalar>::Identity()) {}
  Mobius(const Mat2<Scalar>& m, bool reversing) : m_(m), reversing_(reversing) { normalize(); }

  static Mobius from_coeffs(Scalar a, Scalar b, Scalar c, Scalar d, bool reversing) {
    Mat2<Scalar> m;
    m << a, b, c, d;
    return Mobius(m, reversing);
  }

  /// Projective map of RP^1 sending (p, q, r) to (p2, q2, r2); orientation is read off det.
  static Mobius from_three_points(const std::array<IdealPoint<Scalar>, 3>& src,
                                  const std::array<IdealPoint<Scalar>, 3>& dst) {
    Mat2<Scalar> a = frame_matrix(src), b = frame_matrix(dst);
    Mat2<Scalar> m = b * adjugate(a);
    return Mobius(m, m.determinant() < 0);
  }

  /// Anti-holomorphic involution fixing the geodesic with the given endpoints.
  static Mobius reflection(const IdealPoint<Scalar>& u, const IdealPoint<Scalar>& v) {
    Mat2<Scalar> basis;
    basis.col(0) = u.h;
    basis.col(1) = v.h;
    Mat2<Scalar> m = basis * Vec2<Scalar>(1, -1).asDiagonal() * adjugate(basis);
    return Mobius(m, true);
  }

  const Mat2<Scalar>& matrix() const { return m_; }
  bool reversing() const { return reversing_; }
  Scalar det() const { return m_.determinant(); }
  Scalar trace() const { return m_.trace(); }

  Mobius inverse() const { return Mobius(adjugate(m_), reversing_, Unit{}); }

  Mobius operator*(const Mobius& rhs) const {
    // conj commutes with real matrices, so composition is the plain product
    return Mobius(m_ * rhs.m_, reversing_ != rhs.reversing_, Unit{});
  }

  Point<Scalar> apply(const Point<Scalar>& z) const {
    const Point<Scalar> w = reversing_ ? std::conj(z) : z;
    const Point<Scalar> den = m_(1, 0) * w + m_(1, 1);
    const Point<Scalar> num = m_(0, 0) * w + m_(0, 1);
    if (std::abs(den) <= Scalar(kExactTol) * std::max(std::abs(num), Scalar(1)))
      throw Error(ErrorKind::pole_input, "interior point is sent to infinity");
    return num / den;
  }

  IdealPoint<Scalar> apply(const IdealPoint<Scalar>& p) const { return {m_ * p.h}; }

  bool is_identity(Scalar tol = Scalar(kGeomTol)) const {
    return !reversing_ && (m_ - Mat2<Scalar>::Identity()).cwiseAbs().maxCoeff() <= tol;
  }

  IsometryType classify(Scalar tol = Scalar(1e-8)) const {
    if (is_identity(tol)) throw Error(ErrorKind::identity_map, "identity has no type");
    const Scalar tr = std::abs(trace());
    if (reversing_) return tr <= tol ? IsometryType::reflection : IsometryType::glide_reflection;
    if (std::abs(tr - 2) <= tol) return IsometryType::parabolic;
    return tr < 2 ? IsometryType::elliptic : IsometryType::hyperbolic;
  }

  Scalar translation_length() const {
    const Scalar tr = std::abs(trace());
    if (reversing_) return 2 * std::asinh(tr / 2);
    return tr > 2 ? 2 * std::acosh(tr / 2) : Scalar(0);
  }

  /// Repelling and attracting boundary fixed points of a hyperbolic or glide map.
  std::pair<IdealPoint<Scalar>, IdealPoint<Scalar>> axis_endpoints() const {
    const Scalar tr = trace(), dt = reversing_ ? Scalar(-1) : Scalar(1);
    const Scalar disc = tr * tr - 4 * dt;
    if (disc <= 0) throw Error(ErrorKind::parabolic_class, "map has no axis");
    const Scalar root = std::sqrt(disc);
    // larger |eigenvalue| first
    const Scalar big = tr >= 0 ? (tr + root) / 2 : (tr - root) / 2;
    const Scalar small = dt / big;
    return {eigenvector(small), eigenvector(big)};
  }

  bool approx_equal(const Mobius& o, Scalar tol = Scalar(kGeomTol)) const {
    return reversing_ == o.reversing_ && (m_ - o.m_).cwiseAbs().maxCoeff() <= tol;
  }

 private:
  struct Unit {};
  // operands already have |det| = 1; recomputing det on long products only adds cancellation error
  Mobius(const Mat2<Scalar>& m, bool reversing, Unit) : m_(m), reversing_(reversing) { fix_sign(); }

  static Mat2<Scalar> adjugate(const Mat2<Scalar>& m) {
    Mat2<Scalar> r;
    r << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
    return r;
  }

  static Mat2<Scalar> frame_matrix(const std::array<IdealPoint<Scalar>, 3>& pts) {
    // columns scaled so that (1:0) -> p, (0:1) -> q, (1:1) -> r
    const Vec2<Scalar>& p = pts[0].h;
    const Vec2<Scalar>& q = pts[1].h;
    const Vec2<Scalar>& r = pts[2].h;
    const Scalar dpq = cross(p, q);
    if (dpq == Scalar(0)) throw Error(ErrorKind::precondition, "frame points coincide");
    Mat2<Scalar> m;
    m.col(0) = p * (cross(r, q) / dpq);
    m.col(1) = q * (cross(p, r) / dpq);
    return m;
  }

  IdealPoint<Scalar> eigenvector(Scalar lambda) const {
    Vec2<Scalar> u(m_(0, 1), lambda - m_(0, 0));
    Vec2<Scalar> v(lambda - m_(1, 1), m_(1, 0));
    return {u.norm() >= v.norm() ? u : v};
  }

  void normalize() {
    Scalar dt = m_.determinant();
    if (!(std::abs(dt) > Scalar(0)))
      throw Error(ErrorKind::precondition, "singular coefficient matrix");
    if ((dt < 0) != reversing_)
      throw Error(ErrorKind::precondition, "determinant sign does not preserve the half-plane");
    m_ /= std::sqrt(std::abs(dt));
    fix_sign();
  }

  void fix_sign() {
    for (int k = 0; k < 4; ++k) {
      Scalar e = m_(k / 2, k % 2);
      if (std::abs(e) > Scalar(kExactTol)) {
        if (e < 0) m_ = -m_;
        break;
      }
    }
  }

  Mat2<Scalar> m_;
  bool reversing_ = false;
};

/// Oriented geodesic between two distinct ideal points.
template <typename Scalar>
struct Geodesic {
  IdealPoint<Scalar> from, to;

  /// Smaller real endpoint first, infinity last.
  Geodesic canonical() const {
    if (from.is_infinity()) return {to, from};
    if (to.is_infinity()) return *this;
    return from.value() <= to.value() ? *this : Geodesic{to, from};
  }
};

enum class Crossing { disjoint, cross, tie };

namespace detail {

template <typename Scalar>
Crossing interleave_at(const Vec2<Scalar>& a, const Vec2<Scalar>& b, const Vec2<Scalar>& c,
                       const Vec2<Scalar>& d, Scalar tol) {
  const Vec2<Scalar> ua = a.normalized(), ub = b.normalized(), uc = c.normalized(),
                     ud = d.normalized();
  const std::array<Scalar, 4> dets = {cross(ua, uc), cross(ub, ud), cross(ub, uc), cross(ua, ud)};
  for (Scalar x : dets)
    if (std::abs(x) <= tol) return Crossing::tie;
  const int neg = (dets[0] < 0) + (dets[1] < 0) + (dets[2] < 0) + (dets[3] < 0);
  return neg % 2 == 1 ? Crossing::cross : Crossing::disjoint;
}

}  // namespace detail

/// Do the endpoint pairs {a,b} and {c,d} separate each other on RP^1?
/// Near-ties are re-evaluated in extended precision; a shared endpoint is a tie.
template <typename Scalar>
Crossing interleave(const IdealPoint<Scalar>& a, const IdealPoint<Scalar>& b,
                    const IdealPoint<Scalar>& c, const IdealPoint<Scalar>& d) {
  Crossing r = detail::interleave_at<Scalar>(a.h, b.h, c.h, d.h, Scalar(kGeomTol));
  if (r != Crossing::tie) return r;
  using Wide = long double;
  return detail::interleave_at<Wide>(a.h.template cast<Wide>(), b.h.template cast<Wide>(),
                                     c.h.template cast<Wide>(), d.h.template cast<Wide>(),
                                     Wide(kExactTol));
}

/// Arc-length coordinate along an oriented geodesic, defined up to a fixed additive shift.
template <typename Scalar>
class GeodesicFrame {
 public:
  explicit GeodesicFrame(const Geodesic<Scalar>& g) : a_(g.from.unit()), b_(g.to.unit()) {}

  /// Parameter of the crossing with the geodesic (c, d); caller checks interleaving.
  Scalar crossing_param(const IdealPoint<Scalar>& c, const IdealPoint<Scalar>& d) const {
    const Vec2<Scalar> uc = c.unit(), ud = d.unit();
    const Scalar num = -cross(uc, a_) * cross(ud, a_);
    const Scalar den = cross(uc, b_) * cross(ud, b_);
    return std::log(num / den) / 2;
  }

  /// Parameter of the orthogonal projection of an interior point.
  Scalar param(const Point<Scalar>& z) const { return std::log(std::abs(to_frame(z))); }

  Point<Scalar> point(Scalar s) const {
    // inverse of z -> (a1 - a0 z... ) written out for the frame matrix [[a1,-a0],[b1,-b0]]
    const Point<Scalar> w(0, std::exp(s));
    const Point<Scalar> num = -b_(0) * w + a_(0);
    const Point<Scalar> den = -b_(1) * w + a_(1);
    Point<Scalar> z = num / den;
    return z.imag() < 0 ? std::conj(z) : z;
  }

  Point<Scalar> to_frame(const Point<Scalar>& z) const {
    return (a_(1) * z - a_(0)) / (b_(1) * z - b_(0));
  }

 private:
  Vec2<Scalar> a_, b_;
};

template <typename Scalar>
std::optional<Point<Scalar>> geodesic_intersection(const Geodesic<Scalar>& g1,
                                                   const Geodesic<Scalar>& g2) {
  if (interleave(g1.from, g1.to, g2.from, g2.to) != Crossing::cross) return std::nullopt;
  GeodesicFrame<Scalar> f(g1);
  return f.point(f.crossing_param(g2.from, g2.to));
}

template <typename Scalar>
Scalar distance(const Point<Scalar>& z, const Point<Scalar>& w) {
  const Scalar d2 = std::norm(z - w);
  return std::acosh(1 + d2 / (2 * z.imag() * w.imag()));
}

/// Height of z relative to the Ford horoball at the reduced fraction p/q (q = 0 is infinity);
/// z lies inside that horoball iff the height exceeds 1.
template <typename Scalar>
Scalar ford_height(const Point<Scalar>& z, const Vec2<Scalar>& pq) {
  return z.imag() / std::norm(pq(1) * z - pq(0));
}

using Mobiusd = Mobius<double>;
using IdealPointd = IdealPoint<double>;
using Geodesicd = Geodesic<double>;
using Pointd = Point<double>;

}  // namespace curvesys
