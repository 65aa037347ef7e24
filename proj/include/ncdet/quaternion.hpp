#pragma once

// Generalized quaternion algebra H(a,b) over a field F with basis {1,i,j,k}:
//   i^2 = a, j^2 = b, k^2 = -ab
//   ij = k = -ji, ik = aj = -ki, kj = bi = -jk

#include <array>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ncdet/error.hpp"
#include "ncdet/scalar.hpp"

namespace ncdet {

template <class F>
struct AlgebraParams {
  F a;
  F b;
  F ab;  // cached product, used by the multiplication kernel
};

/// Shared handle to the parameters (a, b) of H(a,b). Cheap to copy.
template <class F>
class Algebra {
public:
  using traits = scalar_traits<F>;

  Algebra(F a, F b) {
    if (traits::is_zero(a) || traits::is_zero(b))
      throw invalid_algebra("H(a,b) requires a != 0 and b != 0");
    F ab = a * b;
    params_ = std::make_shared<const AlgebraParams<F>>(AlgebraParams<F>{std::move(a), std::move(b), std::move(ab)});
  }

  /// Hamilton quaternions H(-1,-1).
  static Algebra hamilton() { return Algebra(traits::from_int(-1), traits::from_int(-1)); }

  const F& a() const { return params_->a; }
  const F& b() const { return params_->b; }
  const AlgebraParams<F>& params() const { return *params_; }

  /// a < 0 and b < 0: the norm form is positive definite, so H(a,b) is a division algebra.
  bool positive_definite() const { return traits::sign(a()) < 0 && traits::sign(b()) < 0; }

  friend bool operator==(const Algebra& x, const Algebra& y) {
    return x.params_ == y.params_ || (traits::equal(x.a(), y.a()) && traits::equal(x.b(), y.b()));
  }

private:
  std::shared_ptr<const AlgebraParams<F>> params_;
};

namespace detail {

template <class F>
using Coords = std::array<F, 4>;

/// out = l * r in H(a,b). out must not alias l or r.
template <class F>
void mul_into(Coords<F>& out, const Coords<F>& l, const Coords<F>& r, const AlgebraParams<F>& p) {
  out[0] = l[0] * r[0] + p.a * (l[1] * r[1]) + p.b * (l[2] * r[2]) - p.ab * (l[3] * r[3]);
  out[1] = l[0] * r[1] + l[1] * r[0] + p.b * (l[3] * r[2] - l[2] * r[3]);
  out[2] = l[0] * r[2] + l[2] * r[0] + p.a * (l[1] * r[3] - l[3] * r[1]);
  out[3] = l[0] * r[3] + l[3] * r[0] + l[1] * r[2] - l[2] * r[1];
}

template <class F>
Coords<F> mul(const Coords<F>& l, const Coords<F>& r, const AlgebraParams<F>& p) {
  Coords<F> out;
  mul_into(out, l, r, p);
  return out;
}

template <class F>
void add_into(Coords<F>& acc, const Coords<F>& x) {
  for (int k = 0; k < 4; ++k)
    acc[k] += x[k];
}

template <class F>
void sub_into(Coords<F>& acc, const Coords<F>& x) {
  for (int k = 0; k < 4; ++k)
    acc[k] -= x[k];
}

} // namespace detail

template <class F>
class Quaternion {
public:
  using traits = scalar_traits<F>;
  using field_type = F;

  Quaternion(Algebra<F> alg, F x0, F x1, F x2, F x3)
      : x_{std::move(x0), std::move(x1), std::move(x2), std::move(x3)}, alg_(std::move(alg)) {}

  Quaternion(Algebra<F> alg, detail::Coords<F> x) : x_(std::move(x)), alg_(std::move(alg)) {}

  static Quaternion zero(const Algebra<F>& alg) {
    return Quaternion(alg, traits::zero(), traits::zero(), traits::zero(), traits::zero());
  }
  static Quaternion one(const Algebra<F>& alg) { return scalar(alg, traits::one()); }
  static Quaternion scalar(const Algebra<F>& alg, F s) {
    return Quaternion(alg, std::move(s), traits::zero(), traits::zero(), traits::zero());
  }
  static Quaternion i(const Algebra<F>& alg) { return basis(alg, 1); }
  static Quaternion j(const Algebra<F>& alg) { return basis(alg, 2); }
  static Quaternion k(const Algebra<F>& alg) { return basis(alg, 3); }

  /// Parses "x0,x1,x2,x3".
  static Quaternion parse(const Algebra<F>& alg, std::string_view text) {
    detail::Coords<F> x;
    std::size_t start = 0;
    for (int c = 0; c < 4; ++c) {
      std::size_t comma = text.find(',', start);
      bool last = (c == 3);
      if (last != (comma == std::string_view::npos))
        throw parse_error("quaternion must have exactly four comma-separated coordinates: '" +
                          std::string(text) + "'");
      std::string_view field = text.substr(start, last ? std::string_view::npos : comma - start);
      while (!field.empty() && field.front() == ' ')
        field.remove_prefix(1);
      while (!field.empty() && field.back() == ' ')
        field.remove_suffix(1);
      x[c] = traits::parse(field);
      start = comma + 1;
    }
    return Quaternion(alg, std::move(x));
  }

  const F& operator[](int c) const { return x_[c]; }
  const detail::Coords<F>& coords() const { return x_; }
  const Algebra<F>& algebra() const { return alg_; }

  bool is_zero() const {
    for (const auto& c : x_)
      if (!traits::is_zero(c))
        return false;
    return true;
  }
  /// Zero imaginary part, i.e. the element lies in the center F.
  bool is_scalar() const {
    return traits::is_zero(x_[1]) && traits::is_zero(x_[2]) && traits::is_zero(x_[3]);
  }

  Quaternion conj() const { return Quaternion(alg_, x_[0], -x_[1], -x_[2], -x_[3]); }

  /// t(q) = q + conj(q) = 2 x0, as a quaternion.
  Quaternion trace() const { return scalar(alg_, F(x_[0] + x_[0])); }

  /// n(q) = q conj(q) = x0^2 - a x1^2 - b x2^2 + ab x3^2.
  F norm() const {
    const auto& p = alg_.params();
    F n = x_[0] * x_[0] - p.a * (x_[1] * x_[1]) - p.b * (x_[2] * x_[2]) + p.ab * (x_[3] * x_[3]);
    return n;
  }

  bool invertible() const { return !traits::is_zero(norm()); }

  /// conj(q) / n(q). Throws not_invertible when n(q) = 0 (zero or a zero divisor).
  Quaternion inverse() const {
    F n = norm();
    if (traits::is_zero(n))
      throw not_invertible("quaternion " + to_string() + " has zero norm");
    F inv = traits::one() / n;
    return Quaternion(alg_, F(x_[0] * inv), F(-x_[1] * inv), F(-x_[2] * inv), F(-x_[3] * inv));
  }

  std::string to_string() const {
    return traits::format(x_[0]) + "," + traits::format(x_[1]) + "," + traits::format(x_[2]) + "," +
           traits::format(x_[3]);
  }

  Quaternion operator-() const { return Quaternion(alg_, -x_[0], -x_[1], -x_[2], -x_[3]); }

  Quaternion& operator+=(const Quaternion& o) {
    check_same(o);
    detail::add_into(x_, o.x_);
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    check_same(o);
    detail::sub_into(x_, o.x_);
    return *this;
  }
  Quaternion& operator*=(const Quaternion& o) {
    check_same(o);
    x_ = detail::mul(x_, o.x_, alg_.params());
    return *this;
  }

  friend Quaternion operator+(Quaternion l, const Quaternion& r) { return l += r; }
  friend Quaternion operator-(Quaternion l, const Quaternion& r) { return l -= r; }
  friend Quaternion operator*(const Quaternion& l, const Quaternion& r) {
    l.check_same(r);
    return Quaternion(l.alg_, detail::mul(l.x_, r.x_, l.alg_.params()));
  }

  /// Scaling by a central element; side is irrelevant.
  friend Quaternion operator*(const Quaternion& q, const F& s) {
    return Quaternion(q.alg_, F(q.x_[0] * s), F(q.x_[1] * s), F(q.x_[2] * s), F(q.x_[3] * s));
  }
  friend Quaternion operator*(const F& s, const Quaternion& q) { return q * s; }

  /// Exact in rational mode; componentwise tolerance in float mode.
  friend bool operator==(const Quaternion& l, const Quaternion& r) {
    if (!(l.alg_ == r.alg_))
      return false;
    for (int c = 0; c < 4; ++c)
      if (!traits::equal(l.x_[c], r.x_[c]))
        return false;
    return true;
  }

  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << q.to_string(); }

  void check_same(const Quaternion& o) const {
    if (!(alg_ == o.alg_))
      throw algebra_mismatch("quaternions belong to different algebras H(a,b)");
  }

private:
  static Quaternion basis(const Algebra<F>& alg, int c) {
    Quaternion q = zero(alg);
    q.x_[c] = traits::one();
    return q;
  }

  detail::Coords<F> x_;
  Algebra<F> alg_;
};

template <class F>
Quaternion<F> qmul(const Quaternion<F>& p, const Quaternion<F>& q) {
  return p * q;
}
template <class F>
Quaternion<F> conj(const Quaternion<F>& q) {
  return q.conj();
}
template <class F>
Quaternion<F> trace(const Quaternion<F>& q) {
  return q.trace();
}
template <class F>
F norm(const Quaternion<F>& q) {
  return q.norm();
}
template <class F>
Quaternion<F> qinv(const Quaternion<F>& q) {
  return q.inverse();
}

} // namespace ncdet
