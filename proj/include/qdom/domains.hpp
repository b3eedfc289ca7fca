#pragma once

// Model domains in C^n with membership tests, volume-quadrature rules and
// boundary contours. Supported kinds: disc, annulus (normalized to outer
// radius 1, an affine map records the general case), ball, products, and
// complete Reinhardt/Hartogs domains in C^2 described by a radial profile.
//
// Volume rules use per-factor polar structure: Gauss-Legendre in the squared
// radius times uniform angles (order radial points, 2*order angles). Rules on
// C^n domains can be large, so nodes are synthesized from the index rather
// than stored.

#include <memory>

#include "qdom/common.hpp"
#include "qdom/parallel.hpp"
#include "qdom/quad1d.hpp"

namespace qdom {

// ---------------------------------------------------------------------------
// Contours: closed circles sampled uniformly, counterclockwise.

struct Contour {
  Complex center{0.0, 0.0};
  double radius = 0.0;
  int samples = 512;
  int orientation = +1;  // +1 = counterclockwise

  Complex point(int j) const {
    const double t = 2.0 * kPi * j / samples;
    return center + radius * Complex(std::cos(t), std::sin(t));
  }
  // dz element for the trapezoid sum at sample j
  Complex dz(int j) const {
    const double t = 2.0 * kPi * j / samples;
    return double(orientation) * (2.0 * kPi / samples) * radius *
           Complex(-std::sin(t), std::cos(t));
  }
};

// Trapezoid contour integral; spectrally accurate for integrands analytic in
// a neighbourhood of the circle.
template <class F>
Complex contour_integral(const Contour& c, F&& f) {
  return pairwise_sum<Complex>(std::size_t(c.samples),
                               [&](std::size_t j) { return f(c.point(int(j))) * c.dz(int(j)); });
}

template <class F>
Complex contour_integral_resampled(const Contour& c, int samples, F&& f) {
  Contour cc = c;
  cc.samples = samples;
  return contour_integral(cc, f);
}

// ---------------------------------------------------------------------------
// Volume rules

struct QNode {
  CPoint z;
  double w;
};

class VolumeRule {
 public:
  virtual ~VolumeRule() = default;
  virtual int dim() const = 0;
  virtual std::size_t size() const = 0;
  // Fills z[0..dim) and w for node i.
  virtual void node(std::size_t i, Complex* z, double* w) const = 0;

  QNode at(std::size_t i) const {
    QNode q;
    q.z.resize(dim());
    node(i, q.z.data(), &q.w);
    return q;
  }

  double weight_sum() const {
    const int d = dim();
    return parallel_sum<double>(size(), [this, d](std::size_t i) {
      Complex buf[8];
      double w;
      node(i, buf, &w);
      (void)d;
      return w;
    });
  }
};

// Explicit rule on a planar domain.
class PlanarRule final : public VolumeRule {
 public:
  PlanarRule(std::vector<Complex> zs, std::vector<double> ws)
      : zs_(std::move(zs)), ws_(std::move(ws)) {}
  int dim() const override { return 1; }
  std::size_t size() const override { return zs_.size(); }
  void node(std::size_t i, Complex* z, double* w) const override {
    z[0] = zs_[i];
    *w = ws_[i];
  }
  const std::vector<Complex>& points() const { return zs_; }
  const std::vector<double>& weights() const { return ws_; }

 private:
  std::vector<Complex> zs_;
  std::vector<double> ws_;
};

// Tensor product of factor rules; first factor is the slowest index.
class TensorRule final : public VolumeRule {
 public:
  explicit TensorRule(std::vector<std::shared_ptr<const VolumeRule>> factors)
      : factors_(std::move(factors)) {
    dim_ = 0;
    size_ = 1;
    for (const auto& f : factors_) {
      dim_ += f->dim();
      size_ *= f->size();
    }
  }
  int dim() const override { return dim_; }
  std::size_t size() const override { return size_; }
  void node(std::size_t i, Complex* z, double* w) const override {
    double weight = 1.0;
    std::size_t rest = i;
    // decompose from the last (fastest) factor backwards
    int offsets[8];
    int off = 0;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
      offsets[k] = off;
      off += factors_[k]->dim();
    }
    for (std::size_t k = factors_.size(); k-- > 0;) {
      const auto& f = *factors_[k];
      const std::size_t idx = rest % f.size();
      rest /= f.size();
      double wf;
      f.node(idx, z + offsets[k], &wf);
      weight *= wf;
    }
    *w = weight;
  }
  const std::vector<std::shared_ptr<const VolumeRule>>& factors() const { return factors_; }

 private:
  std::vector<std::shared_ptr<const VolumeRule>> factors_;
  int dim_ = 0;
  std::size_t size_ = 0;
};

// Fibered rule over a complete Reinhardt/Hartogs domain in C^2:
// z1 = sqrt(s) e^{i t1} with s Gauss-Legendre over the base,
// z2 = sqrt(sigma R2(s)) e^{i t2} with sigma Gauss-Legendre on [0,1].
class Fibered2Rule final : public VolumeRule {
 public:
  Fibered2Rule(Rule1D base_s, std::vector<double> fiber_r2, int n1, int nsig, int n2)
      : s_(std::move(base_s)), r2_(std::move(fiber_r2)), sig_(gauss_legendre_on(0.0, 1.0, nsig)),
        n1_(n1), n2_(n2) {}
  int dim() const override { return 2; }
  std::size_t size() const override {
    return s_.x.size() * std::size_t(n1_) * sig_.x.size() * std::size_t(n2_);
  }
  void node(std::size_t i, Complex* z, double* w) const override {
    const std::size_t nsig = sig_.x.size();
    const std::size_t i2 = i % n2_;
    i /= n2_;
    const std::size_t isig = i % nsig;
    i /= nsig;
    const std::size_t i1 = i % n1_;
    i /= n1_;
    const std::size_t is = i;
    const double s = s_.x[is];
    const double r2 = r2_[is];
    const double sigma = sig_.x[isig] * r2;
    const double t1 = 2.0 * kPi * i1 / n1_;
    const double t2 = 2.0 * kPi * i2 / n2_;
    z[0] = std::sqrt(s) * Complex(std::cos(t1), std::sin(t1));
    z[1] = std::sqrt(sigma) * Complex(std::cos(t2), std::sin(t2));
    *w = (kPi / n1_) * (kPi / n2_) * s_.w[is] * sig_.w[isig] * r2;
  }

 private:
  Rule1D s_;
  std::vector<double> r2_;
  Rule1D sig_;
  int n1_, n2_;
};

// Ball in C^n via the Duffy map of the simplex {s_i >= 0, sum s_i < 1} in the
// squared-radius variables, times uniform angles.
class SimplexBallRule final : public VolumeRule {
 public:
  SimplexBallRule(int n, int order, int angles)
      : n_(n), gl_(gauss_legendre_on(0.0, 1.0, order)), na_(angles) {}
  int dim() const override { return n_; }
  std::size_t size() const override {
    std::size_t s = 1;
    for (int j = 0; j < n_; ++j) s *= gl_.x.size() * std::size_t(na_);
    return s;
  }
  void node(std::size_t i, Complex* z, double* w) const override {
    const std::size_t nr = gl_.x.size();
    int kr[8], ka[8];
    for (int j = n_ - 1; j >= 0; --j) {
      ka[j] = int(i % na_);
      i /= na_;
      kr[j] = int(i % nr);
      i /= nr;
    }
    double weight = 1.0, rem = 1.0;
    for (int j = 0; j < n_; ++j) {
      const double x = gl_.x[kr[j]];
      const double s = rem * x;
      const double t = 2.0 * kPi * ka[j] / na_;
      z[j] = std::sqrt(s) * Complex(std::cos(t), std::sin(t));
      weight *= gl_.w[kr[j]] * (kPi / na_) * rem;
      rem *= (1.0 - x);
    }
    *w = weight;
  }

 private:
  int n_;
  Rule1D gl_;
  int na_;
};

// ---------------------------------------------------------------------------
// Radial profiles for Reinhardt/Hartogs domains in C^2

class RadialProfile {
 public:
  virtual ~RadialProfile() = default;
  // squared fiber radius R(s)^2 as a function of s = |z1|^2
  virtual double fiber_radius_sq(double s) const = 0;
  // Gauss rule for integrals \int_0^{R1^2} F(s) ds, possibly in a transformed
  // variable that makes the monomial-norm integrands polynomial.
  virtual Rule1D base_rule(double r1_sq, int order) const {
    return gauss_legendre_on(0.0, r1_sq, order);
  }
  virtual std::string describe() const = 0;
};

// |z2| < p(|z1|^2) with p a real polynomial, positive on the closed base.
class PolynomialProfile final : public RadialProfile {
 public:
  explicit PolynomialProfile(std::vector<double> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw ConfigError("polynomial profile needs coefficients");
  }
  double fiber_radius_sq(double s) const override {
    double p = 0.0;
    for (std::size_t k = c_.size(); k-- > 0;) p = p * s + c_[k];
    return p * p;
  }
  std::string describe() const override {
    std::string d = "poly_profile(";
    for (std::size_t k = 0; k < c_.size(); ++k) d += (k ? "," : "") + std::to_string(c_[k]);
    return d + ")";
  }
  const std::vector<double>& coeffs() const { return c_; }

 private:
  std::vector<double> c_;
};

// Ellipsoid |z1|^{2 m1} + |z2|^{2 m2} < 1. For m1 = 1 the substitution
// 1 - s = tau^{m2} makes every monomial-norm integrand polynomial in tau.
class EllipsoidProfile final : public RadialProfile {
 public:
  EllipsoidProfile(int m1, int m2) : m1_(m1), m2_(m2) {
    if (m1 < 1 || m2 < 1) throw ConfigError("ellipsoid exponents must be >= 1");
  }
  double fiber_radius_sq(double s) const override {
    const double rest = 1.0 - std::pow(s, m1_);
    return rest <= 0.0 ? 0.0 : std::pow(rest, 1.0 / m2_);
  }
  Rule1D base_rule(double r1_sq, int order) const override {
    if (m1_ == 1 && r1_sq == 1.0) {
      const Rule1D tau = gauss_legendre_on(0.0, 1.0, order);
      Rule1D r;
      r.x.resize(tau.x.size());
      r.w.resize(tau.x.size());
      for (std::size_t i = 0; i < tau.x.size(); ++i) {
        const double t = tau.x[i];
        r.x[i] = 1.0 - std::pow(t, m2_);
        r.w[i] = tau.w[i] * m2_ * std::pow(t, m2_ - 1);
      }
      return r;
    }
    return RadialProfile::base_rule(r1_sq, order);
  }
  std::string describe() const override {
    return "ellipsoid(" + std::to_string(m1_) + "," + std::to_string(m2_) + ")";
  }
  int m1() const { return m1_; }
  int m2() const { return m2_; }

 private:
  int m1_, m2_;
};

// ---------------------------------------------------------------------------
// Domains

enum class DomainKind { Disc, Annulus, Ball, Product, Reinhardt2 };

class Domain {
 public:
  virtual ~Domain() = default;
  virtual DomainKind kind() const = 0;
  virtual int dim() const = 0;
  virtual bool contains(const CPoint& z) const = 0;
  // closure membership with a small tolerance; boundary samples qualify
  virtual bool contains_closed(const CPoint& z, double tol = 1e-9) const = 0;
  virtual std::shared_ptr<VolumeRule> volume_rule(int order) const = 0;
  virtual std::string describe() const = 0;

 protected:
  static void check_order(int order) {
    if (order < 4) throw UnsupportedOrder("volume rule order must be >= 4");
  }
};

class PlanarDomain : public Domain {
 public:
  int dim() const override { return 1; }
  virtual bool contains1(Complex z) const = 0;
  virtual bool contains1_closed(Complex z, double tol) const = 0;
  bool contains(const CPoint& z) const override {
    require_dim(z, 1, "contains");
    return contains1(z[0]);
  }
  bool contains_closed(const CPoint& z, double tol = 1e-9) const override {
    require_dim(z, 1, "contains");
    return contains1_closed(z[0], tol);
  }
  // one contour per bounded complementary component
  virtual std::vector<Contour> inner_contours(int samples = 512) const = 0;
  virtual Contour outer_contour(int samples = 512) const = 0;
};

class DiscDomain final : public PlanarDomain {
 public:
  explicit DiscDomain(Complex center = Complex(0, 0), double radius = 1.0)
      : c_(center), r_(radius) {
    if (!(radius > 0.0)) throw ConfigError("disc radius must be positive");
  }
  DomainKind kind() const override { return DomainKind::Disc; }
  bool contains1(Complex z) const override { return std::abs(z - c_) < r_; }
  bool contains1_closed(Complex z, double tol) const override {
    return std::abs(z - c_) <= r_ * (1.0 + tol);
  }
  std::vector<Contour> inner_contours(int) const override { return {}; }
  Contour outer_contour(int samples = 512) const override { return Contour{c_, r_, samples, +1}; }
  std::shared_ptr<VolumeRule> volume_rule(int order) const override {
    check_order(order);
    const int na = 2 * order;
    const Rule1D s = gauss_legendre_on(0.0, r_ * r_, order);
    std::vector<Complex> zs;
    std::vector<double> ws;
    zs.reserve(s.x.size() * na);
    ws.reserve(s.x.size() * na);
    for (std::size_t k = 0; k < s.x.size(); ++k) {
      const double rho = std::sqrt(s.x[k]);
      for (int j = 0; j < na; ++j) {
        const double t = 2.0 * kPi * j / na;
        zs.push_back(c_ + rho * Complex(std::cos(t), std::sin(t)));
        ws.push_back(s.w[k] * kPi / na);
      }
    }
    return std::make_shared<PlanarRule>(std::move(zs), std::move(ws));
  }
  std::string describe() const override {
    return "disc(center=" + std::to_string(c_.real()) + "+" + std::to_string(c_.imag()) +
           "i, radius=" + std::to_string(r_) + ")";
  }
  Complex center() const { return c_; }
  double radius() const { return r_; }

 private:
  Complex c_;
  double r_;
};

// Annulus normalized to { r < |z| < 1 }. A recorded affine map z -> scale*z +
// shift carries the general case; kernels and the pipeline work on the
// normalized model.
class AnnulusDomain final : public PlanarDomain {
 public:
  explicit AnnulusDomain(double inner, Complex shift = Complex(0, 0), double scale = 1.0)
      : r_(inner), shift_(shift), scale_(scale) {
    if (!(inner > 0.0 && inner < 1.0)) throw ConfigError("annulus requires 0 < inner < 1");
    if (!(scale > 0.0)) throw ConfigError("annulus scale must be positive");
  }
  static AnnulusDomain general(Complex center, double rin, double rout) {
    if (!(rin > 0.0 && rin < rout)) throw ConfigError("annulus requires 0 < rin < rout");
    return AnnulusDomain(rin / rout, center, rout);
  }
  DomainKind kind() const override { return DomainKind::Annulus; }
  bool contains1(Complex z) const override {
    const double a = std::abs((z - shift_) / scale_);
    return a > r_ && a < 1.0;
  }
  bool contains1_closed(Complex z, double tol) const override {
    const double a = std::abs((z - shift_) / scale_);
    return a >= r_ * (1.0 - tol) && a <= 1.0 + tol;
  }
  std::vector<Contour> inner_contours(int samples = 512) const override {
    return {Contour{shift_, scale_ * 0.5 * (r_ + 1.0), samples, +1}};
  }
  Contour outer_contour(int samples = 512) const override {
    return Contour{shift_, scale_, samples, +1};
  }
  std::shared_ptr<VolumeRule> volume_rule(int order) const override {
    check_order(order);
    const int na = 2 * order;
    const Rule1D s = gauss_legendre_on(r_ * r_, 1.0, order);
    std::vector<Complex> zs;
    std::vector<double> ws;
    for (std::size_t k = 0; k < s.x.size(); ++k) {
      const double rho = std::sqrt(s.x[k]);
      for (int j = 0; j < na; ++j) {
        const double t = 2.0 * kPi * j / na;
        zs.push_back(shift_ + scale_ * rho * Complex(std::cos(t), std::sin(t)));
        ws.push_back(scale_ * scale_ * s.w[k] * kPi / na);
      }
    }
    return std::make_shared<PlanarRule>(std::move(zs), std::move(ws));
  }
  std::string describe() const override { return "annulus(inner=" + std::to_string(r_) + ")"; }
  double inner() const { return r_; }
  bool is_normalized() const { return shift_ == Complex(0, 0) && scale_ == 1.0; }

 private:
  double r_;
  Complex shift_;
  double scale_;
};

class BallDomain final : public Domain {
 public:
  explicit BallDomain(int n) : n_(n) {
    if (n < 1) throw ConfigError("ball dimension must be >= 1");
  }
  DomainKind kind() const override { return DomainKind::Ball; }
  int dim() const override { return n_; }
  bool contains(const CPoint& z) const override {
    require_dim(z, n_, "contains");
    double s = 0.0;
    for (Complex v : z) s += abs2(v);
    return s < 1.0;
  }
  bool contains_closed(const CPoint& z, double tol = 1e-9) const override {
    require_dim(z, n_, "contains");
    double s = 0.0;
    for (Complex v : z) s += abs2(v);
    return s <= 1.0 + tol;
  }
  std::shared_ptr<VolumeRule> volume_rule(int order) const override {
    check_order(order);
    return std::make_shared<SimplexBallRule>(n_, order, 2 * order);
  }
  std::string describe() const override { return "ball(" + std::to_string(n_) + ")"; }

 private:
  int n_;
};

class ProductDomain final : public Domain {
 public:
  explicit ProductDomain(std::vector<std::shared_ptr<const Domain>> factors)
      : factors_(std::move(factors)) {
    if (factors_.empty()) throw ConfigError("product domain needs factors");
    dim_ = 0;
    for (const auto& f : factors_) dim_ += f->dim();
  }
  DomainKind kind() const override { return DomainKind::Product; }
  int dim() const override { return dim_; }
  bool contains(const CPoint& z) const override {
    require_dim(z, dim_, "contains");
    std::size_t off = 0;
    for (const auto& f : factors_) {
      CPoint slice(z.begin() + off, z.begin() + off + f->dim());
      if (!f->contains(slice)) return false;
      off += f->dim();
    }
    return true;
  }
  bool contains_closed(const CPoint& z, double tol = 1e-9) const override {
    require_dim(z, dim_, "contains");
    std::size_t off = 0;
    for (const auto& f : factors_) {
      CPoint slice(z.begin() + off, z.begin() + off + f->dim());
      if (!f->contains_closed(slice, tol)) return false;
      off += f->dim();
    }
    return true;
  }
  std::shared_ptr<VolumeRule> volume_rule(int order) const override {
    std::vector<std::shared_ptr<const VolumeRule>> rules;
    rules.reserve(factors_.size());
    for (const auto& f : factors_) rules.push_back(f->volume_rule(order));
    return std::make_shared<TensorRule>(std::move(rules));
  }
  std::string describe() const override {
    std::string d = "product(";
    for (std::size_t k = 0; k < factors_.size(); ++k)
      d += (k ? ", " : "") + factors_[k]->describe();
    return d + ")";
  }
  const std::vector<std::shared_ptr<const Domain>>& factors() const { return factors_; }

 private:
  std::vector<std::shared_ptr<const Domain>> factors_;
  int dim_ = 0;
};

// Complete Reinhardt / Hartogs domain in C^2 over |z1| < R1 with fiber
// |z2| < R(|z1|^2) given by a radial profile.
class Reinhardt2Domain final : public Domain {
 public:
  Reinhardt2Domain(std::shared_ptr<const RadialProfile> profile, double base_radius = 1.0)
      : p_(std::move(profile)), r1_(base_radius) {
    if (!p_) throw ConfigError("profile required");
    if (!(r1_ > 0.0)) throw ConfigError("base radius must be positive");
  }
  DomainKind kind() const override { return DomainKind::Reinhardt2; }
  int dim() const override { return 2; }
  bool contains(const CPoint& z) const override {
    require_dim(z, 2, "contains");
    const double s = abs2(z[0]);
    if (s >= r1_ * r1_) return false;
    return abs2(z[1]) < p_->fiber_radius_sq(s);
  }
  bool contains_closed(const CPoint& z, double tol = 1e-9) const override {
    require_dim(z, 2, "contains");
    const double s = abs2(z[0]);
    if (s > r1_ * r1_ * (1.0 + tol)) return false;
    return abs2(z[1]) <= p_->fiber_radius_sq(std::min(s, r1_ * r1_)) * (1.0 + tol);
  }
  std::shared_ptr<VolumeRule> volume_rule(int order) const override {
    check_order(order);
    const Rule1D s = base_rule(order);
    std::vector<double> r2(s.x.size());
    for (std::size_t i = 0; i < s.x.size(); ++i) r2[i] = p_->fiber_radius_sq(s.x[i]);
    return std::make_shared<Fibered2Rule>(s, std::move(r2), 2 * order, order, 2 * order);
  }
  Rule1D base_rule(int order) const { return p_->base_rule(r1_ * r1_, order); }
  // true when the fiber radius is non-increasing in |z1| (complete domain)
  bool is_complete(int probes = 64) const {
    double prev = p_->fiber_radius_sq(0.0);
    if (!(prev > 0.0)) return false;
    for (int i = 1; i <= probes; ++i) {
      const double s = r1_ * r1_ * double(i) / probes;
      const double cur = p_->fiber_radius_sq(s);
      if (cur > prev + 1e-12) return false;
      prev = cur;
    }
    return true;
  }
  std::string describe() const override {
    return "reinhardt2(" + p_->describe() + ", base_radius=" + std::to_string(r1_) + ")";
  }
  const RadialProfile& profile() const { return *p_; }
  double base_radius() const { return r1_; }

 private:
  std::shared_ptr<const RadialProfile> p_;
  double r1_;
};

// ---------------------------------------------------------------------------
// Convenience factories

inline std::shared_ptr<ProductDomain> make_polydisc(const std::vector<double>& radii) {
  std::vector<std::shared_ptr<const Domain>> f;
  f.reserve(radii.size());
  for (double r : radii) f.push_back(std::make_shared<DiscDomain>(Complex(0, 0), r));
  return std::make_shared<ProductDomain>(std::move(f));
}

inline std::shared_ptr<Reinhardt2Domain> make_hartogs(std::vector<double> profile_coeffs,
                                                      double base_radius = 1.0) {
  return std::make_shared<Reinhardt2Domain>(
      std::make_shared<PolynomialProfile>(std::move(profile_coeffs)), base_radius);
}

inline std::shared_ptr<Reinhardt2Domain> make_ellipsoid(int m1, int m2) {
  return std::make_shared<Reinhardt2Domain>(std::make_shared<EllipsoidProfile>(m1, m2), 1.0);
}

}  // namespace qdom
