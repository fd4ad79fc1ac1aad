#include "grpstat/symplectic.hpp"

#include "grpstat/error.hpp"

namespace grpstat {

SymplecticSpace::SymplecticSpace(std::size_t m, std::uint32_t e)
    : m_(m), field_(2, e), vector_count_(1), f_(2 * m, 2 * m) {
  if (m < 1) throw InvalidArgument("symplectic space needs m >= 1");
  for (std::size_t i = 0; i < 2 * m; ++i) {
    if (vector_count_ > (std::size_t{1} << 40) / field_.size()) {
      throw InvalidArgument("symplectic space too large");
    }
    vector_count_ *= field_.size();
  }
  for (std::size_t i = 0; i < m; ++i) {
    f_.at(i, i + m) = 1;
    f_.at(i + m, i) = 1;
  }
}

Vector SymplecticSpace::unpack(std::size_t index) const {
  Vector v(2 * m_);
  for (auto& x : v) {
    x = static_cast<FieldElement>(index % field_.size());
    index /= field_.size();
  }
  return v;
}

std::size_t SymplecticSpace::pack(const Vector& v) const {
  std::size_t index = 0;
  for (std::size_t i = v.size(); i-- > 0;) index = index * field_.size() + v[i];
  return index;
}

FieldElement SymplecticSpace::phi(const Vector& u, const Vector& v) const {
  FieldElement sum = 0;
  for (std::size_t i = 0; i < m_; ++i) {
    sum ^= field_.mul(u[i], v[i + m_]) ^ field_.mul(u[i + m_], v[i]);
  }
  return sum;
}

FieldElement SymplecticSpace::theta0(const Vector& u) const {
  FieldElement sum = 0;
  for (std::size_t i = 0; i < m_; ++i) sum ^= field_.mul(u[i], u[i + m_]);
  return sum;
}

FieldElement SymplecticSpace::theta(const Vector& a, const Vector& u) const {
  const FieldElement p = phi(u, a);
  return theta0(u) ^ field_.mul(p, p);
}

std::uint32_t SymplecticSpace::sign_of(const Vector& a) const {
  return field_.trace2(theta0(a));
}

bool SymplecticSpace::is_symplectic(const MatrixGF& x) const {
  if (x.rows() != 2 * m_ || x.cols() != 2 * m_) return false;
  return multiply(field_, multiply(field_, x, f_), transpose(x)) == f_;
}

MatrixGF SymplecticSpace::transvection(const Vector& c) const {
  // Row i of the matrix is e_i + phi(e_i, c) c, and phi(e_i, c) = (f c^T)_i.
  MatrixGF t = MatrixGF::identity(2 * m_);
  const Vector fc = vec_mul(field_, c, f_);  // f is symmetric
  for (std::size_t i = 0; i < 2 * m_; ++i) {
    for (std::size_t j = 0; j < 2 * m_; ++j) {
      t.at(i, j) ^= field_.mul(fc[i], c[j]);
    }
  }
  return t;
}

Vector SymplecticSpace::form_image_transvection(const Vector& c, const Vector& a) const {
  const FieldElement coeff = field_.sqrt2(theta(a, c)) ^ 1;
  Vector out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] ^= field_.mul(coeff, c[i]);
  return out;
}

Vector SymplecticSpace::form_image(const MatrixGF& x, const Vector& a) const {
  if (!is_symplectic(x)) throw InvalidArgument("matrix does not preserve the symplectic form");
  const MatrixGF x_inv = inverse(field_, x);
  // theta_{a'}(e_i) = phi(e_i, a')^2 must equal theta_a(e_i x^{-1}); solve for
  // b = a' f^T coordinate-wise, then a' = b f since f is an involution.
  Vector b(2 * m_);
  for (std::size_t i = 0; i < 2 * m_; ++i) {
    Vector e(2 * m_, 0);
    e[i] = 1;
    const FieldElement lambda = theta(a, vec_mul(field_, e, x_inv)) ^ theta0(e);
    b[i] = field_.sqrt2(lambda);
  }
  return vec_mul(field_, b, f_);
}

Vector SymplecticSpace::form_image_frobenius(const Vector& a) const {
  Vector out(a);
  for (auto& x : out) x = field_.mul(x, x);
  return out;
}

Vector SymplecticSpace::form_image_brute_force(const MatrixGF& x, const Vector& a) const {
  const MatrixGF x_inv = inverse(field_, x);
  std::vector<FieldElement> values(vector_count_);
  for (std::size_t u = 0; u < vector_count_; ++u) {
    values[u] = theta(a, vec_mul(field_, unpack(u), x_inv));
  }
  for (std::size_t b = 0; b < vector_count_; ++b) {
    const Vector bv = unpack(b);
    bool match = true;
    for (std::size_t u = 0; u < vector_count_ && match; ++u) {
      match = theta(bv, unpack(u)) == values[u];
    }
    if (match) return bv;
  }
  throw Error("image of a quadratic form is not of the form theta_b");
}

Order SymplecticSpace::symplectic_order() const {
  const Order q = field_.size();
  Order order = pow(q, static_cast<unsigned>(m_ * m_));
  for (std::size_t i = 1; i <= m_; ++i) order *= pow(q, static_cast<unsigned>(2 * i)) - 1;
  return order;
}

Order SymplecticSpace::expected_orbit_size(int sign) const {
  const Order qm = pow(Order(field_.size()), static_cast<unsigned>(m_));
  if (sign >= 0) return qm * (qm + 1) / 2;
  return qm * (qm - 1) / 2;
}

ActionInstance act_quadratic_forms(std::size_t m, std::uint32_t e, FormSign sign,
                                   FormGroup grp, std::size_t cap) {
  const SymplecticSpace space(m, e);
  if (space.vector_count() > cap) {
    throw CapExceeded("quadratic form action enumerates " +
                      std::to_string(space.vector_count()) + " vectors, above the cap of " +
                      std::to_string(cap));
  }
  std::vector<std::size_t> points;
  std::vector<std::size_t> index(space.vector_count(), space.vector_count());
  for (std::size_t a = 0; a < space.vector_count(); ++a) {
    const auto s = space.sign_of(space.unpack(a));
    if (sign == FormSign::all || (sign == FormSign::plus) == (s == 0)) {
      index[a] = points.size();
      points.push_back(a);
    }
  }
  ActionInstance out;
  static const char* kSigns[] = {"plus", "minus", "all"};
  out.name = std::string(grp == FormGroup::gammasp ? "gammasp" : "sp") + "_" +
             std::to_string(2 * m) + "_" + std::to_string(space.q()) + "_forms_" +
             kSigns[static_cast<int>(sign)];
  out.degree = points.size();
  for (auto a : points) {
    std::string label = "theta[";
    for (auto x : space.unpack(a)) label += std::to_string(x) + (space.q() > 10 ? "." : "");
    out.labels.push_back(label + "]");
  }
  auto add_generator = [&](auto&& image_of) {
    std::vector<Point> images(out.degree);
    for (std::size_t i = 0; i < out.degree; ++i) {
      const std::size_t target = index[space.pack(image_of(space.unpack(points[i])))];
      if (target == space.vector_count()) throw Error("form action does not preserve the type");
      images[i] = static_cast<Point>(target);
    }
    out.generators.emplace_back(std::move(images));
  };
  for (std::size_t c = 1; c < space.vector_count(); ++c) {
    const Vector cv = space.unpack(c);
    add_generator([&](const Vector& a) { return space.form_image_transvection(cv, a); });
  }
  if (grp == FormGroup::gammasp && e > 1) {
    add_generator([&](const Vector& a) { return space.form_image_frobenius(a); });
  }
  if (sign != FormSign::all) out.meta.transitive = true;
  return out;
}

}  // namespace grpstat
