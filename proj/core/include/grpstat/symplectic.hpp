#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "grpstat/actions.hpp"
#include "grpstat/field.hpp"
#include "grpstat/matrix.hpp"

namespace grpstat {

/// V = GF(2^e)^{2m} with the symplectic form phi(u, v) = u f v^T,
/// f = [[0, I], [I, 0]], and the quadratic forms polarising to phi:
///
///   theta_a(u) = theta_0(u) + phi(u, a)^2,  theta_0(u) = sum_{i<m} u_i u_{i+m}.
///
/// Every such form is theta_a for exactly one a, so forms are indexed by
/// vectors. A group element x acts on forms by theta^x(u) = theta(u x^{-1}).
class SymplecticSpace {
 public:
  SymplecticSpace(std::size_t m, std::uint32_t e);

  [[nodiscard]] const Field& field() const { return field_; }
  [[nodiscard]] std::size_t m() const { return m_; }
  [[nodiscard]] std::size_t dimension() const { return 2 * m_; }
  [[nodiscard]] std::uint32_t q() const { return field_.size(); }

  /// Number of vectors, q^{2m}.
  [[nodiscard]] std::size_t vector_count() const { return vector_count_; }

  /// Vectors are packed base q, coordinate 0 least significant.
  [[nodiscard]] Vector unpack(std::size_t index) const;
  [[nodiscard]] std::size_t pack(const Vector& v) const;

  [[nodiscard]] FieldElement phi(const Vector& u, const Vector& v) const;
  [[nodiscard]] FieldElement theta0(const Vector& u) const;
  [[nodiscard]] FieldElement theta(const Vector& a, const Vector& u) const;

  /// Tr(theta_0(a)); 0 for the plus type, 1 for the minus type.
  [[nodiscard]] std::uint32_t sign_of(const Vector& a) const;

  [[nodiscard]] const MatrixGF& form_matrix() const { return f_; }
  [[nodiscard]] bool is_symplectic(const MatrixGF& x) const;

  /// Matrix of u -> u + phi(u, c) c.
  [[nodiscard]] MatrixGF transvection(const Vector& c) const;

  /// a' with theta_a^{t_c} = theta_{a'}: a + (sqrt(theta_a(c)) + 1) c.
  [[nodiscard]] Vector form_image_transvection(const Vector& c, const Vector& a) const;

  /// a' with theta_a^x = theta_{a'} for a symplectic matrix x. Throws
  /// InvalidArgument when x does not preserve phi.
  [[nodiscard]] Vector form_image(const MatrixGF& x, const Vector& a) const;

  /// Image of theta_a under the field automorphism y -> y^2 applied to
  /// coefficients: a -> a^2 componentwise.
  [[nodiscard]] Vector form_image_frobenius(const Vector& a) const;

  /// The a' found by evaluating theta_a(u x^{-1}) on every u and comparing
  /// with every theta_b. Slow; used to cross-check the formulas.
  [[nodiscard]] Vector form_image_brute_force(const MatrixGF& x, const Vector& a) const;

  /// |Sp_{2m}(q)| = q^{m^2} prod_{i=1}^{m} (q^{2i} - 1).
  [[nodiscard]] Order symplectic_order() const;

  /// |Omega^+| = q^m (q^m + 1) / 2 and |Omega^-| = q^m (q^m - 1) / 2.
  [[nodiscard]] Order expected_orbit_size(int sign) const;

 private:
  std::size_t m_;
  Field field_;
  std::size_t vector_count_;
  MatrixGF f_;
};

enum class FormSign { plus, minus, all };
enum class FormGroup { transvections, gammasp };

/// Action on quadratic forms theta_a of the given type. Generators are the
/// transvections t_c for every nonzero c (plus the Frobenius map for
/// gammasp). Points are ordered by packed vector.
ActionInstance act_quadratic_forms(std::size_t m, std::uint32_t e, FormSign sign,
                                   FormGroup grp, std::size_t cap = kDefaultDegreeCap);

}  // namespace grpstat
