// SPDX-License-Identifier: MIT
//
// Finite exterior algebra over eight generators chi_1..chi_4, chi_1*..chi_4*
// with complex coefficients, 4x4 supermatrices over it and their exponential.
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace padiclab::grassmann {

using Complex = std::complex<double>;

inline constexpr int kGenerators = 8;
inline constexpr int kMonomials = 1 << kGenerators;

/// Generator index: chi(k) for k = 1..4 is bit k-1, chi_star(k) is bit k+3.
int chi(int k);
int chi_star(int k);

/// Element of the exterior algebra. Monomials are indexed by a bitmask of
/// generators in ascending order, so mask 0b11 stands for chi_1 chi_2.
class Element {
public:
    Element() { coeff_.fill(Complex{}); }
    static Element scalar(Complex c);
    static Element generator(int g);

    Complex& operator[](std::uint32_t mask) { return coeff_[mask]; }
    Complex operator[](std::uint32_t mask) const { return coeff_[mask]; }
    Complex scalar_part() const { return coeff_[0]; }

    /// Component of the given degree (number of generators).
    Element grade(int degree) const;
    bool is_zero(double tol = 0.0) const;
    /// Sum of absolute coefficients; submultiplicative under the product.
    double norm1() const;

    /// Conjugation: reverses products, swaps chi_k and chi_k*, conjugates
    /// coefficients.
    Element conj() const;

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(Complex s);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, Complex s) { return a *= s; }
    friend Element operator*(Complex s, Element a) { return a *= s; }
    friend Element operator*(const Element& a, const Element& b);
    Element operator-() const { return *this * Complex(-1.0); }

    std::string to_string(double tol = 1e-14) const;

private:
    std::array<Complex, kMonomials> coeff_;
};

/// Sign of moving the generators of b past those of a into ascending order;
/// zero if a and b share a generator.
int reorder_sign(std::uint32_t a, std::uint32_t b);

struct SuperMatrix {
    std::array<std::array<Element, 4>, 4> m;

    static SuperMatrix identity();
    Element& operator()(int i, int j) { return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const Element& operator()(int i, int j) const { return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    SuperMatrix operator*(const SuperMatrix& o) const;
    SuperMatrix operator+(const SuperMatrix& o) const;
    SuperMatrix scaled(double s) const;
    double norm1() const;  // max row sum of element norms
    /// Column 0, i.e. the image of the vacuum |0>.
    std::array<Element, 4> first_column() const;
};

/// exp(M) by scaling and squaring with a Taylor series over the full algebra.
/// Throws Convergence if the series has not settled after the term cap.
SuperMatrix grassmann_exp(const SuperMatrix& M);

/// Bosonic field triple (z, +, -) entering the generator.
struct Field3 {
    double z = 0.0;
    double plus = 0.0;
    double minus = 0.0;

    /// z^2 + plus * minus
    double invariant_sq() const { return z * z + plus * minus; }
};

/// Generator matrix with rows
///   ( Ez,  0,    0,   E+ )
///   ( x1,  hz,   h+,  0  )
///   ( x2,  h-,  -hz,  0  )
///   ( E-, -x3,   x4, -Ez )
/// where x_k are the given Grassmann entries (default chi_k).
SuperMatrix scs_generator(const Field3& E, const Field3& h, const std::array<Element, 4>& odd);
SuperMatrix scs_generator(const Field3& E, const Field3& h);

/// The scs ket exp(M)|0> with chi_1..chi_4 as the odd entries.
std::array<Element, 4> scs_ket(const Field3& E, const Field3& h);

/// Compares the ket against the first-order structure
///   ( ch E + Ez sh E / E,  a1+ x1 + a2+ x2,  a1- x1 + a2- x2,  E- sh E / E ).
/// Each mismatch is one line. At E = h = 0 the printed fourth component
/// 2 x2 x1 is compared with the direct exponential as well.
std::vector<std::string> ket_structure_report(const Field3& E, const Field3& h, double tol = 1e-12);

}  // namespace padiclab::grassmann
