// SPDX-License-Identifier: MIT
#include "padiclab/grassmann.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "padiclab/error.hpp"

namespace padiclab::grassmann {

namespace {

constexpr int kMaxTaylorTerms = 80;

std::vector<std::uint32_t> support(const Element& e) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m < kMonomials; ++m)
        if (e[m] != Complex{}) out.push_back(m);
    return out;
}

int permutation_sign(std::vector<int> seq) {
    int inversions = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

// cosh(sqrt(x)) and sinh(sqrt(x))/sqrt(x), entire in x.
std::pair<double, double> ch_shc(double x) {
    if (std::abs(x) < 1e-6) return {1.0 + x / 2.0 + x * x / 24.0, 1.0 + x / 6.0 + x * x / 120.0};
    if (x > 0) {
        double r = std::sqrt(x);
        return {std::cosh(r), std::sinh(r) / r};
    }
    double r = std::sqrt(-x);
    return {std::cos(r), std::sin(r) / r};
}

}  // namespace

int chi(int k) {
    require(k >= 1 && k <= 4, "chi index must be in 1..4");
    return k - 1;
}

int chi_star(int k) {
    require(k >= 1 && k <= 4, "chi* index must be in 1..4");
    return k + 3;
}

Element Element::scalar(Complex c) {
    Element e;
    e.coeff_[0] = c;
    return e;
}

Element Element::generator(int g) {
    require(g >= 0 && g < kGenerators, "generator index out of range");
    Element e;
    e.coeff_[1u << g] = 1.0;
    return e;
}

Element Element::grade(int degree) const {
    Element e;
    for (std::uint32_t m = 0; m < kMonomials; ++m)
        if (std::popcount(m) == degree) e.coeff_[m] = coeff_[m];
    return e;
}

bool Element::is_zero(double tol) const {
    for (const auto& c : coeff_)
        if (std::abs(c) > tol) return false;
    return true;
}

double Element::norm1() const {
    double s = 0.0;
    for (const auto& c : coeff_) s += std::abs(c);
    return s;
}

Element Element::conj() const {
    Element out;
    for (std::uint32_t m = 0; m < kMonomials; ++m) {
        if (coeff_[m] == Complex{}) continue;
        // chi_{i1} ... chi_{ik} -> conj(chi_{ik}) ... conj(chi_{i1})
        std::vector<int> seq;
        for (int g = kGenerators - 1; g >= 0; --g)
            if (m & (1u << g)) seq.push_back(g < 4 ? g + 4 : g - 4);
        std::uint32_t mapped = 0;
        for (int g : seq) mapped |= 1u << g;
        out.coeff_[mapped] += static_cast<double>(permutation_sign(seq)) * std::conj(coeff_[m]);
    }
    return out;
}

Element& Element::operator+=(const Element& o) {
    for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= o.coeff_[i];
    return *this;
}

Element& Element::operator*=(Complex s) {
    for (auto& c : coeff_) c *= s;
    return *this;
}

int reorder_sign(std::uint32_t a, std::uint32_t b) {
    if (a & b) return 0;
    int swaps = 0;
    // every generator of b must pass the generators of a with a larger index
    for (std::uint32_t rest = b; rest; rest &= rest - 1) {
        int g = std::countr_zero(rest);
        swaps += std::popcount(a >> (g + 1));
    }
    return swaps % 2 == 0 ? 1 : -1;
}

Element operator*(const Element& a, const Element& b) {
    Element out;
    const auto sa = support(a), sb = support(b);
    for (auto ma : sa) {
        for (auto mb : sb) {
            int s = reorder_sign(ma, mb);
            if (s == 0) continue;
            out.coeff_[ma | mb] += static_cast<double>(s) * a.coeff_[ma] * b.coeff_[mb];
        }
    }
    return out;
}

std::string Element::to_string(double tol) const {
    static const char* names[kGenerators] = {"x1", "x2", "x3", "x4", "x1*", "x2*", "x3*", "x4*"};
    std::ostringstream os;
    os.precision(12);
    bool first = true;
    for (std::uint32_t m = 0; m < kMonomials; ++m) {
        if (std::abs(coeff_[m]) <= tol) continue;
        if (!first) os << " + ";
        first = false;
        const Complex c = coeff_[m];
        if (c.imag() == 0.0) os << c.real();
        else os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
        for (int g = 0; g < kGenerators; ++g)
            if (m & (1u << g)) os << " " << names[g];
    }
    return first ? "0" : os.str();
}

SuperMatrix SuperMatrix::identity() {
    SuperMatrix I;
    for (int i = 0; i < 4; ++i) I(i, i) = Element::scalar(1.0);
    return I;
}

SuperMatrix SuperMatrix::operator*(const SuperMatrix& o) const {
    SuperMatrix out;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            if ((*this)(i, k).is_zero()) continue;
            for (int j = 0; j < 4; ++j) {
                if (o(k, j).is_zero()) continue;
                out(i, j) += (*this)(i, k) * o(k, j);
            }
        }
    return out;
}

SuperMatrix SuperMatrix::operator+(const SuperMatrix& o) const {
    SuperMatrix out = *this;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out(i, j) += o(i, j);
    return out;
}

SuperMatrix SuperMatrix::scaled(double s) const {
    SuperMatrix out = *this;
    for (auto& row : out.m)
        for (auto& e : row) e *= s;
    return out;
}

double SuperMatrix::norm1() const {
    double best = 0.0;
    for (const auto& row : m) {
        double s = 0.0;
        for (const auto& e : row) s += e.norm1();
        best = std::max(best, s);
    }
    return best;
}

std::array<Element, 4> SuperMatrix::first_column() const { return {m[0][0], m[1][0], m[2][0], m[3][0]}; }

SuperMatrix grassmann_exp(const SuperMatrix& M) {
    const double norm = M.norm1();
    if (!std::isfinite(norm)) fail(ErrorCode::Domain, "grassmann_exp: non-finite entries");
    int squarings = 0;
    if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    const SuperMatrix A = M.scaled(std::ldexp(1.0, -squarings));

    SuperMatrix sum = SuperMatrix::identity();
    SuperMatrix term = SuperMatrix::identity();
    bool converged = false;
    for (int k = 1; k <= kMaxTaylorTerms; ++k) {
        term = (term * A).scaled(1.0 / k);
        sum = sum + term;
        if (term.norm1() <= 1e-18 * sum.norm1()) {
            converged = true;
            break;
        }
    }
    if (!converged) fail(ErrorCode::Convergence, "grassmann_exp: Taylor series did not settle");
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
}

SuperMatrix scs_generator(const Field3& E, const Field3& h, const std::array<Element, 4>& odd) {
    SuperMatrix M;
    M(0, 0) = Element::scalar(E.z);
    M(0, 3) = Element::scalar(E.plus);
    M(1, 0) = odd[0];
    M(1, 1) = Element::scalar(h.z);
    M(1, 2) = Element::scalar(h.plus);
    M(2, 0) = odd[1];
    M(2, 1) = Element::scalar(h.minus);
    M(2, 2) = Element::scalar(-h.z);
    M(3, 0) = Element::scalar(E.minus);
    M(3, 1) = -odd[2];
    M(3, 2) = odd[3];
    M(3, 3) = Element::scalar(-E.z);
    return M;
}

SuperMatrix scs_generator(const Field3& E, const Field3& h) {
    return scs_generator(E, h, {Element::generator(chi(1)), Element::generator(chi(2)), Element::generator(chi(3)),
                                Element::generator(chi(4))});
}

std::array<Element, 4> scs_ket(const Field3& E, const Field3& h) {
    return grassmann_exp(scs_generator(E, h)).first_column();
}

std::vector<std::string> ket_structure_report(const Field3& E, const Field3& h, double tol) {
    std::vector<std::string> report;
    const auto ket = scs_ket(E, h);
    const auto [ch, shc] = ch_shc(E.invariant_sq());
    const double z0 = ch + E.z * shc, z3 = E.minus * shc;
    auto scale = [](double v) { return std::max(1.0, std::abs(v)); };

    if (std::abs(ket[0].scalar_part().real() - z0) > tol * scale(z0) || std::abs(ket[0].scalar_part().imag()) > tol)
        report.push_back("component 0 scalar part differs from ch E + Ez sh E / E");
    if (std::abs(ket[3].scalar_part().real() - z3) > tol * scale(z3) || std::abs(ket[3].scalar_part().imag()) > tol)
        report.push_back("component 3 scalar part differs from E- sh E / E");
    for (int c : {1, 2}) {
        if (std::abs(ket[static_cast<std::size_t>(c)].scalar_part()) > tol)
            report.push_back("component " + std::to_string(c) + " has a scalar part");
    }

    const double first_tol = tol * scale(ket[0].norm1() + ket[3].norm1());
    for (int c = 0; c < 4; ++c) {
        const Element first = ket[static_cast<std::size_t>(c)].grade(1);
        for (int g = 0; g < kGenerators; ++g) {
            const Complex v = first[1u << g];
            const bool allowed = (c == 1 || c == 2) && (g == chi(1) || g == chi(2));
            if (!allowed && std::abs(v) > first_tol)
                report.push_back("component " + std::to_string(c) + " has a first-order term in generator " +
                                 std::to_string(g) + " outside the a1 x1 + a2 x2 form");
        }
    }

    if (E.z == 0.0 && E.plus == 0.0 && E.minus == 0.0 && h.z == 0.0 && h.plus == 0.0 && h.minus == 0.0) {
        Element printed = Element::generator(chi(2)) * Element::generator(chi(1)) * Complex(2.0);
        if (!(ket[3].grade(2) - printed).is_zero(tol))
            report.push_back("case E = h = 0: printed fourth component 2 x2 x1 differs from the direct exponential " +
                             ket[3].grade(2).to_string());
    }
    return report;
}

}  // namespace padiclab::grassmann
