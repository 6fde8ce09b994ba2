/*
   Copyright 2026 The mf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <vector>

#include "mf/binary_form.hpp"
#include "mf/combinatorics.hpp"
#include "mf/error.hpp"
#include "mf/matrix.hpp"
#include "mf/projective.hpp"
#include "mf/rational.hpp"

namespace mf {

/// Exponent vector x_0^{e_0} ... x_{N-1}^{e_{N-1}}.
struct Monomial {
    std::vector<unsigned> exponents;

    std::size_t num_vars() const noexcept { return exponents.size(); }
    unsigned degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0u); }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order with x_0 > x_1 > ...; `operator()` is "a
/// comes before b" in the canonical (descending) order.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const unsigned da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a.exponents > b.exponents;
    }
};

/// All monomials of the given degree in canonical order.
inline std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree) {
    std::vector<Monomial> out;
    if (num_vars == 0) return out;
    std::vector<unsigned> e(num_vars, 0);
    // lexicographically descending compositions of `degree`
    auto rec = [&](auto&& self, std::size_t i, unsigned remaining) -> void {
        if (i + 1 == num_vars) {
            e[i] = remaining;
            out.push_back(Monomial{e});
            return;
        }
        for (unsigned k = remaining + 1; k-- > 0;) {
            e[i] = k;
            self(self, i + 1, remaining - k);
        }
    };
    rec(rec, 0, degree);
    return out;
}

/// Index of each monomial in the canonical order.
inline std::map<Monomial, std::size_t, GrlexDescending> monomial_index(const std::vector<Monomial>& basis) {
    std::map<Monomial, std::size_t, GrlexDescending> idx;
    for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
    return idx;
}

/// Sparse homogeneous form over Q. No zero coefficients are stored.
class HomogeneousForm {
public:
    using Terms = std::map<Monomial, Rational, GrlexDescending>;

    HomogeneousForm(std::size_t num_vars, unsigned degree) : num_vars_(num_vars), degree_(degree) {}

    /// Coefficient vector over `basis` (typically monomials_of_degree).
    static HomogeneousForm from_coefficients(std::size_t num_vars, unsigned degree, const std::vector<Monomial>& basis,
                                             std::span<const Rational> coeffs) {
        if (basis.size() != coeffs.size()) throw Error(ErrorKind::DimensionMismatch, "coefficient vector length");
        HomogeneousForm f(num_vars, degree);
        for (std::size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], coeffs[i]);
        return f;
    }

    static HomogeneousForm variable(std::size_t num_vars, std::size_t index) {
        HomogeneousForm f(num_vars, 1);
        Monomial m{std::vector<unsigned>(num_vars, 0)};
        m.exponents.at(index) = 1;
        f.add_term(m, 1);
        return f;
    }

    std::size_t num_vars() const noexcept { return num_vars_; }
    unsigned degree() const noexcept { return degree_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (m.num_vars() != num_vars_ || m.degree() != degree_) {
            throw Error(ErrorKind::DimensionMismatch, "monomial does not match the form's degree or variables");
        }
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    Vector coefficients(const std::vector<Monomial>& basis) const {
        Vector v(basis.size());
        auto idx = monomial_index(basis);
        for (const auto& [m, c] : terms_) {
            auto it = idx.find(m);
            if (it == idx.end()) throw Error(ErrorKind::DimensionMismatch, "term outside the monomial basis");
            v[it->second] = c;
        }
        return v;
    }

    HomogeneousForm& operator+=(const HomogeneousForm& g) {
        check_compatible(g);
        for (const auto& [m, c] : g.terms_) add_term(m, c);
        return *this;
    }
    HomogeneousForm& operator*=(const Rational& c) {
        if (sgn(c) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, x] : terms_) x *= c;
        return *this;
    }

    friend HomogeneousForm operator+(HomogeneousForm f, const HomogeneousForm& g) { return f += g; }
    friend HomogeneousForm operator-(HomogeneousForm f, HomogeneousForm g) { return f += (g *= Rational(-1)); }
    friend HomogeneousForm operator*(const Rational& c, HomogeneousForm f) { return f *= c; }

    friend HomogeneousForm operator*(const HomogeneousForm& f, const HomogeneousForm& g) {
        if (f.num_vars_ != g.num_vars_) throw Error(ErrorKind::DimensionMismatch, "forms in different variables");
        HomogeneousForm h(f.num_vars_, f.degree_ + g.degree_);
        for (const auto& [a, ca] : f.terms_)
            for (const auto& [b, cb] : g.terms_) {
                Monomial m = a;
                for (std::size_t i = 0; i < m.exponents.size(); ++i) m.exponents[i] += b.exponents[i];
                h.add_term(m, ca * cb);
            }
        return h;
    }

    friend bool operator==(const HomogeneousForm&, const HomogeneousForm&) = default;

private:
    void check_compatible(const HomogeneousForm& g) const {
        if (g.num_vars_ != num_vars_ || g.degree_ != degree_) {
            throw Error(ErrorKind::DimensionMismatch, "forms of different shape");
        }
    }

    std::size_t num_vars_;
    unsigned degree_;
    Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const HomogeneousForm& f) {
    if (f.is_zero()) return os << '0';
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        os << (first ? "" : (sgn(c) < 0 ? " - " : " + "));
        Rational a = (first || sgn(c) > 0) ? c : Rational(-c);
        first = false;
        bool unit = (a == 1 || a == -1) && m.degree() > 0;
        if (!unit) os << a.get_str();
        else if (a == -1) os << '-';
        for (std::size_t i = 0; i < m.exponents.size(); ++i) {
            if (m.exponents[i] == 0) continue;
            os << 'x' << i;
            if (m.exponents[i] > 1) os << '^' << m.exponents[i];
        }
    }
    return os;
}

/// Formal partial derivative with respect to x_{var}.
inline HomogeneousForm differentiate(const HomogeneousForm& f, std::size_t var) {
    if (var >= f.num_vars()) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "variable x" + std::to_string(var) + " of a form in " + std::to_string(f.num_vars()) + " variables");
    }
    HomogeneousForm d(f.num_vars(), f.degree() == 0 ? 0 : f.degree() - 1);
    for (const auto& [m, c] : f.terms()) {
        const unsigned e = m.exponents[var];
        if (e == 0) continue;
        Monomial dm = m;
        --dm.exponents[var];
        d.add_term(dm, c * e);
    }
    return d;
}

namespace detail {

/// powers[i][k] = p_i^k for k <= degree.
inline std::vector<Vector> power_table(const Vector& p, unsigned degree) {
    std::vector<Vector> pw(p.size(), Vector(degree + 1));
    for (std::size_t i = 0; i < p.size(); ++i) {
        pw[i][0] = 1;
        for (unsigned k = 1; k <= degree; ++k) pw[i][k] = pw[i][k - 1] * p[i];
    }
    return pw;
}

inline Rational evaluate_with(const HomogeneousForm& f, const std::vector<Vector>& pw) {
    Rational acc = 0, term;
    for (const auto& [m, c] : f.terms()) {
        term = c;
        for (std::size_t i = 0; i < m.exponents.size() && sgn(term) != 0; ++i) {
            if (m.exponents[i]) term *= pw[i][m.exponents[i]];
        }
        acc += term;
    }
    return acc;
}

}  // namespace detail

/// Value at the given representative; scaling p by lambda scales the value
/// by lambda^degree.
inline Rational evaluate_form(const HomogeneousForm& f, const ProjectivePoint& p) {
    if (p.size() != f.num_vars()) throw Error(ErrorKind::DimensionMismatch, "point and form dimensions differ");
    return detail::evaluate_with(f, detail::power_table(p.coords(), f.degree()));
}

/// Values of several forms of equal shape at one representative.
inline Vector evaluate_forms(std::span<const HomogeneousForm> forms, const ProjectivePoint& p) {
    Vector out;
    if (forms.empty()) return out;
    if (p.size() != forms.front().num_vars()) throw Error(ErrorKind::DimensionMismatch, "point and form dimensions differ");
    unsigned maxdeg = 0;
    for (const auto& f : forms) maxdeg = std::max(maxdeg, f.degree());
    const auto pw = detail::power_table(p.coords(), maxdeg);
    out.reserve(forms.size());
    for (const auto& f : forms) out.push_back(detail::evaluate_with(f, pw));
    return out;
}

/// Conditions for a degree-`degree` form on P^ambient_dim to vanish at p
/// with multiplicity `mult`: one row per partial derivative operator of
/// order mult-1 (canonical order of the operator exponents), one column per
/// monomial of degree `degree` (canonical order). Only order mult-1
/// partials are imposed.
inline RationalMatrix multiplicity_conditions(std::size_t ambient_dim, unsigned degree, const ProjectivePoint& p,
                                              unsigned mult) {
    if (mult == 0 || mult > degree) {
        throw Error(ErrorKind::InvalidMultiplicity,
                    "multiplicity " + std::to_string(mult) + " for forms of degree " + std::to_string(degree));
    }
    if (p.size() != ambient_dim + 1) throw Error(ErrorKind::DimensionMismatch, "point outside the ambient space");
    const std::size_t nv = ambient_dim + 1;
    const auto operators = monomials_of_degree(nv, mult - 1);
    const auto columns = monomials_of_degree(nv, degree);
    const auto pw = detail::power_table(p.coords(), degree);
    RationalMatrix m(operators.size(), columns.size());
    Rational entry;
    for (std::size_t r = 0; r < operators.size(); ++r) {
        const auto& alpha = operators[r].exponents;
        for (std::size_t c = 0; c < columns.size(); ++c) {
            const auto& beta = columns[c].exponents;
            entry = 1;
            for (std::size_t i = 0; i < nv; ++i) {
                if (beta[i] < alpha[i]) {
                    entry = 0;
                    break;
                }
                // falling factorial beta_i (beta_i - 1) ... (beta_i - alpha_i + 1)
                for (unsigned k = 0; k < alpha[i]; ++k) entry *= beta[i] - k;
                if (beta[i] > alpha[i]) entry *= pw[i][beta[i] - alpha[i]];
                if (sgn(entry) == 0) break;
            }
            m(r, c) = entry;
        }
    }
    return m;
}

/// True when every partial derivative of f of order mult-1 vanishes at p.
inline bool vanishes_with_multiplicity(const HomogeneousForm& f, const ProjectivePoint& p, unsigned mult) {
    if (mult == 0) return true;
    if (f.is_zero()) return true;
    if (mult > f.degree()) return false;
    const auto cond = multiplicity_conditions(f.num_vars() - 1, f.degree(), p, mult);
    const Vector c = f.coefficients(monomials_of_degree(f.num_vars(), f.degree()));
    return is_zero(cond * c);
}

struct PointCondition {
    ProjectivePoint point;
    unsigned multiplicity;
};

/// Forms of a given degree on P^ambient_dim with prescribed vanishing at
/// finitely many points; `basis` is in the canonical order produced by the
/// kernel computation.
struct LinearSystem {
    std::size_t ambient_dim = 0;
    unsigned degree = 0;
    std::vector<HomogeneousForm> basis;
    std::vector<PointCondition> constraints;

    std::size_t dimension() const noexcept { return basis.size(); }

    /// Basis coefficient vectors as rows, columns in canonical monomial order.
    RationalMatrix coefficient_matrix() const {
        const auto mons = monomials_of_degree(ambient_dim + 1, degree);
        RationalMatrix m(0, mons.size());
        for (const auto& f : basis) m.append_row(f.coefficients(mons));
        return m;
    }
};

/// Stacked condition matrix of all constraints (columns: canonical monomials).
inline RationalMatrix condition_matrix(std::size_t ambient_dim, unsigned degree,
                                       std::span<const PointCondition> constraints) {
    RationalMatrix stacked(0, monomials_of_degree(ambient_dim + 1, degree).size());
    for (const auto& pc : constraints) {
        stacked = stacked.stacked(multiplicity_conditions(ambient_dim, degree, pc.point, pc.multiplicity));
    }
    return stacked;
}

inline LinearSystem linear_system_basis(std::size_t ambient_dim, unsigned degree,
                                        std::span<const PointCondition> constraints) {
    const auto mons = monomials_of_degree(ambient_dim + 1, degree);
    LinearSystem sys;
    sys.ambient_dim = ambient_dim;
    sys.degree = degree;
    sys.constraints.assign(constraints.begin(), constraints.end());
    const RationalMatrix conds = condition_matrix(ambient_dim, degree, constraints);
    std::vector<Vector> kernel;
    if (conds.rows() == 0) {
        for (std::size_t i = 0; i < mons.size(); ++i) {
            Vector e(mons.size());
            e[i] = 1;
            kernel.push_back(std::move(e));
        }
    } else {
        kernel = kernel_basis(conds);
    }
    for (const auto& v : kernel) {
        sys.basis.push_back(HomogeneousForm::from_coefficients(ambient_dim + 1, degree, mons, v));
    }
    return sys;
}

/// Row-space equality of the two systems' coefficient matrices.
inline bool same_span(const LinearSystem& a, const LinearSystem& b) {
    if (a.ambient_dim != b.ambient_dim || a.degree != b.degree) return false;
    return row_space_equal(a.coefficient_matrix(), b.coefficient_matrix());
}

/// f(s*p + t*q) as a binary form of degree deg f.
inline BinaryForm restrict_to_line(const HomogeneousForm& f, const ProjectivePoint& p, const ProjectivePoint& q) {
    if (p.size() != f.num_vars() || q.size() != f.num_vars()) {
        throw Error(ErrorKind::DimensionMismatch, "line and form dimensions differ");
    }
    std::vector<std::vector<BinaryForm>> pw(f.num_vars());
    for (std::size_t i = 0; i < f.num_vars(); ++i) {
        const BinaryForm li = BinaryForm::linear(p[i], q[i]);
        pw[i].push_back(BinaryForm(Vector{Rational(1)}));
        for (unsigned k = 1; k <= f.degree(); ++k) pw[i].push_back(pw[i].back() * li);
    }
    BinaryForm out(f.degree());
    for (const auto& [m, c] : f.terms()) {
        BinaryForm term(Vector{c});
        for (std::size_t i = 0; i < m.exponents.size(); ++i) {
            if (m.exponents[i]) term = term * pw[i][m.exponents[i]];
        }
        out = out + term;
    }
    return out;
}

}  // namespace mf
