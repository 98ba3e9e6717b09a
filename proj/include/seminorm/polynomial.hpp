// Copyright 2026 The seminorm Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SEMINORM_POLYNOMIAL_HPP
#define SEMINORM_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "seminorm/field.hpp"
#include "seminorm/lattice.hpp"

namespace seminorm {

using BigInt = boost::multiprecision::cpp_int;
using Coeff = boost::multiprecision::cpp_rational;

BigInt binomial(std::int64_t n, std::int64_t k);

/// Maps a rational into the field: itself in characteristic 0, the reduced
/// representative in [0, p) otherwise. Throws if p divides the denominator.
Coeff reduce_coefficient(CharSpec field, const Coeff& c);
Coeff field_inverse(CharSpec field, const Coeff& c);

/// Exact multivariate polynomial over Q or F_p with terms in lexicographic
/// exponent order. Zero coefficients are never stored.
class SparsePolynomial {
public:
    using Exponents = IntVector;
    using TermMap = std::map<Exponents, Coeff>;

    SparsePolynomial() = default;
    SparsePolynomial(CharSpec field, std::vector<std::string> vars);

    static SparsePolynomial constant(CharSpec field, std::vector<std::string> vars, const Coeff& c);
    static SparsePolynomial variable(CharSpec field, std::vector<std::string> vars, std::size_t index);
    static SparsePolynomial monomial(CharSpec field, std::vector<std::string> vars, Exponents e,
                                     const Coeff& c = 1);

    CharSpec field() const noexcept { return field_; }
    const std::vector<std::string>& vars() const noexcept { return vars_; }
    std::size_t nvars() const noexcept { return vars_.size(); }
    const TermMap& terms() const noexcept { return terms_; }
    std::optional<std::size_t> var_index(const std::string& name) const;

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    /// -1 for the zero polynomial.
    std::int64_t total_degree() const;
    /// Smallest total degree in the support; -1 for zero.
    std::int64_t min_total_degree() const;
    std::int64_t degree_in(std::size_t var) const;
    Coeff coefficient(const Exponents& e) const;

    SparsePolynomial homogeneous_part(std::int64_t degree) const;
    /// Coefficient of var^power, as a polynomial in the same variables.
    SparsePolynomial coefficient_in(std::size_t var, std::int64_t power) const;

    void add_term(const Exponents& e, const Coeff& c);

    SparsePolynomial operator+(const SparsePolynomial& o) const;
    SparsePolynomial operator-(const SparsePolynomial& o) const;
    SparsePolynomial operator*(const SparsePolynomial& o) const;
    SparsePolynomial operator-() const;
    SparsePolynomial& operator+=(const SparsePolynomial& o);
    SparsePolynomial& operator-=(const SparsePolynomial& o);
    SparsePolynomial scaled(const Coeff& c) const;
    SparsePolynomial pow(std::int64_t k) const;
    SparsePolynomial derivative(std::size_t var) const;
    SparsePolynomial substitute(std::size_t var, const SparsePolynomial& value) const;
    /// Simultaneous substitution of images[i] for variable i.
    SparsePolynomial compose(const std::vector<SparsePolynomial>& images) const;
    /// Same polynomial over another variable list (matched by name).
    SparsePolynomial with_vars(const std::vector<std::string>& vars) const;
    SparsePolynomial constant_like(const Coeff& c) const { return constant(field_, vars_, c); }

    std::string to_string() const;

    bool operator==(const SparsePolynomial& o) const;

private:
    void require_compatible(const SparsePolynomial& o, const char* what) const;

    CharSpec field_;
    std::vector<std::string> vars_;
    TermMap terms_;
};

std::string coefficient_to_string(const Coeff& c);

} // namespace seminorm

#endif
