#pragma once

// Exact-rational linear representations (v, gamma, w) of k-regular sequences.
//
// s(n) = v * gamma(d_1) * ... * gamma(d_l) * w, where d_1 .. d_l are the
// base-k digits of n, most significant first, and n = 0 reads the single
// digit 0. Every LinRep satisfies v * gamma(0) = v, so any number of
// leading zeros yields the same value.

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dyckolab {

class Dfao;

using Rational = mpq_class;

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> data; // row major

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    Rational& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

using Vector = std::vector<Rational>;

/// Row vector times matrix.
Vector operator*(const Vector& v, const Matrix& m);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Rational dot(const Vector& a, const Vector& b);

class LinRep {
public:
    /// Validates dimensions and leading-zero invariance; DomainError otherwise.
    LinRep(unsigned base, Vector v, std::vector<Matrix> gamma, Vector w);

    unsigned base() const noexcept { return base_; }
    std::size_t rank() const noexcept { return v_.size(); }
    const Vector& v() const noexcept { return v_; }
    const Matrix& gamma(unsigned digit) const { return gamma_.at(digit); }
    const std::vector<Matrix>& gammas() const noexcept { return gamma_; }
    const Vector& w() const noexcept { return w_; }

    Rational eval(std::uint64_t n) const;
    Rational eval_digits(std::span<const unsigned> msd_first) const;

    /// JSON with rationals as strings; see docs in README.
    nlohmann::ordered_json to_json() const;
    static LinRep from_json(const nlohmann::json& j);
    /// Canonical text: to_json().dump(2) plus a trailing newline.
    std::string str() const;
    static LinRep parse(std::string_view text);

    friend bool operator==(const LinRep&, const LinRep&) = default;

private:
    unsigned base_;
    Vector v_;
    std::vector<Matrix> gamma_;
    Vector w_;
};

/// The rank-7 representation of f(n), the number of Dyck factors of length
/// 2n in the Thue-Morse word.
const LinRep& builtin_f();

/// Canonical JSON text of builtin_f(), identical to data/f_rank7.json.
std::string builtin_f_json();

/// Rank = number of states; gamma(d) are the transition indicator matrices.
LinRep from_dfao(const Dfao& d);

struct Term {
    Rational coefficient;
    LinRep rep;
};

/// Block direct sum realizing sum_i c_i * s_i(n). All terms share one base.
LinRep combine(std::span<const Term> terms);

/// Representation of n -> s(a*n + b), a >= 1, b >= 0.
LinRep affine_subseq(const LinRep& rep, std::uint64_t a, std::uint64_t b);

/// Minimal-rank equivalent representation (left then right reduction).
LinRep minimize(const LinRep& rep);

/// minimize(rep).rank() == 0.
bool is_zero(const LinRep& rep);

/// Value of v * (sum_d gamma(d))^n * w, which for a representation with
/// leading-zero invariance is sum_{0 <= i < k^n} s(i).
Rational digit_sum_power(const LinRep& rep, unsigned n);

} // namespace dyckolab
