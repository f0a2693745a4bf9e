#pragma once

// The four recurrences for f and the closed forms derived from the rank-7
// representation. Each recurrence is checked by building LHS - RHS as one
// linear representation in m = n - 3 and minimizing it to rank 0.

#include "dyckolab/linrep.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dyckolab {

enum class Identity { a1, a2, a3, a4 };

std::string identity_name(Identity id); // "a1" .. "a4"
Identity parse_identity(const std::string& name);

/// c * s(a*m + b), where s is f or q.
struct AffineTerm {
    enum class Source { f, q };
    Rational coefficient;
    Source source;
    std::uint64_t a;
    std::uint64_t b;
};

/// LHS - RHS of the identity as a sum of affine terms in m >= 0.
std::vector<AffineTerm> identity_terms(Identity id);

enum class IdentityMode { symbolic, numeric };

struct IdentityReport {
    bool holds = false;
    IdentityMode mode = IdentityMode::symbolic;
    std::size_t combined_rank = 0;  // symbolic only
    std::size_t minimized_rank = 0; // symbolic only
    std::uint64_t checked_to = 0;   // numeric only: largest n (= m + 3) checked
    std::optional<std::uint64_t> witness; // numeric only: first failing n

    nlohmann::json to_json() const;
};

/// Representation of sum_i c_i * s_i(a_i*m + b_i).
LinRep terms_rep(const std::vector<AffineTerm>& terms);

/// symbolic: minimize terms_rep to rank 0. numeric: evaluate for 3 <= n <= numeric_max.
IdentityReport check_terms(const std::vector<AffineTerm>& terms, IdentityMode mode = IdentityMode::symbolic,
                           std::uint64_t numeric_max = 10000);
IdentityReport check_identity(Identity id, IdentityMode mode = IdentityMode::symbolic,
                              std::uint64_t numeric_max = 10000);

struct ClosedFormReport {
    bool three_pow = false;   // f(3*2^i) = 3*2^i, 0 <= i <= 20
    bool two_pow = false;     // f(2^i) = 2^(i-1), 2 <= i <= 20
    bool sum_formula = false; // v (gamma(0)+gamma(1))^n w = 19*4^n/48 - 2^n/4 + 5/3, 2 <= n <= 20
    std::optional<unsigned> three_pow_witness;
    std::optional<unsigned> two_pow_witness;
    std::optional<unsigned> sum_witness;

    bool holds() const { return three_pow && two_pow && sum_formula; }
    nlohmann::json to_json() const;
};

/// 19*4^n/48 - 2^n/4 + 5/3.
Rational sum_formula(unsigned n);

ClosedFormReport closed_form_checks(unsigned max_exponent = 20);

} // namespace dyckolab
