#include "dyckolab/linrep.hpp"

#include "dyckolab/dfao.hpp"
#include "dyckolab/error.hpp"

#include <deque>
#include <map>

namespace dyckolab {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text)
{
    const std::string s(text);
    const auto slash = s.find('/');
    auto valid_int = [](const std::string& part) {
        std::size_t i = (!part.empty() && part[0] == '-') ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') return false;
        }
        return true;
    };
    if (!valid_int(s.substr(0, slash)) ||
        (slash != std::string::npos && (!valid_int(s.substr(slash + 1)) || s[slash + 1] == '-')))
        throw ParseError("bad rational '" + s + "'");
    Rational r(s, 10);
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

Vector operator*(const Vector& v, const Matrix& m)
{
    if (v.size() != m.rows) throw DomainError("dimension mismatch in vector-matrix product");
    Vector out(m.cols);
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (sgn(v[i]) == 0) continue;
        for (std::size_t j = 0; j < m.cols; ++j) {
            const Rational& x = m(i, j);
            if (sgn(x) != 0) out[j] += v[i] * x;
        }
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols != b.rows) throw DomainError("dimension mismatch in matrix product");
    Matrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Rational& x = a(i, k);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) {
                if (sgn(b(k, j)) != 0) out(i, j) += x * b(k, j);
            }
        }
    }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.rows != b.rows || a.cols != b.cols) throw DomainError("dimension mismatch in matrix sum");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] += b.data[i];
    return out;
}

Rational dot(const Vector& a, const Vector& b)
{
    if (a.size() != b.size()) throw DomainError("dimension mismatch in dot product");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    }
    return s;
}

LinRep::LinRep(unsigned base, Vector v, std::vector<Matrix> gamma, Vector w)
    : base_(base), v_(std::move(v)), gamma_(std::move(gamma)), w_(std::move(w))
{
    if (base_ < 2) throw DomainError("LinRep base must be at least 2");
    if (gamma_.size() != base_) throw DomainError("LinRep needs one matrix per digit");
    const std::size_t t = v_.size();
    if (w_.size() != t) throw DomainError("LinRep v and w differ in length");
    for (const auto& m : gamma_) {
        if (m.rows != t || m.cols != t) throw DomainError("LinRep matrix has the wrong shape");
    }
    if (v_ * gamma_[0] != v_) throw DomainError("LinRep violates leading-zero invariance v*gamma(0) = v");
}

Rational LinRep::eval_digits(std::span<const unsigned> msd_first) const
{
    Vector row = v_;
    for (unsigned d : msd_first) {
        if (d >= base_) throw AlphabetError("digit outside the LinRep base");
        row = row * gamma_[d];
    }
    return dot(row, w_);
}

Rational LinRep::eval(std::uint64_t n) const
{
    const auto digits = digits_msd(n, base_);
    return eval_digits(digits);
}

nlohmann::ordered_json LinRep::to_json() const
{
    auto vec = [](const Vector& x) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : x) arr.push_back(to_string(r));
        return arr;
    };
    nlohmann::ordered_json j;
    j["base"] = base_;
    j["rank"] = rank();
    j["v"] = vec(v_);
    auto gamma = nlohmann::ordered_json::array();
    for (const auto& m : gamma_) {
        auto rows = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < m.rows; ++i) {
            auto row = nlohmann::ordered_json::array();
            for (std::size_t k = 0; k < m.cols; ++k) row.push_back(to_string(m(i, k)));
            rows.push_back(std::move(row));
        }
        gamma.push_back(std::move(rows));
    }
    j["gamma"] = std::move(gamma);
    j["w"] = vec(w_);
    return j;
}

std::string LinRep::str() const { return to_json().dump(2) + "\n"; }

LinRep LinRep::from_json(const nlohmann::json& j)
{
    try {
        const auto base = j.at("base").get<unsigned>();
        const auto rank = j.at("rank").get<std::size_t>();
        auto vec = [&](const nlohmann::json& arr) {
            Vector out;
            for (const auto& x : arr) out.push_back(parse_rational(x.get<std::string>()));
            if (out.size() != rank) throw ParseError("LinRep JSON: vector length differs from rank");
            return out;
        };
        Vector v = vec(j.at("v"));
        Vector w = vec(j.at("w"));
        std::vector<Matrix> gamma;
        for (const auto& rows : j.at("gamma")) {
            Matrix m(rank, rank);
            if (rows.size() != rank) throw ParseError("LinRep JSON: matrix row count differs from rank");
            for (std::size_t i = 0; i < rank; ++i) {
                if (rows[i].size() != rank) throw ParseError("LinRep JSON: matrix column count differs from rank");
                for (std::size_t k = 0; k < rank; ++k) m(i, k) = parse_rational(rows[i][k].get<std::string>());
            }
            gamma.push_back(std::move(m));
        }
        return LinRep(base, std::move(v), std::move(gamma), std::move(w));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("LinRep JSON: ") + e.what());
    } catch (const DomainError& e) {
        throw ParseError(std::string("LinRep JSON: ") + e.what());
    }
}

LinRep LinRep::parse(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("LinRep JSON: ") + e.what());
    }
    return from_json(j);
}

namespace {

Matrix from_rows(std::initializer_list<std::initializer_list<const char*>> rows)
{
    Matrix m(rows.size(), rows.size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t k = 0;
        for (const char* x : row) m(i, k++) = parse_rational(x);
        ++i;
    }
    return m;
}

} // namespace

const LinRep& builtin_f()
{
    static const LinRep rep = [] {
        Vector v{1, 0, 0, 0, 0, 0, 0};
        Matrix g0 = from_rows({{"1", "0", "0", "0", "0", "0", "0"},
                               {"0", "0", "1", "0", "0", "0", "0"},
                               {"0", "0", "0", "0", "1", "0", "0"},
                               {"0", "0", "0", "0", "0", "0", "1"},
                               {"0", "0", "0", "-2", "3", "-2", "2"},
                               {"0", "0", "0", "0", "2", "-2", "2"},
                               {"0", "0", "0", "1/2", "5/4", "-5/2", "3"}});
        Matrix g1 = from_rows({{"0", "1", "0", "0", "0", "0", "0"},
                               {"0", "0", "0", "1", "0", "0", "0"},
                               {"0", "0", "0", "0", "0", "1", "0"},
                               {"0", "0", "0", "3/4", "11/8", "-2", "3/2"},
                               {"0", "0", "0", "1/2", "1/4", "0", "1"},
                               {"0", "0", "0", "-5/2", "11/4", "-2", "3"},
                               {"0", "0", "0", "-7/2", "19/4", "-5", "5"}});
        Vector w{1, 1, 2, 3, 2, 4, 6};
        return LinRep(2, std::move(v), {std::move(g0), std::move(g1)}, std::move(w));
    }();
    return rep;
}

std::string builtin_f_json() { return builtin_f().str(); }

LinRep from_dfao(const Dfao& d)
{
    const std::size_t t = d.num_states();
    Vector v(t);
    v[0] = 1;
    std::vector<Matrix> gamma;
    for (unsigned digit = 0; digit < d.base(); ++digit) {
        Matrix m(t, t);
        for (unsigned s = 0; s < t; ++s) m(s, d.next(s, digit)) = 1;
        gamma.push_back(std::move(m));
    }
    Vector w(t);
    for (unsigned s = 0; s < t; ++s) w[s] = static_cast<long>(d.output(s));
    return LinRep(d.base(), std::move(v), std::move(gamma), std::move(w));
}

LinRep combine(std::span<const Term> terms)
{
    if (terms.empty()) throw DomainError("combine needs at least one term");
    const unsigned base = terms.front().rep.base();
    std::size_t total = 0;
    for (const auto& term : terms) {
        if (term.rep.base() != base) throw DomainError("combine: representations use different bases");
        total += term.rep.rank();
    }
    Vector v, w;
    v.reserve(total);
    w.reserve(total);
    std::vector<Matrix> gamma(base, Matrix(total, total));
    std::size_t offset = 0;
    for (const auto& term : terms) {
        const LinRep& r = term.rep;
        for (const auto& x : r.v()) v.push_back(term.coefficient * x);
        for (const auto& x : r.w()) w.push_back(x);
        for (unsigned d = 0; d < base; ++d) {
            const Matrix& m = r.gamma(d);
            for (std::size_t i = 0; i < m.rows; ++i) {
                for (std::size_t k = 0; k < m.cols; ++k) gamma[d](offset + i, offset + k) = m(i, k);
            }
        }
        offset += r.rank();
    }
    return LinRep(base, std::move(v), std::move(gamma), std::move(w));
}

LinRep affine_subseq(const LinRep& rep, std::uint64_t a, std::uint64_t b)
{
    if (a == 0) throw DomainError("affine_subseq needs a >= 1");
    const unsigned k = rep.base();
    const std::size_t t = rep.rank();

    // Read n least-significant digit first while adding a*d into a running
    // carry that starts at b: the digit of a*n+b produced at each step is
    // (a*d + c) mod k and the next carry is (a*d + c) div k. Reachable
    // carries stay below max(a, b) + 1.
    std::map<std::uint64_t, std::size_t> carry_index;
    std::vector<std::uint64_t> carries;
    std::deque<std::uint64_t> pending{b};
    carry_index[b] = 0;
    carries.push_back(b);
    while (!pending.empty()) {
        const std::uint64_t c = pending.front();
        pending.pop_front();
        for (unsigned d = 0; d < k; ++d) {
            const std::uint64_t next = (a * d + c) / k;
            if (carry_index.emplace(next, carries.size()).second) {
                carries.push_back(next);
                pending.push_back(next);
            }
        }
    }

    // The carry left after the last digit of n becomes the leading digits of
    // a*n+b, so the start vector of carry state c is v * gamma(digits of c).
    auto head = [&](std::uint64_t c) {
        Vector row = rep.v();
        for (unsigned d : digits_msd(c, k)) row = row * rep.gamma(d);
        return row;
    };

    const std::size_t states = carries.size();
    const std::size_t total = states * t;
    Vector v(total), w(total);
    std::vector<Matrix> gamma(k, Matrix(total, total));
    for (std::size_t ci = 0; ci < states; ++ci) {
        const Vector row = head(carries[ci]);
        for (std::size_t j = 0; j < t; ++j) v[ci * t + j] = row[j];
    }
    for (std::size_t j = 0; j < t; ++j) w[carry_index.at(b) * t + j] = rep.w()[j];
    for (std::size_t ci = 0; ci < states; ++ci) {
        const std::uint64_t c = carries[ci];
        for (unsigned d = 0; d < k; ++d) {
            const std::uint64_t value = a * d + c;
            const std::size_t cn = carry_index.at(value / k);
            const Matrix& m = rep.gamma(static_cast<unsigned>(value % k));
            for (std::size_t jp = 0; jp < t; ++jp) {
                for (std::size_t j = 0; j < t; ++j) gamma[d](cn * t + jp, ci * t + j) = m(jp, j);
            }
        }
    }
    return LinRep(k, std::move(v), std::move(gamma), std::move(w));
}

namespace {

struct Raw {
    Vector v;
    std::vector<Matrix> gamma;
    Vector w;
};

Matrix transpose(const Matrix& m)
{
    Matrix out(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) out(j, i) = m(i, j);
    }
    return out;
}

Raw transpose(const Raw& r)
{
    Raw out{r.w, {}, r.v};
    for (const auto& m : r.gamma) out.gamma.push_back(transpose(m));
    return out;
}

// Restricts the representation to span{v * gamma(x)}. The basis is kept in
// reduced row echelon form, so the coordinates of a vector in the span are
// its entries at the pivot columns.
Raw left_reduce(const Raw& r)
{
    const std::size_t t = r.v.size();
    std::vector<Vector> basis;
    std::vector<std::size_t> pivots;

    auto try_add = [&](Vector u) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const Rational c = u[pivots[i]];
            if (sgn(c) == 0) continue;
            for (std::size_t j = 0; j < t; ++j) {
                if (sgn(basis[i][j]) != 0) u[j] -= c * basis[i][j];
            }
        }
        std::size_t p = 0;
        while (p < t && sgn(u[p]) == 0) ++p;
        if (p == t) return false;
        const Rational lead = u[p];
        for (auto& x : u) {
            if (sgn(x) != 0) x /= lead;
        }
        for (auto& row : basis) {
            const Rational c = row[p];
            if (sgn(c) == 0) continue;
            for (std::size_t j = 0; j < t; ++j) {
                if (sgn(u[j]) != 0) row[j] -= c * u[j];
            }
        }
        basis.push_back(std::move(u));
        pivots.push_back(p);
        return true;
    };

    std::deque<Vector> pending;
    if (try_add(r.v)) pending.push_back(r.v);
    while (!pending.empty()) {
        const Vector u = std::move(pending.front());
        pending.pop_front();
        for (const auto& m : r.gamma) {
            Vector x = u * m;
            if (try_add(x)) pending.push_back(std::move(x));
        }
    }

    const std::size_t n = basis.size();
    Raw out;
    out.v.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.v[i] = r.v[pivots[i]];
    for (const auto& m : r.gamma) {
        Matrix g(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            const Vector image = basis[i] * m;
            for (std::size_t j = 0; j < n; ++j) g(i, j) = image[pivots[j]];
        }
        out.gamma.push_back(std::move(g));
    }
    out.w.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.w[i] = dot(basis[i], r.w);
    return out;
}

} // namespace

LinRep minimize(const LinRep& rep)
{
    Raw raw{rep.v(), rep.gammas(), rep.w()};
    raw = left_reduce(raw);
    raw = transpose(left_reduce(transpose(raw)));
    return LinRep(rep.base(), std::move(raw.v), std::move(raw.gamma), std::move(raw.w));
}

bool is_zero(const LinRep& rep) { return minimize(rep).rank() == 0; }

Rational digit_sum_power(const LinRep& rep, unsigned n)
{
    Matrix total = rep.gamma(0);
    for (unsigned d = 1; d < rep.base(); ++d) total = total + rep.gamma(d);
    Vector row = rep.v();
    for (unsigned i = 0; i < n; ++i) row = row * total;
    return dot(row, rep.w());
}

} // namespace dyckolab
