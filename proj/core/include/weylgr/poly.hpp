#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylgr/error.hpp"
#include "weylgr/scalar.hpp"

namespace weylgr {

// A fixed, ordered list of variable names.  Polynomials over the same
// universe combine freely; mixing universes is an error rather than a silent
// re-index.  Universes are shared by pointer but compared by content, so two
// independently built "c1..c5" universes are compatible.
class VarSet {
public:
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i)
            index_.emplace(names_[i], i);
    }

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    std::optional<std::size_t> index_of(const std::string& v) const {
        auto it = index_.find(v);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    bool operator==(const VarSet& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, std::size_t> index_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

inline VarSetPtr make_vars(std::vector<std::string> names) {
    return std::make_shared<const VarSet>(std::move(names));
}

// "c1", "c2", ..., "c<count>"
inline VarSetPtr var_universe(const std::string& prefix, std::size_t count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 1; i <= count; ++i)
        names.push_back(prefix + std::to_string(i));
    return make_vars(std::move(names));
}

namespace detail {

using Monomial = std::vector<unsigned>;

inline unsigned total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0u);
}

// Graded lexicographic, highest term first: larger total degree wins; ties
// compare exponents from the first declared variable on.  This is the
// canonical term order; serialization walks the map in this order.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = total_degree(a), db = total_degree(b);
        if (da != db)
            return da > db;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i])
                return a[i] > b[i];
        return false;
    }
};

inline Rational rational_pow(const Rational& x, unsigned e) {
    Rational r = 1;
    for (unsigned i = 0; i < e; ++i)
        r *= x;
    return r;
}

} // namespace detail

// Sparse multivariate polynomial with BigInt coefficients.  The map never
// holds zero coefficients, so structural equality is canonical equality.
class Poly {
public:
    using Monomial = detail::Monomial;
    using TermMap  = std::map<Monomial, BigInt, detail::GrlexDescending>;

    static Poly zero(VarSetPtr vars) { return Poly(std::move(vars)); }

    static Poly constant(VarSetPtr vars, BigInt c) {
        Poly p(std::move(vars));
        if (c != 0)
            p.terms_.emplace(Monomial(p.vars_->size(), 0u), std::move(c));
        return p;
    }

    static Poly variable(VarSetPtr vars, std::size_t index) {
        Poly p(std::move(vars));
        if (index >= p.vars_->size())
            throw error(errc::unknown_variable,
                        "variable index " + std::to_string(index) + " out of range");
        Monomial m(p.vars_->size(), 0u);
        m[index] = 1;
        p.terms_.emplace(std::move(m), BigInt(1));
        return p;
    }

    static Poly variable(const VarSetPtr& vars, const std::string& name) {
        auto idx = vars->index_of(name);
        if (!idx)
            throw error(errc::unknown_variable, "no variable '" + name + "' in universe");
        return variable(vars, *idx);
    }

    const VarSetPtr& vars() const noexcept { return vars_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && detail::total_degree(terms_.begin()->first) == 0);
    }

    BigInt constant_value() const {
        if (terms_.empty())
            return 0;
        if (!is_constant())
            throw error(errc::precondition, "polynomial is not constant: " + to_string());
        return terms_.begin()->second;
    }

    unsigned degree() const {
        // Terms are graded-descending, so the leading term carries the degree.
        return terms_.empty() ? 0u : detail::total_degree(terms_.begin()->first);
    }

    Poly operator-() const {
        Poly r(vars_);
        for (const auto& [m, c] : terms_)
            r.terms_.emplace(m, -c);
        return r;
    }

    Poly& operator+=(const Poly& o) {
        require_same_universe(o);
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        require_same_universe(o);
        for (const auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.require_same_universe(b);
        Poly r(a.vars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(ma.size());
                for (std::size_t i = 0; i < m.size(); ++i)
                    m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const BigInt& c, const Poly& p) {
        Poly r(p.vars_);
        if (c == 0)
            return r;
        for (const auto& [m, pc] : p.terms_)
            r.terms_.emplace(m, c * pc);
        return r;
    }
    friend Poly operator*(const Poly& p, const BigInt& c) { return c * p; }

    bool operator==(const Poly& o) const {
        return universes_match(o) && terms_ == o.terms_;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Exact evaluation.  Every variable that actually occurs must be
    // assigned; assignments for names outside the universe are rejected too.
    Rational eval(const std::map<std::string, Rational>& assignment) const {
        std::vector<std::optional<Rational>> values(vars_->size());
        for (const auto& [name, v] : assignment) {
            auto idx = vars_->index_of(name);
            if (!idx)
                throw error(errc::unknown_variable, "no variable '" + name + "' in universe");
            values[*idx] = v;
        }
        Rational sum = 0;
        for (const auto& [m, c] : terms_) {
            Rational term(c);
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0)
                    continue;
                if (!values[i])
                    throw error(errc::unknown_variable,
                                "variable '" + vars_->name(i) + "' has no assignment");
                term *= detail::rational_pow(*values[i], m[i]);
            }
            sum += term;
        }
        return sum;
    }

    // Canonical text, e.g. "2*c1^2*c2 - 1".  Unit coefficients are elided on
    // non-constant terms; exponent 1 is implicit.
    std::string to_string() const {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (first) {
                if (c < 0)
                    out += "-";
                first = false;
            } else {
                out += c < 0 ? " - " : " + ";
            }
            std::string mono = monomial_string(m);
            if (mono.empty()) {
                out += mag.str();
            } else if (mag == 1) {
                out += mono;
            } else {
                out += mag.str() + "*" + mono;
            }
        }
        return out;
    }

private:
    explicit Poly(VarSetPtr vars) : vars_(std::move(vars)) {
        if (!vars_)
            throw error(errc::precondition, "polynomial needs a variable universe");
    }

    bool universes_match(const Poly& o) const {
        return vars_ == o.vars_ || *vars_ == *o.vars_;
    }
    void require_same_universe(const Poly& o) const {
        if (!universes_match(o))
            throw error(errc::universe_mismatch,
                        "operands live over different variable universes");
    }

    void add_term(const Monomial& m, BigInt c) {
        if (c == 0)
            return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, std::move(c));
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    std::string monomial_string(const Monomial& m) const {
        std::string s;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            if (!s.empty())
                s += "*";
            s += vars_->name(i);
            if (m[i] > 1)
                s += "^" + std::to_string(m[i]);
        }
        return s;
    }

    VarSetPtr vars_;
    TermMap terms_;
};

// Uniform "give me a 0/1 of the same kind as x" helpers; they let the matrix
// templates construct constants without knowing the scalar kind.
inline BigInt scalar_zero(const BigInt&) { return BigInt(0); }
inline BigInt scalar_one(const BigInt&) { return BigInt(1); }
inline Rational scalar_zero(const Rational&) { return Rational(0); }
inline Rational scalar_one(const Rational&) { return Rational(1); }
inline Poly scalar_zero(const Poly& like) { return Poly::zero(like.vars()); }
inline Poly scalar_one(const Poly& like) { return Poly::constant(like.vars(), 1); }

// Units: +-1 in BigInt and Poly (integer coefficients), any nonzero Rational.
inline bool scalar_is_unit(const BigInt& x) { return x == 1 || x == -1; }
inline BigInt scalar_unit_inverse(const BigInt& x) { return x; }
inline bool scalar_is_unit(const Rational& x) { return x != 0; }
inline Rational scalar_unit_inverse(const Rational& x) { return 1 / x; }
inline bool scalar_is_unit(const Poly& x) {
    return x.is_constant() && !x.is_zero() && scalar_is_unit(x.constant_value());
}
inline Poly scalar_unit_inverse(const Poly& x) { return x; }

inline std::string to_string(const Poly& p) { return p.to_string(); }

} // namespace weylgr
