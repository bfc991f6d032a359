#pragma once

#include "lietower/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace lietower {

/// Sparse multivariate polynomial with rational coefficients. Only what the
/// symbolic form checks need: ring operations and exact comparison.
class Polynomial {
public:
    using Monomial = std::vector<int>;  // exponent per variable

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c) {
        Polynomial p(nvars);
        if (c != 0) p.terms_[Monomial(nvars, 0)] = c;
        return p;
    }
    static Polynomial variable(std::size_t nvars, std::size_t which) {
        Polynomial p(nvars);
        Monomial m(nvars, 0);
        m.at(which) = 1;
        p.terms_[m] = 1;
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) accumulate(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) accumulate(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial p(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(ma);
                for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
                p.accumulate(m, ca * cb);
            }
        return p;
    }
    friend Polynomial operator*(const Rational& k, const Polynomial& a) { return constant(a.nvars_, k) * a; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return (a - b).is_zero(); }

    Rational evaluate(const std::vector<Rational>& x) const {
        Rational s = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < m.size(); ++i)
                for (int k = 0; k < m[i]; ++k) t *= x.at(i);
            s += t;
        }
        return s;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += to_string(c);
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i] > 0) out += "*" + names.at(i) + (m[i] > 1 ? "^" + std::to_string(m[i]) : "");
        }
        return out;
    }

private:
    void accumulate(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::size_t nvars_ = 0;
    std::map<Monomial, Rational> terms_;
};

}  // namespace lietower
