#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lietower {

inline constexpr std::size_t kMaxRank = 8;

/// Integer coefficient vector over the simple roots, in Bourbaki order.
///
/// Coordinates are 0-based internally; `coeff(i)` takes the 1-based simple
/// index used when talking about alpha_1 .. alpha_n. Roots order by height
/// first and lexicographically on the coefficients second; that is the
/// canonical order used wherever iteration order is observable.
class Root {
public:
    Root() = default;
    explicit Root(std::size_t rank) : rank_(rank) {
        if (rank > kMaxRank) throw std::invalid_argument("Root: rank too large");
    }
    Root(std::initializer_list<int> coeffs) : rank_(coeffs.size()) {
        if (rank_ > kMaxRank) throw std::invalid_argument("Root: rank too large");
        std::size_t i = 0;
        for (int c : coeffs) c_[i++] = c;
    }
    explicit Root(const std::vector<int>& coeffs) : rank_(coeffs.size()) {
        if (rank_ > kMaxRank) throw std::invalid_argument("Root: rank too large");
        for (std::size_t i = 0; i < rank_; ++i) c_[i] = coeffs[i];
    }

    static Root simple(std::size_t rank, std::size_t index1) {
        Root r(rank);
        r.c_.at(index1 - 1) = 1;
        return r;
    }

    std::size_t rank() const { return rank_; }
    int operator[](std::size_t i) const { return c_[i]; }
    int& operator[](std::size_t i) { return c_[i]; }
    int coeff(std::size_t index1) const { return c_.at(index1 - 1); }

    int height() const {
        int h = 0;
        for (std::size_t i = 0; i < rank_; ++i) h += c_[i];
        return h;
    }

    bool is_zero() const {
        for (std::size_t i = 0; i < rank_; ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    bool is_positive() const { return !is_zero() && nonnegative(); }
    bool is_negative() const { return !is_zero() && (-*this).nonnegative(); }

    bool nonnegative() const {
        for (std::size_t i = 0; i < rank_; ++i)
            if (c_[i] < 0) return false;
        return true;
    }

    /// Support as 1-based simple indices.
    std::vector<int> support() const {
        std::vector<int> s;
        for (std::size_t i = 0; i < rank_; ++i)
            if (c_[i] != 0) s.push_back(static_cast<int>(i + 1));
        return s;
    }

    std::vector<int> coeffs() const { return {c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(rank_)}; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < rank_; ++i) {
            if (i) s += ',';
            s += std::to_string(c_[i]);
        }
        return s + ")";
    }

    Root operator-() const {
        Root r(*this);
        for (std::size_t i = 0; i < rank_; ++i) r.c_[i] = -r.c_[i];
        return r;
    }
    Root& operator+=(const Root& o) {
        check_rank(o);
        for (std::size_t i = 0; i < rank_; ++i) c_[i] += o.c_[i];
        return *this;
    }
    Root& operator-=(const Root& o) {
        check_rank(o);
        for (std::size_t i = 0; i < rank_; ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend Root operator+(Root a, const Root& b) { return a += b; }
    friend Root operator-(Root a, const Root& b) { return a -= b; }
    friend Root operator*(int k, Root a) {
        for (std::size_t i = 0; i < a.rank_; ++i) a.c_[i] *= k;
        return a;
    }

    friend bool operator==(const Root& a, const Root& b) { return a.rank_ == b.rank_ && a.c_ == b.c_; }
    friend std::strong_ordering operator<=>(const Root& a, const Root& b) {
        if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
        if (auto c = a.height() <=> b.height(); c != 0) return c;
        return a.c_ <=> b.c_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Root& r) { return os << r.str(); }

private:
    void check_rank(const Root& o) const {
        if (o.rank_ != rank_) throw std::invalid_argument("Root: rank mismatch");
    }

    std::array<int, kMaxRank> c_{};
    std::size_t rank_ = 0;
};

struct RootHash {
    std::size_t operator()(const Root& r) const noexcept {
        std::size_t h = r.rank();
        for (std::size_t i = 0; i < r.rank(); ++i) h = h * 131 + static_cast<std::size_t>(r[i] + 64);
        return h;
    }
};

}  // namespace lietower
