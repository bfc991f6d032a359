#pragma once

#include "lietower/matrix.hpp"
#include "lietower/rational.hpp"
#include "lietower/root_system.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lietower {

/// Element of the split Lie algebra in Chevalley coordinates: root vectors
/// e_alpha and coroots h_1 .. h_n. Zero coefficients are never stored.
struct AlgElement {
    std::map<Root, Rational> root_part;
    std::vector<Rational> cartan_part;

    AlgElement() = default;
    explicit AlgElement(std::size_t rank) : cartan_part(rank) {}

    bool is_zero() const {
        if (!root_part.empty()) return false;
        for (const auto& c : cartan_part)
            if (c != 0) return false;
        return true;
    }

    bool is_pure_cartan() const { return root_part.empty(); }

    Rational coeff(const Root& r) const {
        auto it = root_part.find(r);
        return it == root_part.end() ? Rational(0) : it->second;
    }

    void add(const Root& r, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = root_part.emplace(r, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) root_part.erase(it);
        }
    }

    AlgElement& operator+=(const AlgElement& o) {
        if (cartan_part.size() < o.cartan_part.size()) cartan_part.resize(o.cartan_part.size());
        for (std::size_t i = 0; i < o.cartan_part.size(); ++i) cartan_part[i] += o.cartan_part[i];
        for (const auto& [r, c] : o.root_part) add(r, c);
        return *this;
    }
    AlgElement& operator*=(const Rational& k) {
        if (k == 0) {
            root_part.clear();
            for (auto& c : cartan_part) c = 0;
            return *this;
        }
        for (auto& [r, c] : root_part) c *= k;
        for (auto& c : cartan_part) c *= k;
        return *this;
    }
    friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
    friend AlgElement operator*(const Rational& k, AlgElement a) { return a *= k; }
    friend AlgElement operator-(AlgElement a, const AlgElement& b) {
        AlgElement nb = b;
        nb *= Rational(-1);
        return a += nb;
    }

    friend bool operator==(const AlgElement& a, const AlgElement& b) { return (a - b).is_zero(); }
};

/// Nonzero entry of a basis bracket: basis index and integer coefficient.
struct BasisTerm {
    int index;
    int coeff;
};

/// Split simply-laced Lie algebra with a Chevalley basis.
///
/// Signs are fixed by extraspecial pairs: positive roots are processed in
/// canonical order, for each non-simple xi the pair (alpha, xi - alpha) with
/// alpha minimal gets N = +1, and every other constant follows from the
/// three- and four-term relations. Conventions: [e_a, e_-a] = h_a and
/// N_{-a,-b} = -N_{a,b}. Immutable after construction.
class ChevalleyAlgebra {
public:
    static ChevalleyAlgebra build(const RootSystem& rs) {
        ChevalleyAlgebra alg;
        alg.rs_ = rs;
        alg.init_tables();
        alg.compute_structure_constants();
        alg.init_basis_brackets();
        return alg;
    }

    const RootSystem& roots() const { return rs_; }
    std::size_t rank() const { return rs_.rank(); }
    std::size_t root_count() const { return rs_.roots().size(); }
    std::size_t dimension() const { return root_count() + rank(); }

    std::size_t index(const Root& r) const {
        auto i = rs_.index_of(r);
        if (!i) throw std::invalid_argument("ChevalleyAlgebra: not a root " + r.str());
        return *i;
    }

    /// N_{a,b}; zero when a + b is not a root.
    int structure_constant(const Root& a, const Root& b) const {
        return n_[index(a) * root_count() + index(b)];
    }
    int structure_constant(std::size_t ia, std::size_t ib) const { return n_[ia * root_count() + ib]; }

    AlgElement e(const Root& r, const Rational& c = 1) const {
        index(r);
        AlgElement x(rank());
        x.add(r, c);
        return x;
    }
    /// Coroot h_i of the i-th simple root (1-based).
    AlgElement h(std::size_t index1, const Rational& c = 1) const {
        AlgElement x(rank());
        x.cartan_part.at(index1 - 1) = c;
        return x;
    }
    /// Coroot of an arbitrary root, sum_i c_i(a) h_i.
    AlgElement h_root(const Root& r) const {
        AlgElement x(rank());
        for (std::size_t i = 0; i < rank(); ++i) x.cartan_part[i] = r[i];
        return x;
    }

    AlgElement bracket(const AlgElement& x, const AlgElement& y) const {
        AlgElement out(rank());
        const std::size_t n = rank();
        // [h, e_b] and [e_a, h]
        for (const auto& [b, cb] : y.root_part) {
            Rational w = 0;
            for (std::size_t i = 0; i < n && i < x.cartan_part.size(); ++i)
                if (x.cartan_part[i] != 0) w += x.cartan_part[i] * pair_simple(b, i);
            if (w != 0) out.add(b, w * cb);
        }
        for (const auto& [a, ca] : x.root_part) {
            Rational w = 0;
            for (std::size_t i = 0; i < n && i < y.cartan_part.size(); ++i)
                if (y.cartan_part[i] != 0) w += y.cartan_part[i] * pair_simple(a, i);
            if (w != 0) out.add(a, -w * ca);
        }
        // [e_a, e_b]
        for (const auto& [a, ca] : x.root_part) {
            const std::size_t ia = index(a);
            for (const auto& [b, cb] : y.root_part) {
                const std::size_t ib = index(b);
                const int s = sum_[ia * root_count() + ib];
                if (s == kNotRoot) continue;
                if (s == kZeroSum) {
                    for (std::size_t i = 0; i < n; ++i)
                        if (a[i] != 0) out.cartan_part[i] += ca * cb * a[i];
                } else {
                    out.add(rs_.roots()[static_cast<std::size_t>(s)], ca * cb * n_[ia * root_count() + ib]);
                }
            }
        }
        return out;
    }

    /// Bracket of two basis vectors (indices < root_count() are root vectors
    /// in canonical order, the rest are h_1 .. h_n).
    const std::vector<BasisTerm>& basis_bracket(std::size_t i, std::size_t j) const {
        return basis_br_[i * dimension() + j];
    }

    AlgElement basis_element(std::size_t i) const {
        if (i < root_count()) return e(rs_.roots()[i]);
        return h(i - root_count() + 1);
    }

    /// Dense coordinates on the basis described in basis_bracket.
    std::vector<Rational> dense(const AlgElement& x) const {
        std::vector<Rational> v(dimension());
        for (const auto& [r, c] : x.root_part) v[index(r)] = c;
        for (std::size_t i = 0; i < x.cartan_part.size(); ++i) v[root_count() + i] = x.cartan_part[i];
        return v;
    }

    /// Largest p with b - p a a root (the a-string through b starts at b - p a).
    int string_p(const Root& a, const Root& b) const {
        int p = 0;
        Root r = b - a;
        while (rs_.is_root(r)) {
            ++p;
            r -= a;
        }
        return p;
    }

private:
    static constexpr int kNotRoot = -1;
    static constexpr int kZeroSum = -2;

    int pair_simple(const Root& r, std::size_t i) const {
        int s = 0;
        for (std::size_t j = 0; j < rank(); ++j) s += r[j] * rs_.cartan()[j][i];
        return s;
    }

    void init_tables() {
        const std::size_t R = root_count();
        sum_.assign(R * R, kNotRoot);
        neg_.assign(R, 0);
        for (std::size_t a = 0; a < R; ++a) {
            const Root& ra = rs_.roots()[a];
            neg_[a] = *rs_.index_of(-ra);
            for (std::size_t b = 0; b < R; ++b) {
                const Root s = ra + rs_.roots()[b];
                if (s.is_zero())
                    sum_[a * R + b] = kZeroSum;
                else if (auto i = rs_.index_of(s))
                    sum_[a * R + b] = static_cast<int>(*i);
            }
        }
    }

    bool positive(std::size_t i) const { return rs_.roots()[i].is_positive(); }

    // N for any pair whose sum is a root, reduced to positive pairs of smaller height.
    int reduce(std::size_t a, std::size_t b, const std::vector<int>& table) const {
        const std::size_t R = root_count();
        const int s = sum_[a * R + b];
        if (s < 0) throw std::logic_error("ChevalleyAlgebra: reduce called on a non-root sum");
        if (positive(a) && positive(b)) {
            const int v = table[a * R + b];
            if (v == 0) throw std::logic_error("ChevalleyAlgebra: sign propagation reached an unset constant");
            return v;
        }
        if (!positive(a) && !positive(b)) return -reduce(neg_[a], neg_[b], table);
        if (!positive(a)) return -reduce(b, a, table);
        // a > 0 > b; c = -(a + b), and N_{a,b} = N_{b,c} = N_{c,a}.
        const std::size_t c = neg_[static_cast<std::size_t>(s)];
        if (positive(c)) return reduce(c, a, table);
        return reduce(b, c, table);
    }

    void compute_structure_constants() {
        const std::size_t R = root_count();
        std::vector<int> table(R * R, 0);
        std::vector<std::size_t> pos;
        for (std::size_t i = 0; i < R; ++i)
            if (positive(i)) pos.push_back(i);  // canonical order

        for (std::size_t xi : pos) {
            std::vector<std::pair<std::size_t, std::size_t>> special;
            for (std::size_t a : pos) {
                if (a >= xi) break;
                const Root rest = rs_.roots()[xi] - rs_.roots()[a];
                auto b = rs_.index_of(rest);
                if (b && positive(*b) && a < *b) special.emplace_back(a, *b);
            }
            if (special.empty()) continue;  // simple root
            const auto [g, d] = special.front();
            table[g * R + d] = 1;
            table[d * R + g] = -1;
            for (std::size_t k = 1; k < special.size(); ++k) {
                const auto [a, b] = special[k];
                const std::size_t ng = neg_[g], nd = neg_[d];
                int v = 0;
                if (sum_[b * R + ng] >= 0) v += reduce(b, ng, table) * reduce(a, nd, table);
                if (sum_[a * R + ng] >= 0) v += reduce(ng, a, table) * reduce(b, nd, table);
                if (v != 1 && v != -1)
                    throw std::logic_error("ChevalleyAlgebra: sign propagation contradiction at " +
                                           rs_.roots()[xi].str());
                table[a * R + b] = v;
                table[b * R + a] = -v;
            }
        }

        n_.assign(R * R, 0);
        for (std::size_t a = 0; a < R; ++a)
            for (std::size_t b = 0; b < R; ++b)
                if (sum_[a * R + b] >= 0) n_[a * R + b] = reduce(a, b, table);
    }

    void init_basis_brackets() {
        const std::size_t R = root_count(), n = rank(), D = dimension();
        basis_br_.assign(D * D, {});
        for (std::size_t i = 0; i < D; ++i)
            for (std::size_t j = 0; j < D; ++j) {
                auto& out = basis_br_[i * D + j];
                if (i < R && j < R) {
                    const int s = sum_[i * R + j];
                    if (s >= 0) {
                        out.push_back({s, n_[i * R + j]});
                    } else if (s == kZeroSum) {
                        const Root& a = rs_.roots()[i];
                        for (std::size_t k = 0; k < n; ++k)
                            if (a[k] != 0) out.push_back({static_cast<int>(R + k), a[k]});
                    }
                } else if (i >= R && j < R) {
                    const int w = pair_simple(rs_.roots()[j], i - R);
                    if (w != 0) out.push_back({static_cast<int>(j), w});
                } else if (i < R && j >= R) {
                    const int w = pair_simple(rs_.roots()[i], j - R);
                    if (w != 0) out.push_back({static_cast<int>(i), -w});
                }
            }
    }

    RootSystem rs_;
    std::vector<int> sum_;
    std::vector<std::size_t> neg_;
    std::vector<int> n_;
    std::vector<std::vector<BasisTerm>> basis_br_;
};

inline ChevalleyAlgebra build_chevalley(const RootSystem& rs) { return ChevalleyAlgebra::build(rs); }

inline AlgElement bracket(const ChevalleyAlgebra& alg, const AlgElement& x, const AlgElement& y) {
    return alg.bracket(x, y);
}

struct JacobiResult {
    std::uint64_t triples = 0;
    std::uint64_t violations = 0;
};

namespace detail {

class JacobiAccumulator {
public:
    explicit JacobiAccumulator(const ChevalleyAlgebra& alg) : alg_(alg), acc_(alg.dimension(), 0) {}

    bool vanishes(std::size_t x, std::size_t y, std::size_t z) {
        add(x, y, z);
        add(y, z, x);
        add(z, x, y);
        bool zero = true;
        for (int t : touched_) {
            if (acc_[static_cast<std::size_t>(t)] != 0) zero = false;
            acc_[static_cast<std::size_t>(t)] = 0;
        }
        touched_.clear();
        return zero;
    }

private:
    // acc += [x, [y, z]]
    void add(std::size_t x, std::size_t y, std::size_t z) {
        for (const auto& inner : alg_.basis_bracket(y, z))
            for (const auto& outer : alg_.basis_bracket(x, static_cast<std::size_t>(inner.index))) {
                acc_[static_cast<std::size_t>(outer.index)] += inner.coeff * outer.coeff;
                touched_.push_back(outer.index);
            }
    }

    const ChevalleyAlgebra& alg_;
    std::vector<long> acc_;
    std::vector<int> touched_;
};

}  // namespace detail

/// Jacobi identity on every ordered triple of basis vectors.
inline JacobiResult jacobi_exhaustive(const ChevalleyAlgebra& alg) {
    JacobiResult res;
    detail::JacobiAccumulator acc(alg);
    const std::size_t D = alg.dimension();
    for (std::size_t x = 0; x < D; ++x)
        for (std::size_t y = 0; y < D; ++y)
            for (std::size_t z = 0; z < D; ++z) {
                ++res.triples;
                if (!acc.vanishes(x, y, z)) ++res.violations;
            }
    return res;
}

/// Jacobi identity on `samples` basis triples drawn with a fixed seed.
inline JacobiResult jacobi_sampled(const ChevalleyAlgebra& alg, std::uint64_t samples, std::uint64_t seed) {
    JacobiResult res;
    detail::JacobiAccumulator acc(alg);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, alg.dimension() - 1);
    for (std::uint64_t k = 0; k < samples; ++k) {
        const std::size_t x = pick(rng), y = pick(rng), z = pick(rng);
        ++res.triples;
        if (!acc.vanishes(x, y, z)) ++res.violations;
    }
    return res;
}

/// Coordinates of algebra elements relative to a fixed linearly independent list.
class SpanCoordinates {
public:
    SpanCoordinates(const ChevalleyAlgebra& alg, std::vector<AlgElement> basis) : alg_(alg), basis_(std::move(basis)) {
        const std::size_t k = basis_.size(), D = alg.dimension();
        dense_.reserve(k);
        for (const auto& b : basis_) dense_.push_back(alg.dense(b));
        // Rows of the D x k basis matrix that form an invertible k x k block.
        Matrix t(k, D);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < D; ++i) t(j, i) = dense_[j][i];
        rows_ = rref(t);
        if (rows_.size() != k) throw std::invalid_argument("SpanCoordinates: basis is linearly dependent");
        Matrix aug(k, 2 * k);
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t j = 0; j < k; ++j) aug(r, j) = dense_[j][rows_[r]];
            aug(r, k + r) = 1;
        }
        rref(aug);
        inverse_ = Matrix(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) inverse_(i, j) = aug(i, k + j);
    }

    std::size_t size() const { return basis_.size(); }
    const std::vector<AlgElement>& basis() const { return basis_; }

    /// Coordinates of x, or nullopt when x is outside the span.
    std::optional<std::vector<Rational>> coordinates(const AlgElement& x) const {
        const auto v = alg_.dense(x);
        const std::size_t k = basis_.size();
        std::vector<Rational> c(k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t r = 0; r < k; ++r)
                if (inverse_(i, r) != 0) c[i] += inverse_(i, r) * v[rows_[r]];
        for (std::size_t d = 0; d < v.size(); ++d) {
            Rational s = 0;
            for (std::size_t j = 0; j < k; ++j)
                if (c[j] != 0 && dense_[j][d] != 0) s += c[j] * dense_[j][d];
            if (s != v[d]) return std::nullopt;
        }
        return c;
    }

    AlgElement element(const std::vector<Rational>& coords) const {
        AlgElement x(alg_.rank());
        for (std::size_t j = 0; j < coords.size(); ++j)
            if (coords[j] != 0) x += coords[j] * basis_[j];
        return x;
    }

private:
    const ChevalleyAlgebra& alg_;
    std::vector<AlgElement> basis_;
    std::vector<std::vector<Rational>> dense_;
    std::vector<std::size_t> rows_;
    Matrix inverse_;
};

/// Linearised adjoint action of a list of generators on an invariant subspace.
///
/// per_generator[j](k, i) is the k-th module coordinate of [acting_j, module_i].
struct ActionMatrix {
    std::vector<AlgElement> domain_basis;
    std::vector<AlgElement> codomain_basis;
    std::vector<Matrix> per_generator;

    /// Column j holds the module coordinates of [acting_j, v].
    Matrix evaluate(const std::vector<Rational>& v) const {
        const std::size_t d = codomain_basis.size();
        if (v.size() != d) throw std::invalid_argument("ActionMatrix::evaluate: wrong coordinate length");
        Matrix m(d, per_generator.size());
        for (std::size_t j = 0; j < per_generator.size(); ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t i = 0; i < d; ++i)
                    if (v[i] != 0) m(k, j) += per_generator[j](k, i) * v[i];
        return m;
    }
};

inline ActionMatrix action_matrix(const ChevalleyAlgebra& alg, const std::vector<AlgElement>& acting,
                                  const std::vector<AlgElement>& module) {
    SpanCoordinates coords(alg, module);
    ActionMatrix am;
    am.domain_basis = acting;
    am.codomain_basis = module;
    for (const auto& x : acting) {
        Matrix m(module.size(), module.size());
        for (std::size_t i = 0; i < module.size(); ++i) {
            auto c = coords.coordinates(alg.bracket(x, module[i]));
            if (!c) throw std::invalid_argument("action_matrix: module is not invariant under the acting set");
            for (std::size_t k = 0; k < module.size(); ++k) m(k, i) = (*c)[k];
        }
        am.per_generator.push_back(std::move(m));
    }
    return am;
}

/// Exact nullity of an evaluated action matrix (infinitesimal stabiliser dimension).
inline std::size_t kernel_dim(const Matrix& evaluated) { return nullity(evaluated); }

}  // namespace lietower
