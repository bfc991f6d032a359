#pragma once

#include "lietower/root.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lietower {

using IntMatrix = std::vector<std::vector<int>>;

enum class SystemKind { E6, E7 };

struct RootSystemType {
    SystemKind kind = SystemKind::E6;

    std::size_t rank() const { return kind == SystemKind::E6 ? 6 : 7; }
    std::string name() const { return kind == SystemKind::E6 ? "E6" : "E7"; }

    friend bool operator==(const RootSystemType&, const RootSystemType&) = default;
};

inline constexpr RootSystemType kE6{SystemKind::E6};
inline constexpr RootSystemType kE7{SystemKind::E7};

inline RootSystemType parse_type(const std::string& s) {
    if (s == "e6" || s == "E6") return kE6;
    if (s == "e7" || s == "E7") return kE7;
    throw std::invalid_argument("unknown root system type: " + s);
}

/// Edges of the Dynkin diagram, 1-based node labels, Bourbaki numbering:
/// chain 1-3-4-5-6(-7) with node 2 attached to node 4.
inline std::vector<std::pair<int, int>> bourbaki_edges(SystemKind kind) {
    std::vector<std::pair<int, int>> edges{{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
    if (kind == SystemKind::E7) edges.emplace_back(6, 7);
    std::sort(edges.begin(), edges.end());
    return edges;
}

inline IntMatrix cartan_from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
    IntMatrix c(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
    for (auto [a, b] : edges) {
        c[a - 1][b - 1] = -1;
        c[b - 1][a - 1] = -1;
    }
    return c;
}

inline std::vector<std::pair<int, int>> edges_from_cartan(const IntMatrix& c) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (c[i][j] != 0) edges.emplace_back(static_cast<int>(i + 1), static_cast<int>(j + 1));
    return edges;
}

/// Irreducible simply-laced Dynkin type (only A, D, E occur here).
struct DynkinType {
    char series = 'A';
    std::size_t rank = 0;

    std::string label() const { return std::string(1, series) + std::to_string(rank); }

    /// Number of roots (both signs) of the irreducible system.
    std::size_t root_count() const {
        switch (series) {
        case 'A': return rank * (rank + 1);
        case 'D': return 2 * rank * (rank - 1);
        case 'E': return rank == 6 ? 72 : rank == 7 ? 126 : 240;
        }
        return 0;
    }

    friend bool operator==(const DynkinType&, const DynkinType&) = default;
    friend auto operator<=>(const DynkinType&, const DynkinType&) = default;
};

/// Classifies a connected simply-laced Cartan matrix by its diagram shape.
inline DynkinType detect_dynkin_type(const IntMatrix& cartan) {
    const std::size_t n = cartan.size();
    if (n == 0) throw std::invalid_argument("detect_dynkin_type: empty diagram");
    std::vector<std::vector<std::size_t>> adj(n);
    std::size_t edges = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (cartan[i][i] != 2) throw std::invalid_argument("detect_dynkin_type: diagonal entry is not 2");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (cartan[i][j] != cartan[j][i] || cartan[i][j] < -1 || cartan[i][j] > 0)
                throw std::invalid_argument("detect_dynkin_type: not simply laced");
            if (cartan[i][j] == -1) {
                adj[i].push_back(j);
                if (i < j) ++edges;
            }
        }
    }
    if (edges != n - 1) throw std::invalid_argument("detect_dynkin_type: diagram is not a tree");

    std::vector<std::size_t> branch;
    for (std::size_t i = 0; i < n; ++i) {
        if (adj[i].size() > 3) throw std::invalid_argument("detect_dynkin_type: node of degree > 3");
        if (adj[i].size() == 3) branch.push_back(i);
    }
    if (branch.empty()) return {'A', n};
    if (branch.size() > 1) throw std::invalid_argument("detect_dynkin_type: more than one branch node");

    // Leg lengths from the branch node.
    const std::size_t b = branch.front();
    std::vector<std::size_t> legs;
    for (std::size_t start : adj[b]) {
        std::size_t len = 1, prev = b, cur = start;
        while (adj[cur].size() == 2) {
            const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
            ++len;
        }
        legs.push_back(len);
    }
    std::sort(legs.begin(), legs.end());
    if (legs[0] == 1 && legs[1] == 1) return {'D', n};
    if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4) return {'E', n};
    throw std::invalid_argument("detect_dynkin_type: unsupported diagram");
}

/// All roots obtained from `simples` by repeated simple reflections, with
/// `pair(a, b)` the symmetric form. Returned in canonical order.
template <typename Pairing>
std::vector<Root> reflection_closure(const std::vector<Root>& simples, Pairing pair) {
    std::set<Root> seen(simples.begin(), simples.end());
    std::deque<Root> queue(simples.begin(), simples.end());
    while (!queue.empty()) {
        const Root r = queue.front();
        queue.pop_front();
        for (const Root& s : simples) {
            const Root image = r - pair(r, s) * s;
            if (seen.insert(image).second) queue.push_back(image);
        }
    }
    return {seen.begin(), seen.end()};
}

/// Closed root system in simple-root coordinates. Immutable after construction.
class RootSystem {
public:
    static RootSystem build(RootSystemType t) {
        RootSystem rs = from_cartan(cartan_from_edges(t.rank(), bourbaki_edges(t.kind)), t.name());
        rs.type_ = t;
        return rs;
    }

    /// Any simply-laced Cartan matrix of rank <= kMaxRank.
    static RootSystem from_cartan(IntMatrix cartan, std::string label) {
        RootSystem rs;
        rs.cartan_ = std::move(cartan);
        rs.label_ = std::move(label);
        const std::size_t n = rs.cartan_.size();
        if (n == 0 || n > kMaxRank) throw std::invalid_argument("RootSystem: unsupported rank");
        for (std::size_t i = 1; i <= n; ++i) rs.simple_.push_back(Root::simple(n, i));
        rs.roots_ = reflection_closure(rs.simple_, [&rs](const Root& a, const Root& b) { return rs.pairing(a, b); });
        for (std::size_t i = 0; i < rs.roots_.size(); ++i) {
            rs.index_.emplace(rs.roots_[i], i);
            if (rs.roots_[i].is_positive()) rs.positive_.push_back(rs.roots_[i]);
        }
        rs.highest_ = rs.compute_highest();
        return rs;
    }

    std::size_t rank() const { return cartan_.size(); }
    const std::string& label() const { return label_; }
    std::optional<RootSystemType> type() const { return type_; }
    const IntMatrix& cartan() const { return cartan_; }

    /// All roots in canonical order (negative roots first).
    const std::vector<Root>& roots() const { return roots_; }
    const std::vector<Root>& positive() const { return positive_; }
    const std::vector<Root>& simple_roots() const { return simple_; }
    const Root& simple(std::size_t index1) const { return simple_.at(index1 - 1); }
    const Root& highest() const { return highest_; }

    bool is_root(const Root& r) const { return index_.count(r) != 0; }
    std::optional<std::size_t> index_of(const Root& r) const {
        auto it = index_.find(r);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// <a, b^vee>; for a simply-laced system with (b, b) = 2 this is the
    /// symmetric form a^T C b.
    int pairing(const Root& a, const Root& b) const {
        const std::size_t n = rank();
        int s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) s += a[i] * cartan_[i][j] * b[j];
        }
        return s;
    }

    Root reflect(const Root& r, const Root& in) const { return r - pairing(r, in) * in; }

private:
    Root compute_highest() const {
        const Root* found = nullptr;
        for (const Root& r : positive_) {
            bool maximal = true;
            for (const Root& s : simple_)
                if (is_root(r + s)) {
                    maximal = false;
                    break;
                }
            if (!maximal) continue;
            if (found) throw std::logic_error("RootSystem: more than one maximal root (reducible system?)");
            found = &r;
        }
        if (!found) throw std::logic_error("RootSystem: no maximal root");
        return *found;
    }

    IntMatrix cartan_;
    std::string label_;
    std::optional<RootSystemType> type_;
    std::vector<Root> simple_;
    std::vector<Root> roots_;
    std::vector<Root> positive_;
    std::unordered_map<Root, std::size_t, RootHash> index_;
    Root highest_;
};

inline RootSystem build_root_system(RootSystemType t) { return RootSystem::build(t); }

/// Unique root beta with beta + alpha_i never a root.
inline Root highest_root(const RootSystem& rs) { return rs.highest(); }

inline int pairing(const RootSystem& rs, const Root& a, const Root& b) { return rs.pairing(a, b); }

/// One irreducible component of a subsystem, in ambient coordinates.
struct Component {
    DynkinType type;
    std::vector<Root> simple;
    std::vector<Root> roots;
    std::vector<Root> positive;
    Root highest;

    /// 1-based ambient nodes when every simple root is an ambient simple root.
    std::optional<std::vector<int>> ambient_nodes() const {
        std::vector<int> nodes;
        for (const Root& s : simple) {
            auto sup = s.support();
            if (sup.size() != 1 || s[static_cast<std::size_t>(sup[0] - 1)] != 1) return std::nullopt;
            nodes.push_back(sup[0]);
        }
        std::sort(nodes.begin(), nodes.end());
        return nodes;
    }
};

struct Subsystem {
    std::vector<Root> roots;
    std::vector<Root> positive;
    std::vector<Root> simple;
    std::vector<Component> components;

    /// Product label such as "A1xD5"; empty for the empty subsystem.
    std::string type_label() const {
        std::string s;
        for (const auto& c : components) {
            if (!s.empty()) s += 'x';
            s += c.type.label();
        }
        return s;
    }

    bool contains(const Root& r) const { return std::binary_search(roots.begin(), roots.end(), r); }
};

inline Root highest_root(const Component& c) { return c.highest; }

/// Splits a closed, negation-stable set of ambient roots into irreducible
/// components and labels each one.
inline Subsystem make_subsystem(const RootSystem& rs, std::vector<Root> roots) {
    Subsystem sub;
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    sub.roots = std::move(roots);
    for (const Root& r : sub.roots) {
        if (!rs.is_root(r)) throw std::invalid_argument("make_subsystem: not an ambient root " + r.str());
        if (!sub.contains(-r)) throw std::invalid_argument("make_subsystem: set is not negation stable");
        if (r.is_positive()) sub.positive.push_back(r);
    }
    // Simple roots: positive roots that are not a sum of two positive roots of the set.
    std::set<Root> pos(sub.positive.begin(), sub.positive.end());
    for (const Root& r : sub.positive) {
        bool decomposable = false;
        for (const Root& a : sub.positive) {
            if (!(a < r)) break;
            if (pos.count(r - a)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) sub.simple.push_back(r);
    }

    // Connected components of the induced diagram.
    const std::size_t k = sub.simple.size();
    std::vector<int> comp(k, -1);
    int ncomp = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (comp[i] != -1) continue;
        std::deque<std::size_t> q{i};
        comp[i] = ncomp;
        while (!q.empty()) {
            const std::size_t a = q.front();
            q.pop_front();
            for (std::size_t b = 0; b < k; ++b)
                if (comp[b] == -1 && rs.pairing(sub.simple[a], sub.simple[b]) != 0) {
                    comp[b] = ncomp;
                    q.push_back(b);
                }
        }
        ++ncomp;
    }

    std::size_t covered = 0;
    for (int c = 0; c < ncomp; ++c) {
        Component cp;
        for (std::size_t i = 0; i < k; ++i)
            if (comp[i] == c) cp.simple.push_back(sub.simple[i]);
        IntMatrix cm(cp.simple.size(), std::vector<int>(cp.simple.size()));
        for (std::size_t i = 0; i < cp.simple.size(); ++i)
            for (std::size_t j = 0; j < cp.simple.size(); ++j) cm[i][j] = rs.pairing(cp.simple[i], cp.simple[j]);
        cp.type = detect_dynkin_type(cm);
        cp.roots = reflection_closure(cp.simple, [&rs](const Root& a, const Root& b) { return rs.pairing(a, b); });
        for (const Root& r : cp.roots) {
            if (!sub.contains(r)) throw std::logic_error("make_subsystem: component escapes the subsystem");
            if (r.is_positive()) cp.positive.push_back(r);
        }
        cp.highest = cp.positive.back();
        for (const Root& s : cp.simple)
            if (std::binary_search(cp.roots.begin(), cp.roots.end(), cp.highest + s))
                throw std::logic_error("make_subsystem: component highest root is not maximal");
        covered += cp.roots.size();
        sub.components.push_back(std::move(cp));
    }
    if (covered != sub.roots.size()) throw std::logic_error("make_subsystem: components do not cover the subsystem");

    std::sort(sub.components.begin(), sub.components.end(), [](const Component& a, const Component& b) {
        if (a.type != b.type) return a.type < b.type;
        return a.simple.front() < b.simple.front();
    });
    return sub;
}

/// Roots supported on the 1-based simple indices in `keep`.
inline Subsystem subsystem(const RootSystem& rs, const std::vector<int>& keep) {
    std::vector<bool> allowed(rs.rank() + 1, false);
    for (int k : keep) {
        if (k < 1 || static_cast<std::size_t>(k) > rs.rank()) throw std::invalid_argument("subsystem: index out of range");
        allowed[static_cast<std::size_t>(k)] = true;
    }
    std::vector<Root> roots;
    for (const Root& r : rs.roots()) {
        bool ok = true;
        for (int i : r.support())
            if (!allowed[static_cast<std::size_t>(i)]) {
                ok = false;
                break;
            }
        if (ok) roots.push_back(r);
    }
    return make_subsystem(rs, std::move(roots));
}

/// Roots orthogonal to every root in `betas` (which must be mutually orthogonal).
inline Subsystem orthogonal_subsystem(const RootSystem& rs, const std::vector<Root>& betas) {
    for (std::size_t i = 0; i < betas.size(); ++i) {
        if (!rs.is_root(betas[i])) throw std::invalid_argument("orthogonal_subsystem: not a root " + betas[i].str());
        for (std::size_t j = i + 1; j < betas.size(); ++j)
            if (rs.pairing(betas[i], betas[j]) != 0)
                throw std::invalid_argument("orthogonal_subsystem: roots are not pairwise orthogonal");
    }
    std::vector<Root> roots;
    for (const Root& r : rs.roots()) {
        bool ok = true;
        for (const Root& b : betas)
            if (rs.pairing(r, b) != 0) {
                ok = false;
                break;
            }
        if (ok) roots.push_back(r);
    }
    return make_subsystem(rs, std::move(roots));
}

/// Every simple reflection maps the root set onto itself.
inline bool is_reflection_closed(const RootSystem& rs) {
    for (const Root& r : rs.roots())
        for (const Root& s : rs.simple_roots())
            if (!rs.is_root(rs.reflect(r, s))) return false;
    return true;
}

}  // namespace lietower
