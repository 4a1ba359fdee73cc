#include "qca/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace qca {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

LinearConstraint normalize_linear(LinearConstraint c) {
    if (c.members.empty()) throw contract_error("linear constraint with no members");
    long long g = 0;
    for (const auto& [i, a] : c.coefficients) g = std::gcd(g, std::llabs(a));
    if (g == 0) throw contract_error("linear constraint with all-zero coefficients");
    if (c.target % g != 0)
        throw infeasible_error("coefficient gcd does not divide the target");
    for (auto& [i, a] : c.coefficients) a /= g;
    c.target /= g;
    return c;
}

std::pair<std::vector<int>, int> parity_set(const LinearConstraint& c) {
    std::vector<int> odd;
    for (int i : c.members) {
        const auto it = c.coefficients.find(i);
        if (it == c.coefficients.end())
            throw contract_error("coefficient missing for constraint member");
        if (std::llabs(it->second) % 2 == 1) odd.push_back(i);
    }
    const int nu = static_cast<int>(((c.target % 2) + 2) % 2);
    if (odd.empty() && nu == 1)
        throw infeasible_error("even coefficient sum cannot equal an odd target");
    return {odd, nu};
}

namespace {

bool intersects(const std::vector<int>& sorted_set, const std::set<int>& used) {
    for (int v : sorted_set)
        if (used.count(v)) return true;
    return false;
}

std::vector<int> build_permutation(const Selection& sel, int n) {
    std::vector<int> perm(n, 0);
    int pos = 1;
    for (const SelectedSet& s : sel.disjoint_sets)
        for (int v : s.members) perm[v - 1] = pos++;
    for (const ReducedSet& s : sel.reduced_sets)
        for (int v : s.members) perm[v - 1] = pos++;
    for (int v = 1; v <= n; ++v)
        if (perm[v - 1] == 0) perm[v - 1] = pos++;
    return perm;
}

void finalize(Selection& sel, const std::set<int>& used, int n) {
    sel.used.assign(used.begin(), used.end());
    for (int v : sel.used)
        if (v < 1 || v > n) throw contract_error("constraint variable outside 1..n");
    sel.permutation = build_permutation(sel, n);
}

}  // namespace

Selection preprocess_cardinality(const std::vector<CardinalityConstraint>& constraints,
                                 int eta_th, int n) {
    for (const auto& c : constraints) {
        if (c.members.empty()) throw contract_error("cardinality constraint with no members");
        if (c.target < 0 || c.target > static_cast<int>(c.members.size()))
            throw infeasible_error("cardinality target outside 0..|C|");
    }
    // Ascending C(|C|,b)/2^|C|, ties by original index. Compared exactly as
    // C(|C1|,b1) * 2^|C2| vs C(|C2|,b2) * 2^|C1|.
    std::vector<int> order(constraints.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int lhs, int rhs) {
        const auto& a = constraints[lhs];
        const auto& b = constraints[rhs];
        const unsigned __int128 ka =
            static_cast<unsigned __int128>(binomial(a.members.size(), a.target))
            << b.members.size();
        const unsigned __int128 kb =
            static_cast<unsigned __int128>(binomial(b.members.size(), b.target))
            << a.members.size();
        return ka < kb;
    });

    Selection sel;
    std::set<int> used;
    std::vector<int> remaining;
    for (int j : order) {
        const auto& c = constraints[j];
        if (!intersects(c.members, used)) {
            sel.disjoint_sets.push_back({c.members, c.target, BlockKind::Dicke, 0});
            used.insert(c.members.begin(), c.members.end());
        } else {
            remaining.push_back(j);
        }
    }
    if (eta_th > 0) {
        for (int j : remaining) {
            const auto& c = constraints[j];
            int r = 0;
            std::vector<int> residue;
            for (int v : c.members) {
                if (used.count(v))
                    ++r;
                else
                    residue.push_back(v);
            }
            if (r <= eta_th && !residue.empty()) {
                sel.reduced_sets.push_back({residue, c.target, r});
                used.insert(residue.begin(), residue.end());
            }
        }
    }
    finalize(sel, used, n);
    return sel;
}

Selection preprocess_parity(const std::vector<LinearConstraint>& constraints, int n) {
    struct ParityEntry {
        std::vector<int> members;
        int parity;
    };
    std::vector<ParityEntry> entries;
    for (const auto& c : constraints) {
        auto [odd, nu] = parity_set(c);
        if (!odd.empty()) entries.push_back({std::move(odd), nu});
    }
    std::stable_sort(entries.begin(), entries.end(),
                     [](const ParityEntry& a, const ParityEntry& b) {
                         return a.members.size() < b.members.size();
                     });
    Selection sel;
    std::set<int> used;
    for (const auto& e : entries) {
        if (intersects(e.members, used)) continue;
        sel.disjoint_sets.push_back({e.members, 0, BlockKind::Ghz, e.parity});
        used.insert(e.members.begin(), e.members.end());
    }
    finalize(sel, used, n);
    return sel;
}

Selection preprocess_system(const std::vector<Constraint>& constraints,
                            int eta_th, int n) {
    std::vector<CardinalityConstraint> cardinality;
    std::vector<LinearConstraint> linear;
    for (const Constraint& c : constraints) {
        if (std::holds_alternative<CardinalityConstraint>(c))
            cardinality.push_back(std::get<CardinalityConstraint>(c));
        else
            linear.push_back(normalize_linear(std::get<LinearConstraint>(c)));
    }
    Selection sel = preprocess_cardinality(cardinality, eta_th, n);
    std::set<int> used(sel.used.begin(), sel.used.end());

    // Dicke blocks first, then parity sets greedily on untouched variables.
    struct ParityEntry {
        std::vector<int> members;
        int parity;
    };
    std::vector<ParityEntry> entries;
    for (const auto& c : linear) {
        auto [odd, nu] = parity_set(c);
        if (!odd.empty()) entries.push_back({std::move(odd), nu});
    }
    std::stable_sort(entries.begin(), entries.end(),
                     [](const ParityEntry& a, const ParityEntry& b) {
                         return a.members.size() < b.members.size();
                     });
    for (const auto& e : entries) {
        if (intersects(e.members, used)) continue;
        sel.disjoint_sets.push_back({e.members, 0, BlockKind::Ghz, e.parity});
        used.insert(e.members.begin(), e.members.end());
    }
    finalize(sel, used, n);
    return sel;
}

std::uint64_t search_space_size(const Selection& selection, int n) {
    std::uint64_t size = 1;
    int covered = 0;
    for (const SelectedSet& s : selection.disjoint_sets) {
        const int mu = static_cast<int>(s.members.size());
        covered += mu;
        if (s.kind == BlockKind::Dicke)
            size *= binomial(mu, s.target);
        else
            size *= std::uint64_t{1} << (mu - 1);
    }
    for (const ReducedSet& s : selection.reduced_sets) {
        const int mu = static_cast<int>(s.members.size());
        covered += mu;
        std::uint64_t omega = 0;
        const int lo = std::max(0, s.target - s.overlap);
        const int hi = std::min(s.target, mu);
        for (int w = lo; w <= hi; ++w) omega += binomial(mu, w);
        if (omega == 0) throw infeasible_error("reduced set with empty weight window");
        size *= omega;
    }
    if (covered > n) throw contract_error("selection covers more than n variables");
    return size << (n - covered);
}

int optimal_queries(std::uint64_t f_size, std::uint64_t s_size) {
    if (s_size < 1 || s_size > f_size)
        throw contract_error("need 1 <= |S| <= |F|");
    const double theta = std::asin(std::sqrt(
        static_cast<double>(s_size) / static_cast<double>(f_size)));
    const double raw = std::acos(-1.0) / (4.0 * theta) - 0.5;
    return static_cast<int>(std::llround(raw));  // half rounds up for raw >= 0
}

Strategy make_strategy(Selection selection, int n, std::uint64_t solutions) {
    Strategy st;
    st.n = n;
    st.search_space = search_space_size(selection, n);
    st.solutions = solutions;
    st.kappa_opt = solutions > 0 ? optimal_queries(st.search_space, solutions) : -1;
    st.selection = std::move(selection);
    return st;
}

}  // namespace qca
