#pragma once

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "qca/errors.hpp"

namespace qca {

// Variable indices are 1-based throughout the constraint model; variable i
// lives on simulator qubit i-1.

// Sum of the member variables equals `target` (a Hamming-weight restriction).
struct CardinalityConstraint {
    std::vector<int> members;  // sorted, distinct
    int target = 0;
};

// Integer linear constraint: sum of coefficient[i] * x_i over members == target.
struct LinearConstraint {
    std::vector<int> members;  // sorted, distinct
    std::map<int, long long> coefficients;
    long long target = 0;
};

using Constraint = std::variant<CardinalityConstraint, LinearConstraint>;

enum class BlockKind { Dicke, Ghz };

struct SelectedSet {
    std::vector<int> members;
    int target = 0;       // Hamming weight for Dicke sets
    BlockKind kind = BlockKind::Dicke;
    int parity = 0;       // weight parity for Ghz sets
};

struct ReducedSet {
    std::vector<int> members;  // residue after removing already-used variables
    int target = 0;            // original cardinality target
    int overlap = 0;           // r = |C ∩ used|
};

struct Selection {
    std::vector<SelectedSet> disjoint_sets;
    std::vector<ReducedSet> reduced_sets;
    std::vector<int> used;         // sorted union of all selected variables
    std::vector<int> permutation;  // permutation[v-1] = 1-based position of variable v
};

struct Strategy {
    Selection selection;
    int n = 0;                       // total variables / data qubits
    std::uint64_t search_space = 0;  // |F|
    std::uint64_t solutions = 0;     // |S|, 0 when unknown
    int kappa_opt = -1;              // -1 when |S| unknown
};

std::uint64_t binomial(int n, int k);

// Divides coefficients and target by the gcd of the coefficients.
// Throws infeasible_error when that gcd does not divide the target.
LinearConstraint normalize_linear(LinearConstraint c);

// Odd-coefficient member set and required weight parity (target mod 2).
// Throws infeasible_error when the set is empty but the target is odd.
std::pair<std::vector<int>, int> parity_set(const LinearConstraint& c);

// Greedy two-phase selection of jointly implementable cardinality constraints.
Selection preprocess_cardinality(const std::vector<CardinalityConstraint>& constraints,
                                 int eta_th, int n);

// Greedy disjoint selection of parity sets derived from linear constraints.
Selection preprocess_parity(const std::vector<LinearConstraint>& constraints, int n);

// Mixed pipeline: cardinality selection first, then parity selection on the
// remaining variables.
Selection preprocess_system(const std::vector<Constraint>& constraints,
                            int eta_th, int n);

std::uint64_t search_space_size(const Selection& selection, int n);

// round(pi / (4 asin(sqrt(S/F))) - 1/2), half rounded up.
int optimal_queries(std::uint64_t f_size, std::uint64_t s_size);

Strategy make_strategy(Selection selection, int n, std::uint64_t solutions);

}  // namespace qca
