#include "qca/exact_cover.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <set>
#include <sstream>

#include "qca/state_prep.hpp"

namespace qca {

long long CoverInstance::weight_of(int subset) const {
    const auto it = weights.find(subset);
    return it == weights.end() ? 1 : it->second;
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

long long parse_int(const std::string& tok, int line) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw parse_error("expected an integer, got '" + tok + "'", line);
    }
}

}  // namespace

CoverInstance parse_instance(std::istream& in) {
    CoverInstance inst;
    bool have_universe = false;
    std::set<std::string> known;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::vector<std::string> toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks[0] == "universe:") {
            if (have_universe) throw parse_error("duplicate universe line", lineno);
            if (toks.size() < 2) throw parse_error("universe line has no elements", lineno);
            for (std::size_t i = 1; i < toks.size(); ++i) {
                if (!known.insert(toks[i]).second)
                    throw parse_error("duplicate universe element '" + toks[i] + "'", lineno);
                inst.universe.push_back(toks[i]);
            }
            have_universe = true;
        } else if (toks[0] == "subset") {
            if (!have_universe)
                throw parse_error("subset before the universe line", lineno);
            if (toks.size() < 2 || toks[1].empty() || toks[1].back() != ':')
                throw parse_error("expected 'subset <i>:'", lineno);
            const long long idx = parse_int(toks[1].substr(0, toks[1].size() - 1), lineno);
            if (idx != inst.num_subsets() + 1)
                throw parse_error("subset indices must run 1, 2, ... in order", lineno);
            std::vector<std::string> elems;
            std::size_t i = 2;
            for (; i < toks.size() && toks[i] != "weight"; ++i) {
                if (!known.count(toks[i]))
                    throw parse_error("unknown element '" + toks[i] + "'", lineno);
                elems.push_back(toks[i]);
            }
            if (elems.empty()) throw parse_error("empty subset", lineno);
            if (i < toks.size()) {
                if (i + 1 != toks.size() - 1)
                    throw parse_error("expected 'weight <w>' at end of line", lineno);
                const long long w = parse_int(toks[i + 1], lineno);
                if (w < 1) throw parse_error("weights must be positive", lineno);
                if (w != 1) inst.weights[static_cast<int>(idx)] = w;
            }
            inst.subsets.push_back(std::move(elems));
        } else if (toks[0] == "target:") {
            if (toks.size() != 2) throw parse_error("expected 'target: <t>'", lineno);
            const long long t = parse_int(toks[1], lineno);
            if (t < 1) throw parse_error("coverage target must be positive", lineno);
            inst.coverage_target = t;
        } else {
            throw parse_error("unrecognized directive '" + toks[0] + "'", lineno);
        }
    }
    if (!have_universe) throw parse_error("missing universe line", lineno);
    if (inst.subsets.empty()) throw parse_error("instance has no subsets", lineno);
    return inst;
}

CoverInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'", 0);
    return parse_instance(in);
}

std::vector<Constraint> constraints_of(const CoverInstance& instance) {
    std::vector<Constraint> out;
    for (const std::string& elem : instance.universe) {
        std::vector<int> members;
        for (int i = 0; i < instance.num_subsets(); ++i)
            if (std::find(instance.subsets[i].begin(), instance.subsets[i].end(),
                          elem) != instance.subsets[i].end())
                members.push_back(i + 1);
        if (members.empty())
            throw infeasible_error("element '" + elem + "' is covered by no subset");
        const bool unit = std::all_of(members.begin(), members.end(), [&](int i) {
            return instance.weight_of(i) == 1;
        });
        if (unit) {
            out.push_back(CardinalityConstraint{
                members, static_cast<int>(instance.coverage_target)});
        } else {
            LinearConstraint c;
            for (int i : members) c.coefficients[i] = instance.weight_of(i);
            c.members = std::move(members);
            c.target = instance.coverage_target;
            out.push_back(std::move(c));
        }
    }
    return out;
}

namespace {

struct ElementMask {
    std::uint64_t mask = 0;
    std::vector<std::pair<int, long long>> weighted;  // (bit, weight), only if any != 1
    long long target = 0;
};

std::vector<ElementMask> element_masks(const CoverInstance& instance) {
    std::vector<ElementMask> out;
    for (const Constraint& c : constraints_of(instance)) {
        ElementMask m;
        if (const auto* card = std::get_if<CardinalityConstraint>(&c)) {
            for (int i : card->members) m.mask |= std::uint64_t{1} << (i - 1);
            m.target = card->target;
        } else {
            const auto& lin = std::get<LinearConstraint>(c);
            for (int i : lin.members) {
                m.mask |= std::uint64_t{1} << (i - 1);
                m.weighted.emplace_back(i - 1, lin.coefficients.at(i));
            }
            m.target = lin.target;
        }
        out.push_back(std::move(m));
    }
    return out;
}

bool covers_exactly(const std::vector<ElementMask>& masks, std::uint64_t x) {
    for (const ElementMask& m : masks) {
        if (m.weighted.empty()) {
            if (std::popcount(x & m.mask) != m.target) return false;
        } else {
            long long sum = 0;
            for (const auto& [bit, w] : m.weighted)
                if (x >> bit & 1) sum += w;
            if (sum != m.target) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<std::uint64_t> brute_force(const CoverInstance& instance) {
    const int n = instance.num_subsets();
    if (n > kMaxQubits) throw capacity_error("instance has too many subsets");
    const std::vector<ElementMask> masks = element_masks(instance);
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
        if (covers_exactly(masks, x)) out.push_back(x);
    return out;
}

OraclePredicate oracle_of(const CoverInstance& instance) {
    OraclePredicate f;
    f.arity = instance.num_subsets();
    f.accept = [masks = element_masks(instance)](std::uint64_t x) {
        return covers_exactly(masks, x);
    };
    return f;
}

std::string StrategySpec::label() const {
    switch (kind) {
        case StrategyKind::Uniform: return "uniform";
        case StrategyKind::Cardinality:
            return "cardinality(" + std::to_string(eta_th) + ")";
        case StrategyKind::Parity: return "parity";
        case StrategyKind::Sets: {
            std::string s = "sets:";
            for (std::size_t i = 0; i < sets.size(); ++i)
                s += (i ? "," : "") + std::to_string(sets[i]);
            return s;
        }
    }
    return "?";
}

StrategySpec parse_strategy_spec(const std::string& text, int eta_th) {
    StrategySpec spec;
    spec.eta_th = eta_th;
    if (text == "uniform") {
        spec.kind = StrategyKind::Uniform;
    } else if (text == "cardinality") {
        spec.kind = StrategyKind::Cardinality;
    } else if (text == "parity") {
        spec.kind = StrategyKind::Parity;
    } else if (text.rfind("sets:", 0) == 0) {
        spec.kind = StrategyKind::Sets;
        std::istringstream ss(text.substr(5));
        std::string item;
        while (std::getline(ss, item, ','))
            spec.sets.push_back(static_cast<int>(parse_int(item, 0)));
        if (spec.sets.empty())
            throw parse_error("sets strategy needs at least one index", 0);
    } else {
        throw parse_error("unknown strategy '" + text + "'", 0);
    }
    return spec;
}

namespace {

Selection explicit_selection(const std::vector<Constraint>& constraints,
                             const std::vector<int>& indices, int n) {
    Selection sel;
    std::set<int> used;
    for (int idx : indices) {
        if (idx < 1 || idx > static_cast<int>(constraints.size()))
            throw parse_error("constraint index " + std::to_string(idx) +
                              " out of range", 0);
        std::vector<int> members;
        SelectedSet set;
        if (const auto* card = std::get_if<CardinalityConstraint>(&constraints[idx - 1])) {
            set = {card->members, card->target, BlockKind::Dicke, 0};
        } else {
            const auto lin = normalize_linear(std::get<LinearConstraint>(constraints[idx - 1]));
            auto [odd, nu] = parity_set(lin);
            if (odd.empty())
                throw contract_error("constraint " + std::to_string(idx) +
                                     " has an empty parity set");
            set = {std::move(odd), 0, BlockKind::Ghz, nu};
        }
        for (int v : set.members)
            if (!used.insert(v).second)
                throw contract_error("explicit sets are not pairwise disjoint");
        sel.disjoint_sets.push_back(std::move(set));
    }
    sel.used.assign(used.begin(), used.end());
    std::vector<int> perm(n, 0);
    int pos = 1;
    for (const SelectedSet& s : sel.disjoint_sets)
        for (int v : s.members) perm[v - 1] = pos++;
    for (int v = 1; v <= n; ++v)
        if (perm[v - 1] == 0) perm[v - 1] = pos++;
    sel.permutation = std::move(perm);
    return sel;
}

// Membership of a basis index in the search space F spanned by the selection.
bool in_search_space(const Selection& sel, std::uint64_t x) {
    const auto weight_in = [&](const std::vector<int>& members) {
        int w = 0;
        for (int v : members) w += static_cast<int>(x >> (v - 1) & 1);
        return w;
    };
    for (const SelectedSet& s : sel.disjoint_sets) {
        const int w = weight_in(s.members);
        if (s.kind == BlockKind::Dicke ? w != s.target : w % 2 != s.parity)
            return false;
    }
    for (const ReducedSet& s : sel.reduced_sets) {
        const int w = weight_in(s.members);
        const int mu = static_cast<int>(s.members.size());
        if (w < std::max(0, s.target - s.overlap) || w > std::min(s.target, mu))
            return false;
    }
    return true;
}

}  // namespace

Strategy prepare_strategy(const CoverInstance& instance, const StrategySpec& spec) {
    const int n = instance.num_subsets();
    const std::vector<Constraint> constraints = constraints_of(instance);
    Selection sel;
    switch (spec.kind) {
        case StrategyKind::Uniform:
            sel = preprocess_cardinality({}, 0, n);
            break;
        case StrategyKind::Cardinality: {
            std::vector<CardinalityConstraint> cards;
            for (const Constraint& c : constraints)
                if (const auto* card = std::get_if<CardinalityConstraint>(&c))
                    cards.push_back(*card);
            if (cards.empty())
                throw contract_error("instance derives no cardinality constraints");
            sel = preprocess_cardinality(cards, spec.eta_th, n);
            break;
        }
        case StrategyKind::Parity: {
            std::vector<LinearConstraint> linear;
            for (const Constraint& c : constraints) {
                if (const auto* card = std::get_if<CardinalityConstraint>(&c)) {
                    LinearConstraint l;
                    l.members = card->members;
                    for (int v : l.members) l.coefficients[v] = 1;
                    l.target = card->target;
                    linear.push_back(std::move(l));
                } else {
                    linear.push_back(normalize_linear(std::get<LinearConstraint>(c)));
                }
            }
            sel = preprocess_parity(linear, n);
            break;
        }
        case StrategyKind::Sets:
            sel = explicit_selection(constraints, spec.sets, n);
            break;
    }
    const std::vector<std::uint64_t> solutions = brute_force(instance);
    return make_strategy(std::move(sel), n,
                         static_cast<std::uint64_t>(solutions.size()));
}

std::vector<ExperimentRow> run_experiment(const CoverInstance& instance,
                                          const ExperimentConfig& config) {
    const Strategy strategy = prepare_strategy(instance, config.spec);
    const std::vector<std::uint64_t> solutions = brute_force(instance);
    if (solutions.empty()) throw infeasible_error("instance has no solutions");
    for (std::uint64_t s : solutions)
        if (!in_search_space(strategy.selection, s))
            throw contract_error("a solution lies outside the search space");

    const OraclePredicate oracle = oracle_of(instance);
    const int lo = config.kappa_lo < 0 ? strategy.kappa_opt : config.kappa_lo;
    const int hi = config.kappa_hi < 0 ? strategy.kappa_opt : config.kappa_hi;
    if (lo < 0 || hi < lo) throw contract_error("bad query range");

    const Initializer init = build_initializer(strategy);
    const RunMode mode = init.circuit_only() ? RunMode::CircuitExact : RunMode::Ideal;
    const GroverRun ideal = run(strategy, init, oracle, hi, mode);

    const auto is_solution = [&](std::uint64_t x) {
        return std::binary_search(solutions.begin(), solutions.end(), x);
    };

    std::vector<ExperimentRow> rows;
    for (int k = lo; k <= hi; ++k) {
        ExperimentRow row;
        row.strategy = config.spec.label();
        row.kappa = k;
        row.f_size = strategy.search_space;
        row.s_size = solutions.size();
        row.ideal_prob = ideal.trace[static_cast<std::size_t>(k)];
        if (config.with_noise) {
            const Circuit diffusion = diffusion_circuit(init.circuit, strategy.n);
            const TrajectoryJob job =
                make_trajectory_job(init.circuit, diffusion, oracle.accept, k);
            const std::vector<int> counts =
                run_noisy(job, config.plan, config.noise, is_solution);
            double mean = 0.0;
            for (int c : counts) mean += c;
            mean /= static_cast<double>(counts.size()) * config.plan.shots_per_run;
            double var = 0.0;
            for (int c : counts) {
                const double frac =
                    static_cast<double>(c) / config.plan.shots_per_run;
                var += (frac - mean) * (frac - mean);
            }
            if (counts.size() > 1) var /= static_cast<double>(counts.size() - 1);
            row.noisy = true;
            row.noisy_mean = mean;
            row.noisy_std = std::sqrt(var);
            row.runs = config.plan.runs;
            row.shots = config.plan.shots_per_run;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string experiment_csv(const std::vector<ExperimentRow>& rows) {
    std::ostringstream out;
    out << "strategy,kappa,F,S,ideal_prob,noisy_mean,noisy_std,runs,shots\n";
    out << std::setprecision(17);
    for (const ExperimentRow& r : rows) {
        out << r.strategy << ',' << r.kappa << ',' << r.f_size << ',' << r.s_size
            << ',' << r.ideal_prob << ',';
        if (r.noisy)
            out << r.noisy_mean << ',' << r.noisy_std << ',' << r.runs << ','
                << r.shots;
        else
            out << ",,,";
        out << '\n';
    }
    return out.str();
}

}  // namespace qca
