// qca: constraint-aware Grover search toolkit, command-line surface.
//
// Exit codes: 0 success, 2 input error, 3 infeasible instance, 4 capacity.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qca/exact_cover.hpp"
#include "qca/resources.hpp"
#include "qca/state_prep.hpp"
#include "qca/transpile.hpp"

namespace {

struct Options {
    std::string command;
    std::string instance;
    std::string strategy = "uniform";
    int eta = 0;
    std::string kappa = "auto";
    int kappa_max = -1;
    int runs = 20;
    int shots = 250;
    std::uint64_t seed = 1;
    double p1 = 1e-5;
    double p2 = 1e-4;
    double oracle_cost = 0.0;
    bool noise = false;
    bool decompose = false;
    std::string out;
};

int parse_kappa(const std::string& text) {
    if (text == "auto") return -1;
    try {
        std::size_t pos = 0;
        const int k = std::stoi(text, &pos);
        if (pos != text.size() || k < 0) throw std::invalid_argument(text);
        return k;
    } catch (const std::exception&) {
        throw qca::parse_error("--kappa must be a non-negative integer or 'auto'");
    }
}

void write_output(const std::string& path, const std::string& body) {
    if (path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(path);
    if (!out) throw qca::parse_error("cannot open '" + path + "' for writing");
    out << body;
}

std::string describe_set(const qca::SelectedSet& s) {
    std::ostringstream os;
    os << (s.kind == qca::BlockKind::Dicke ? "dicke" : "ghz") << " {";
    for (std::size_t i = 0; i < s.members.size(); ++i)
        os << (i ? "," : "") << s.members[i];
    os << "} ";
    if (s.kind == qca::BlockKind::Dicke)
        os << "weight=" << s.target;
    else
        os << "parity=" << s.parity;
    return os.str();
}

int cmd_preprocess(const Options& opt) {
    const qca::CoverInstance inst = qca::load_instance(opt.instance);
    const qca::StrategySpec spec = qca::parse_strategy_spec(opt.strategy, opt.eta);
    const qca::Strategy st = qca::prepare_strategy(inst, spec);

    std::ostringstream report;
    report << "strategy: " << spec.label() << "\n";
    for (const auto& s : st.selection.disjoint_sets)
        report << "selected: " << describe_set(s) << "\n";
    for (const auto& s : st.selection.reduced_sets) {
        report << "reduced:  {";
        for (std::size_t i = 0; i < s.members.size(); ++i)
            report << (i ? "," : "") << s.members[i];
        report << "} target=" << s.target << " overlap=" << s.overlap << "\n";
    }
    report << "F: " << st.search_space << "\n";
    report << std::setprecision(17)
           << "reduction: " << std::ldexp(1.0, st.n) / static_cast<double>(st.search_space)
           << "\n";
    report << "S: " << st.solutions << "\n";
    report << "kappa_opt: " << st.kappa_opt << "\n";
    std::cout << report.str();
    if (!opt.out.empty()) {
        std::ostringstream csv;
        csv << "strategy,F,S,kappa_opt\n"
            << spec.label() << ',' << st.search_space << ',' << st.solutions << ','
            << st.kappa_opt << '\n';
        write_output(opt.out, csv.str());
    }
    return 0;
}

int cmd_experiment(const Options& opt, bool sweep, bool with_noise) {
    const qca::CoverInstance inst = qca::load_instance(opt.instance);
    qca::ExperimentConfig cfg;
    cfg.spec = qca::parse_strategy_spec(opt.strategy, opt.eta);
    const int k = parse_kappa(opt.kappa);
    if (sweep) {
        cfg.kappa_lo = 0;
        cfg.kappa_hi = opt.kappa_max >= 0 ? opt.kappa_max : k;
    } else {
        cfg.kappa_lo = cfg.kappa_hi = k;
    }
    cfg.with_noise = with_noise;
    cfg.noise = {opt.p1, opt.p2};
    cfg.plan = {opt.runs, opt.shots, opt.seed};
    const auto rows = qca::run_experiment(inst, cfg);
    write_output(opt.out, qca::experiment_csv(rows));
    return 0;
}

int cmd_resources(const Options& opt) {
    const qca::CoverInstance inst = qca::load_instance(opt.instance);
    const qca::StrategySpec spec = qca::parse_strategy_spec(opt.strategy, opt.eta);
    const qca::Strategy st = qca::prepare_strategy(inst, spec);
    const qca::Initializer init = qca::build_initializer(st);
    if (!init.circuit_only())
        throw qca::contract_error("resource report requires a circuit-form strategy");

    // Reflection core of the diffusion operator (the V conjugations are the
    // 2S term of the cost law, not part of D).
    qca::Circuit core(st.n);
    for (int q = 0; q < st.n; ++q) core.add(qca::Gate::x(q));
    if (st.n == 1) {
        core.add(qca::Gate::z(0));
    } else {
        core.add(qca::Gate::h(st.n - 1));
        std::vector<int> qubits(st.n);
        for (int q = 0; q < st.n; ++q) qubits[q] = q;
        core.add(qca::Gate::mcx(std::vector<int>(qubits.begin(), qubits.end() - 1),
                                st.n - 1));
        core.add(qca::Gate::h(st.n - 1));
    }
    for (int q = 0; q < st.n; ++q) core.add(qca::Gate::x(q));

    const qca::ResourceTally s_tally = qca::tally(init.circuit, opt.decompose);
    const qca::ResourceTally d_tally = qca::tally(core, opt.decompose);

    std::ostringstream csv;
    csv << "strategy,metric,S,O,D,kappa,R\n" << std::setprecision(17);
    const std::pair<qca::Metric, const char*> metrics[] = {
        {qca::Metric::TotalGates, "gates"},
        {qca::Metric::TwoQubitGates, "two_qubit"},
        {qca::Metric::Depth, "depth"},
    };
    for (const auto& [metric, name] : metrics) {
        qca::StrategyCost cost{s_tally, opt.oracle_cost, d_tally, st.kappa_opt};
        csv << spec.label() << ',' << name << ',' << qca::metric_of(s_tally, metric)
            << ',' << opt.oracle_cost << ',' << qca::metric_of(d_tally, metric)
            << ',' << st.kappa_opt << ',' << qca::total_resource(cost, metric)
            << '\n';
    }
    write_output(opt.out, csv.str());

    // Sufficient-condition verdicts for the circuit-specific bounds.
    std::ostringstream props;
    props << std::setprecision(6);
    const double od =
        opt.oracle_cost + qca::metric_of(d_tally, qca::Metric::TotalGates);
    for (const auto& s : st.selection.disjoint_sets) {
        const int mu = static_cast<int>(s.members.size());
        if (s.kind == qca::BlockKind::Dicke && s.target == 1 && mu >= 2) {
            const double rhs = qca::p1_circuit_rhs(mu);
            props << "P1 mu=" << mu << " rhs=" << rhs
                  << (od > rhs ? " sufficient" : " not-sufficient") << "\n";
        } else if (s.kind == qca::BlockKind::Ghz) {
            const double rhs = qca::p3_circuit_rhs(mu);
            props << "P3 mu=" << mu << " rhs=" << rhs
                  << (od > rhs ? " sufficient" : " not-sufficient") << "\n";
        }
    }
    for (const auto& s : st.selection.reduced_sets) {
        const int mu = static_cast<int>(s.members.size());
        if (mu >= 2) {
            const double rhs = qca::p2_circuit_rhs(mu);
            props << "P2 mu=" << mu << " rhs=" << rhs
                  << (od > rhs ? " sufficient" : " not-sufficient") << "\n";
        }
    }
    std::cerr << props.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"Constraint-aware Grover search toolkit"};
    app.require_subcommand(1);

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--instance", opt.instance, "instance file")->required();
        sub->add_option("--strategy", opt.strategy,
                        "uniform | cardinality | parity | sets:<list>");
        sub->add_option("--eta", opt.eta, "overlap threshold for cardinality");
        sub->add_option("--out", opt.out, "output path (default stdout)");
        return sub;
    };
    const auto add_noise = [&](CLI::App* sub) {
        sub->add_option("--runs", opt.runs);
        sub->add_option("--shots", opt.shots);
        sub->add_option("--seed", opt.seed);
        sub->add_option("--p1", opt.p1, "one-qubit depolarizing rate");
        sub->add_option("--p2", opt.p2, "two-qubit depolarizing rate");
    };

    add_common(app.add_subcommand("preprocess", "report the selected strategy"));
    auto* simulate = add_common(
        app.add_subcommand("simulate", "ideal success probability at one kappa"));
    simulate->add_option("--kappa", opt.kappa, "query count or 'auto'");
    auto* sweep = add_common(
        app.add_subcommand("sweep", "probability (and noise) over kappa = 0..max"));
    sweep->add_option("--kappa", opt.kappa, "upper end of the sweep or 'auto'");
    sweep->add_option("--kappa-max", opt.kappa_max, "upper end of the sweep");
    sweep->add_flag("--noise", opt.noise, "include noisy counts");
    add_noise(sweep);
    auto* resources = add_common(
        app.add_subcommand("resources", "cost-law report for a strategy"));
    resources->add_option("--oracle-cost", opt.oracle_cost, "external O value");
    resources->add_flag("--decompose-mcx", opt.decompose,
                        "tally multi-controlled X via its decomposition");
    auto* noise = add_common(
        app.add_subcommand("noise", "noisy solution counts at one kappa"));
    noise->add_option("--kappa", opt.kappa, "query count or 'auto'");
    add_noise(noise);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        opt.command = app.get_subcommands().at(0)->get_name();
        if (opt.command == "preprocess") return cmd_preprocess(opt);
        if (opt.command == "simulate") return cmd_experiment(opt, false, false);
        if (opt.command == "sweep") return cmd_experiment(opt, true, opt.noise);
        if (opt.command == "resources") return cmd_resources(opt);
        if (opt.command == "noise") return cmd_experiment(opt, false, true);
        return 2;
    } catch (const qca::parse_error& e) {
        std::cerr << "input error";
        if (e.line > 0) std::cerr << " (line " << e.line << ")";
        std::cerr << ": " << e.what() << "\n";
        return 2;
    } catch (const qca::infeasible_error& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 3;
    } catch (const qca::capacity_error& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
