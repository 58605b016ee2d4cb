// asynctl: simulate delayed Boolean networks and evaluate continuous-time
// temporal formulas over their trajectories.
//
// Exit codes: 0 holds/success, 1 fails, 2 parse/validation error,
// 3 trajectory unsettled where a settled one was required.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "asynctl/branching.hpp"
#include "asynctl/circuit.hpp"
#include "asynctl/logic.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitUnsettled = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw asynctl::Error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Options {
    std::string circuit_path;
    std::string horizon;
    std::string out_path;
    std::string formula;
    std::string at = "0";
    std::string delays;
    bool require_settled = false;
};

asynctl::CircuitFile load(const Options& opt) {
    asynctl::CircuitFile file = asynctl::parse_circuit(read_file(opt.circuit_path));
    if (!opt.horizon.empty()) {
        asynctl::Time h = asynctl::Time::parse(opt.horizon);
        if (h.is_negative())
            throw asynctl::BadInterval("horizon must be nonnegative");
        file.horizon = h;
    }
    return file;
}

int cmd_simulate(const Options& opt) {
    asynctl::CircuitFile file = load(opt);
    asynctl::Trajectory x =
        asynctl::solve(file.automaton, file.inputs, file.horizon);
    std::size_t lattice =
        asynctl::event_lattice(file.inputs, file.automaton.delays(), file.horizon)
            .size();

    std::string csv = asynctl::trace_csv(x);
    if (!opt.out_path.empty()) {
        std::ofstream out(opt.out_path);
        if (!out)
            throw asynctl::Error("cannot write '" + opt.out_path + "'");
        out << csv;
    } else {
        std::cout << csv;
    }
    std::cout << "settled=" << (x.settled ? "true" : "false") << " lattice=" << lattice
              << "\n";
    if (opt.require_settled && !x.settled)
        return kExitUnsettled;
    return kExitHolds;
}

int cmd_eval(const Options& opt) {
    asynctl::CircuitFile file = load(opt);
    asynctl::FormulaPtr h =
        asynctl::parse_formula(opt.formula, file.automaton.state_names());
    if (h->has_quantifier())
        throw asynctl::QuantifierPresent(
            "eval takes a quantifier-free formula; use `check` for A/E");
    asynctl::Time at = asynctl::Time::parse(opt.at);
    asynctl::Trajectory x =
        asynctl::solve(file.automaton, file.inputs, file.horizon);
    asynctl::EvalContext ctx(x);
    asynctl::Bit verdict = asynctl::holds_at(h, ctx, at);
    std::cout << (verdict.as_bool() ? "holds" : "fails") << "\n";
    return verdict.as_bool() ? kExitHolds : kExitFails;
}

// --delays "x1=1/2,2;x2=1": listed coordinates range over their candidate
// lists, unlisted ones keep the delay from the circuit file.
asynctl::DelaySpace parse_delay_space(const asynctl::Automaton& a,
                                      const std::string& text) {
    std::vector<std::vector<asynctl::Time>> lists;
    for (const asynctl::Time& tau : a.delays())
        lists.push_back({tau});
    std::istringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        std::size_t eq = group.find('=');
        if (eq == std::string::npos)
            throw asynctl::ParseError(0, "--delays expects name=t1,t2;...");
        std::string name = group.substr(0, eq);
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        std::size_t index = a.state_count();
        for (std::size_t i = 0; i < a.state_count(); ++i)
            if (a.state_names()[i] == name)
                index = i;
        if (index == a.state_count())
            throw asynctl::UnknownIdentifier("--delays names unknown coordinate '" +
                                             name + "'");
        std::vector<asynctl::Time> list;
        std::istringstream items(group.substr(eq + 1));
        std::string item;
        while (std::getline(items, item, ',')) {
            item.erase(0, item.find_first_not_of(" \t"));
            item.erase(item.find_last_not_of(" \t") + 1);
            list.push_back(asynctl::Time::parse(item));
        }
        if (list.empty())
            throw asynctl::EmptyDelaySpace("no candidate delays for '" + name + "'");
        lists[index] = std::move(list);
    }
    return asynctl::DelaySpace(std::move(lists));
}

int cmd_check(const Options& opt) {
    asynctl::CircuitFile file = load(opt);
    asynctl::FormulaPtr h =
        asynctl::parse_formula(opt.formula, file.automaton.state_names());
    asynctl::Time at = asynctl::Time::parse(opt.at);
    asynctl::DelaySpace space = parse_delay_space(file.automaton, opt.delays);
    asynctl::PathSet paths =
        asynctl::enumerate_paths(file.automaton, space, file.inputs, file.horizon);
    asynctl::Bit verdict = asynctl::eval_formula(h, paths, at);
    std::cout << (verdict.as_bool() ? "holds" : "fails") << " paths=" << paths.size()
              << "\n";
    return verdict.as_bool() ? kExitHolds : kExitFails;
}

int cmd_events(const Options& opt) {
    asynctl::CircuitFile file = load(opt);
    for (const asynctl::Time& t :
         asynctl::event_lattice(file.inputs, file.automaton.delays(), file.horizon))
        std::cout << t << "\n";
    return kExitHolds;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Delayed Boolean networks with continuous-time temporal logic"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("circuit", opt.circuit_path, "circuit description file")
            ->required();
        cmd->add_option("--horizon", opt.horizon, "override the [options] horizon");
    };

    CLI::App* simulate = app.add_subcommand("simulate", "solve and export a CSV trace");
    add_common(simulate);
    simulate->add_option("--out", opt.out_path, "trace file (default: stdout)");
    simulate->add_flag("--require-settled", opt.require_settled,
                       "exit 3 unless the trajectory settles");

    CLI::App* eval = app.add_subcommand("eval", "evaluate a quantifier-free formula");
    add_common(eval);
    eval->add_option("--formula", opt.formula, "temporal formula")->required();
    eval->add_option("--at", opt.at, "evaluation instant (default 0)");

    CLI::App* check =
        app.add_subcommand("check", "evaluate a quantified formula over delay choices");
    add_common(check);
    check->add_option("--formula", opt.formula, "temporal formula with A/E")->required();
    check->add_option("--at", opt.at, "evaluation instant (default 0)");
    check->add_option("--delays", opt.delays, "candidate delays, e.g. x1=1/2,2;x2=1");

    CLI::App* events = app.add_subcommand("events", "print the event lattice");
    add_common(events);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitHolds : kExitBadInput;
    }

    try {
        if (simulate->parsed())
            return cmd_simulate(opt);
        if (eval->parsed())
            return cmd_eval(opt);
        if (check->parsed())
            return cmd_check(opt);
        return cmd_events(opt);
    } catch (const asynctl::UnsettledTrajectory& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsettled;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}
