#include "cubefire/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "cubefire/io.hpp"

namespace cubefire::cli {

namespace {

struct Options {
    int n = -1;
    std::uint64_t order = 0;
    std::string out;
    std::string partition;
    std::string orientation;
    bool hamiltonian = false;
    std::string schedule = "parallel";
    std::uint64_t max_steps = kDefaultMaxSteps;
    std::string format = "json";
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw io::FormatError("cannot write " + path);
    f << text;
}

std::string join(const std::vector<Vertex>& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + std::to_string(vs[i]);
    return s + "}";
}

int cmd_partition(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.n < 1 || o.n > kMaxDimension) {
        err << "error: --n must be in [1, " << kMaxDimension << "]\n";
        return kInvalidInput;
    }
    try {
        const auto p = construct(o.n, o.order);
        emit(io::dump(io::to_json(p)), o.out, out);
        return kOk;
    } catch (const ImpossibleOrder& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\nadmissible orders for H_" << o.n << ": "
            << admissible_orders(o.n) << "\n";
        return kInvalidInput;
    }
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    const auto p = io::partition_from_json(io::read_file(o.partition));
    const auto report = validate(p);
    if (o.format == "text") {
        out << (report.valid ? "valid" : "invalid") << " left cyclic partition of order " << p.order()
            << " on H_" << p.n << "\n";
        for (const auto& v : report.violations) out << "  " << v.describe(p.n) << "\n";
    } else {
        out << io::dump(io::to_json(report, p.n));
    }
    if (!report.valid) {
        err << "invalid: " << report.violations.front().describe(p.n) << "\n";
        return kNegative;
    }
    return kOk;
}

int cmd_simulate(const Options& o, std::ostream& out, std::ostream& err) {
    const int sources = int(!o.partition.empty()) + int(!o.orientation.empty()) + int(o.hamiltonian);
    if (sources != 1) {
        err << "error: give exactly one of --from-partition, --orientation, --hamiltonian\n";
        return kInvalidInput;
    }
    Orientation start;
    if (!o.partition.empty()) {
        start = from_partition(io::partition_from_json(io::read_file(o.partition)));
    } else if (!o.orientation.empty()) {
        start = io::orientation_from_json(io::read_file(o.orientation));
    } else {
        if (o.n < 0) {
            err << "error: --hamiltonian needs --n\n";
            return kInvalidInput;
        }
        start = hamiltonian_orientation(o.n);
    }
    if (o.n >= 0 && o.n != start.dimension()) {
        err << "error: --n " << o.n << " conflicts with the source dimension " << start.dimension() << "\n";
        return kInvalidInput;
    }

    Schedule schedule = ParallelSchedule{};
    if (o.schedule != "parallel") {
        schedule = io::schedule_from_json(io::read_file(o.schedule), start.dimension());
    }
    const auto r = evolve(start, schedule, o.max_steps);

    if (o.format == "text") {
        if (!r.determined()) {
            out << "undetermined after " << r.steps_executed << " steps\n";
        } else {
            out << "transient: " << r.transient << "\nperiod: " << r.period << "\norientation period: "
                << (r.orientation_period ? std::to_string(*r.orientation_period) : "?")
                << "\ntotal chips: " << r.total_chips << "\nfiring sets:\n";
            for (std::size_t t = 0; t < r.firing_sets.size(); ++t) {
                out << "  t=" << r.transient + t << " " << join(r.firing_sets[t]) << "\n";
            }
        }
    } else {
        out << io::dump(io::to_json(r));
    }
    return r.determined() ? kOk : kUndetermined;
}

int cmd_census(const Options& o, std::ostream& out, std::ostream& err) {
    try {
        const auto c = census(o.n);
        if (o.format == "text") {
            out << "H_" << c.n << ": " << c.total << " orientations\n";
            for (const auto& [key, count] : c.entries) {
                out << "  period " << key.period << " transient " << key.transient << ": " << count << "\n";
            }
        } else {
            out << io::dump(io::to_json(c));
        }
        return kOk;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
    try {
        const auto s = search_partition(o.n, static_cast<std::size_t>(o.order));
        out << io::dump(io::to_json(s, o.n, static_cast<std::size_t>(o.order)));
        return s.found ? kOk : kNegative;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
}

int cmd_export_dot(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.partition.empty() == o.orientation.empty()) {
        err << "error: give exactly one of --partition, --orientation\n";
        return kInvalidInput;
    }
    std::string text;
    if (!o.partition.empty()) {
        const auto p = io::partition_from_json(io::read_file(o.partition));
        const auto report = validate(p);
        if (!report.valid) {
            err << "error: invalid partition: " << report.violations.front().describe(p.n) << "\n";
            return kInvalidInput;
        }
        text = io::to_dot(p);
    } else {
        text = io::to_dot(io::orientation_from_json(io::read_file(o.orientation)));
    }
    emit(text, o.out, out);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Left cyclic partitions and the parallel chip firing game on n-cubes", "cubefire"};
    app.require_subcommand(1);
    Options o;

    const auto add_format = [&o](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    };

    auto* partition = app.add_subcommand("partition", "Construct a left cyclic partition");
    partition->add_option("--n", o.n, "Cube dimension")->required();
    partition->add_option("--order", o.order, "Number of classes")->required();
    partition->add_option("--out", o.out, "Output file (default: stdout)");

    auto* verify = app.add_subcommand("verify", "Validate a partition document");
    verify->add_option("--partition", o.partition, "Partition file")->required();
    add_format(verify);

    auto* simulate = app.add_subcommand("simulate", "Evolve an orientation and report transient and period");
    simulate->add_option("--n", o.n, "Cube dimension");
    auto* src_p = simulate->add_option("--from-partition", o.partition, "Start from a partition's orientation");
    auto* src_o = simulate->add_option("--orientation", o.orientation, "Orientation file");
    auto* src_h = simulate->add_flag("--hamiltonian", o.hamiltonian, "Start from the Gray-cycle fixed point");
    src_p->excludes(src_o)->excludes(src_h);
    src_o->excludes(src_h);
    simulate->add_option("--schedule", o.schedule, "'parallel' or a block schedule file");
    simulate->add_option("--max-steps", o.max_steps, "Step budget")->check(CLI::PositiveNumber);
    add_format(simulate);

    auto* census_cmd = app.add_subcommand("census", "Tabulate (period, transient) over all orientations");
    census_cmd->add_option("--n", o.n, "Cube dimension (<= 3)")->required();
    add_format(census_cmd);

    auto* search = app.add_subcommand("search", "Exhaustive search for a partition of a given order");
    search->add_option("--n", o.n, "Cube dimension (<= 4)")->required();
    search->add_option("--order", o.order, "Number of classes")->required();

    auto* dot = app.add_subcommand("export-dot", "Write a Graphviz description");
    dot->add_option("--partition", o.partition, "Partition file");
    dot->add_option("--orientation", o.orientation, "Orientation file");
    dot->add_option("--out", o.out, "Output file (default: stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }

    try {
        if (*partition) return cmd_partition(o, out, err);
        if (*verify) return cmd_verify(o, out, err);
        if (*simulate) return cmd_simulate(o, out, err);
        if (*census_cmd) return cmd_census(o, out, err);
        if (*search) return cmd_search(o, out, err);
        if (*dot) return cmd_export_dot(o, out, err);
    } catch (const io::FormatError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const ConstructionError& e) {
        err << "self-check failed: " << e.what() << "\n";
        return kNegative;
    }
    return kInvalidInput;
}

}  // namespace cubefire::cli
