// setopt: exact lattice arithmetic and Lagrange duality for finite
// set-valued optimization instances.
//
// Subcommands: props (property suites), solve (primal value), dual (finite
// dual value), gap (duality report), certify (strong-duality certificate for
// the convexified instance), gen (seeded instance generator), plot (SVG
// staircase). Exit codes: 0 success / positive verdict, 1 negative
// mathematical verdict or verification failure, 2 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <setopt/convex.hpp>
#include <setopt/gen.hpp>
#include <setopt/props.hpp>
#include <setopt/svg.hpp>

namespace {

using namespace setopt;

std::vector<Rational> parse_csv(const std::string& csv)
{
    std::vector<Rational> out;
    size_t start = 0;
    while (start <= csv.size()) {
        const size_t comma = csv.find(',', start);
        const std::string tok =
            csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(parse_rational(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

// Dual set from repeated --ustar flags or a per-coordinate --grid expansion.
std::vector<RVec> duals_from_flags(const std::vector<std::string>& ustars,
                                   const std::vector<std::string>& grid, Eigen::Index m)
{
    std::vector<RVec> duals;
    for (const auto& s : ustars) {
        const RVec u = vec_of(parse_csv(s));
        if (u.size() != m)
            throw InputError("--ustar '" + s + "' has dimension " + std::to_string(u.size()) +
                             ", expected " + std::to_string(m));
        duals.push_back(u);
    }
    if (!grid.empty()) {
        const Rational lo = parse_rational(grid[0]);
        const Rational hi = parse_rational(grid[1]);
        const Rational step = parse_rational(grid[2]);
        if (step <= 0 || hi < lo) throw InputError("--grid requires lo <= hi and step > 0");
        std::vector<Rational> values;
        for (Rational v = lo; v <= hi; v += step) values.push_back(v);
        std::vector<RVec> expanded = {RVec(0)};
        for (Eigen::Index i = 0; i < m; ++i) {
            std::vector<RVec> next;
            for (const auto& prefix : expanded) {
                for (const auto& v : values) {
                    RVec u(prefix.size() + 1);
                    u.head(prefix.size()) = prefix;
                    u(prefix.size()) = v;
                    next.push_back(std::move(u));
                }
            }
            expanded = std::move(next);
        }
        duals.insert(duals.end(), expanded.begin(), expanded.end());
    }
    if (duals.empty()) throw InputError("no dual variables given (use --ustar or --grid)");
    return duals;
}

std::string feasible_text(const Instance& inst)
{
    std::string s = "{";
    bool first = true;
    for (const auto& name : feasible_set(inst)) {
        if (!first) s += ",";
        s += name;
        first = false;
    }
    return s + "}";
}

int cmd_solve(const std::string& file)
{
    const Instance inst = Instance::load(file);
    std::cout << primal_value(inst).text() << "; S = " << feasible_text(inst) << "\n";
    return 0;
}

int cmd_dual(const std::string& file, const std::vector<std::string>& ustars,
             const std::vector<std::string>& grid)
{
    const Instance inst = Instance::load(file);
    const auto duals = duals_from_flags(ustars, grid, inst.m());
    for (const auto& u : duals)
        std::cout << "PHI u*=" << format_point(u) << " -> " << dual_objective(inst, u).text()
                  << "\n";
    std::cout << "DUAL " << dual_value(inst, duals).text() << "\n";
    return 0;
}

int cmd_gap(const std::string& file, const std::vector<std::string>& ustars,
            const std::vector<std::string>& grid)
{
    const Instance inst = Instance::load(file);
    const auto duals = duals_from_flags(ustars, grid, inst.m());
    const DualityReport rep = gap_report(inst, duals);
    std::cout << "PRIMAL " << rep.primal.text() << "\n";
    std::cout << "DUAL " << rep.dual_finite.text() << "\n";
    std::cout << "OPDUAL " << rep.operator_dual.text() << "\n";
    std::cout << "RELATION " << gap_relation_name(rep.relation) << "\n";
    return 0;
}

int cmd_certify(const std::string& file, bool heuristic, int samples, uint64_t seed)
{
    const Instance inst = Instance::load(file);
    const Certificate cert = [&] {
        if (inst.q() == 2 && !heuristic) return certify_strong_duality(convexify(inst));
        if (!heuristic)
            throw InputError("exact certification requires q=2 (pass --heuristic for sampled "
                             "normals with a NotRefuted verdict)");
        return certify_heuristic(convexify(inst), samples, seed);
    }();
    std::cout << certificate_to_json(cert).dump(2) << "\n";
    return cert.verdict == CertificateVerdict::Failed ? 1 : 0;
}

int cmd_props(uint64_t seed, int trials, unsigned workers, bool inject_no_prune)
{
    if (trials < 1) throw InputError("--trials must be >= 1");
    if (inject_no_prune) setopt::detail::pruning_disabled() = true;
    const PropsReport rep = run_property_suites(seed, trials, workers);
    setopt::detail::pruning_disabled() = false;

    std::cout << "props seed=" << rep.seed << " trials=" << rep.trials << "\n";
    int total_violations = 0;
    for (const auto& law : rep.laws) {
        std::cout << "LAW " << law.name;
        for (size_t pad = law.name.size(); pad < 36; ++pad) std::cout << ' ';
        std::cout << " trials=" << law.trials << " violations=" << law.violations << "\n";
        if (law.violations && !law.witness.empty())
            std::cout << "  witness: " << law.witness << "\n";
        total_violations += law.violations;
    }
    std::cout << (total_violations == 0 ? "RESULT OK" : "RESULT VIOLATIONS") << " ("
              << rep.laws.size() << " laws, " << total_violations << " violations)\n";
    return total_violations == 0 ? 0 : 1;
}

int cmd_gen(uint64_t seed, int q, int m, int decisions, const std::string& out_path)
{
    if (q < 2 || q > 3) throw InputError("--q must be 2 or 3");
    if (m < 1 || m > 3) throw InputError("--m must be 1, 2 or 3");
    if (decisions < 1 || decisions > 20) throw InputError("--decisions must be 1..20");
    const Instance inst = generate_instance(seed, q, m, decisions);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + out_path + "'");
    out << instance_to_bytes(inst);
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

int cmd_plot(const std::string& file, const std::string& out_path,
             const std::vector<std::string>& box, const std::vector<std::string>& ustars)
{
    const Instance inst = Instance::load(file);
    if (inst.q() != 2) throw InputError("plot requires q=2");
    double lo = -5, hi = 5;
    if (!box.empty()) {
        lo = static_cast<double>(parse_rational(box[0]));
        hi = static_cast<double>(parse_rational(box[1]));
        if (!(lo < hi)) throw InputError("--box requires lo < hi");
    }
    std::vector<SvgOverlay> overlays;
    for (const auto& s : ustars) {
        const RVec u = vec_of(parse_csv(s));
        if (u.size() != inst.m()) throw InputError("--ustar dimension mismatch");
        overlays.push_back({"phi(" + s + ")", dual_objective(inst, u)});
    }
    const std::string svg = render_staircase_svg(inst, lo, hi, overlays);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + out_path + "'");
    out << svg;
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact lattice arithmetic and Lagrange duality for finite set-valued "
                 "optimization instances"};
    app.require_subcommand(1);

    auto* props_cmd = app.add_subcommand("props", "run every property suite");
    uint64_t props_seed = 42;
    int props_trials = 100;
    unsigned props_workers = 0;
    bool inject_no_prune = false;
    props_cmd->add_option("--seed", props_seed, "suite seed");
    props_cmd->add_option("--trials", props_trials, "trials per law");
    props_cmd->add_option("--workers", props_workers, "worker threads (0 = hardware)");
    props_cmd->add_flag("--inject-no-prune", inject_no_prune,
                        "self-test: disable antichain pruning; the suite must fail");

    auto* solve_cmd = app.add_subcommand("solve", "primal value and feasible set");
    std::string solve_file;
    solve_cmd->add_option("file", solve_file, "instance JSON")->required();

    auto* dual_cmd = app.add_subcommand("dual", "finite dual value over given duals");
    std::string dual_file;
    std::vector<std::string> dual_ustars, dual_grid;
    dual_cmd->add_option("file", dual_file, "instance JSON")->required();
    dual_cmd->add_option("--ustar", dual_ustars, "dual vector as CSV rationals (repeatable)");
    dual_cmd->add_option("--grid", dual_grid, "LO HI STEP per-coordinate dual grid")->expected(3);

    auto* gap_cmd = app.add_subcommand("gap", "primal, dual and operator-dual report");
    std::string gap_file;
    std::vector<std::string> gap_ustars, gap_grid;
    gap_cmd->add_option("file", gap_file, "instance JSON")->required();
    gap_cmd->add_option("--ustar", gap_ustars, "dual vector as CSV rationals (repeatable)");
    gap_cmd->add_option("--grid", gap_grid, "LO HI STEP per-coordinate dual grid")->expected(3);

    auto* cert_cmd = app.add_subcommand("certify", "strong-duality certificate (convexified)");
    std::string cert_file;
    bool heuristic = false;
    int samples = 16;
    uint64_t cert_seed = 1;
    cert_cmd->add_option("file", cert_file, "instance JSON")->required();
    cert_cmd->add_flag("--heuristic", heuristic, "sampled normals; verdict at best NotRefuted");
    cert_cmd->add_option("--samples", samples, "heuristic sample count");
    cert_cmd->add_option("--seed", cert_seed, "heuristic sample seed");

    auto* gen_cmd = app.add_subcommand("gen", "generate a seeded random instance");
    uint64_t gen_seed = 0;
    int gen_q = 2, gen_m = 1, gen_decisions = 5;
    std::string gen_out;
    gen_cmd->add_option("--seed", gen_seed, "generator seed")->required();
    gen_cmd->add_option("--q", gen_q, "objective space dimension (2 or 3)");
    gen_cmd->add_option("--m", gen_m, "constraint space dimension (1..3)");
    gen_cmd->add_option("--decisions", gen_decisions, "number of decisions (1..20)");
    gen_cmd->add_option("-o,--out", gen_out, "output file")->required();

    auto* plot_cmd = app.add_subcommand("plot", "SVG staircase of the primal frontier (q=2)");
    std::string plot_file, plot_out;
    std::vector<std::string> plot_box, plot_ustars;
    plot_cmd->add_option("file", plot_file, "instance JSON")->required();
    plot_cmd->add_option("-o,--out", plot_out, "output SVG path")->required();
    plot_cmd->add_option("--box", plot_box, "LO HI plotting box")->expected(2);
    plot_cmd->add_option("--ustar", plot_ustars, "overlay a dual objective (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*props_cmd) return cmd_props(props_seed, props_trials, props_workers, inject_no_prune);
        if (*solve_cmd) return cmd_solve(solve_file);
        if (*dual_cmd) return cmd_dual(dual_file, dual_ustars, dual_grid);
        if (*gap_cmd) return cmd_gap(gap_file, gap_ustars, gap_grid);
        if (*cert_cmd) return cmd_certify(cert_file, heuristic, samples, cert_seed);
        if (*gen_cmd) return cmd_gen(gen_seed, gen_q, gen_m, gen_decisions, gen_out);
        if (*plot_cmd) return cmd_plot(plot_file, plot_out, plot_box, plot_ustars);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
