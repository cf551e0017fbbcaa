// aeronet-ctr: critical-transmission-range analysis for fleets of airborne
// networking platforms on circular flight paths.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "aeronet/dtn.hpp"
#include "aeronet/errors.hpp"
#include "aeronet/experiment.hpp"
#include "aeronet/fault.hpp"
#include "aeronet/topology.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInfeasible = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw aeronet::ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

aeronet::Scenario load_scenario(const std::string& path) {
    return aeronet::parse_scenario(read_file(path));
}

// "20", "-3/2", "pi", "2pi/5", or a decimal (decimals are kept inexact and
// treated as incommensurate)
aeronet::AngularRate parse_omega(const std::string& text) {
    if (text.find('.') != std::string::npos)
        return aeronet::AngularRate::inexact(std::stod(text));

    std::size_t pos = 0;
    std::int64_t sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') sign = -1;
        ++pos;
    }
    std::int64_t num = 1;
    bool have_digits = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::size_t used = 0;
        num = std::stoll(text.substr(pos), &used);
        pos += used;
        have_digits = true;
    }
    bool pi_factor = false;
    if (text.compare(pos, 2, "pi") == 0) {
        pi_factor = true;
        pos += 2;
    }
    std::int64_t den = 1;
    if (pos < text.size() && text[pos] == '/') {
        std::size_t used = 0;
        den = std::stoll(text.substr(pos + 1), &used);
        pos += 1 + used;
    }
    if (pos != text.size() || (!have_digits && !pi_factor))
        throw aeronet::ParseError("cannot parse angular rate: " + text);
    return aeronet::AngularRate::rational(sign * num, den, pi_factor);
}

json gap_json(const aeronet::ConnectivityGap& gap) {
    return {{"interval", {gap.t_begin, gap.t_end}},
            {"closest_split_pair", {gap.node_i, gap.node_j}},
            {"distance", gap.distance}};
}

int cmd_check(const std::string& scenario_path, double tr) {
    const auto scenario = load_scenario(scenario_path);
    const auto gap = aeronet::first_connectivity_gap(scenario, tr);
    json out = {{"tr", tr}, {"always_connected", !gap.has_value()}};
    if (gap) out["gap"] = gap_json(*gap);
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

int cmd_ctr(const std::string& scenario_path, double err) {
    const auto scenario = load_scenario(scenario_path);
    const auto result = aeronet::compute_ctr(scenario, err);
    json out = {{"ctr", result.ctr}, {"err", result.err}, {"tr_max", scenario.tr_max()}};
    if (result.certificate) out["binding"] = gap_json(*result.certificate);
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

int cmd_ctrf(const std::string& scenario_path, double region_radius, double err) {
    const auto scenario = load_scenario(scenario_path);
    const auto result = aeronet::compute_ctr_f(scenario, region_radius, err);
    json out = {{"ctr_f", result.ctr_f},
                {"err", result.err},
                {"region_radius", result.region_radius},
                {"tr_max", scenario.tr_max()}};
    if (result.certificate) {
        out["binding"] = {{"fault_point", result.certificate->fault_point},
                          {"interval", {result.certificate->t_begin, result.certificate->t_end}},
                          {"covered", result.certificate->covered}};
    }
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

int cmd_ctrd(const std::string& scenario_path, double delay, bool all_starts, double err) {
    const auto scenario = load_scenario(scenario_path);
    const auto result = aeronet::compute_ctr_d(scenario, delay, err, all_starts);
    json out = {{"ctr_d", result.ctr_d},
                {"err", result.err},
                {"delay", result.delay},
                {"all_starts", result.all_starts},
                {"tr_max", scenario.tr_max()}};
    if (result.certificate) {
        out["binding"] = {{"failing_starts", result.certificate->failing_starts},
                          {"unreached_pair", {result.certificate->from, result.certificate->to}}};
    }
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

int cmd_timeline(const std::string& scenario_path, double tr, const std::string& format) {
    const auto scenario = load_scenario(scenario_path);
    const auto timeline = aeronet::build_link_timeline(scenario, tr);
    if (format == "csv") {
        std::cout << timeline.to_csv();
    } else {
        std::cout << timeline.to_json() << '\n';
    }
    return kExitOk;
}

int cmd_gen(int n, double orbit_radius, const std::string& omega, std::uint64_t seed,
            double area_w, double area_h) {
    const auto scenario = aeronet::generate_random_scenario(
        n, orbit_radius, parse_omega(omega), {area_w, area_h}, seed);
    std::cout << aeronet::serialize_scenario(scenario) << '\n';
    return kExitOk;
}

int cmd_experiment(const std::string& plan_path, const std::string& out_path) {
    const auto plan = aeronet::ExperimentPlan::parse(read_file(plan_path));
    const auto table = aeronet::run_experiment(plan);
    std::ofstream out(out_path);
    if (!out) throw aeronet::ParseError("cannot write file: " + out_path);
    out << table.to_csv();
    std::cerr << "wrote " << table.rows.size() << " rows to " << out_path << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"critical transmission range analysis for airborne networks"};
    app.require_subcommand(1);

    std::string scenario_path, plan_path, out_path = "results.csv", format = "json";
    std::string omega = "20";
    double tr = 0.0, err = 0.01, region_radius = 20.0, delay = 0.0;
    double orbit_radius = 10.0, area_w = 1000.0, area_h = 1000.0;
    int n = 10;
    std::uint64_t seed = 1;
    bool all_starts = false;

    auto* check = app.add_subcommand("check", "is the network connected at all times at tr?");
    check->add_option("--scenario", scenario_path)->required();
    check->add_option("--tr", tr)->required();

    auto* ctr = app.add_subcommand("ctr", "fault-free critical transmission range");
    ctr->add_option("--scenario", scenario_path)->required();
    ctr->add_option("--err", err);

    auto* ctrf = app.add_subcommand("ctrf", "critical transmission range under region faults");
    ctrf->add_option("--scenario", scenario_path)->required();
    ctrf->add_option("--region-radius", region_radius)->required();
    ctrf->add_option("--err", err);

    auto* ctrd = app.add_subcommand("ctrd", "critical transmission range with delay tolerance");
    ctrd->add_option("--scenario", scenario_path)->required();
    ctrd->add_option("--delay", delay)->required();
    ctrd->add_flag("--all-starts", all_starts);
    ctrd->add_option("--err", err);

    auto* timeline = app.add_subcommand("timeline", "link up/down events at tr");
    timeline->add_option("--scenario", scenario_path)->required();
    timeline->add_option("--tr", tr)->required();
    timeline->add_option("--out", format)->check(CLI::IsMember({"csv", "json"}));

    auto* gen = app.add_subcommand("gen", "random non-intersecting-orbit scenario");
    gen->add_option("--n", n)->required();
    gen->add_option("--orbit-radius", orbit_radius);
    gen->add_option("--omega", omega);
    gen->add_option("--seed", seed);
    gen->add_option("--area-w", area_w);
    gen->add_option("--area-h", area_h);

    auto* experiment = app.add_subcommand("experiment", "run a sweep plan, write a CSV table");
    experiment->add_option("--plan", plan_path)->required();
    experiment->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (check->parsed()) return cmd_check(scenario_path, tr);
        if (ctr->parsed()) return cmd_ctr(scenario_path, err);
        if (ctrf->parsed()) return cmd_ctrf(scenario_path, region_radius, err);
        if (ctrd->parsed()) return cmd_ctrd(scenario_path, delay, all_starts, err);
        if (timeline->parsed()) return cmd_timeline(scenario_path, tr, format);
        if (gen->parsed()) return cmd_gen(n, orbit_radius, omega, seed, area_w, area_h);
        if (experiment->parsed()) return cmd_experiment(plan_path, out_path);
    } catch (const aeronet::InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const aeronet::ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const aeronet::PackingError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
