// Copyright 2026 The topocost Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "topocost/serialization.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "topocost/errors.h"

namespace topocost {

using nlohmann::ordered_json;

namespace {

std::string num(double x) {
    return ordered_json(x).dump();
}

ordered_json wide(u128 value) {
    return to_decimal(value);
}

ordered_json redundancy_json(const RedundancyModel &m) {
    return ordered_json{{"a_slots", m.a_slots},
                        {"a_required", m.a_required},
                        {"y_corr_slots", m.y_corr_slots},
                        {"y_corr_demand_prob", m.y_corr_demand_prob},
                        {"top_y_demand_prob", m.top_y_demand_prob},
                        {"top_y_slots", m.top_y_slots},
                        {"top_y_required", m.top_y_required},
                        {"circuit_fail_scale", m.circuit_fail_scale}};
}

RedundancyModel redundancy_from(const ordered_json &j) {
    RedundancyModel m;
    m.a_slots = j.at("a_slots").get<int>();
    m.a_required = j.at("a_required").get<int>();
    m.y_corr_slots = j.at("y_corr_slots").get<int>();
    m.y_corr_demand_prob = j.at("y_corr_demand_prob").get<double>();
    m.top_y_demand_prob = j.at("top_y_demand_prob").get<double>();
    m.top_y_slots = j.at("top_y_slots").get<int>();
    m.top_y_required = j.at("top_y_required").get<int>();
    m.circuit_fail_scale = j.at("circuit_fail_scale").get<double>();
    return m;
}

DistanceRule parse_distance_rule(const std::string &name) {
    if (name == distance_rule_name(DistanceRule::kBudgetVerified)) {
        return DistanceRule::kBudgetVerified;
    }
    if (name == distance_rule_name(DistanceRule::kClosedForm)) {
        return DistanceRule::kClosedForm;
    }
    fail(ErrorKind::kInvalidArgument, "unknown distance rule: " + name);
}

ordered_json report_json(const ResourceReport &r) {
    ordered_json j;
    j["input"] = {{"bits", r.input.bits}, {"error_rate", r.input.error_rate}};
    j["constants"] = {{"p_th", r.constants.p_th}, {"C1", r.constants.c1}, {"C2", r.constants.c2}};
    j["hardware"] = {{"T_s", r.hardware.layer_time_s},
                     {"M_m", r.hardware.module_edge_m},
                     {"cf_m_per_s", r.hardware.fiber_light_speed_m_per_s}};
    j["options"] = {{"distance_rule", distance_rule_name(r.options.distance_rule)},
                    {"redundancy", redundancy_json(r.options.redundancy)}};
    j["delta_gate"] = r.delta_gate;
    j["circuit"] = {{"K_steps", wide(r.shape.depth_steps)}, {"Q_qubits", r.shape.qubits}};
    j["Lambda"] = r.lambda;
    j["plan"] = {{"level_A", r.plan.level_a},
                 {"level_Y", r.plan.level_y},
                 {"residual_A", r.plan.residual_a},
                 {"residual_Y", r.plan.residual_y},
                 {"footprint_level", r.plan.footprint_level()}};
    j["d"] = r.d.value();
    j["p_f"] = r.cell_failure;
    j["gate_failure"] = r.gate_failure;
    j["footprint"] = {{"level", r.footprint.level},
                      {"V_cells", r.footprint.volume},
                      {"D_cells", r.footprint.depth},
                      {"A_height_cells", r.footprint.height},
                      {"width_per_qubit_cells", r.footprint.width_per_qubit},
                      {"qubits_per_block", r.footprint.qubits_per_block}};
    j["geometry"] = {{"cells_line", r.geometry.cells_line},
                     {"cells_height", r.geometry.cells_height},
                     {"N1_unit_cells", r.geometry.n1},
                     {"N2_unit_cells", r.geometry.n2},
                     {"depth_logical_cells", wide(r.geometry.depth_logical_cells)},
                     {"depth_unit_cells", wide(r.geometry.depth_unit_cells)}};
    j["modules"] = {{"optical_lines", r.modules.optical_lines},
                    {"two_module_lines", r.modules.two_module_lines},
                    {"four_module_lines", r.modules.four_module_lines},
                    {"detection_modules", r.modules.detection_modules},
                    {"source_modules", r.modules.source_modules},
                    {"preparation_modules", r.modules.preparation_modules},
                    {"total_modules", r.modules.total}};
    j["dimensions"] = {{"S_x_m", r.dimensions.s_x_m},
                       {"S_y_m", r.dimensions.s_y_m},
                       {"S_z_max_m", r.dimensions.s_z_max_m}};
    j["runtime"] = {{"runtime_seconds", r.runtime.seconds},
                    {"runtime_years", r.runtime.years},
                    {"temporal_overhead", r.runtime.temporal_overhead},
                    {"qubit_overhead", r.runtime.qubit_overhead}};
    j["shortage_prob_A"] = r.shortage_a;
    j["shortage_prob_Ycorr"] = r.shortage_ycorr;
    j["fixed_point_iterations"] = r.fixed_point_iterations;
    return j;
}

ordered_json discontinuity_json(const Discontinuity &d) {
    return ordered_json{{"bits_before", d.bits_before}, {"bits_after", d.bits_after},
                        {"p_before", d.p_before},       {"p_after", d.p_after},
                        {"level_before", d.level_before}, {"level_after", d.level_after},
                        {"d_before", d.d_before},       {"d_after", d.d_after}};
}

void check(bool ok, const std::string &what) {
    if (!ok) {
        fail(ErrorKind::kInvalidArgument, "report invariant violated: " + what);
    }
}

std::string csv_cell(std::int64_t bits, double p, const CellResult &cell) {
    std::ostringstream row;
    row << bits << ',' << num(p) << ',';
    if (const auto *e = std::get_if<CellError>(&cell)) {
        row << "error," << error_kind_name(e->kind) << ",,,,,,,,,,,,,,,";
        return row.str();
    }
    const auto &r = std::get<ResourceReport>(cell);
    row << "ok,," << r.lambda << ',' << r.plan.level_a << ',' << r.plan.level_y << ',' << r.plan.footprint_level()
        << ',' << r.d.value() << ',' << num(r.cell_failure) << ',' << r.footprint.volume << ','
        << r.footprint.depth << ',' << r.geometry.n1 << ',' << r.geometry.n2 << ',' << r.modules.total << ','
        << num(r.dimensions.s_x_m) << ',' << num(r.dimensions.s_y_m) << ',' << num(r.runtime.seconds) << ','
        << num(r.runtime.years);
    return row.str();
}

ordered_json cell_json(std::int64_t bits, double p, const CellResult &cell) {
    ordered_json j{{"bits", bits}, {"error_rate", p}};
    if (const auto *e = std::get_if<CellError>(&cell)) {
        j["status"] = "error";
        j["error_kind"] = error_kind_name(e->kind);
        j["message"] = e->message;
        return j;
    }
    const auto &r = std::get<ResourceReport>(cell);
    j["status"] = "ok";
    j["Lambda"] = r.lambda;
    j["level_A"] = r.plan.level_a;
    j["level_Y"] = r.plan.level_y;
    j["footprint_level"] = r.plan.footprint_level();
    j["d"] = r.d.value();
    j["p_f"] = r.cell_failure;
    j["V_cells"] = r.footprint.volume;
    j["D_cells"] = r.footprint.depth;
    j["N1_unit_cells"] = r.geometry.n1;
    j["N2_unit_cells"] = r.geometry.n2;
    j["total_modules"] = r.modules.total;
    j["S_x_m"] = r.dimensions.s_x_m;
    j["S_y_m"] = r.dimensions.s_y_m;
    j["runtime_seconds"] = r.runtime.seconds;
    j["runtime_years"] = r.runtime.years;
    return j;
}

std::string_view metric_unit(Metric metric) {
    switch (metric) {
        case Metric::kRuntime:
            return "seconds";
        case Metric::kModules:
            return "modules";
        case Metric::kSx:
        case Metric::kSy:
            return "meters";
    }
    return "";
}

ordered_json rate_json(const RateEstimate &e) {
    return ordered_json{
        {"events", e.events}, {"trials", e.trials}, {"rate", e.rate}, {"standard_error", e.standard_error}};
}

double parse_double(const std::string &key, const std::string &text) {
    std::size_t used = 0;
    double value = 0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != text.size() || !std::isfinite(value)) {
        fail(ErrorKind::kInvalidArgument, "profile key '" + key + "' has non-numeric value '" + text + "'");
    }
    return value;
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::string_view distance_rule_name(DistanceRule rule) {
    return rule == DistanceRule::kClosedForm ? "closed_form" : "budget_verified";
}

Profile parse_profile(std::string_view text, const Profile &base) {
    Profile out = base;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        std::string stripped = trim(line);
        if (stripped.empty()) {
            continue;
        }
        auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            fail(ErrorKind::kInvalidArgument, "profile line " + std::to_string(line_no) + ": expected key = value");
        }
        std::string key = trim(std::string_view(stripped).substr(0, eq));
        std::string value_text = trim(std::string_view(stripped).substr(eq + 1));
        double value = parse_double(key, value_text);
        if (key == "p_th") {
            out.constants.p_th = value;
        } else if (key == "C1") {
            out.constants.c1 = value;
        } else if (key == "C2") {
            out.constants.c2 = value;
        } else if (key == "T_ns") {
            out.hardware.layer_time_s = value * 1e-9;
        } else if (key == "M_mm") {
            out.hardware.module_edge_m = value * 1e-3;
        } else if (key == "cf_m_per_s") {
            out.hardware.fiber_light_speed_m_per_s = value;
        } else {
            fail(ErrorKind::kInvalidArgument, "profile line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
    out.constants.validate();
    out.hardware.validate();
    return out;
}

Profile load_profile(const std::string &path, const Profile &base) {
    std::ifstream in(path);
    if (!in) {
        fail(ErrorKind::kInvalidArgument, "cannot open profile file: " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_profile(buf.str(), base);
}

std::string format_profile(const Profile &profile) {
    std::ostringstream out;
    out << "p_th = " << num(profile.constants.p_th) << '\n'
        << "C1 = " << num(profile.constants.c1) << '\n'
        << "C2 = " << num(profile.constants.c2) << '\n'
        << "T_ns = " << num(profile.hardware.layer_time_s * 1e9) << '\n'
        << "M_mm = " << num(profile.hardware.module_edge_m * 1e3) << '\n'
        << "cf_m_per_s = " << num(profile.hardware.fiber_light_speed_m_per_s) << '\n';
    return out.str();
}

std::string report_to_json(const ResourceReport &report, int indent) {
    return report_json(report).dump(indent);
}

ResourceReport report_from_json(std::string_view text) {
    try {
        ordered_json j = ordered_json::parse(text);
        ResourceReport r;
        r.input.bits = j.at("input").at("bits").get<std::int64_t>();
        r.input.error_rate = j.at("input").at("error_rate").get<double>();
        const auto &k = j.at("constants");
        r.constants = PhysicalConstants{k.at("p_th").get<double>(), k.at("C1").get<double>(), k.at("C2").get<double>()};
        const auto &hw = j.at("hardware");
        r.hardware = HardwareProfile{hw.at("T_s").get<double>(), hw.at("M_m").get<double>(),
                                     hw.at("cf_m_per_s").get<double>()};
        r.options.distance_rule = parse_distance_rule(j.at("options").at("distance_rule").get<std::string>());
        r.options.redundancy = redundancy_from(j.at("options").at("redundancy"));
        r.delta_gate = j.at("delta_gate").get<double>();
        r.shape.depth_steps = parse_u128(j.at("circuit").at("K_steps").get<std::string>());
        r.shape.qubits = j.at("circuit").at("Q_qubits").get<std::int64_t>();
        r.lambda = j.at("Lambda").get<std::int64_t>();
        const auto &plan = j.at("plan");
        r.plan = DistillationPlan{plan.at("level_A").get<int>(), plan.at("level_Y").get<int>(),
                                  plan.at("residual_A").get<double>(), plan.at("residual_Y").get<double>()};
        r.d = CodeDistance(j.at("d").get<int>());
        r.cell_failure = j.at("p_f").get<double>();
        r.gate_failure = j.at("gate_failure").get<double>();
        const auto &fp = j.at("footprint");
        r.footprint = GateFootprint{fp.at("level").get<int>(),
                                    fp.at("V_cells").get<std::int64_t>(),
                                    fp.at("D_cells").get<std::int64_t>(),
                                    fp.at("A_height_cells").get<std::int64_t>(),
                                    fp.at("width_per_qubit_cells").get<std::int64_t>(),
                                    fp.at("qubits_per_block").get<std::int64_t>()};
        const auto &g = j.at("geometry");
        r.geometry = ClusterGeometry{g.at("cells_line").get<std::int64_t>(),
                                     g.at("cells_height").get<std::int64_t>(),
                                     g.at("N1_unit_cells").get<std::int64_t>(),
                                     g.at("N2_unit_cells").get<std::int64_t>(),
                                     parse_u128(g.at("depth_logical_cells").get<std::string>()),
                                     parse_u128(g.at("depth_unit_cells").get<std::string>())};
        const auto &m = j.at("modules");
        r.modules = ModuleBreakdown{m.at("optical_lines").get<std::uint64_t>(),
                                    m.at("two_module_lines").get<std::uint64_t>(),
                                    m.at("four_module_lines").get<std::uint64_t>(),
                                    m.at("detection_modules").get<std::uint64_t>(),
                                    m.at("source_modules").get<std::uint64_t>(),
                                    m.at("preparation_modules").get<std::uint64_t>(),
                                    m.at("total_modules").get<std::uint64_t>()};
        const auto &dims = j.at("dimensions");
        r.dimensions = MachineDimensions{dims.at("S_x_m").get<double>(), dims.at("S_y_m").get<double>(),
                                         dims.at("S_z_max_m").get<double>()};
        const auto &rt = j.at("runtime");
        r.runtime = RuntimeReport{rt.at("runtime_seconds").get<double>(), rt.at("runtime_years").get<double>(),
                                  rt.at("temporal_overhead").get<double>(), rt.at("qubit_overhead").get<double>()};
        r.shortage_a = j.at("shortage_prob_A").get<double>();
        r.shortage_ycorr = j.at("shortage_prob_Ycorr").get<double>();
        r.fixed_point_iterations = j.at("fixed_point_iterations").get<int>();
        return r;
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::kInvalidArgument, std::string("malformed report JSON: ") + e.what());
    } catch (const std::logic_error &e) {
        if (dynamic_cast<const EstimationError *>(&e) != nullptr) {
            throw;
        }
        fail(ErrorKind::kInvalidArgument, std::string("malformed report JSON: ") + e.what());
    }
}

void validate_report(const ResourceReport &r) {
    r.input.validate();
    r.constants.validate();
    r.hardware.validate();
    const double p = r.input.error_rate;

    check(r.delta_gate == target_gate_error(r.input.bits).delta_gate(), "delta_gate = 1/(640 L^4)");
    check(r.lambda == sk_sequence_length(ErrorBudget(r.delta_gate)).lambda, "Lambda = ceil(19.6 log10(1/delta) - 10.5)");
    check(r.footprint.level == r.plan.footprint_level(), "footprint level = max(level_A, level_Y)");
    GateFootprint catalog = footprint(r.footprint.level);
    check(r.footprint.volume == catalog.volume && r.footprint.depth == catalog.depth &&
              r.footprint.height == catalog.height,
          "footprint matches catalog");
    if (r.options.distance_rule == DistanceRule::kBudgetVerified) {
        check(gate_failure(r.cell_failure, r.lambda, r.footprint.volume) <= r.delta_gate, "gate failure <= delta");
    }
    if (p > 0) {
        check(r.plan.residual_a <= r.cell_failure, "residual_A <= p_f");
        check(r.plan.residual_y <= r.cell_failure, "residual_Y <= p_f");
    }
    check(r.geometry.n1 == 5 * r.input.bits * r.d.value(), "N1 = 5 L d");
    check(r.geometry.n2 == (5 * r.d.value() * r.footprint.height + 3) / 4, "N2 = ceil(5d/4 * A)");
    const auto &m = r.modules;
    check(m.detection_modules + m.source_modules + m.preparation_modules == m.total,
          "detection + source + preparation = total");
    check(m.total == module_count(r.geometry.n1, r.geometry.n2).total, "total = 12 + 14N1 + 14N2 + 20N1N2");

    ResourceReport fresh = estimate(r.input, r.constants, r.hardware, r.options);
    check(report_json(fresh) == report_json(r), "report equals a fresh estimate of its input");
}

std::string_view sweep_csv_header() {
    return "bits,error_rate,status,error_kind,Lambda,level_A,level_Y,footprint_level,d,p_f,V_cells,D_cells,"
           "N1_unit_cells,N2_unit_cells,total_modules,S_x_m,S_y_m,runtime_seconds,runtime_years";
}

std::string sweep_to_json(const SweepGrid &grid, int indent) {
    ordered_json j;
    j["bits"] = grid.bits;
    j["error_rates"] = grid.error_rates;
    ordered_json cells = ordered_json::array();
    for (std::size_t i = 0; i < grid.bits.size(); ++i) {
        for (std::size_t k = 0; k < grid.error_rates.size(); ++k) {
            cells.push_back(cell_json(grid.bits[i], grid.error_rates[k], grid.at(i, k)));
        }
    }
    j["cells"] = std::move(cells);
    ordered_json jumps = ordered_json::array();
    for (const Discontinuity &d : level_discontinuities(grid)) {
        jumps.push_back(discontinuity_json(d));
    }
    j["level_discontinuities"] = std::move(jumps);
    return j.dump(indent);
}

std::string sweep_to_csv(const SweepGrid &grid) {
    std::string out(sweep_csv_header());
    out += '\n';
    for (std::size_t i = 0; i < grid.bits.size(); ++i) {
        for (std::size_t k = 0; k < grid.error_rates.size(); ++k) {
            out += csv_cell(grid.bits[i], grid.error_rates[k], grid.at(i, k));
            out += '\n';
        }
    }
    return out;
}

std::string contour_to_json(const ContourLine &line, int indent) {
    ordered_json j;
    j["metric"] = metric_name(line.metric);
    j["threshold"] = line.threshold;
    j["threshold_unit"] = metric_unit(line.metric);
    ordered_json points = ordered_json::array();
    for (const ContourPoint &pt : line.points) {
        ordered_json jp{{"error_rate", pt.error_rate}};
        jp["L_boundary"] = pt.bits_boundary ? ordered_json(*pt.bits_boundary) : ordered_json(nullptr);
        if (pt.error) {
            jp["error_kind"] = error_kind_name(pt.error->kind);
            jp["message"] = pt.error->message;
        }
        points.push_back(std::move(jp));
    }
    j["points"] = std::move(points);
    ordered_json jumps = ordered_json::array();
    for (const Discontinuity &d : line.discontinuities) {
        jumps.push_back(discontinuity_json(d));
    }
    j["discontinuities"] = std::move(jumps);
    return j.dump(indent);
}

std::string contour_to_csv(const ContourLine &line) {
    std::ostringstream out;
    out << "error_rate,L_boundary,status,error_kind\n";
    for (const ContourPoint &pt : line.points) {
        out << num(pt.error_rate) << ',';
        if (pt.bits_boundary) {
            out << *pt.bits_boundary << ",ok,\n";
        } else {
            out << ",error," << (pt.error ? error_kind_name(pt.error->kind) : "") << '\n';
        }
    }
    return out.str();
}

std::string sim_to_json(const SimConfig &config, const SimResult &result, int indent) {
    ordered_json j;
    j["config"] = {{"circuit_failure", config.circuit_failure},
                   {"trials", config.trials},
                   {"seed", config.seed},
                   {"redundancy", redundancy_json(config.model)}};
    j["shortage_A"] = rate_json(result.shortage_a);
    j["shortage_Ycorr"] = rate_json(result.shortage_ycorr);
    j["top_Y_shortage"] = rate_json(result.top_y);
    return j.dump(indent);
}

std::string sim_to_csv(const SimConfig &config, const SimResult &result) {
    std::ostringstream out;
    out << "event,circuit_failure,trials,seed,events,rate,standard_error\n";
    auto row = [&](const char *name, const RateEstimate &e) {
        out << name << ',' << num(config.circuit_failure) << ',' << config.trials << ',' << config.seed << ','
            << e.events << ',' << num(e.rate) << ',' << num(e.standard_error) << '\n';
    };
    row("shortage_A", result.shortage_a);
    row("shortage_Ycorr", result.shortage_ycorr);
    row("top_Y_shortage", result.top_y);
    return out.str();
}

}  // namespace topocost
