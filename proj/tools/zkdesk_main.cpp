#include "zkdesk/ckt_format.hpp"
#include "zkdesk/generate.hpp"
#include "zkdesk/polarize.hpp"
#include "zkdesk/protocol.hpp"
#include "zkdesk/quantum.hpp"
#include "zkdesk/reduce.hpp"
#include "zkdesk/report.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace zkdesk;
using nlohmann::ordered_json;

namespace {

ordered_json pair_stats_json(const Circuit& x, const Circuit& y, uint32_t budget) {
    ExactDist dx = enumerate_dist(x, budget);
    ExactDist dy = enumerate_dist(y, budget);
    ordered_json j;
    j["sd"] = rational_json(statistical_difference(dx, dy));
    j["disj_xy"] = rational_json(disjointness(dx, dy));
    j["disj_yx"] = rational_json(disjointness(dy, dx));
    j["mut_disj"] = rational_json(mutual_disjointness(dx, dy));
    return j;
}

void emit(const ordered_json& report, const std::string& report_path) {
    if (!report_path.empty())
        write_json_file(report_path, report);
    else
        std::cout << report.dump(2) << "\n";
}

const char* tag_name(TagChoice t) { return t == TagChoice::Same ? "same" : "cross"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk-scale exact toolkit for circuit distributions, polarization, "
                 "promise-problem reductions, and help-based protocols"};
    app.require_subcommand(1);

    uint32_t budget = budget_bits();
    app.add_option("--budget", budget, "max circuit input bits for enumeration")
        ->capture_default_str();

    std::string x_path, y_path, x1_path, report_path, out_prefix, csv_path;
    std::string a_str = "0.25", b_str = "0.5", u_str = "0.5", px_str = "1", py_str = "1";
    std::string tag_str = "gamma", kind;
    uint32_t k = 4, s = 1, t = 1, coin_bits = 3, qubits = 3, trials = 1000, runs = 0;
    uint32_t n_bits = 3, width = 2, j_range = 1, shared_bits = 0;
    uint64_t seed = 1;
    bool pre_tripled = false;

    // --- distribution statistics ---
    auto* sd_cmd = app.add_subcommand("sd", "exact statistical difference of two circuits");
    sd_cmd->add_option("--x", x_path)->required();
    sd_cmd->add_option("--y", y_path)->required();
    sd_cmd->add_option("--report", report_path);
    sd_cmd->add_option("--csv", csv_path, "also export X's distribution as CSV");

    auto* disj_cmd = app.add_subcommand("disj", "exact disjointness, both directions and mutual");
    disj_cmd->add_option("--x", x_path)->required();
    disj_cmd->add_option("--y", y_path)->required();
    disj_cmd->add_option("--report", report_path);

    auto* ent_cmd = app.add_subcommand("entropy", "Shannon entropy of a circuit distribution");
    ent_cmd->add_option("--x", x_path)->required();
    ent_cmd->add_option("--report", report_path);
    ent_cmd->add_option("--csv", csv_path, "export the distribution as CSV");

    // --- operators ---
    auto* tensor_cmd = app.add_subcommand("tensor", "tensor product or power of circuits");
    tensor_cmd->add_option("--x", x_path)->required();
    tensor_cmd->add_option("--y", y_path, "second factor (omit to use --k copies of --x)");
    tensor_cmd->add_option("--k", k, "tensor power when --y is omitted");
    tensor_cmd->add_option("--out-prefix", out_prefix)->required();
    tensor_cmd->add_option("--report", report_path);

    auto* xor_cmd = app.add_subcommand("xor", "pair XOR operator (A, B)");
    xor_cmd->add_option("--x", x_path)->required();
    xor_cmd->add_option("--y", y_path)->required();
    xor_cmd->add_option("--out-prefix", out_prefix)->required();
    xor_cmd->add_option("--report", report_path);

    auto* top_cmd = app.add_subcommand("t-op", "one polarization round (XOR then tensor square)");
    top_cmd->add_option("--x", x_path)->required();
    top_cmd->add_option("--y", y_path)->required();
    top_cmd->add_option("--out-prefix", out_prefix)->required();
    top_cmd->add_option("--report", report_path);

    auto* mix_cmd = app.add_subcommand("mixture", "gamma mixture u*X + (1-u)*symbol");
    mix_cmd->add_option("--x", x_path)->required();
    mix_cmd->add_option("--u", u_str, "mixture weight (dyadic)")->capture_default_str();
    mix_cmd->add_option("--coin-bits", coin_bits)->capture_default_str();
    mix_cmd->add_option("--tag", tag_str, "gamma | gamma-prime")->capture_default_str();
    mix_cmd->add_option("--out-prefix", out_prefix)->required();
    mix_cmd->add_option("--report", report_path);

    // --- polarization ---
    auto* pol_cmd = app.add_subcommand("polarize", "mut-IID polarization pipeline");
    pol_cmd->add_option("--a", a_str)->required();
    pol_cmd->add_option("--b", b_str)->required();
    pol_cmd->add_option("--k", k, "target gap exponent")->capture_default_str();
    pol_cmd->add_option("--x", x_path)->required();
    pol_cmd->add_option("--y", y_path)->required();
    pol_cmd->add_option("--coin-bits", coin_bits)->capture_default_str();
    pol_cmd->add_option("--out-prefix", out_prefix)->required();
    pol_cmd->add_option("--report", report_path);

    // --- reductions ---
    auto* reduce_cmd = app.add_subcommand("reduce", "promise-problem reductions");
    reduce_cmd->require_subcommand(1);

    auto* ea_cmd = reduce_cmd->add_subcommand("ea-bar-to-iid", "flattening + hashing reduction");
    ea_cmd->add_option("--x", x_path)->required();
    ea_cmd->add_option("--t", t, "entropy threshold")->required();
    ea_cmd->add_option("--s", s, "tensor copies")->capture_default_str();
    ea_cmd->add_option("--k", k, "security parameter")->capture_default_str();
    ea_cmd->add_option("--out-prefix", out_prefix)->required();
    ea_cmd->add_option("--report", report_path);

    auto* i2m_cmd = reduce_cmd->add_subcommand("iid-to-mut", "selector-append symmetrization");
    i2m_cmd->add_option("--x0", x_path)->required();
    i2m_cmd->add_option("--x1", x1_path)->required();
    i2m_cmd->add_option("--out-prefix", out_prefix)->required();
    i2m_cmd->add_option("--report", report_path);

    auto* ed_cmd = reduce_cmd->add_subcommand(
        "ed-bar", "decompose to OR(EA-bar, EA) skeletons and assemble (EA side pluggable)");
    ed_cmd->add_option("--x", x_path)->required();
    ed_cmd->add_option("--y", y_path)->required();
    ed_cmd->add_option("--s", s)->capture_default_str();
    ed_cmd->add_option("--k", k)->capture_default_str();
    ed_cmd->add_flag("--pre-tripled", pre_tripled, "inputs are already tensor cubes");
    std::string ea_side_str = "none";
    ed_cmd->add_option("--ea-side", ea_side_str,
                       "pluggable EA-side source: none | stub-yes | stub-no")
        ->capture_default_str();
    ed_cmd->add_option("--seed", seed)->capture_default_str();
    ed_cmd->add_option("--report", report_path);

    auto* p2i_cmd = reduce_cmd->add_subcommand("protocol-to-iid",
                                               "compile the pair's protocol into (D0, D1)");
    p2i_cmd->add_option("--x", x_path)->required();
    p2i_cmd->add_option("--y", y_path)->required();
    p2i_cmd->add_option("--k", k, "odd repetition count")->capture_default_str();
    p2i_cmd->add_option("--shared-bits", shared_bits,
                        "simulator inputs treated as shared coins (default: all)");
    p2i_cmd->add_option("--out-prefix", out_prefix)->required();
    p2i_cmd->add_option("--report", report_path);

    // --- protocol ---
    auto* proto_cmd = app.add_subcommand("protocol", "help-based protocol runtime");
    proto_cmd->require_subcommand(1);
    auto* run_cmd = proto_cmd->add_subcommand("run", "measure the protocol for a pair exactly");
    run_cmd->add_option("--x", x_path)->required();
    run_cmd->add_option("--y", y_path)->required();
    run_cmd->add_option("--k", k, "polarization gap the pair is assumed to carry")
        ->capture_default_str();
    run_cmd->add_option("--runs", runs, "sampled example executions to include");
    run_cmd->add_option("--seed", seed)->capture_default_str();
    run_cmd->add_option("--report", report_path);

    // --- quantum ---
    auto* q_cmd = app.add_subcommand("quantum", "density-matrix checks");
    q_cmd->require_subcommand(1);
    auto* fact_cmd = q_cmd->add_subcommand("fact-check",
                                           "entropy / trace-distance bounds over random states");
    fact_cmd->add_option("--n", qubits, "qubit count")->capture_default_str();
    fact_cmd->add_option("--trials", trials)->capture_default_str();
    fact_cmd->add_option("--seed", seed)->capture_default_str();
    fact_cmd->add_option("--report", report_path);
    fact_cmd->add_option("--csv", csv_path, "per-trial sweep rows");

    // --- generators ---
    auto* gen_cmd = app.add_subcommand("generate", "certified instance generators");
    gen_cmd->add_option("--kind", kind, "yes-iid | no-iid | ea-instance | random-circuit")
        ->required();
    gen_cmd->add_option("--seed", seed)->capture_default_str();
    gen_cmd->add_option("--n", n_bits, "body input bits")->capture_default_str();
    gen_cmd->add_option("--width", width)->capture_default_str();
    gen_cmd->add_option("--a", a_str, "yes-iid SD target")->capture_default_str();
    gen_cmd->add_option("--px", px_str, "no-iid X-side disjoint mass")->capture_default_str();
    gen_cmd->add_option("--py", py_str, "no-iid Y-side disjoint mass")->capture_default_str();
    gen_cmd->add_option("--entropy", j_range, "ea-instance uniform range exponent")
        ->capture_default_str();
    std::string ea_kind = "point";
    gen_cmd->add_option("--ea-kind", ea_kind, "point | uniform | mixed")->capture_default_str();
    gen_cmd->add_option("--out-prefix", out_prefix)->required();
    gen_cmd->add_option("--report", report_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*sd_cmd) {
            ordered_json rep = report_skeleton("sd");
            rep["config"] = {{"x", x_path}, {"y", y_path}, {"budget", budget}};
            Circuit x = load_ckt_file(x_path), y = load_ckt_file(y_path);
            ExactDist dx = enumerate_dist(x, budget), dy = enumerate_dist(y, budget);
            rep["results"]["sd"] = rational_json(statistical_difference(dx, dy));
            rep["results"]["sc"] = rational_json(statistical_closeness(dx, dy));
            if (!csv_path.empty()) write_text_file(csv_path, dist_to_csv(dx));
            emit(rep, report_path);
        } else if (*disj_cmd) {
            ordered_json rep = report_skeleton("disj");
            rep["config"] = {{"x", x_path}, {"y", y_path}, {"budget", budget}};
            rep["results"] = pair_stats_json(load_ckt_file(x_path), load_ckt_file(y_path), budget);
            emit(rep, report_path);
        } else if (*ent_cmd) {
            ordered_json rep = report_skeleton("entropy");
            rep["config"] = {{"x", x_path}, {"budget", budget}};
            ExactDist d = enumerate_dist(load_ckt_file(x_path), budget);
            rep["results"]["entropy_bits"] = shannon_entropy(d);
            rep["results"]["support"] = d.support_size();
            if (!csv_path.empty()) write_text_file(csv_path, dist_to_csv(d));
            emit(rep, report_path);
        } else if (*tensor_cmd) {
            ordered_json rep = report_skeleton("tensor");
            Circuit x = load_ckt_file(x_path);
            Circuit out;
            if (!y_path.empty()) {
                out = tensor(x, load_ckt_file(y_path));
                rep["config"] = {{"x", x_path}, {"y", y_path}};
            } else {
                out = tensor_power(x, k);
                rep["config"] = {{"x", x_path}, {"k", k}};
            }
            save_ckt_file(out, out_prefix + ".ckt");
            rep["results"] = {{"out", out_prefix + ".ckt"},
                              {"n_inputs", out.n_inputs},
                              {"width", out.width()}};
            emit(rep, report_path);
        } else if (*xor_cmd || *top_cmd) {
            const bool is_xor = static_cast<bool>(*xor_cmd);
            ordered_json rep = report_skeleton(is_xor ? "xor" : "t-op");
            rep["config"] = {{"x", x_path}, {"y", y_path}, {"budget", budget}};
            Circuit x = load_ckt_file(x_path), y = load_ckt_file(y_path);
            CircuitPair p = is_xor ? xor_pair(x, y) : t_operator(x, y);
            save_ckt_file(p.a, out_prefix + "_a.ckt");
            save_ckt_file(p.b, out_prefix + "_b.ckt");
            rep["results"]["provenance"] = p.provenance;
            rep["results"]["inputs_before"] = pair_stats_json(x, y, budget);
            if (std::max(p.a.n_inputs, p.b.n_inputs) <= budget)
                rep["results"]["outputs_after"] = pair_stats_json(p.a, p.b, budget);
            emit(rep, report_path);
        } else if (*mix_cmd) {
            ordered_json rep = report_skeleton("mixture");
            rep["config"] = {{"x", x_path}, {"u", u_str}, {"coin_bits", coin_bits},
                             {"tag", tag_str}};
            MixTag tag = tag_str == "gamma-prime" ? MixTag::GammaPrime : MixTag::Gamma;
            Circuit out = gamma_mixture(load_ckt_file(x_path), parse_rational(u_str), coin_bits,
                                        tag);
            save_ckt_file(out, out_prefix + ".ckt");
            rep["results"] = {{"out", out_prefix + ".ckt"}, {"n_inputs", out.n_inputs},
                              {"width", out.width()}};
            emit(rep, report_path);
        } else if (*pol_cmd) {
            ordered_json rep = report_skeleton("polarize");
            rep["config"] = {{"a", a_str}, {"b", b_str}, {"k", k}, {"x", x_path}, {"y", y_path},
                             {"coin_bits", coin_bits}, {"budget", budget}};
            PolarizeOptions opts;
            opts.k = k;
            opts.coin_bits = coin_bits;
            opts.budget = budget;
            PolarizationResult res = polarize_mut_iid(load_ckt_file(x_path),
                                                      load_ckt_file(y_path),
                                                      parse_rational(a_str),
                                                      parse_rational(b_str), opts);
            save_ckt_file(res.x_out, out_prefix + "_x.ckt");
            save_ckt_file(res.y_out, out_prefix + "_y.ckt");
            ordered_json stages = ordered_json::array();
            for (const auto& st : res.stages) {
                ordered_json sj;
                sj["name"] = st.name;
                sj["constructed"] = st.constructed;
                if (st.constructed) sj["n_inputs"] = st.n_inputs;
                if (st.measured) {
                    sj["measured_sd"] = rational_json(st.measured->sd);
                    sj["measured_mut_disj"] = rational_json(st.measured->mut());
                }
                sj["plan_yes_upper"] = rational_json(st.plan_yes_ub);
                sj["plan_no_lower"] = rational_json(st.plan_no_lb);
                if (st.path_sd_ub) sj["certified_sd_upper"] = rational_json(*st.path_sd_ub);
                if (st.path_mut_lb) sj["certified_mut_lower"] = rational_json(*st.path_mut_lb);
                stages.push_back(std::move(sj));
            }
            rep["results"]["plan"] = {{"u0", rational_json(res.plan.u0)},
                                      {"tag", tag_name(res.plan.tag)},
                                      {"weight", rational_json(res.plan.weight)},
                                      {"t_rounds", res.plan.t_rounds},
                                      {"final_gap_k", res.plan.final_gap_k}};
            rep["results"]["stages"] = std::move(stages);
            rep["results"]["constructed_rounds"] = res.constructed_rounds;
            rep["results"]["construction_reached_target"] = res.construction_reached_target;
            rep["results"]["final_sd_upper"] = rational_json(res.final_sd_upper);
            rep["results"]["final_mut_lower"] = rational_json(res.final_mut_lower);
            rep["results"]["x_out"] = out_prefix + "_x.ckt";
            rep["results"]["y_out"] = out_prefix + "_y.ckt";
            emit(rep, report_path);
        } else if (*ea_cmd) {
            ordered_json rep = report_skeleton("reduce ea-bar-to-iid");
            rep["config"] = {{"x", x_path}, {"t", t}, {"s", s}, {"k", k}, {"budget", budget}};
            EaBarResult res = ea_bar_to_iid(load_ckt_file(x_path), t, s, k, budget);
            save_ckt_file(res.pair.x, out_prefix + "_z.ckt");
            save_ckt_file(res.pair.y, out_prefix + "_zp.ckt");
            rep["results"]["trace"] = {{"reduction", res.trace.reduction},
                                       {"params", res.trace.params},
                                       {"measured", res.trace.measured}};
            rep["results"]["regime"] = regime_name(res.pair.regime);
            if (std::max(res.pair.x.n_inputs, res.pair.y.n_inputs) <= budget)
                rep["results"]["pair_stats"] = pair_stats_json(res.pair.x, res.pair.y, budget);
            emit(rep, report_path);
        } else if (*i2m_cmd) {
            ordered_json rep = report_skeleton("reduce iid-to-mut");
            rep["config"] = {{"x0", x_path}, {"x1", x1_path}, {"budget", budget}};
            PromisePair p = iid_to_mut_iid(load_ckt_file(x_path), load_ckt_file(x1_path));
            save_ckt_file(p.x, out_prefix + "_a.ckt");
            save_ckt_file(p.y, out_prefix + "_b.ckt");
            if (std::max(p.x.n_inputs, p.y.n_inputs) <= budget)
                rep["results"]["pair_stats"] = pair_stats_json(p.x, p.y, budget);
            emit(rep, report_path);
        } else if (*ed_cmd) {
            ordered_json rep = report_skeleton("reduce ed-bar");
            rep["config"] = {{"x", x_path}, {"y", y_path}, {"s", s}, {"k", k},
                             {"ea_side", ea_side_str}, {"seed", seed},
                             {"pre_tripled", pre_tripled}};
            Circuit x = load_ckt_file(x_path), y = load_ckt_file(y_path);
            EaSideReduction side;
            Rng rng(seed);
            if (ea_side_str == "stub-yes")
                side = [&rng](const Circuit&, uint32_t) {
                    PromisePair p = generate_yes_iid(rng, 2, 3, Rational(1, 8)).pair;
                    p.problem = Problem::MutIID;
                    return p;
                };
            else if (ea_side_str == "stub-no")
                side = [&rng](const Circuit&, uint32_t) {
                    return generate_no_iid(rng, 2, 3, Rational(1), Rational(1)).pair;
                };
            EdBarAssembly res = ed_bar_assemble(x, y, side, s, k, pre_tripled);
            rep["results"]["trace"] = {{"reduction", res.trace.reduction},
                                       {"params", res.trace.params},
                                       {"measured", res.trace.measured}};
            rep["results"]["regime"] = regime_name(res.pair.regime);
            rep["results"]["n_inputs_x"] = res.pair.x.n_inputs;
            rep["results"]["n_inputs_y"] = res.pair.y.n_inputs;
            emit(rep, report_path);
        } else if (*p2i_cmd) {
            ordered_json rep = report_skeleton("reduce protocol-to-iid");
            Circuit x = load_ckt_file(x_path), y = load_ckt_file(y_path);
            ProtocolSpec spec = build_iid_protocol(x, y, budget);
            uint32_t shared = p2i_cmd->count("--shared-bits") ? shared_bits
                                                              : spec.simulator.n_inputs;
            rep["config"] = {{"x", x_path}, {"y", y_path}, {"k", k}, {"shared_bits", shared},
                             {"budget", budget}};
            ProtocolToIidResult res = protocol_to_iid(spec, k, shared);
            save_ckt_file(res.d0.base, out_prefix + "_d0.ckt");
            save_ckt_file(res.d1.base, out_prefix + "_d1.ckt");
            rep["results"]["trace"] = {{"reduction", res.trace.reduction},
                                       {"params", res.trace.params}};
            if (std::max(res.d0.base.n_inputs, res.d1.base.n_inputs) <= budget) {
                rep["results"]["sd_d0_d1"] = rational_json(statistical_difference(
                    prob_output_dist(res.d0, budget), prob_output_dist(res.d1, budget)));
                rep["results"]["disjointness_prob"] =
                    rational_json(disjointness_prob(res.d0, res.d1, budget));
            }
            emit(rep, report_path);
        } else if (*run_cmd) {
            ordered_json rep = report_skeleton("protocol run");
            rep["config"] = {{"x", x_path}, {"y", y_path}, {"k", k}, {"seed", seed},
                             {"runs", runs}, {"budget", budget}};
            Circuit x = load_ckt_file(x_path), y = load_ckt_file(y_path);
            ProtocolSpec spec = build_iid_protocol(x, y, budget);
            ProtocolReport m = measure(spec, budget);
            rep["results"]["completeness"] = rational_json(m.completeness);
            rep["results"]["soundness"] = rational_json(m.soundness);
            rep["results"]["deviation"] = rational_json(m.deviation);
            rep["results"]["abort_mass"] = rational_json(m.abort_mass);
            if (runs > 0) {
                std::mt19937_64 rng(seed);
                ordered_json samples = ordered_json::array();
                for (uint32_t i = 0; i < runs; ++i) {
                    ProtocolRun r = run_protocol_once(spec, rng, std::nullopt, budget);
                    samples.push_back({{"help", format_bits(r.help, spec.help_bits)},
                                       {"aborted", r.aborted},
                                       {"message", format_bits(r.message, spec.message_bits)},
                                       {"accepted", r.accepted}});
                }
                rep["results"]["sample_runs"] = std::move(samples);
            }
            emit(rep, report_path);
        } else if (*fact_cmd) {
            ordered_json rep = report_skeleton("quantum fact-check");
            rep["config"] = {{"n", qubits}, {"trials", trials}, {"seed", seed}};
            std::mt19937_64 rng(seed);
            uint32_t failures = 0;
            double min_lower_margin = std::numeric_limits<double>::infinity();
            double min_upper_margin = std::numeric_limits<double>::infinity();
            std::string csv = "trial,family,alpha,entropy,lower_margin,upper_margin\n";
            static const char* kFamily[4] = {"mixed", "pure", "depolarized", "rank_deficient"};
            for (uint32_t i = 0; i < trials; ++i) {
                DensityMatrix st;
                switch (i % 4) {
                    case 0: st = random_mixed_state(qubits, rng); break;
                    case 1: st = random_pure_state(qubits, rng); break;
                    case 2:
                        st = depolarized_pure(qubits, double(rng() % 1000) / 1000.0);
                        break;
                    default:
                        st = random_rank_deficient(qubits, 1 + int(rng() % (1 << qubits)), rng);
                }
                EntropyBoundsReport r = fact_check_entropy_bounds(st);
                if (!r.lower_ok) ++failures;
                min_lower_margin = std::min(min_lower_margin, r.lower_margin);
                min_upper_margin = std::min(min_upper_margin, r.upper_margin);
                if (!csv_path.empty())
                    csv += std::to_string(i) + "," + kFamily[i % 4] + "," +
                           std::to_string(r.alpha) + "," + std::to_string(r.entropy) + "," +
                           std::to_string(r.lower_margin) + "," +
                           std::to_string(r.upper_margin) + "\n";
            }
            if (!csv_path.empty()) write_text_file(csv_path, csv);
            rep["results"]["lower_bound_counterexamples"] = failures;
            rep["results"]["min_lower_margin"] = min_lower_margin;
            rep["results"]["min_upper_margin"] = min_upper_margin;
            emit(rep, report_path);
            return failures == 0 ? 0 : 1;
        } else if (*gen_cmd) {
            ordered_json rep = report_skeleton("generate");
            rep["config"] = {{"kind", kind}, {"seed", seed}, {"n", n_bits}, {"width", width},
                             {"budget", budget}};
            Rng rng(seed);
            if (kind == "yes-iid") {
                rep["config"]["a"] = a_str;
                GeneratedPair p = generate_yes_iid(rng, n_bits, width, parse_rational(a_str),
                                                   budget);
                save_ckt_file(p.pair.x, out_prefix + "_x.ckt");
                save_ckt_file(p.pair.y, out_prefix + "_y.ckt");
                rep["results"]["certificate"] = p.certificate;
            } else if (kind == "no-iid") {
                rep["config"]["px"] = px_str;
                rep["config"]["py"] = py_str;
                GeneratedPair p = generate_no_iid(rng, n_bits, width, parse_rational(px_str),
                                                  parse_rational(py_str), budget);
                save_ckt_file(p.pair.x, out_prefix + "_x.ckt");
                save_ckt_file(p.pair.y, out_prefix + "_y.ckt");
                rep["results"]["certificate"] = p.certificate;
            } else if (kind == "ea-instance") {
                rep["config"]["ea_kind"] = ea_kind;
                rep["config"]["entropy"] = j_range;
                EaKind ek = ea_kind == "uniform"
                                ? EaKind::UniformRange
                                : (ea_kind == "mixed" ? EaKind::Mixed : EaKind::Point);
                GeneratedEa g = generate_ea_instance(rng, ek, n_bits, width, j_range, budget);
                save_ckt_file(g.x, out_prefix + ".ckt");
                rep["results"]["certificate"] = g.certificate;
            } else if (kind == "random-circuit") {
                Circuit c = random_circuit(rng, n_bits, 3 * width + 4, width);
                save_ckt_file(c, out_prefix + ".ckt");
                rep["results"]["certificate"] = {{"kind", "random-circuit"},
                                                 {"n_inputs", c.n_inputs},
                                                 {"gates", c.gates.size()},
                                                 {"width", c.width()}};
            } else {
                throw PreconditionError("unknown generator kind: " + kind);
            }
            emit(rep, report_path);
        }
        return 0;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "circuit syntax error: " << e.what() << "\n";
        return 1;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
