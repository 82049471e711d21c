// Batch front-end: seeded generation, norms, transforms, decomposition,
// pairing, multiplier operators, and the named verification suites.
// Exit codes: 0 all checks pass, 1 check failure, 2 usage/config error.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "vexha/vexha.hpp"

namespace fs = std::filesystem;
using namespace vexha;

namespace {

struct GlobalArgs {
    int grid = 8;
    std::string exponent = R"({"kind":"constant","value":1.0})";
    std::string kernels = "meyer:1:top:2"; // alias-free default pair
    uint64_t seed = 1;
    int trials = 0;
    int threads = 1;
    std::string out_dir;
    std::string format = "structured";
};

RunConfig make_config(const GlobalArgs& ga) {
    RunConfig cfg;
    cfg.grid_log2 = ga.grid;
    cfg.exponent = ExponentSpec::parse(parse_json_arg(ga.exponent));
    cfg.kernels = KernelSpec::parse_compact(ga.kernels);
    cfg.seed = ga.seed;
    cfg.trials = ga.trials;
    cfg.threads = ga.threads;
    cfg.out_dir = ga.out_dir;
    cfg.format = ga.format;
    cfg.validate();
    return cfg;
}

void print_report(const Report& rep) {
    for (const auto& c : rep.checks) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << rep.suite << "/" << c.name;
        for (const auto& [k, v] : c.values) std::cout << " " << k << "=" << v;
        if (std::isfinite(c.threshold)) std::cout << " threshold=" << c.threshold;
        std::cout << "\n";
    }
}

void emit_report(const Report& rep, const RunConfig& cfg, const std::string& stem) {
    print_report(rep);
    if (cfg.out_dir.empty()) return;
    fs::create_directories(cfg.out_dir);
    write_text_file(cfg.out_dir + "/" + stem + ".json", rep.to_json(true).dump(2) + "\n");
    if (cfg.format == "csv")
        write_text_file(cfg.out_dir + "/" + stem + ".csv", rep.to_csv());
}

int run_gen(const RunConfig& cfg, const std::string& kind, int freq, const std::string& out) {
    Grid g(cfg.grid_log2);
    Signal f(g);
    CounterRng rng(cfg.seed, 0);
    if (kind == "noise") {
        f = random_signal(g, rng);
    } else if (kind == "band-noise") {
        f = random_band_signal(cfg.kernels.build(g), rng);
    } else if (kind == "tone") {
        for (int i = 0; i < g.size; ++i)
            f[i] = std::polar(1.0, 2.0 * std::numbers::pi * freq * g.sample_pos(i));
    } else if (kind == "bump") {
        double s = 0.0;
        for (int i = 0; i < g.size; ++i) {
            double v = std::exp(4.0 * std::cos(2.0 * std::numbers::pi * g.sample_pos(i)));
            f[i] = v;
            s += v;
        }
        for (int i = 0; i < g.size; ++i) f[i] -= s / g.size;
    } else {
        throw config_error("gen: unknown kind '" + kind + "'");
    }
    write_signal(out, f);
    std::cout << "wrote " << out << " (" << g.size << " samples)\n";
    return 0;
}

int run_norm(const RunConfig& cfg, const std::string& space, const std::string& in, double q,
             int d, const std::string& form) {
    Grid g(cfg.grid_log2);
    auto p = cfg.exponent.build(g);
    Report rep;
    rep.suite = "norm";
    rep.config_echo = cfg.echo();
    auto& check = rep.add(space);
    double value = 0.0;
    if (space == "s" || space == "c") {
        CoeffField field = read_coeff_field(in);
        value = space == "s" ? seq_s_norm(field, p) : seq_c_norm(field, p);
    } else {
        Signal f = read_signal(in, g);
        if (space == "lp") {
            value = luxemburg_norm(f, p);
        } else if (space == "hardy") {
            value = hardy_norm(f, p, cfg.kernels.build(g));
        } else if (space == "cmo") {
            value = cmo_norm(f, p, cfg.kernels.build(g),
                             form == "discrete" ? CmoForm::discrete : CmoForm::integral);
        } else if (space == "campanato") {
            value = campanato_norm(f, p, q, d);
        } else if (space == "zygmund") {
            value = zygmund_norm(f, p, d);
        } else {
            throw config_error("norm: unknown space '" + space + "'");
        }
    }
    check.values["value"] = value;
    check.pass = std::isfinite(value);
    emit_report(rep, cfg, "norm");
    return rep.verdict() ? 0 : 1;
}

int run_transform(const RunConfig& cfg, const std::string& mode, const std::string& in,
                  const std::string& out, double tol) {
    Grid g(cfg.grid_log2);
    KernelFamily fam = cfg.kernels.build(g);
    if (mode == "analyze") {
        Signal f = read_signal(in, g);
        write_coeff_field(out, analyze(f, fam));
        std::cout << "wrote " << out << "\n";
        return 0;
    }
    if (mode == "synthesize") {
        CoeffField field = read_coeff_field(in);
        write_signal(out, synthesize(field, fam));
        std::cout << "wrote " << out << "\n";
        return 0;
    }
    if (mode != "roundtrip") throw config_error("transform: unknown mode '" + mode + "'");
    Signal f = read_signal(in, g);
    auto rr = reconstruction_error(f, fam);
    Report rep;
    rep.suite = "transform";
    rep.config_echo = cfg.echo();
    auto& check = rep.add("roundtrip");
    check.values["rel_l2_error"] = rr.error;
    check.values["degenerate"] = rr.degenerate ? 1.0 : 0.0;
    check.threshold = tol;
    check.pass = rr.degenerate || rr.error <= tol;
    emit_report(rep, cfg, "transform");
    return rep.verdict() ? 0 : 1;
}

int run_decompose(const RunConfig& cfg, const std::string& in, const std::string& truncation) {
    Grid g(cfg.grid_log2);
    auto p = cfg.exponent.build(g);
    KernelFamily fam = cfg.kernels.build(g);
    Signal f = read_signal(in, g);
    AtomTruncation tr =
        truncation == "none" ? AtomTruncation::none : AtomTruncation::hard_5q;
    ChiNormTable table(g, p, g.log2_size);
    auto dec = atomic_decompose(f, p, fam, ProbePolicy::left, &table, tr);
    Signal band = project_covered(f, fam);
    double recon =
        l2_norm(band) == 0.0 ? 0.0 : l2_norm(band - dec.reconstruction()) / l2_norm(band);

    json doc;
    doc["source_hardy_norm"] = dec.source_norm;
    doc["reconstruction_rel_l2"] = recon;
    doc["truncation_l2"] = dec.truncation_l2;
    doc["truncation"] = truncation;
    json cubes = json::array();
    const int d = min_moment_degree(p);
    for (const auto& sc : dec.stopping_cubes) {
        if (!dec.lambdas.count(sc.cube)) continue;
        auto ar = atom_check(dec.atoms.at(sc.cube), sc.cube, p, 2.0, d);
        json jc;
        jc["scale"] = sc.cube.scale;
        jc["position"] = sc.cube.position;
        jc["generation"] = sc.generation;
        jc["lambda"] = dec.lambdas.at(sc.cube);
        jc["support_ok"] = ar.support_ok;
        jc["support_vacuous"] = ar.support_vacuous;
        jc["size_constant"] = ar.size_constant;
        jc["moment_max"] = ar.moment_max;
        cubes.push_back(std::move(jc));
    }
    doc["atoms"] = std::move(cubes);
    std::string text = doc.dump(2) + "\n";
    if (!cfg.out_dir.empty()) {
        fs::create_directories(cfg.out_dir);
        write_text_file(cfg.out_dir + "/decompose.json", text);
        std::cout << "wrote " << cfg.out_dir << "/decompose.json\n";
    } else {
        std::cout << text;
    }
    return 0;
}

int run_pair(const RunConfig& cfg, const std::string& in_a, const std::string& in_b) {
    Grid g(cfg.grid_log2);
    KernelFamily fam = cfg.kernels.build(g);
    Signal f = read_signal(in_a, g);
    Signal h = read_signal(in_b, g);
    cplx v = pairing(f, h, fam);
    Report rep;
    rep.suite = "pair";
    rep.config_echo = cfg.echo();
    auto& check = rep.add("pairing");
    check.values["re"] = v.real();
    check.values["im"] = v.imag();
    check.pass = std::isfinite(v.real()) && std::isfinite(v.imag());
    emit_report(rep, cfg, "pair");
    return rep.verdict() ? 0 : 1;
}

int run_czo(const RunConfig& cfg, const std::string& mode, const std::string& kind,
            double gamma, const std::string& in, const std::string& out) {
    Grid g(cfg.grid_log2);
    OperatorSpec os;
    os.kind = kind;
    os.gamma = gamma;
    if (kind != "hilbert_smooth" && kind != "hilbert_sharp")
        throw config_error("czo: unknown operator kind '" + kind + "'");
    MultiplierOperator op = os.build(g);
    if (mode == "apply") {
        Signal f = read_signal(in, g);
        write_signal(out, apply(op, f));
        std::cout << "wrote " << out << "\n";
        return 0;
    }
    if (mode != "experiment") throw config_error("czo: unknown mode '" + mode + "'");
    auto p = cfg.exponent.build(g);
    KernelFamily fam = cfg.kernels.build(g);
    int trials = cfg.trials > 0 ? cfg.trials : 100;
    auto rr = czo_cmo_experiment(op, p, fam, trials, cfg.seed);
    auto sk = standard_kernel_report(op);
    Report rep;
    rep.suite = "czo-experiment";
    rep.config_echo = cfg.echo();
    auto& check = rep.add("cmo_ratio");
    check.values["max_ratio"] = rr.max_ratio;
    check.values["trials_used"] = rr.trials_used;
    check.pass = std::isfinite(rr.max_ratio);
    auto& adj = rep.add("adjoint_identity");
    adj.values["max_err"] = rr.max_adjoint_err;
    adj.threshold = 1e-10;
    adj.pass = rr.max_adjoint_err <= 1e-10;
    auto& skc = rep.add("standard_kernel");
    skc.values["c_size"] = sk.c_size;
    skc.values["c_smooth"] = sk.c_smooth;
    skc.values["gamma"] = sk.gamma;
    skc.pass = std::isfinite(sk.c_size) && std::isfinite(sk.c_smooth);
    emit_report(rep, cfg, "czo");
    return rep.verdict() ? 0 : 1;
}

int run_verify(const RunConfig& cfg, const std::string& suite) {
    std::vector<std::string> names;
    if (suite == "all") {
        names = verify::suite_names();
    } else {
        names.push_back(suite);
    }
    bool all_pass = true;
    for (const auto& name : names) {
        Report rep;
        try {
            rep = verify::run_suite(name, cfg);
        } catch (const config_error&) {
            throw; // usage error: surface as exit 2
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception& e) {
            rep.suite = name;
            rep.config_echo = cfg.echo();
            auto& c = rep.add("numeric_failure");
            c.values["failed"] = 1.0;
            c.pass = false;
            std::cerr << "suite " << name << ": " << e.what() << "\n";
        }
        emit_report(rep, cfg, "verify_" + name);
        all_pass = all_pass && rep.verdict();
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"variable-exponent harmonic analysis toolkit"};
    app.require_subcommand(1);

    GlobalArgs ga;
    app.add_option("--grid", ga.grid, "log2 grid size J (N = 2^J)");
    app.add_option("--exponent", ga.exponent, "exponent spec: inline JSON or @file");
    app.add_option("--kernels", ga.kernels, "kernel spec window[:j_min:j_max[:shift]]");
    app.add_option("--seed", ga.seed, "RNG seed (philox4x32-10 key)");
    app.add_option("--trials", ga.trials, "trial count (0 = per-suite default)");
    app.add_option("--threads", ga.threads, "worker threads");
    app.add_option("--out", ga.out_dir, "output directory for reports");
    app.add_option("--format", ga.format, "report format: structured | csv");

    // global options may appear after the subcommand as well
    app.fallthrough();

    auto* gen = app.add_subcommand("gen", "generate a seeded signal file");
    gen->fallthrough();
    std::string gen_kind = "noise", gen_out = "signal.csv";
    int gen_freq = 3;
    gen->add_option("--kind", gen_kind, "noise | band-noise | tone | bump");
    gen->add_option("--freq", gen_freq, "tone frequency");
    gen->add_option("--out-file", gen_out, "output signal path (.csv or raw)");

    auto* norm = app.add_subcommand("norm", "evaluate a space norm on a file");
    norm->fallthrough();
    std::string norm_space = "lp", norm_in, norm_form = "integral";
    double norm_q = 2.0;
    int norm_d = 0;
    norm->add_option("--space", norm_space, "lp|hardy|cmo|s|c|campanato|zygmund");
    norm->add_option("--in", norm_in, "input signal (or coefficient field for s|c)")
        ->required();
    norm->add_option("--q", norm_q, "Campanato integrability exponent");
    norm->add_option("--d", norm_d, "polynomial / difference degree");
    norm->add_option("--form", norm_form, "cmo form: integral | discrete");

    auto* transform = app.add_subcommand("transform", "analyze | synthesize | roundtrip");
    transform->fallthrough();
    std::string tr_mode, tr_in, tr_out = "out.csv";
    double tr_tol = 1e-8;
    transform->add_option("mode", tr_mode, "analyze | synthesize | roundtrip")->required();
    transform->add_option("--in", tr_in, "input file")->required();
    transform->add_option("--out-file", tr_out, "output file");
    transform->add_option("--tol", tr_tol, "roundtrip pass threshold");

    auto* decompose = app.add_subcommand("decompose", "stopping-time atomic decomposition");
    decompose->fallthrough();
    std::string dc_in, dc_trunc = "hard";
    decompose->add_option("--in", dc_in, "input signal")->required();
    decompose->add_option("--truncation", dc_trunc, "atom truncation: hard | none");

    auto* pair = app.add_subcommand("pair", "duality pairing of two signals");
    pair->fallthrough();
    std::string pr_a, pr_b;
    pair->add_option("--a", pr_a, "first signal")->required();
    pair->add_option("--b", pr_b, "second signal")->required();

    auto* czo = app.add_subcommand("czo", "multiplier operator: apply | experiment");
    czo->fallthrough();
    std::string czo_mode, czo_kind = "hilbert_smooth", czo_in, czo_out = "out.csv";
    double czo_gamma = 1.0;
    czo->add_option("mode", czo_mode, "apply | experiment")->required();
    czo->add_option("--kind", czo_kind, "hilbert_smooth | hilbert_sharp");
    czo->add_option("--gamma", czo_gamma, "kernel smoothness exponent in (0, 1]");
    czo->add_option("--in", czo_in, "input signal (apply)");
    czo->add_option("--out-file", czo_out, "output signal (apply)");

    auto* verify_cmd = app.add_subcommand("verify", "run named verification suites");
    verify_cmd->fallthrough();
    std::string suite = "all";
    verify_cmd->add_option("--suite", suite, "suite name or 'all'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        RunConfig cfg = make_config(ga);
        if (gen->parsed()) return run_gen(cfg, gen_kind, gen_freq, gen_out);
        if (norm->parsed()) return run_norm(cfg, norm_space, norm_in, norm_q, norm_d, norm_form);
        if (transform->parsed()) return run_transform(cfg, tr_mode, tr_in, tr_out, tr_tol);
        if (decompose->parsed()) return run_decompose(cfg, dc_in, dc_trunc);
        if (pair->parsed()) return run_pair(cfg, pr_a, pr_b);
        if (czo->parsed()) return run_czo(cfg, czo_mode, czo_kind, czo_gamma, czo_in, czo_out);
        if (verify_cmd->parsed()) return run_verify(cfg, suite);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
