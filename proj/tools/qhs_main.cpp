// Batch driver for the covering-algebra / diagram-algebra verification
// workbench: loads a superdatum config, runs verification suites, and emits
// machine-readable reports.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qhs/boson.hpp"
#include "qhs/ktheory.hpp"
#include "qhs/qhsa.hpp"
#include "qhs/suites.hpp"

using namespace qhs;

namespace {

struct Loaded {
    Superdatum d;
    QTable qt;
    GammaTable gm;
};

Loaded load(const std::string& path) {
    Loaded l;
    l.d = load_datum_file(path, &l.qt, &l.gm);
    auto rep = validate(l.d, l.qt, l.gm);
    if (!rep.ok)
        throw std::runtime_error("config does not validate: axiom " + rep.axiom + " at (" +
                                 std::to_string(rep.i) + "," + std::to_string(rep.j) + "): " +
                                 rep.message);
    return l;
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

std::string series_table(const DimSeries& s) {
    std::ostringstream out;
    for (const auto& [n, ab] : s.coeffs())
        out << "  q^" << n << " even=" << ab.first.get_str() << " odd=" << ab.second.get_str()
            << "\n";
    out << "  order=" << s.order() << "\n";
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification workbench for covering quantum Borcherds algebras and quiver "
                 "Hecke superalgebras"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    RunConfig cfg;

    auto add_common = [&](CLI::App* cmd, bool need_config = true) {
        auto* opt = cmd->add_option("--config", config_path, "superdatum config file (JSON)");
        if (need_config) opt->required();
    };

    // run
    auto* run = app.add_subcommand("run", "run verification suites and write a report");
    add_common(run);
    run->add_option("--suite", cfg.suites, "suite selection (default: all)");
    run->add_option("--max-height", cfg.max_height, "weight height bound");
    run->add_option("--order", cfg.order, "series truncation order");
    run->add_option("--pi", cfg.pi_mode, "pi mode: generic, plus or minus");
    run->add_option("--seed", cfg.seed, "random seed for the differential suite");
    run->add_option("--jobs", cfg.jobs, "worker threads");
    run->add_option("--out", cfg.out_path, "report file (default: stdout)");
    run->add_flag("--mutate-fixture", cfg.mutate_fixture,
                  "test fixture: flip one relation constant and demand a witness");
    run->add_flag("--timings", cfg.timings, "include wall times in the report file");

    // explain
    auto* explain = app.add_subcommand("explain", "describe the identity behind a check id");
    std::string check_id;
    explain->add_option("id", check_id, "check id, e.g. serre-radical or onh.tau-omega0")->required();

    // validate
    auto* val = app.add_subcommand("validate", "validate a datum config");
    add_common(val);

    // gram
    auto* gramcmd = app.add_subcommand("gram", "export the Gram matrix of a weight");
    std::string weight_text;
    add_common(gramcmd);
    gramcmd->add_option("--weight", weight_text, "weight, e.g. i:2,j:1")->required();
    gramcmd->add_option("--out", out_path, "output file (default: stdout)");
    int gram_height = 6;
    gramcmd->add_option("--max-height", gram_height, "height bound");

    // pair
    auto* pair = app.add_subcommand("pair", "compare a block dimension with the form series");
    std::string target_text, source_text;
    int order = 12;
    add_common(pair);
    pair->add_option("--target", target_text, "target sequence, e.g. \"i j\"")->required();
    pair->add_option("--source", source_text, "source sequence")->required();
    pair->add_option("--order", order, "series order");
    pair->add_option("--out", out_path, "output file");

    // serre-cat
    auto* scat = app.add_subcommand("serre-cat", "categorified quantum Serre dimension identity");
    std::string iname, jname;
    int scat_n = 1, scat_order = 10;
    add_common(scat);
    scat->add_option("--i", iname, "real vertex")->required();
    scat->add_option("--j", jname, "second vertex")->required();
    scat->add_option("--n", scat_n, "power of the second vertex");
    scat->add_option("--order", scat_order, "series order");
    scat->add_option("--out", out_path, "output file");

    // mackey
    auto* mackey = app.add_subcommand("mackey", "restriction-of-induction dimension identity");
    std::string nu_text, nu2_text, mu_text, mu2_text, iseq_text, jseq_text;
    int mackey_order = 12;
    add_common(mackey);
    mackey->add_option("--nu", nu_text)->required();
    mackey->add_option("--nu2", nu2_text)->required();
    mackey->add_option("--mu", mu_text)->required();
    mackey->add_option("--mu2", mu2_text)->required();
    mackey->add_option("--iseq", iseq_text, "sequence of weight mu")->required();
    mackey->add_option("--jseq", jseq_text, "sequence of weight mu2")->required();
    mackey->add_option("--order", mackey_order, "series order");
    mackey->add_option("--out", out_path, "output file");

    // trunc-dim
    auto* trunc = app.add_subcommand("trunc-dim", "graded dimension of an idempotent truncation");
    std::string kseq_text, e_expr;
    int trunc_order = 10;
    add_common(trunc);
    trunc->add_option("--kseq", kseq_text, "left idempotent sequence")->required();
    trunc->add_option("--e", e_expr, "idempotent, element grammar, e.g. \"x(1) t(1) e(i i)\"")
        ->required();
    trunc->add_option("--order", trunc_order, "series order");
    trunc->add_option("--out", out_path, "output file");

    // normalize
    auto* norm = app.add_subcommand("normalize", "straighten an element expression");
    std::string norm_expr;
    add_common(norm);
    norm->add_option("--expr", norm_expr, "element grammar over x(k), t(k), e(...)")->required();
    norm->add_option("--out", out_path, "output file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            Loaded l = load(config_path);
            cfg.datum_name = config_path;
            if (cfg.suites.empty() && run->count("--suite") == 0) cfg.suites = suite_registry();
            auto rep = run_suites(l.d, l.qt, l.gm, cfg);
            write_out(cfg.out_path, render_report(cfg, rep));
            std::cerr << "checks: " << rep.checks.size() << ", verdict: "
                      << (rep.all_pass ? "pass" : "fail") << ", wall: " << rep.total_millis
                      << " ms\n";
            return rep.all_pass ? 0 : 1;
        }
        if (explain->parsed()) {
            std::cout << explain_check(check_id) << "\n";
            return 0;
        }
        if (val->parsed()) {
            Loaded l = load(config_path);
            std::cout << "ok: " << l.d.size() << " vertices\n";
            return 0;
        }
        if (gramcmd->parsed()) {
            Loaded l = load(config_path);
            Weight nu = parse_weight(l.d, weight_text);
            auto g = gram(l.d, nu, gram_height);
            std::ostringstream out;
            out << "gram weight=" << weight_to_string(l.d, nu) << " size=" << g.words.size() << "\n";
            for (size_t r = 0; r < g.words.size(); ++r)
                out << "word " << r << " = " << seq_to_string(l.d, g.words[r]) << "\n";
            for (size_t r = 0; r < g.words.size(); ++r)
                for (size_t c = 0; c < g.words.size(); ++c)
                    out << "entry " << r << " " << c << " = " << g.entry[r][c].to_string() << "\n";
            write_out(out_path, out.str());
            return 0;
        }
        if (pair->parsed()) {
            Loaded l = load(config_path);
            Seq target = parse_seq(l.d, target_text), source = parse_seq(l.d, source_text);
            Weight nu = l.d.weight_of(target);
            auto rep = pairing_check(l.d, nu, target, source, order);
            std::ostringstream out;
            out << "pairing target=" << seq_to_string(l.d, target)
                << " source=" << seq_to_string(l.d, source) << " order=" << order
                << " orientation=" << rep.convention << "\n";
            out << "block series:\n" << series_table(rep.lhs);
            out << "form series:\n" << series_table(rep.rhs);
            out << "verdict=" << (rep.ok ? "pass" : "fail") << "\n";
            write_out(out_path, out.str());
            return rep.ok ? 0 : 1;
        }
        if (scat->parsed()) {
            Loaded l = load(config_path);
            auto rep = serre_categorified_check(l.d, l.qt, l.d.index_of(iname), l.d.index_of(jname),
                                                scat_n, scat_order);
            std::ostringstream out;
            out << "serre-cat i=" << iname << " j=" << jname << " n=" << scat_n << " m=" << rep.m
                << " order=" << scat_order << "\n";
            for (const auto& f : rep.failures) out << "mismatch " << f << "\n";
            out << "verdict=" << (rep.ok ? "pass" : "fail") << "\n";
            write_out(out_path, out.str());
            return rep.ok ? 0 : 1;
        }
        if (mackey->parsed()) {
            Loaded l = load(config_path);
            auto rep = mackey_dim_check(l.d, parse_weight(l.d, nu_text), parse_weight(l.d, nu2_text),
                                        parse_weight(l.d, mu_text), parse_weight(l.d, mu2_text),
                                        parse_seq(l.d, iseq_text), parse_seq(l.d, jseq_text),
                                        mackey_order);
            std::ostringstream out;
            out << "mackey order=" << mackey_order << "\n";
            out << "restricted-induction series:\n" << series_table(rep.lhs);
            out << "filtration series:\n" << series_table(rep.rhs);
            out << "verdict=" << (rep.ok ? "pass" : "fail") << "\n";
            write_out(out_path, out.str());
            return rep.ok ? 0 : 1;
        }
        if (trunc->parsed()) {
            Loaded l = load(config_path);
            QhsaElement e = parse_element(l.d, l.qt, e_expr);
            Seq kseq = parse_seq(l.d, kseq_text);
            Weight nu = l.d.weight_of(kseq);
            DimSeries s = idempotent_trunc_dim(l.d, l.qt, nu, kseq, e, trunc_order);
            std::ostringstream out;
            out << "trunc-dim kseq=" << seq_to_string(l.d, kseq) << " e=" << print_element(l.d, e)
                << "\n";
            out << series_table(s);
            write_out(out_path, out.str());
            return 0;
        }
        if (norm->parsed()) {
            Loaded l = load(config_path);
            QhsaElement e = parse_element(l.d, l.qt, norm_expr);
            write_out(out_path, print_element(l.d, e) + "\n");
            return 0;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
