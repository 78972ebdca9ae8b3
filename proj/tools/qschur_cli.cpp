// Command-line front end: exact census, structure-constant, certificate and
// verification runs over one job config. Exit codes: 0 pass, 1 check failure,
// 2 usage error.

#include "CLI11.hpp"
#include "qschur/verify.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace qschur;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_artifact(const std::string& dir, const std::string& name, const std::string& text) {
    std::filesystem::create_directories(dir);
    std::ofstream out(dir + "/" + name, std::ios::binary);
    out << text;
    std::cout << "wrote " << dir << "/" << name << "\n";
}

struct Options {
    std::string config_path;
    std::string out_dir = "out";
    std::string q0_str;
    int box = -1;
    std::string suite = "all";
    int jobs = 1;
    std::string manifest_path;
};

JobConfig load_config(const Options& opt, bool required = true) {
    JobConfig cfg;
    if (opt.config_path.empty()) {
        if (required) throw UsageError("this command needs --config");
        return cfg;
    }
    cfg = parse_config(read_file(opt.config_path));
    if (!opt.q0_str.empty()) {
        cfg.q0_list.clear();
        std::istringstream qs(opt.q0_str);
        std::string item;
        while (std::getline(qs, item, ',')) {
            Rational v = detail::parse_rational(item);
            if (v == 0) throw UsageError("q0 must be nonzero");
            cfg.q0_list.push_back(v);
        }
    }
    if (opt.box >= 0) cfg.box = opt.box;
    if (opt.jobs > 1) cfg.jobs = opt.jobs;
    return cfg;
}

std::string window_string(const JobConfig& cfg) {
    std::ostringstream os;
    os << cfg.datum->name() << " " << cfg.qf.to_string() << " box=" << cfg.box;
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact kernel for generalized finite and affine q-Schur algebras"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--config", opt.config_path, "job config file (key=value lines)");
    app.add_option("--out", opt.out_dir, "output directory");
    app.add_option("--q0", opt.q0_str, "comma-separated rational specializations");
    app.add_option("--box", opt.box, "lattice truncation box");
    app.add_option("--suite", opt.suite, "verify suite filter");
    app.add_option("--jobs", opt.jobs, "worker threads for table computations");
    app.add_option("--manifest", opt.manifest_path, "verify manifest file to check against");

    auto* cmd_census = app.add_subcommand("census", "orbit table and Steinberg census")->fallthrough();
    auto* cmd_schur = app.add_subcommand("schur", "finite q-Schur algebra")->fallthrough();
    auto* cmd_schur_consts = cmd_schur->add_subcommand("consts", "structure-constant table")->fallthrough();
    auto* cmd_schur_dim = cmd_schur->add_subcommand("dim", "basis cardinality")->fallthrough();
    cmd_schur->require_subcommand(1);
    auto* cmd_affine = app.add_subcommand("affine", "affine-engine certificates")->fallthrough();
    auto* cmd_sl2 = cmd_affine->add_subcommand("sl2-remark", "the rank-2 SL2 bimodule matrices")->fallthrough();
    auto* cmd_center = cmd_affine->add_subcommand("center-check", "central candidate commutation")->fallthrough();
    auto* cmd_free = cmd_affine->add_subcommand("freeness", "truncated basis independence")->fallthrough();
    cmd_affine->require_subcommand(1);
    auto* cmd_springer = app.add_subcommand("springer", "type-A fiber counts and irreducibles")->fallthrough();
    auto* cmd_counts = cmd_springer->add_subcommand("counts", "F_q point counts (CSV)")->fallthrough();
    auto* cmd_irreps = cmd_springer->add_subcommand("irreps", "irreducible dimension table")->fallthrough();
    cmd_springer->require_subcommand(1);
    auto* cmd_howe = app.add_subcommand("howe", "double centralizer verdicts")->fallthrough();
    auto* cmd_howe_check = cmd_howe->add_subcommand("check", "run the verdict")->fallthrough();
    cmd_howe->require_subcommand(1);
    auto* cmd_lang = app.add_subcommand("langlands", "dual-datum census reciprocity")->fallthrough();
    auto* cmd_lang_check = cmd_lang->add_subcommand("check", "run the comparison")->fallthrough();
    cmd_lang->require_subcommand(1);
    auto* cmd_verify = app.add_subcommand("verify", "run the invariant suites")->fallthrough();
    std::string verify_suite_pos;
    cmd_verify->add_option("suite", verify_suite_pos, "suite name or 'all'");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_census->parsed()) {
            JobConfig cfg = load_config(opt);
            OrbitTable t(cfg.datum, cfg.qf);
            Json j = census_json(t);
            write_artifact(opt.out_dir, "census.json", j.dump(2) + "\n");
            std::cout << "xi_total " << j["xi_total"] << "\n";
            return 0;
        }
        if (cmd_schur_consts->parsed()) {
            JobConfig cfg = load_config(opt);
            OrbitTable t(cfg.datum, cfg.qf);
            Json j = consts_json(t, cfg.jobs);
            write_artifact(opt.out_dir, "consts.json", j.dump(2) + "\n");
            std::cout << "dim " << j["dim"] << "\n";
            return 0;
        }
        if (cmd_schur_dim->parsed()) {
            JobConfig cfg = load_config(opt);
            OrbitTable t(cfg.datum, cfg.qf);
            std::cout << dim_schur(t) << "\n";
            return 0;
        }
        if (cmd_sl2->parsed()) {
            Sl2Remark r = sl2_remark_matrices();
            Json j = sl2_remark_json(r);
            write_artifact(opt.out_dir, "verdict.json", j.dump(2) + "\n");
            for (const auto& m : j["matrices"])
                std::cout << m["generator"].get<std::string>() << ": " << m["matrix"].dump()
                          << "\n";
            std::cout << "PASS\n";
            return 0;
        }
        if (cmd_center->parsed()) {
            JobConfig cfg = load_config(opt);
            if (!cfg.mu) throw UsageError("center-check needs mu=<weight> in the config");
            OrbitTable t(cfg.datum, cfg.qf);
            CenterReport rep = center_check(t, *cfg.mu, cfg.height);
            Json j = center_json(rep, window_string(cfg));
            write_artifact(opt.out_dir, "verdict.json", j.dump(2) + "\n");
            std::cout << (rep.pass ? "PASS" : "FAIL") << " (" << rep.generators_checked
                      << " generators)\n";
            return rep.pass ? 0 : 1;
        }
        if (cmd_free->parsed()) {
            JobConfig cfg = load_config(opt);
            OrbitTable t(cfg.datum, cfg.qf);
            bool all = true;
            Json arr = Json::array();
            for (uint32_t g = 0; g < t.num_orbits(); ++g) {
                FreenessReport rep = freeness_probe(t, g, cfg.box, cfg.q0_list.front());
                all = all && rep.pass;
                Json j = freeness_json(rep, window_string(cfg));
                j["gamma"] = t.orbit(g).label;
                arr.push_back(std::move(j));
            }
            write_artifact(opt.out_dir, "verdict.json", Json{{"freeness", arr}}.dump(2) + "\n");
            std::cout << (all ? "PASS" : "FAIL") << "\n";
            return all ? 0 : 1;
        }
        if (cmd_counts->parsed()) {
            JobConfig cfg = load_config(opt);
            int dmax = std::min(cfg.springer_d, 4);
            write_artifact(opt.out_dir, "fq_counts.csv", fq_counts_csv(dmax));
            return 0;
        }
        if (cmd_irreps->parsed()) {
            JobConfig cfg = load_config(opt);
            IrrepTable table = irreducible_dims(cfg.springer_n, cfg.springer_d);
            Json j = irreps_json(table);
            write_artifact(opt.out_dir, "irreps.json", j.dump(2) + "\n");
            std::cout << "wedderburn " << table.wedderburn_sum << " = dim "
                      << table.schur_dim << "\n";
            return 0;
        }
        if (cmd_howe_check->parsed()) {
            JobConfig cfg = load_config(opt);
            if (!cfg.qg) throw UsageError("howe check needs qg=<spec> in the config");
            OrbitTable tf(cfg.datum, cfg.qf);
            OrbitTable tg(cfg.datum, *cfg.qg);
            Json arr = Json::array();
            bool consistent = true;
            bool first_holds = false;
            for (size_t i = 0; i < cfg.q0_list.size(); ++i) {
                HoweVerdict v = double_centralizer_check(tf, tg, cfg.q0_list[i]);
                if (i == 0)
                    first_holds = v.holds;
                else if (v.holds != first_holds)
                    consistent = false;
                arr.push_back(howe_json(v));
            }
            Json j{{"verdicts", arr}, {"stable_across_q0", consistent}};
            write_artifact(opt.out_dir, "verdict.json", j.dump(2) + "\n");
            std::cout << (first_holds ? "holds" : "fails")
                      << (consistent ? "" : " (UNSTABLE across q0)") << "\n";
            return consistent ? 0 : 1;
        }
        if (cmd_lang_check->parsed()) {
            JobConfig cfg = load_config(opt);
            LanglandsReport rep = langlands_dim_check(cfg.datum, cfg.qf);
            write_artifact(opt.out_dir, "verdict.json", langlands_json(rep).dump(2) + "\n");
            std::cout << (rep.pass ? "PASS" : "FAIL") << " xi=" << rep.xi_primal << "\n";
            return rep.pass ? 0 : 1;
        }
        if (cmd_verify->parsed()) {
            std::string suite = verify_suite_pos.empty() ? opt.suite : verify_suite_pos;
            std::vector<std::string> file_manifest;
            const std::vector<std::string>* override_ptr = nullptr;
            if (!opt.manifest_path.empty()) {
                std::istringstream is(read_file(opt.manifest_path));
                std::string line;
                while (std::getline(is, line))
                    if (!line.empty()) file_manifest.push_back(line);
                override_ptr = &file_manifest;
            }
            VerifyReport rep = run_verify(suite, override_ptr);
            for (const auto& r : rep.results)
                std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name
                          << (r.detail.empty() ? "" : "  -- " + r.detail) << "\n";
            if (!rep.manifest_ok)
                std::cout << "[FAIL] manifest and registered checks diverge\n";
            write_artifact(opt.out_dir, "verify_report.json", verify_json(rep).dump(2) + "\n");
            std::cout << (rep.all_pass ? "PASS" : "FAIL") << " (" << rep.results.size()
                      << " checks)\n";
            return rep.all_pass ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "check failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
