// certify: staged certification CLI.
//
//   certify run      [--stages LIST] [--golden DIR] [--cache DIR] [--jobs N]
//                    [--keep-going] [--report PATH]
//   certify instance --p INT --q INT [--golden DIR] [--report PATH]
//   certify dump     --object {E2|E3|F|f|disc|P6|P28} --out PATH
//                    [--golden DIR] [--cache DIR] [--jobs N]
//
// Exit code 0 iff the verdict is pass, 1 on verification failure, 2 on
// usage or data errors.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cuboid/pipeline.hpp"
#include "cuboid/polyjson.hpp"

namespace {

void print_stage_line(const cuboid::StageReport& rep) {
    std::size_t failed = 0;
    for (const auto& a : rep.assertions())
        if (!a.pass) ++failed;
    std::printf("%-24s %s  (%zu assertions, %zu failed, %lld ms)\n", rep.stage().c_str(),
                rep.passed() ? "pass" : "FAIL", rep.assertions().size(), failed,
                static_cast<long long>(rep.wall_ms));
    for (const auto& a : rep.assertions())
        if (!a.pass)
            std::printf("    ! %s: expected %s, got %s\n", a.name.c_str(), a.expected.c_str(),
                        a.got.c_str());
}

void write_report(const std::string& path, const nlohmann::ordered_json& j) {
    cuboid::write_text_file(path, j.dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certification pipeline for the quintic 5+5 splitting exclusion"};
    app.require_subcommand(1);

    std::string golden_dir = "data/golden";
    std::string cache_dir, report_path;
    unsigned jobs = 0;
    bool keep_going = false;
    std::vector<int> stage_list;

    auto* run = app.add_subcommand("run", "run the certification stages");
    run->add_option("--stages", stage_list, "subset of stages 0-8 (default: all)")
        ->delimiter(',');
    run->add_option("--golden", golden_dir, "golden data directory");
    run->add_option("--cache", cache_dir, "cache directory for heavy stage outputs");
    run->add_option("--jobs", jobs, "parallelism width (default: CERTIFY_JOBS or cores)");
    run->add_flag("--keep-going", keep_going, "continue past a failed stage");
    run->add_option("--report", report_path, "write the JSON certificate here");

    std::string p_str, q_str;
    auto* inst = app.add_subcommand("instance", "certify a concrete (p, q) instance");
    inst->add_option("--p", p_str, "p > 0")->required();
    inst->add_option("--q", q_str, "q > 0")->required();
    inst->add_option("--golden", golden_dir, "golden data directory");
    inst->add_option("--report", report_path, "write the JSON report here");

    std::string object_name, out_path;
    auto* dump = app.add_subcommand("dump", "write a computed object in polynomial format");
    dump->add_option("--object", object_name, "E2|E3|F|f|disc|P6|P28")->required();
    dump->add_option("--out", out_path, "output path")->required();
    dump->add_option("--golden", golden_dir, "golden data directory");
    dump->add_option("--cache", cache_dir, "cache directory");
    dump->add_option("--jobs", jobs, "parallelism width");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cuboid::GoldenData golden = cuboid::GoldenData::load(golden_dir);

        if (run->parsed()) {
            cuboid::RunConfig cfg;
            if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
            cfg.jobs = jobs;
            cfg.keep_going = keep_going;
            if (!stage_list.empty()) {
                cfg.stages.clear();
                for (int s : stage_list) {
                    if (s < 0 || s > 8) throw cuboid::DataError("stage out of range: " + std::to_string(s));
                    cfg.stages.insert(s);
                }
            }
            cuboid::Pipeline pipe(std::move(golden), cfg);
            cuboid::Certificate cert = pipe.run();
            for (const auto& rep : cert.stages) print_stage_line(rep);
            std::printf("verdict: %s\n", cert.verdict.c_str());
            if (!report_path.empty()) write_report(report_path, cert.to_json());
            return cert.verdict == "pass" ? 0 : 1;
        }

        if (inst->parsed()) {
            cuboid::StageReport rep = [&] {
                cuboid::CuboidInstance i(cuboid::Int::from_string(p_str),
                                         cuboid::Int::from_string(q_str));
                return cuboid::instance_check(golden, i);
            }();
            print_stage_line(rep);
            std::printf("%s\n", rep.passed()
                                    ? "verdict: no quintic 5+5 splitting of Q_{p,q}"
                                    : "verdict: certificate does not apply");
            if (!report_path.empty()) write_report(report_path, rep.to_json());
            return rep.passed() ? 0 : 1;
        }

        if (dump->parsed()) {
            cuboid::RunConfig cfg;
            if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
            cfg.jobs = jobs;
            cuboid::Pipeline pipe(std::move(golden), cfg);
            cuboid::write_text_file(out_path, cuboid::dump_object(pipe, object_name).dump() + "\n");
            std::printf("wrote %s to %s\n", object_name.c_str(), out_path.c_str());
            return 0;
        }
    } catch (const cuboid::InvalidInstance& e) {
        std::fprintf(stderr, "invalid instance: %s\n", e.what());
        return 2;
    } catch (const cuboid::DataError& e) {
        std::fprintf(stderr, "data error: %s\n", e.what());
        return 2;
    } catch (const cuboid::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
