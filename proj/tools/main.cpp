#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nlfm/config.hpp"
#include "nlfm/csvio.hpp"
#include "nlfm/pipeline.hpp"

namespace {

struct CliArgs {
    std::string config_path;
    std::string out_dir = "out";
    std::string window;
    std::string emit = "waveform,acf,trace,summary";
    int max_iters = -1;  // -1 = not given
    int grid_k = -1;
};

struct EmitSet {
    bool waveform = false;
    bool acf = false;
    bool trace = false;
    bool summary = false;
};

EmitSet parse_emit(const std::string& list) {
    EmitSet emit;
    bool any = false;
    std::string token;
    std::stringstream ss(list);
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        if (token == "waveform") emit.waveform = true;
        else if (token == "acf") emit.acf = true;
        else if (token == "trace") emit.trace = true;
        else if (token == "summary") emit.summary = true;
        else throw nlfm::invalid_parameter("unknown --emit item: '" + token + "'");
        any = true;
    }
    if (!any) throw nlfm::invalid_parameter("--emit selects nothing");
    return emit;
}

nlfm::RunConfig assemble_config(const CliArgs& args) {
    nlfm::RunConfig config;
    if (!args.config_path.empty())
        nlfm::load_config_file(config, args.config_path);
    if (!args.window.empty())
        config.window = nlfm::default_window(nlfm::parse_window_kind(args.window));
    if (args.max_iters >= 0) config.stop.max_iterations = args.max_iters;
    if (args.grid_k >= 0) config.grid_size_k = args.grid_k;
    nlfm::validate(config);
    return config;
}

void write_window_outputs(const nlfm::WindowResult& result,
                          const nlfm::SummaryRecord& record,
                          const nlfm::DesignParams& params,
                          const std::string& dir, const EmitSet& emit) {
    if (emit.waveform)
        nlfm::write_file(dir + "/waveform.csv",
                         nlfm::waveform_csv(result.pia_waveform, params));
    if (emit.acf)
        nlfm::write_file(dir + "/acf.csv",
                         nlfm::acf_csv(result.pia_report.acf_db, params.sample_rate_fs));
    if (emit.trace)
        nlfm::write_file(dir + "/trace.csv", nlfm::trace_csv(result.trace));
    if (emit.summary) {
        nlfm::write_file(dir + "/summary.csv", nlfm::summary_csv(record));
        nlfm::write_file(dir + "/summary.txt", nlfm::summary_text(record));
    }
}

int cmd_design(const CliArgs& args) {
    const EmitSet emit = parse_emit(args.emit);
    const nlfm::RunConfig config = assemble_config(args);
    const nlfm::DesignParams params = config.design_params();
    const nlfm::WindowResult result =
        nlfm::run_window_design(params, config.window, config.stop);
    const nlfm::SummaryRecord record = nlfm::summarize(result);
    write_window_outputs(result, record, params, args.out_dir, emit);
    std::cout << nlfm::summary_text(record);
    return 0;
}

int cmd_compare(const CliArgs& args) {
    const EmitSet emit = parse_emit(args.emit);
    const nlfm::RunConfig config = assemble_config(args);
    const nlfm::DesignParams params = config.design_params();

    const nlfm::WindowKind kinds[] = {
        nlfm::WindowKind::RaisedCosine, nlfm::WindowKind::Taylor,
        nlfm::WindowKind::Chebyshev, nlfm::WindowKind::Kaiser};
    std::vector<nlfm::SummaryRecord> records;
    for (const auto kind : kinds) {
        const nlfm::WindowResult result = nlfm::run_window_design(
            params, nlfm::default_window(kind), config.stop);
        records.push_back(nlfm::summarize(result));
        write_window_outputs(result, records.back(), params,
                             args.out_dir + "/" + nlfm::window_kind_name(kind),
                             emit);
    }
    nlfm::write_file(args.out_dir + "/compare.csv", nlfm::compare_csv(records));
    nlfm::write_file(args.out_dir + "/compare.txt", nlfm::compare_text(records));
    std::cout << nlfm::compare_text(records);
    return 0;
}

int cmd_trace(const CliArgs& args) {
    const nlfm::RunConfig config = assemble_config(args);
    const nlfm::DesignParams params = config.design_params();
    const nlfm::WindowResult result =
        nlfm::run_window_design(params, config.window, config.stop);
    nlfm::write_file(args.out_dir + "/trace.csv", nlfm::trace_csv(result.trace));
    const auto& last = result.trace.records.back();
    std::cout << "iterations: " << last.r
              << "  final error_min: " << nlfm::format_sig12(last.error_min)
              << "  stop: " << nlfm::stop_reason_name(result.trace.stop_reason)
              << "\n";
    return 0;
}

void add_common_flags(CLI::App* sub, CliArgs& args, bool with_window,
                      bool with_emit) {
    sub->add_option("--config", args.config_path, "Key = value configuration file");
    sub->add_option("--out", args.out_dir, "Output directory (default: out)");
    sub->add_option("--max-iters", args.max_iters, "Maximum refinement iterations")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--k", args.grid_k,
                    "Spectral grid size (0 = smallest power of two >= 2N)")
        ->check(CLI::NonNegativeNumber);
    if (with_window)
        sub->add_option("--window", args.window,
                        "Window kind: raised-cosine, taylor, chebyshev, kaiser "
                        "(with its calibrated defaults)");
    if (with_emit)
        sub->add_option("--emit", args.emit,
                        "Comma list from: waveform, acf, trace, summary");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constant-amplitude NLFM waveform designer: spectral-shape "
                 "initialization plus iterative phase refinement"};
    app.require_subcommand(1);

    CliArgs args;
    CLI::App* design = app.add_subcommand(
        "design", "Design one waveform and export its artifacts");
    add_common_flags(design, args, true, true);
    CLI::App* compare = app.add_subcommand(
        "compare", "Run all four default windows and tabulate PSL improvements");
    add_common_flags(compare, args, false, true);
    CLI::App* trace = app.add_subcommand(
        "trace", "Export the per-iteration convergence record");
    add_common_flags(trace, args, true, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (design->parsed()) return cmd_design(args);
        if (compare->parsed()) return cmd_compare(args);
        if (trace->parsed()) return cmd_trace(args);
    } catch (const nlfm::invalid_parameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
