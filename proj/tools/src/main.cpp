#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <charmoments/analysis.hpp>
#include <charmoments/errors.hpp>
#include <charmoments/gram.hpp>
#include <charmoments/groups.hpp>
#include <charmoments/partition_count.hpp>
#include <charmoments/qmoments.hpp>
#include <charmoments/serialization.hpp>

namespace {

using namespace charmoments;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitRegime = 3;
constexpr int kExitResource = 4;
constexpr int kExitCheckFailed = 5;

void emit(const std::string& text, const std::string& out_path) {
    std::string payload = text;
    if (payload.empty() || payload.back() != '\n') payload += '\n';
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write to '" + out_path + "'");
    out << payload;
}

MomentSequence load_sequence(const std::string& path) {
    const std::string text = read_text_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw InvalidInput("file '" + path + "' is empty");
    return text[first] == '{' ? moment_sequence_from_json(text)
                              : moment_sequence_from_csv(text);
}

DpLimits dp_limits_from_env() {
    DpLimits limits;
    if (const char* raw = std::getenv("CHARMOMENTS_MEMORY_BUDGET_MB")) {
        const std::string text(raw);
        if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
            throw InvalidInput("CHARMOMENTS_MEMORY_BUDGET_MB must be a positive integer");
        limits.memory_budget_bytes = std::stoull(text) * 1024 * 1024;
        if (limits.memory_budget_bytes == 0)
            throw InvalidInput("CHARMOMENTS_MEMORY_BUDGET_MB must be a positive integer");
    }
    return limits;
}

std::string budget_mb_string(const DpLimits& limits) {
    return std::to_string(limits.memory_budget_bytes / (1024 * 1024));
}

struct MomentsQuantumArgs {
    std::string family;
    unsigned n = 2;
    int max_k = 16;
    std::string method = "count";
    bool cross_validate = false;
    std::string format = "json";
    std::string out;
};

int run_moments_quantum(const MomentsQuantumArgs& args) {
    std::string family_upper = args.family;
    std::transform(family_upper.begin(), family_upper.end(), family_upper.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    const QuantumModel model{parse_family(family_upper), args.n};

    QuantumEngine engine;
    const MomentSequence seq =
        args.cross_validate ? engine.cross_validate(model, args.max_k)
                            : engine.sequence(model, args.max_k,
                                              parse_moment_method(args.method));

    const ConfigMap config{
        {"command", "moments quantum"},
        {"family", family_name(model.family)},
        {"n", std::to_string(model.n)},
        {"max_k", std::to_string(args.max_k)},
        {"method", args.cross_validate ? "cross_validate" : args.method},
        {"format", args.format},
    };
    emit(args.format == "csv" ? to_csv(seq, config) : to_json(seq, config), args.out);
    return kExitOk;
}

struct MomentsGroupArgs {
    std::string preset;
    int max_k = 16;
    std::string format = "json";
    std::string out;
};

int run_moments_group(const MomentsGroupArgs& args) {
    const DpLimits limits = dp_limits_from_env();
    const auto model = parse_group_preset(args.preset);
    const MomentSequence seq = group_moment_sequence(*model, args.max_k, limits);

    const ConfigMap config{
        {"command", "moments group"},
        {"preset", args.preset},
        {"max_k", std::to_string(args.max_k)},
        {"memory_budget_mb", budget_mb_string(limits)},
        {"format", args.format},
    };
    emit(args.format == "csv" ? to_csv(seq, config) : to_json(seq, config), args.out);
    return kExitOk;
}

int run_check_convolution(const std::string& in, const std::string& out) {
    const MomentSequence seq = load_sequence(in);
    const ASequence a = to_A_sequence(seq);
    const ConvolutionReport report = check_convolution(a);
    const ConfigMap config{{"command", "check convolution"}, {"in", in}};
    emit(to_json(report, a, config), out);
    return (report.holds_a && report.holds_b) ? kExitOk : kExitCheckFailed;
}

int run_check_hankel(const std::string& in, const std::string& out) {
    const MomentSequence seq = load_sequence(in);
    const HankelReport report = check_hankel(seq);
    const ConfigMap config{{"command", "check hankel"}, {"in", in}};
    emit(to_json(report, config), out);
    return (report.psd_ok && report.logconvex_ok) ? kExitOk : kExitCheckFailed;
}

int run_check_monotone(const std::string& source, const std::string& target,
                       bool require_strict, const std::string& out) {
    const PushForwardReport report =
        compare_dominance(load_sequence(source), load_sequence(target));
    const ConfigMap config{
        {"command", "check monotone"},
        {"source", source},
        {"target", target},
        {"require_strict", require_strict ? "true" : "false"},
    };
    emit(to_json(report, config), out);
    const bool pass = report.monotone && (!require_strict || report.strict_found);
    return pass ? kExitOk : kExitCheckFailed;
}

int run_check_pushforward(const std::string& spec_path, int max_k, const std::string& out) {
    const DpLimits limits = dp_limits_from_env();
    const HomSpec spec = hom_spec_from_json(read_text_file(spec_path));
    const auto source = parse_group_preset(spec.source);
    const auto target = parse_group_preset(spec.target);
    const PushForwardReport report =
        push_forward_check(*source, *target, spec.images, max_k, limits);
    const ConfigMap config{
        {"command", "check pushforward"},
        {"spec", spec_path},
        {"max_k", std::to_string(max_k)},
        {"memory_budget_mb", budget_mb_string(limits)},
    };
    emit(to_json(report, config), out);
    return report.monotone ? kExitOk : kExitCheckFailed;
}

struct NormArgs {
    std::string in;
    bool certify = false;
    int horizon = 128;
    std::string plot;
    std::string out;
};

int run_norm(const NormArgs& args) {
    const MomentSequence seq = load_sequence(args.in);
    const NormEstimate estimate = estimate_norm(seq);

    std::optional<MinorantReport> certificate;
    if (args.certify)
        certificate = minorant_certificate(to_A_sequence(seq), args.horizon);

    const ConfigMap config{
        {"command", "norm"},
        {"in", args.in},
        {"certify", args.certify ? "true" : "false"},
        {"horizon", std::to_string(args.horizon)},
    };
    emit(norm_report_to_json(estimate, certificate ? &*certificate : nullptr, config),
         args.out);
    if (!args.plot.empty()) emit(norm_plot_csv(estimate, config), args.plot);
    if (args.certify && !certificate->certified) return kExitCheckFailed;
    return kExitOk;
}

struct DimsArgs {
    std::string word;
    std::string cls = "NC2C";
    unsigned n = 2;
    std::string method = "both";
    std::string out;
};

int run_dims(const DimsArgs& args) {
    const ColorWord word = ColorWord::parse(args.word);
    const PartitionClass cls = parse_partition_class(args.cls);

    std::optional<BigInt> count, rank;
    if (args.method == "count" || args.method == "both") {
        if (args.method == "count" || args.n >= basis_threshold(cls))
            count = dim_fixed_space(word, cls, args.n, DimMethod::count);
    }
    if (args.method == "rank" || args.method == "both")
        rank = dim_fixed_space(word, cls, args.n, DimMethod::rank);
    if (args.method != "count" && args.method != "rank" && args.method != "both")
        throw InvalidInput("unknown dims method '" + args.method + "'");

    const BigInt dim = rank ? *rank : *count;
    const ConfigMap config{
        {"command", "dims"},
        {"word", args.word},
        {"class", args.cls},
        {"n", std::to_string(args.n)},
        {"method", args.method},
    };
    emit(dims_to_json(word, cls, args.n, count, rank, dim, config), args.out);
    return kExitOk;
}

int run_verify_lemma(const std::string& word_text, const std::string& cls_text,
                     const std::string& out) {
    const ColorWord word = ColorWord::parse(word_text);
    const PartitionClass cls = parse_partition_class(cls_text);
    const BlockInequalityReport report = verify_block_inequality(word, cls);
    const ConfigMap config{
        {"command", "verify-lemma"},
        {"word", word_text},
        {"class", cls_text},
    };
    emit(to_json(report, config), out);
    return (report.holds && report.injective) ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact moment sequences of main characters: free quantum groups "
                 "(FU/FO/FS) and finitely generated discrete groups, with freeness "
                 "checks (Catalan-convolution dominance, growth certificates, "
                 "operator-norm estimation)."};
    app.require_subcommand(1);

    // moments
    auto* moments = app.add_subcommand("moments", "Compute a moment sequence");
    moments->require_subcommand(1);

    MomentsQuantumArgs mq;
    auto* quantum = moments->add_subcommand(
        "quantum", "Free quantum group characters; FU also covers FU(Q) for any "
                   "invertible Q (same fusion rules, hence same moments)");
    quantum->add_option("--family", mq.family, "fu, fo or fs")->required();
    quantum->add_option("--n", mq.n, "dimension parameter n")->required();
    quantum->add_option("--max-k", mq.max_k, "highest moment order");
    quantum->add_option("--method", mq.method, "count, rank or closed");
    quantum->add_flag("--cross-validate", mq.cross_validate,
                      "verify all applicable methods agree");
    quantum->add_option("--format", mq.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    quantum->add_option("--out", mq.out, "output file (default stdout)");

    MomentsGroupArgs mg;
    auto* group = moments->add_subcommand("group", "Discrete group walk moments");
    group->add_option("--preset", mg.preset,
                      "free:N, abelian:N, cyclic:M, freeprod:O1,O2,..., "
                      "product:A+B, table:FILE.json")
        ->required();
    group->add_option("--max-k", mg.max_k, "highest moment order");
    group->add_option("--format", mg.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    group->add_option("--out", mg.out, "output file (default stdout)");

    // check
    auto* check = app.add_subcommand("check", "Run a certification check");
    check->require_subcommand(1);

    std::string conv_in, conv_out;
    auto* conv = check->add_subcommand("convolution",
                                       "A-sequence conditions (a), (b), (c)");
    conv->add_option("--in", conv_in, "moment sequence file (json or csv)")->required();
    conv->add_option("--out", conv_out, "report file (default stdout)");

    std::string hank_in, hank_out;
    auto* hank = check->add_subcommand("hankel", "Hankel PSD and even log-convexity");
    hank->add_option("--in", hank_in, "moment sequence file (json or csv)")->required();
    hank->add_option("--out", hank_out, "report file (default stdout)");

    std::string mono_source, mono_target, mono_out;
    bool mono_strict = false;
    auto* mono = check->add_subcommand("monotone",
                                       "pointwise dominance of one sequence by another");
    mono->add_option("--source", mono_source, "dominated sequence file")->required();
    mono->add_option("--target", mono_target, "dominating sequence file")->required();
    mono->add_flag("--strict", mono_strict, "also require strict dominance somewhere");
    mono->add_option("--out", mono_out, "report file (default stdout)");

    std::string pf_spec, pf_out;
    int pf_max_k = 12;
    auto* pf = check->add_subcommand(
        "pushforward", "walk-count dominance along a generator map between groups");
    pf->add_option("--spec", pf_spec,
                   "JSON file {source, target, images} with signed generator words")
        ->required();
    pf->add_option("--max-k", pf_max_k, "highest moment order");
    pf->add_option("--out", pf_out, "report file (default stdout)");

    // norm
    NormArgs na;
    auto* norm = app.add_subcommand(
        "norm", "Operator-norm estimation from even moments (extrapolation is "
                "heuristic; only lower_bound is certified)");
    norm->add_option("--in", na.in, "moment sequence file (json or csv)")->required();
    norm->add_flag("--certify", na.certify,
                   "attach the exact growth-above-4 certificate for the A-sequence");
    norm->add_option("--horizon", na.horizon, "certificate horizon");
    norm->add_option("--plot", na.plot, "also write a plot-ready CSV (k,root,ratio,fit)");
    norm->add_option("--out", na.out, "report file (default stdout)");

    // dims
    DimsArgs da;
    auto* dims = app.add_subcommand("dims", "Fixed-space dimension for a color word");
    dims->add_option("--word", da.word, "color word over {1, c}, e.g. 1c1c")->required();
    dims->add_option("--class", da.cls, "NC, NC2 or NC2C");
    dims->add_option("--n", da.n, "dimension parameter n")->required();
    dims->add_option("--method", da.method, "count, rank or both");
    dims->add_option("--out", da.out, "report file (default stdout)");

    // verify-lemma
    std::string vl_word, vl_cls = "NC2C", vl_out;
    auto* verify = app.add_subcommand(
        "verify-lemma", "splitting inequality: nested counts never exceed the class count");
    verify->add_option("--word", vl_word, "color word of even length")->required();
    verify->add_option("--class", vl_cls, "NC, NC2 or NC2C");
    verify->add_option("--out", vl_out, "report file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (quantum->parsed()) return run_moments_quantum(mq);
        if (group->parsed()) return run_moments_group(mg);
        if (conv->parsed()) return run_check_convolution(conv_in, conv_out);
        if (hank->parsed()) return run_check_hankel(hank_in, hank_out);
        if (mono->parsed())
            return run_check_monotone(mono_source, mono_target, mono_strict, mono_out);
        if (pf->parsed()) return run_check_pushforward(pf_spec, pf_max_k, pf_out);
        if (norm->parsed()) return run_norm(na);
        if (dims->parsed()) return run_dims(da);
        if (verify->parsed()) return run_verify_lemma(vl_word, vl_cls, vl_out);
        std::cerr << "no subcommand given\n";
        return kExitInvalidInput;
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const RegimeError& e) {
        std::cerr << "regime violation: " << e.what() << "\n";
        return kExitRegime;
    } catch (const ResourceError& e) {
        std::cerr << "resource budget exceeded: " << e.what()
                  << " (attained k=" << e.attained_k << ")\n";
        return kExitResource;
    } catch (const std::logic_error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
