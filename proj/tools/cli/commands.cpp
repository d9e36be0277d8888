#include "cli/commands.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wschatten/wschatten.hpp"

namespace wschatten::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunMetadata {
    std::string command_line;
    std::optional<std::uint64_t> seed;
    std::string timestamp;
    json tolerances = json::object();

    json to_json() const {
        return json{
            {"tool", "wschatten"},
            {"version", kToolVersion},
            {"command_line", command_line},
            {"seed", seed ? json(*seed) : json(nullptr)},
            {"timestamp", timestamp},
            {"prng", std::string(kPrngName)},
            {"tolerances", tolerances},
        };
    }
};

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string join_command_line(int argc, const char* const* argv) {
    std::string out;
    for (int i = 0; i < argc; ++i) {
        if (i > 0) out += ' ';
        out += argv[i];
    }
    return out;
}

// Shortest round-trip representation is not needed for CSV; 17 significant
// digits keep it exact and byte-stable.
std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot open output file: " + path);
    f << content;
    if (!f) throw UsageError("failed writing output file: " + path);
}

json quasi_norm_json(const QuasiNormResult& r) {
    return json{{"value", r.value},
                {"attaining_index", r.attaining_index},
                {"exponent_p", r.exponent_p},
                {"renormalized", r.renormalized}};
}

json exponents_json(const HolderExponents& e) {
    return json{{"p", e.p()}, {"q", e.q()}, {"r", e.r()}};
}

json report_json(const HolderReport& r) {
    return json{{"exponents", exponents_json(r.exponents)},
                {"norm_t", r.norm_t},
                {"norm_s", r.norm_s},
                {"norm_ts", r.norm_ts},
                {"ratio", r.ratio},
                {"sz_constant", r.sz_constant},
                {"classical_ok", r.classical_ok},
                {"renorm_ratio", r.renorm_ratio},
                {"renorm_ok", r.renorm_ok}};
}

json row_json(const SaturationRow& row) {
    return json{{"family", std::string(family_name(row.family))},
                {"n", row.n},
                {"exponents", exponents_json(row.exponents)},
                {"k0", row.k0},
                {"best_ratio", row.best_ratio},
                {"best_index", row.best_index},
                {"constant", row.constant},
                {"gap", row.gap}};
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

std::size_t parse_size(const std::string& text, const std::string& what) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &pos);
    } catch (const std::exception&) {
        throw UsageError(what + ": '" + text + "' is not a positive integer");
    }
    if (pos != text.size() || v == 0 || text.front() == '-') {
        throw UsageError(what + ": '" + text + "' is not a positive integer");
    }
    return static_cast<std::size_t>(v);
}

/// "a..b" expands to a, 2a, 4a, ... <= b; otherwise a comma-separated list.
std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> sizes;
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const std::size_t lo = parse_size(text.substr(0, dots), "--sizes");
        const std::size_t hi = parse_size(text.substr(dots + 2), "--sizes");
        if (lo > hi) throw UsageError("--sizes: range start exceeds end");
        for (std::size_t n = lo; n <= hi; n *= 2) sizes.push_back(n);
    } else {
        for (const auto& part : split(text, ',')) sizes.push_back(parse_size(part, "--sizes"));
    }
    if (sizes.empty()) throw UsageError("--sizes: no sizes given");
    for (std::size_t i = 1; i < sizes.size(); ++i) {
        if (sizes[i] <= sizes[i - 1]) throw UsageError("--sizes: sizes must be strictly ascending");
    }
    return sizes;
}

std::vector<Family> parse_families(const std::string& text) {
    std::vector<Family> families;
    for (const auto& part : split(text, ',')) {
        const auto f = parse_family(part);
        if (!f) {
            throw UsageError("--families: unknown family '" + part +
                             "'; valid families are commuting, pairing, pairing-best");
        }
        families.push_back(*f);
    }
    if (families.empty()) throw UsageError("--families: no family given");
    return families;
}

struct Context {
    std::ostream& out;
    std::ostream& err;
    RunMetadata meta;
};

// ---------------------------------------------------------------------------

struct NormsArgs {
    std::string input;
    double p = 0.0;
    bool renormalized = false;
};

int cmd_norms(Context& ctx, const NormsArgs& a) {
    const OperatorInput op = parse_operator_json(read_text_file(a.input));
    const bool is_matrix = std::holds_alternative<ComplexMatrix>(op);
    const SingularSpectrum spec =
        is_matrix ? from_matrix(std::get<ComplexMatrix>(op)) : std::get<SingularSpectrum>(op);
    const QuasiNormResult r = a.renormalized ? renorm_weak_norm(spec, a.p) : weak_norm(spec, a.p);
    json doc = quasi_norm_json(r);
    doc["input_kind"] = is_matrix ? "matrix" : "spectrum";
    doc["metadata"] = ctx.meta.to_json();
    ctx.out << doc.dump(2) << '\n';
    return kOk;
}

// ---------------------------------------------------------------------------

struct HolderArgs {
    double p = 0.0;
    double q = 0.0;
    std::size_t dim = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double tol = ToleranceDefaults{}.holder;
    std::string out_path;
};

int cmd_holder(Context& ctx, const HolderArgs& a) {
    if (a.dim < 1 || a.dim > 512) throw UsageError("--dim must be in [1, 512]");
    if (a.trials < 1) throw UsageError("--trials must be >= 1");
    const HolderExponents e = make_exponents(a.p, a.q);
    const RandomSeed base{a.seed};

    json reports = json::array();
    std::size_t violations = 0;
    std::size_t degenerate = 0;
    for (std::size_t i = 0; i < a.trials; ++i) {
        const RandomSeed seed_t = derive_seed(base, 2 * i);
        const RandomSeed seed_s = derive_seed(base, 2 * i + 1);
        json rec{{"trial", i},
                 {"seed", a.seed},
                 {"seed_t", seed_t.value},
                 {"seed_s", seed_s.value},
                 {"dimension", a.dim},
                 {"generator", "ginibre"}};
        const ProductSpectra spectra = product_spectra(random_ginibre(a.dim, seed_t), random_ginibre(a.dim, seed_s));
        try {
            const HolderReport r = holder_report(spectra, e, a.tol);
            rec.update(report_json(r));
            if (!r.classical_ok || !r.renorm_ok) {
                ++violations;
                ctx.err << "violation: trial " << i << " (seed " << a.seed << ", seed_t " << seed_t.value
                        << ", seed_s " << seed_s.value << ") ratio " << fmt_double(r.ratio) << " renorm_ratio "
                        << fmt_double(r.renorm_ratio) << '\n';
            }
        } catch (const InvalidInput& ex) {
            ++degenerate;
            rec["degenerate"] = true;
            rec["error"] = ex.what();
        }
        reports.push_back(std::move(rec));
    }

    json doc{{"metadata", ctx.meta.to_json()},
             {"exponents", exponents_json(e)},
             {"trials", a.trials},
             {"violations", violations},
             {"degenerate", degenerate},
             {"reports", std::move(reports)}};
    if (a.out_path.empty()) {
        ctx.out << doc.dump(2) << '\n';
    } else {
        write_file(a.out_path, doc.dump(2) + "\n");
        ctx.out << json{{"trials", a.trials}, {"violations", violations}, {"degenerate", degenerate},
                        {"report", a.out_path}}
                       .dump()
                << '\n';
    }
    return violations == 0 ? kOk : kViolation;
}

// ---------------------------------------------------------------------------

struct HornArgs {
    std::size_t dim = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double tol = ToleranceDefaults{}.horn;
};

int cmd_horn(Context& ctx, const HornArgs& a) {
    if (a.dim < 1 || a.dim > kHornMaxLength) {
        throw UsageError("--dim must be in [1, " + std::to_string(kHornMaxLength) + "] (horn_check size cap)");
    }
    if (a.trials < 1) throw UsageError("--trials must be >= 1");
    if (!(a.tol >= 0.0)) throw UsageError("--tol must be >= 0");
    const RandomSeed base{a.seed};

    std::size_t clean = 0;
    json offending = json::array();
    for (std::size_t i = 0; i < a.trials; ++i) {
        const RandomSeed seed_t = derive_seed(base, 2 * i);
        const RandomSeed seed_s = derive_seed(base, 2 * i + 1);
        const ProductSpectra spectra = product_spectra(random_ginibre(a.dim, seed_t), random_ginibre(a.dim, seed_s));
        const auto violations = horn_check(spectra.ts, spectra.t, spectra.s, a.tol);
        if (violations.empty()) {
            ++clean;
            continue;
        }
        const HornViolation& v = violations.front();
        ctx.err << "violation: trial " << i << " (seed " << a.seed << ", seed_t " << seed_t.value << ", seed_s "
                << seed_s.value << ") at (" << v.j << ", " << v.k << ")\n";
        offending.push_back(json{{"trial", i},
                                 {"seed_t", seed_t.value},
                                 {"seed_s", seed_s.value},
                                 {"count", violations.size()},
                                 {"first", {{"j", v.j}, {"k", v.k}, {"lhs", v.lhs}, {"rhs", v.rhs}}}});
    }
    json doc{{"metadata", ctx.meta.to_json()},
             {"dimension", a.dim},
             {"trials", a.trials},
             {"clean", clean},
             {"summary", std::to_string(clean) + "/" + std::to_string(a.trials) + " clean"},
             {"violating_trials", std::move(offending)}};
    ctx.out << doc.dump(2) << '\n';
    return clean == a.trials ? kOk : kViolation;
}

// ---------------------------------------------------------------------------

struct SaturateArgs {
    double p = 0.0;
    double q = 0.0;
    std::string sizes = "64..1048576";
    std::string families = "commuting,pairing,pairing-best";
    std::string k0_policy = "sqrt";
    std::string csv_path;
};

std::string sweep_csv(const RunMetadata& meta, const std::vector<SaturationRow>& rows) {
    std::ostringstream os;
    const json header = meta.to_json();
    for (const auto& [key, value] : header.items()) os << "# " << key << ": " << value.dump() << '\n';
    os << "family,n,p,q,r,k0,best_ratio,best_index,constant,gap\n";
    for (const auto& row : rows) {
        os << family_name(row.family) << ',' << row.n << ',' << fmt_double(row.exponents.p()) << ','
           << fmt_double(row.exponents.q()) << ',' << fmt_double(row.exponents.r()) << ',' << row.k0 << ','
           << fmt_double(row.best_ratio) << ',' << row.best_index << ',' << fmt_double(row.constant) << ','
           << fmt_double(row.gap) << '\n';
    }
    return os.str();
}

int cmd_saturate(Context& ctx, const SaturateArgs& a) {
    const HolderExponents e = make_exponents(a.p, a.q);
    const std::vector<std::size_t> sizes = parse_sizes(a.sizes);
    const std::vector<Family> families = parse_families(a.families);
    SweepOptions options;
    if (a.k0_policy != "sqrt") options.fixed_k0 = parse_size(a.k0_policy, "--k0-policy");

    const std::vector<SaturationRow> rows = saturation_sweep(e, sizes, families, options);
    const std::string csv = sweep_csv(ctx.meta, rows);

    json finals = json::array();
    for (const Family f : families) {
        for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
            if (it->family == f) {
                finals.push_back(json{{"family", std::string(family_name(f))},
                                      {"n", it->n},
                                      {"best_ratio", it->best_ratio},
                                      {"gap", it->gap}});
                break;
            }
        }
    }
    const json summary{{"constant", sz_constant(e)}, {"final", std::move(finals)}};
    if (a.csv_path.empty()) {
        ctx.out << csv;
        ctx.err << summary.dump() << '\n';
    } else {
        write_file(a.csv_path, csv);
        ctx.out << summary.dump() << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------------------

struct SearchArgs {
    double p = 0.0;
    double q = 0.0;
    std::size_t dim = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
};

int cmd_search(Context& ctx, const SearchArgs& a) {
    if (a.dim < 1 || a.dim > 512) throw UsageError("--dim must be in [1, 512]");
    if (a.trials < 1) throw UsageError("--trials must be >= 1");
    const HolderExponents e = make_exponents(a.p, a.q);
    json doc = row_json(random_ratio_search(e, a.dim, a.trials, RandomSeed{a.seed}));
    doc["trials"] = a.trials;
    doc["metadata"] = ctx.meta.to_json();
    ctx.out << doc.dump(2) << '\n';
    return kOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weak Schatten quasi-norms and noncommutative Hoelder inequality checks", "wschatten"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    const ToleranceDefaults defaults;

    NormsArgs norms;
    auto* norms_cmd = app.add_subcommand("norms", "Weak Schatten quasi-norm of a matrix or spectrum file");
    norms_cmd->add_option("input,--input", norms.input, "Matrix (object) or spectrum (array) JSON file")->required();
    norms_cmd->add_option("-p,--p", norms.p, "Exponent p > 0")->required();
    norms_cmd->add_flag("--renormalized", norms.renormalized, "Use sup (p t)^{1/p} mu(t) instead of sup t^{1/p} mu(t)");

    HolderArgs holder;
    auto* holder_cmd = app.add_subcommand("holder", "Verify both Hoelder forms on seeded Ginibre pairs");
    holder_cmd->add_option("-p,--p", holder.p, "Exponent p > 0")->required()->check(CLI::PositiveNumber);
    holder_cmd->add_option("-q,--q", holder.q, "Exponent q > 0")->required()->check(CLI::PositiveNumber);
    holder_cmd->add_option("--dim", holder.dim, "Matrix dimension")->required()->check(CLI::Range(1, 512));
    holder_cmd->add_option("--trials", holder.trials, "Number of pairs")->required()->check(CLI::PositiveNumber);
    holder_cmd->add_option("--seed", holder.seed, "Base seed")->required();
    holder_cmd->add_option("--tol", holder.tol, "Relative tolerance")->default_val(defaults.holder)->check(CLI::NonNegativeNumber);
    holder_cmd->add_option("--out", holder.out_path, "Report file (stdout when omitted)");

    HornArgs horn;
    auto* horn_cmd = app.add_subcommand("horn", "Check mu(j+k, TS) <= mu(j, T) mu(k, S) on seeded pairs");
    horn_cmd->add_option("--dim", horn.dim, "Matrix dimension")->required();
    horn_cmd->add_option("--trials", horn.trials, "Number of pairs")->required();
    horn_cmd->add_option("--seed", horn.seed, "Base seed")->required();
    horn_cmd->add_option("--tol", horn.tol, "Relative tolerance")->default_val(defaults.horn);

    SaturateArgs saturate;
    auto* saturate_cmd = app.add_subcommand("saturate", "Saturation sweep of the Hoelder ratio over operator rank");
    saturate_cmd->add_option("-p,--p", saturate.p, "Exponent p > 0")->required()->check(CLI::PositiveNumber);
    saturate_cmd->add_option("-q,--q", saturate.q, "Exponent q > 0")->required()->check(CLI::PositiveNumber);
    saturate_cmd->add_option("--sizes", saturate.sizes, "'lo..hi' (dyadic) or comma list")->capture_default_str();
    saturate_cmd->add_option("--families", saturate.families, "Comma list of commuting, pairing, pairing-best")
        ->capture_default_str();
    saturate_cmd->add_option("--k0-policy", saturate.k0_policy, "'sqrt' or a fixed target k0 for the pairing family")
        ->capture_default_str();
    saturate_cmd->add_option("--csv", saturate.csv_path, "CSV output file (stdout when omitted)");

    SearchArgs search;
    auto* search_cmd = app.add_subcommand("search", "Monte-Carlo lower bound on the optimal Hoelder constant");
    search_cmd->add_option("-p,--p", search.p, "Exponent p > 0")->required()->check(CLI::PositiveNumber);
    search_cmd->add_option("-q,--q", search.q, "Exponent q > 0")->required()->check(CLI::PositiveNumber);
    search_cmd->add_option("--dim", search.dim, "Matrix dimension")->required()->check(CLI::Range(1, 512));
    search_cmd->add_option("--trials", search.trials, "Number of trials")->required()->check(CLI::PositiveNumber);
    search_cmd->add_option("--seed", search.seed, "Base seed")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    Context ctx{out, err, RunMetadata{join_command_line(argc, argv), std::nullopt, utc_timestamp()}};
    try {
        if (*norms_cmd) return cmd_norms(ctx, norms);
        if (*holder_cmd) {
            ctx.meta.seed = holder.seed;
            ctx.meta.tolerances = {{"holder", holder.tol}};
            return cmd_holder(ctx, holder);
        }
        if (*horn_cmd) {
            ctx.meta.seed = horn.seed;
            ctx.meta.tolerances = {{"horn", horn.tol}};
            return cmd_horn(ctx, horn);
        }
        if (*saturate_cmd) {
            ctx.meta.tolerances = {{"ratio_bound", kRatioBoundSlack}};
            return cmd_saturate(ctx, saturate);
        }
        if (*search_cmd) {
            ctx.meta.seed = search.seed;
            ctx.meta.tolerances = {{"ratio_bound", kRatioBoundSlack}};
            return cmd_search(ctx, search);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const NumericFailure& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kNumericFailure;
    }
    return kUsageError;
}

} // namespace wschatten::cli
