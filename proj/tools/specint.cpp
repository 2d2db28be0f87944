// specint command-line front door.
//
// Subcommands: bounds, height, procedure, search, construct, verify, misint,
// fw-check, primes. Every subcommand emits a schema-versioned JSON report on
// stdout (or CSV rows with --csv where the output is tabular); randomized runs
// record their seed in the report.
//
// Exit codes: 0 = success / empty violations, 1 = verification failure
// (violations present), 2 = usage error (bad flags, unreadable input,
// precondition breach).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "specint/specint.hpp"

namespace {

using specint::Json;

// ---------------------------------------------------------------------------
// Small parsing / plumbing helpers
// ---------------------------------------------------------------------------

int env_threads() {
    const char* env = std::getenv("SPECINT_THREADS");
    if (!env || !*env) return 1;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 4096)
        throw std::invalid_argument("SPECINT_THREADS must be an integer in [1, 4096]");
    return static_cast<int>(v);
}

// "90" -> 90 s; suffixes: ms, s, m, h.
double parse_duration_seconds(const std::string& text) {
    size_t pos = 0;
    double value = 0;
    try {
        value = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad duration '" + text + "' (expect e.g. 60s, 500ms, 2m)");
    }
    std::string unit = text.substr(pos);
    double scale = 1.0;
    if (unit == "" || unit == "s")
        scale = 1.0;
    else if (unit == "ms")
        scale = 1e-3;
    else if (unit == "m")
        scale = 60.0;
    else if (unit == "h")
        scale = 3600.0;
    else
        throw std::invalid_argument("bad duration unit '" + unit + "' (use ms, s, m or h)");
    if (!(value >= 0)) throw std::invalid_argument("duration must be nonnegative");
    return value * scale;
}

// Nonnegative decimal literal ("0.15") as an exact rational (15/100).
specint::BigRat parse_decimal_rational(const std::string& text) {
    auto bad = [&] {
        throw std::invalid_argument("bad decimal '" + text + "' (expect digits[.digits])");
    };
    if (text.empty()) bad();
    std::string digits;
    int frac_len = 0;
    bool seen_dot = false;
    for (char c : text) {
        if (c == '.') {
            if (seen_dot) bad();
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            digits += c;
            if (seen_dot) ++frac_len;
        } else {
            bad();
        }
    }
    if (digits.empty()) bad();
    // strip leading zeros: cpp_int would read "015" as octal
    size_t nz = digits.find_first_not_of('0');
    digits = nz == std::string::npos ? "0" : digits.substr(nz);
    specint::BigInt num(digits);
    specint::BigInt den = 1;
    for (int i = 0; i < frac_len; ++i) den *= 10;
    return specint::BigRat(num, den);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << content;
    if (!os) throw std::runtime_error("write failed: " + path);
}

class Stopwatch {
  public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

// Shared report epilogue: stamp timing, emit, map violations to the exit code.
int finish(specint::ReportDocument& doc, const Stopwatch& sw,
           const std::optional<std::string>& out_path = std::nullopt) {
    doc.timing_ms = sw.ms();
    Json j = doc.to_json();
    if (out_path) {
        write_text_file(*out_path, j.dump(2) + "\n");
        std::cout << (doc.ok() ? "ok" : "FAIL") << ": report written to " << *out_path << "\n";
        for (const auto& v : doc.violations) std::cout << "violation: " << v << "\n";
    } else {
        print_json(j);
    }
    return doc.ok() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Subcommand options
// ---------------------------------------------------------------------------

struct BoundsOpts {
    int n = 0, l = 0;
    bool csv = false;
};

struct HeightOpts {
    std::string set_literal;
    int universe = 62;
    std::string dump_memo;
    bool json = false;
};

struct ProcedureOpts {
    std::string a_path, b_path, m_literal;
    std::string strategy = "first";
    std::string trace_path;
    bool json = false;
};

struct SearchOpts {
    int n = 0;
    std::string m_literal;
    std::string mode = "family";
    std::string time_limit = "60s";
    std::string out_path;
    uint64_t seed = 0;
    int restarts = 256;
    uint64_t node_limit = 0;  // 0 = unlimited
    bool no_diagonal = false;
    int uniform = -1;  // -1 = all sizes
};

struct ConstructOpts {
    std::string name;
    int n = 0, t = 0, d = 0;
    std::string out_path;
};

struct VerifyOpts {
    std::string suite;
    int max_n = -1;
    int samples = -1;
    uint64_t seed = 20260818;
    std::string time_limit = "60s";
    bool csv = false;
};

struct MisintOpts {
    long long n = 0, t = 0;
    std::string eps = "0.15";
    std::string gamma = "0.525";
    std::string out_path;
    bool csv = false;
};

struct FwCheckOpts {
    long long k = 0, t = 0;
};

struct PrimesOpts {
    uint64_t s = 0;
    std::string gamma = "0.525";
    bool csv = false;
};

// ---------------------------------------------------------------------------
// Subcommand bodies
// ---------------------------------------------------------------------------

int cmd_bounds(const BoundsOpts& o) {
    Stopwatch sw;
    specint::TwoBounds pair = specint::pair_product_bounds(o.n, o.l);
    specint::TwoBounds single = specint::single_family_bounds(o.n, o.l);
    if (o.csv) {
        std::cout << specint::csv_row({"n", "l", "pair_first_log2", "pair_second_log2",
                                       "pair_min_log2", "single_first_log2",
                                       "single_second_log2", "single_min_log2"});
        std::cout << specint::csv_row(
            {std::to_string(o.n), std::to_string(o.l),
             std::to_string(static_cast<double>(pair.first_log2)),
             std::to_string(static_cast<double>(pair.second_log2)),
             std::to_string(static_cast<double>(pair.min_log2)),
             std::to_string(static_cast<double>(single.first_log2)),
             std::to_string(static_cast<double>(single.second_log2)),
             std::to_string(static_cast<double>(single.min_log2))});
        return 0;
    }
    specint::ReportDocument doc;
    doc.command = "bounds";
    doc.inputs["n"] = o.n;
    doc.inputs["l"] = o.l;
    doc.results["pair_product"] = specint::bounds_to_json(pair);
    doc.results["single_family"] = specint::bounds_to_json(single);
    return finish(doc, sw);
}

int cmd_height(const HeightOpts& o) {
    Stopwatch sw;
    specint::IntSet L = specint::parse_intset(o.set_literal, o.universe);
    specint::HeightMemo memo;
    specint::HeightReport rep = specint::height_report(L, memo);
    if (!o.dump_memo.empty())
        write_text_file(o.dump_memo, specint::memo_to_json(memo).dump(2) + "\n");
    if (!o.json) {
        std::cout << "h=" << rep.h << "\n";
        return 0;
    }
    specint::ReportDocument doc;
    doc.command = "height";
    doc.inputs["set"] = specint::format_intset(L);
    doc.results = specint::height_report_to_json(rep);
    return finish(doc, sw);
}

int cmd_procedure(const ProcedureOpts& o) {
    Stopwatch sw;
    specint::Family A = specint::read_family_file(o.a_path);
    specint::Family B = specint::read_family_file(o.b_path);
    specint::IntSet M = specint::parse_intset(o.m_literal, A.n());
    specint::Strategy strat = specint::parse_strategy(o.strategy);
    specint::ProcedureTrace tr = specint::run_procedure({A, B}, M, strat);
    std::vector<std::string> audit = specint::verify_trace(tr);

    if (!o.trace_path.empty())
        write_text_file(o.trace_path, specint::trace_to_json(tr).dump(2) + "\n");

    specint::ReportDocument doc;
    doc.command = "procedure";
    doc.inputs["a"] = o.a_path;
    doc.inputs["b"] = o.b_path;
    doc.inputs["m"] = specint::format_intset(M);
    doc.inputs["strategy"] = o.strategy;
    doc.violations = audit;
    if (o.json) {
        doc.results["trace"] = specint::trace_to_json(tr);
        return finish(doc, sw);
    }
    std::cout << "steps=" << tr.steps.size() << " stop=" << to_string(tr.stop_reason)
              << " |F|=" << tr.F_final.size() << " |G|=" << tr.G_final.size()
              << " eps_steps=" << tr.c3_count() << " l(M)=" << M.length_l() << "\n";
    if (!o.trace_path.empty()) std::cout << "trace written to " << o.trace_path << "\n";
    if (audit.empty()) {
        std::cout << "audit: ok\n";
        return 0;
    }
    for (const auto& v : audit) std::cout << "violation: " << v << "\n";
    return 1;
}

int cmd_search(const SearchOpts& o, int threads) {
    Stopwatch sw;
    specint::IntSet M = specint::parse_intset(o.m_literal, o.n);
    specint::SearchConfig cfg;
    cfg.time_limit_seconds = parse_duration_seconds(o.time_limit);
    cfg.threads = threads;
    cfg.seed = o.seed;
    cfg.restarts = o.restarts;
    if (o.node_limit > 0) cfg.node_limit = o.node_limit;

    specint::ReportDocument doc;
    doc.command = "search";
    doc.inputs["n"] = o.n;
    doc.inputs["m"] = specint::format_intset(M);
    doc.inputs["mode"] = o.mode;
    doc.inputs["time_limit_seconds"] = cfg.time_limit_seconds;
    doc.inputs["threads"] = threads;
    doc.seed = o.seed;

    specint::SearchResult res;
    if (o.mode == "family") {
        std::optional<int> uniform;
        if (o.uniform >= 0) uniform = o.uniform;
        res = specint::max_family(o.n, M, cfg, !o.no_diagonal, uniform);
        doc.inputs["diagonal"] = !o.no_diagonal;
        if (uniform) doc.inputs["uniform"] = *uniform;
    } else if (o.mode == "pair") {
        if (o.no_diagonal || o.uniform >= 0)
            throw std::invalid_argument("--no-diagonal/--uniform apply to --mode family only");
        res = specint::max_pair_product(o.n, M, cfg);
    } else {
        throw std::invalid_argument("--mode must be 'family' or 'pair'");
    }
    doc.results = specint::search_result_to_json(res, o.mode == "pair");

    std::optional<std::string> out;
    if (!o.out_path.empty()) out = o.out_path;
    int rc = finish(doc, sw, out);
    if (out) {
        if (o.mode == "pair")
            std::cout << "best_product=" << res.best_product;
        else
            std::cout << "best_size=" << res.best_size;
        std::cout << " optimal=" << (res.optimal ? "true" : "false")
                  << " nodes=" << res.nodes_explored << "\n";
    }
    return rc;
}

int cmd_construct(const ConstructOpts& o) {
    Stopwatch sw;
    specint::ReportDocument doc;
    doc.command = "construct";
    doc.inputs["name"] = o.name;
    doc.inputs["n"] = o.n;

    auto emit_single = [&](const specint::Family& fam, const std::string& m_literal) {
        doc.results["size"] = fam.size();
        doc.results["m_literal"] = m_literal;
        if (o.out_path.empty()) {
            // no output file: print the family itself for piping
            std::cout << specint::family_to_string(fam);
            return 0;
        }
        specint::write_family_file(o.out_path, fam);
        doc.results["file"] = o.out_path;
        return finish(doc, sw);
    };

    if (o.name == "eventown") {
        specint::Family fam = specint::eventown(o.n);
        return emit_single(fam, "evens");
    }
    if (o.name == "katona") {
        doc.inputs["t"] = o.t;
        specint::Family fam = specint::katona_family(o.n, o.t);
        return emit_single(fam, specint::format_intset(specint::IntSet::interval(o.t + 1, o.n)));
    }
    if (o.name == "frankl") {
        doc.inputs["t"] = o.t;
        specint::Family fam = specint::frankl_family(o.n, o.t);
        specint::IntSet M = specint::IntSet::range(o.n);
        M.erase(o.t);
        return emit_single(fam, specint::format_intset(M));
    }
    if (o.name == "remark") {
        doc.inputs["d"] = o.d;
        specint::RemarkPair rp = specint::remark_pair(o.n, o.d);
        std::string prefix = o.out_path.empty() ? "remark" : o.out_path;
        std::string path_a = prefix + "_a.fam", path_b = prefix + "_b.fam";
        specint::write_family_file(path_a, rp.pair.a);
        specint::write_family_file(path_b, rp.pair.b);
        doc.results["file_a"] = path_a;
        doc.results["file_b"] = path_b;
        doc.results["size_a"] = rp.pair.a.size();
        doc.results["size_b"] = rp.pair.b.size();
        doc.results["m_literal"] = specint::format_intset(rp.M);
        doc.results["l_of_M"] = rp.M.length_l();
        return finish(doc, sw);
    }
    if (o.name == "interval-omit") {
        doc.inputs["t"] = o.t;
        specint::IntervalOmitSpec spec = specint::interval_omit_spec(o.n, o.t);
        doc.results["width"] = spec.width;
        doc.results["m_literal"] = specint::format_intset(spec.M);
        doc.results["excluded"] = specint::intset_to_json(spec.excluded);
        doc.results["l_of_M"] = spec.l_of_M;
        return finish(doc, sw);
    }
    throw std::invalid_argument(
        "unknown construction '" + o.name +
        "' (choose eventown, katona, frankl, remark or interval-omit)");
}

int cmd_verify(const VerifyOpts& o, int threads) {
    specint::SuiteParams params;
    params.max_n = o.max_n;
    params.samples = o.samples;
    params.seed = o.seed;
    params.search.threads = threads;
    params.search.time_limit_seconds = parse_duration_seconds(o.time_limit);

    std::vector<std::string> names;
    if (o.suite == "all")
        names = specint::suite_names();
    else
        names.push_back(o.suite);

    bool all_ok = true;
    Json docs = Json::array();
    if (o.csv) std::cout << specint::csv_row({"suite", "ok", "violations", "timing_ms"});
    for (const auto& name : names) {
        specint::ReportDocument doc = specint::run_suite(name, params);
        all_ok = all_ok && doc.ok();
        if (o.csv) {
            std::cout << specint::csv_row({name, doc.ok() ? "true" : "false",
                                           std::to_string(doc.violations.size()),
                                           std::to_string(doc.timing_ms)});
            for (const auto& v : doc.violations) std::cerr << name << ": " << v << "\n";
        } else {
            docs.push_back(doc.to_json());
        }
    }
    if (!o.csv) print_json(names.size() == 1 ? docs[0] : docs);
    return all_ok ? 0 : 1;
}

int cmd_misint(const MisintOpts& o) {
    Stopwatch sw;
    specint::BigRat eps = parse_decimal_rational(o.eps);
    specint::GammaExponent gamma = specint::parse_gamma(o.gamma);
    specint::MisintReport rep = specint::misint_bound(o.n, o.t, eps, gamma);

    if (o.csv) {
        std::cout << specint::csv_row({"k", "prime_found", "p", "t_k", "term_log2",
                                       "term_capped"});
        for (const auto& row : rep.per_k) {
            std::cout << specint::csv_row(
                {std::to_string(row.k), row.prime_found ? "true" : "false",
                 row.prime_found ? std::to_string(row.p) : "",
                 row.prime_found ? std::to_string(row.t_k) : "",
                 row.prime_found ? std::to_string(static_cast<double>(row.term_log2)) : "",
                 row.prime_found ? (row.term_capped ? "true" : "false") : ""});
        }
        return rep.all_primes_found && rep.all_t_k_in_range ? 0 : 1;
    }

    specint::ReportDocument doc;
    doc.command = "misint";
    doc.inputs["n"] = o.n;
    doc.inputs["t"] = o.t;
    doc.inputs["eps"] = o.eps;
    doc.inputs["gamma"] = o.gamma;
    doc.results = specint::misint_to_json(rep);
    if (!rep.all_primes_found)
        doc.violations.push_back("some middle-range k has no prime in its window");
    if (!rep.all_t_k_in_range)
        doc.violations.push_back("some t_k falls outside [t, t + ceil(n^gamma)]");
    std::optional<std::string> out;
    if (!o.out_path.empty()) out = o.out_path;
    return finish(doc, sw, out);
}

int cmd_fw_check(const FwCheckOpts& o) {
    Stopwatch sw;
    specint::GcdCondition cond = specint::fw_gcd_condition(o.k, o.t);
    specint::ReportDocument doc;
    doc.command = "fw-check";
    doc.inputs["k"] = o.k;
    doc.inputs["t"] = o.t;
    doc.results["holds"] = cond.holds;
    doc.results["gcd"] = cond.gcd_value.str();
    doc.results["k_minus_t_prime"] = specint::is_prime(static_cast<uint64_t>(o.k - o.t));
    if (!cond.holds)
        doc.violations.push_back("gcd of the t consecutive binomials is 1; condition fails");
    return finish(doc, sw);
}

int cmd_primes(const PrimesOpts& o) {
    Stopwatch sw;
    specint::GammaExponent gamma = specint::parse_gamma(o.gamma);
    std::optional<uint64_t> p = specint::prime_in_interval(o.s, gamma);
    if (o.csv) {
        std::cout << specint::csv_row({"s", "gamma", "prime_found", "p"});
        std::cout << specint::csv_row({std::to_string(o.s), o.gamma,
                                       p ? "true" : "false", p ? std::to_string(*p) : ""});
        return p ? 0 : 1;
    }
    specint::ReportDocument doc;
    doc.command = "primes";
    doc.inputs["s"] = o.s;
    doc.inputs["gamma"] = o.gamma;
    doc.results["prime_found"] = p.has_value();
    if (p) doc.results["p"] = *p;
    if (!p)
        doc.violations.push_back("no prime in the open interval (s - s^gamma, s) at s = " +
                                 std::to_string(o.s));
    return finish(doc, sw);
}

}  // namespace

// ---------------------------------------------------------------------------
// Wiring
// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
    CLI::App app{"specint: exact combinatorics of intersection-constrained set families"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", SPECINT_VERSION);

    int threads = 1;
    try {
        threads = env_threads();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    app.add_option("--threads", threads,
                   "worker cap for parallel search (default: SPECINT_THREADS or 1)")
        ->check(CLI::Range(1, 4096));

    BoundsOpts bo;
    auto* bounds = app.add_subcommand(
        "bounds", "closed-form pair/single size bounds in log2 space");
    bounds->add_option("--n", bo.n, "ground-set size")->required()->check(CLI::Range(1, 1 << 30));
    bounds->add_option("--l", bo.l, "longest run l(M)")->required()->check(CLI::Range(0, 1 << 30));
    bounds->add_flag("--csv", bo.csv, "CSV output");

    HeightOpts ho;
    auto* height = app.add_subcommand("height", "height of an integer set");
    height->add_option("--set", ho.set_literal, "IntSet literal, e.g. \"{0,1,5}\"")->required();
    height->add_option("--n", ho.universe, "universe bound for the literal (default 62)")
        ->check(CLI::Range(0, 62));
    height->add_option("--dump-memo", ho.dump_memo, "write the memo table as a JSON array");
    height->add_flag("--json", ho.json, "full JSON report instead of plain h=<int>");

    ProcedureOpts po;
    auto* procedure =
        app.add_subcommand("procedure", "run and audit the pair decomposition procedure");
    procedure->add_option("--a", po.a_path, "family file for side A")->required();
    procedure->add_option("--b", po.b_path, "family file for side B")->required();
    procedure->add_option("--m", po.m_literal, "allowed intersection sizes (IntSet literal)")
        ->required();
    procedure->add_option("--strategy", po.strategy, "vertex strategy: first | greedy")
        ->check(CLI::IsMember({"first", "greedy"}));
    procedure->add_option("--trace", po.trace_path, "write the full trace JSON to this file");
    procedure->add_flag("--json", po.json, "full JSON report on stdout");

    SearchOpts so;
    auto* search = app.add_subcommand("search", "exact maximum family / pair-product search");
    search->add_option("--n", so.n, "ground-set size")->required()->check(CLI::Range(0, 16));
    search->add_option("--m", so.m_literal, "allowed intersection sizes (IntSet literal)")
        ->required();
    search->add_option("--mode", so.mode, "family (max clique) or pair (max |A||B|)")
        ->check(CLI::IsMember({"family", "pair"}));
    search->add_option("--time-limit", so.time_limit, "search budget, e.g. 60s, 500ms, 2m");
    search->add_option("--out", so.out_path, "write the result JSON to this file");
    search->add_option("--seed", so.seed, "seed for heuristic restarts (pair mode)");
    search->add_option("--restarts", so.restarts, "hill-climb restarts (pair mode, n > 5)")
        ->check(CLI::Range(0, 1 << 20));
    search->add_option("--node-limit", so.node_limit, "stop after this many search nodes");
    search->add_flag("--no-diagonal", so.no_diagonal,
                     "drop the |S| in M membership rule (family mode)");
    search->add_option("--uniform", so.uniform, "restrict vertices to k-element subsets")
        ->check(CLI::Range(0, 16));

    ConstructOpts co;
    auto* construct = app.add_subcommand("construct", "materialize a named family");
    construct
        ->add_option("--name", co.name,
                     "eventown | katona | frankl | remark | interval-omit")
        ->required();
    construct->add_option("--n", co.n, "ground-set size")
        ->required()
        ->check(CLI::Range(0, 1 << 30));  // per-construction caps apply downstream
    construct->add_option("--t", co.t, "threshold (katona, frankl, interval-omit)");
    construct->add_option("--d", co.d, "divisor (remark)");
    construct->add_option("--out", co.out_path,
                          "output family file (remark: prefix for _a.fam/_b.fam)");

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify
        ->add_option("--suite", vo.suite,
                     "constants | axioms | p2 | sgall | procedure | fw | katona | eventown | "
                     "bhp | remark | all")
        ->required();
    verify->add_option("--max-n", vo.max_n, "override the suite's sweep bound");
    verify->add_option("--samples", vo.samples, "override the suite's sample count");
    verify->add_option("--seed", vo.seed, "seed for randomized suites (recorded in output)");
    verify->add_option("--time-limit", vo.time_limit, "per-search budget for oracle suites");
    verify->add_flag("--csv", vo.csv, "one CSV row per suite");

    MisintOpts mo;
    auto* misint = app.add_subcommand(
        "misint", "middle-range prime decomposition for the interval-omitting bound");
    misint->add_option("--n", mo.n, "ground-set size")->required();
    misint->add_option("--t", mo.t, "threshold")->required();
    misint->add_option("--eps", mo.eps, "hypothesis ratio (decimal, default 0.15)");
    misint->add_option("--gamma", mo.gamma, "window exponent (decimal, default 0.525)");
    misint->add_option("--out", mo.out_path, "write the report JSON to this file");
    misint->add_flag("--csv", mo.csv, "per-k CSV rows");

    FwCheckOpts fo;
    auto* fwc = app.add_subcommand("fw-check", "gcd condition on t consecutive binomials");
    fwc->add_option("--k", fo.k, "set size k")->required();
    fwc->add_option("--t", fo.t, "forbidden intersection t (requires k > 2t, t >= 1)")
        ->required();

    PrimesOpts pro;
    auto* primes = app.add_subcommand("primes", "largest prime in (s - s^gamma, s)");
    primes->add_option("--s", pro.s, "right endpoint (exclusive), s >= 3")->required();
    primes->add_option("--gamma", pro.gamma, "window exponent (decimal, default 0.525)");
    primes->add_flag("--csv", pro.csv, "CSV output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        std::cerr << "run 'specint --help' or 'specint <subcommand> --help'\n";
        return 2;
    }

    try {
        if (app.got_subcommand(bounds)) return cmd_bounds(bo);
        if (app.got_subcommand(height)) return cmd_height(ho);
        if (app.got_subcommand(procedure)) return cmd_procedure(po);
        if (app.got_subcommand(search)) return cmd_search(so, threads);
        if (app.got_subcommand(construct)) return cmd_construct(co);
        if (app.got_subcommand(verify)) return cmd_verify(vo, threads);
        if (app.got_subcommand(misint)) return cmd_misint(mo);
        if (app.got_subcommand(fwc)) return cmd_fw_check(fo);
        if (app.got_subcommand(primes)) return cmd_primes(pro);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;  // unreachable: require_subcommand guarantees a dispatch
}
