#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dslv/asymptotics.hpp"
#include "dslv/parallel.hpp"
#include "dslv/recurrence.hpp"
#include "dslv/representation.hpp"
#include "dslv/spectral.hpp"
#include "output.hpp"
#include "suites.hpp"

namespace dslv::cli {

namespace {

struct CommonOpts {
    std::string out = "-";
    std::string format = "csv";
    unsigned jobs = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->set_help_flag("--help", "Print this help message and exit");
    cmd->add_option("--out", o.out, "Output path, '-' for stdout")->capture_default_str();
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    cmd->add_option("--jobs", o.jobs, "Worker threads, 0 for all processors (DSLV_JOBS overrides)");
}

unsigned resolve_jobs(unsigned flag) {
    if (const char* env = std::getenv("DSLV_JOBS")) {
        unsigned v = 0;
        const std::string_view s(env);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc{} && ptr == s.data() + s.size() && v > 0) return v;
        fail(ErrorKind::invalid_argument, "DSLV_JOBS must be a positive integer");
    }
    return flag > 0 ? flag : default_jobs();
}

std::vector<double> parse_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = std::min(text.find(',', pos), text.size());
        const std::string_view item(text.data() + pos, comma - pos);
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size() || !std::isfinite(v))
            fail(ErrorKind::invalid_argument, std::string(what) + ": cannot parse '" + std::string(item) + "'");
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

Json json_list(const std::vector<double>& v) {
    Json a = Json::array();
    for (double x : v) a.push_back(x);
    return a;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------------------
// Problem assembly shared by solve and eigen.

struct ProblemOpts {
    Index a = 1;
    Index b = 1;
    std::optional<double> h;
    double k = 0.0;
    std::optional<double> alpha;
    std::string q;
    std::string p = "const:1";
    std::string r = "const:1";
};

void add_problem_options(CLI::App* cmd, ProblemOpts& o) {
    cmd->set_help_flag("--help", "Print this help message and exit");
    cmd->add_option("--a", o.a, "Left endpoint a (>= 0)")->capture_default_str();
    cmd->add_option("--b", o.b, "Right endpoint b (>= a)")->required();
    cmd->add_option("--h", o.h, "Left boundary parameter: x(a-1) + h x(a) = 0 (default 0)");
    cmd->add_option("--k", o.k, "Right boundary parameter: x(b+1) + k x(b) = 0")->capture_default_str();
    cmd->add_option("--alpha", o.alpha, "Left boundary angle in (0, pi); sets h = cot(alpha)/p(a) - 1");
    cmd->add_option("--q", o.q, "Potential: const:<c> | decay:<c> | random:<seed>,<lo>,<hi> | file:<path>")->required();
    cmd->add_option("--p", o.p, "Coefficient p on [a-1, end] (same grammar)")->capture_default_str();
    cmd->add_option("--r", o.r, "Weight r on [a, end] (same grammar)")->capture_default_str();
}

struct BuiltProblem {
    ProblemSpec spec;
    PotentialSpec q, p, r;
};

BuiltProblem build_problem(const ProblemOpts& o, Index last) {
    const auto qs = PotentialSpec::parse(o.q);
    const auto ps = PotentialSpec::parse(o.p);
    const auto rs = PotentialSpec::parse(o.r);
    if (o.a < 0 || o.a > o.b) fail(ErrorKind::invalid_argument, "grid requires 0 <= a <= b");
    Coefficients coeff{ps.generate(o.a - 1, last), qs.generate(o.a, last), rs.generate(o.a, last)};
    double h = o.h.value_or(0.0);
    if (o.alpha && !o.h) h = alpha_to_h(*o.alpha, coeff.p.at(o.a));
    ProblemSpec spec{GridSpec{o.a, o.b}, std::move(coeff), BoundaryData{h, o.k, o.alpha}};
    spec.validate();
    return {std::move(spec), qs, ps, rs};
}

Json problem_manifest(const ProblemOpts& o, const BuiltProblem& bp) {
    Json m;
    m["a"] = o.a;
    m["b"] = o.b;
    m["h"] = bp.spec.boundary.h;
    m["k"] = o.k;
    m["alpha"] = o.alpha ? Json(*o.alpha) : Json(nullptr);
    m["q"] = bp.q.to_string();
    m["p"] = bp.p.to_string();
    m["r"] = bp.r.to_string();
    return m;
}

// ---------------------------------------------------------------------------

struct SolveOpts {
    CommonOpts common;
    ProblemOpts problem;
    double lambda = 0.0;
    std::string init = "x";
    std::optional<Index> horizon;
};

int cmd_solve(const SolveOpts& o) {
    const Index horizon = o.horizon.value_or(o.problem.b + 1);
    if (horizon < o.problem.b + 1) fail(ErrorKind::invalid_argument, "--horizon must be at least b+1");
    const auto bp = build_problem(o.problem, horizon - 1);
    const InitKind kind = o.init == "x" ? InitKind::x : o.init == "y" ? InitKind::y : InitKind::s;
    const auto x = forward_recurrence(bp.spec, o.lambda, kind, horizon);
    for (double v : x.values())
        if (!std::isfinite(v)) fail(ErrorKind::numeric, "solution overflowed; shorten --horizon");

    Json opts = problem_manifest(o.problem, bp);
    opts["lambda"] = o.lambda;
    opts["init"] = o.init;
    opts["horizon"] = horizon;
    opts["format"] = o.common.format;
    const Json manifest = make_manifest("solve", opts);

    if (o.common.format == "json") {
        Json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["manifest"] = manifest;
        Json rows = Json::array();
        for (Index n = x.first(); n <= x.last(); ++n) rows.push_back(Json{{"n", n}, {"value", x[n]}});
        doc["rows"] = std::move(rows);
        write_output(o.common.out, doc.dump(2) + "\n");
    } else {
        CsvTable t({"n", "value"});
        t.add_comment("manifest", manifest);
        for (Index n = x.first(); n <= x.last(); ++n) t.add_row({std::to_string(n), format_number(x[n])});
        write_output(o.common.out, t.str());
    }
    return kSuccess;
}

// ---------------------------------------------------------------------------

struct ReprOpts {
    CommonOpts common;
    int trials = 100;
    std::uint64_t seed = 1;
    std::string lambda_set = "0.5,1.7,2.5,3.5";
    std::string h_set = "-2,0,1";
    Index N = 200;
    double tol = 1e-9;
    std::optional<std::string> q;
};

int cmd_repr_check(const ReprOpts& o) {
    ReprCheckConfig cfg;
    cfg.trials = o.trials;
    cfg.seed = o.seed;
    cfg.lambdas = parse_list(o.lambda_set, "--lambda-set");
    cfg.hs = parse_list(o.h_set, "--h-set");
    cfg.N = o.N;
    cfg.tol = o.tol;
    if (o.q) cfg.q = PotentialSpec::parse(*o.q);
    cfg.jobs = resolve_jobs(o.common.jobs);
    const auto rows = run_repr_check(cfg);

    double worst = 0.0;
    std::size_t failures = 0;
    for (const auto& r : rows) {
        worst = std::max(worst, r.max_deviation);
        if (!r.pass) ++failures;
    }
    Json opts;
    opts["trials"] = o.trials;
    opts["seed"] = o.seed;
    opts["lambda_set"] = json_list(cfg.lambdas);
    opts["h_set"] = json_list(cfg.hs);
    opts["n"] = o.N;
    opts["tol"] = o.tol;
    opts["q"] = cfg.q ? Json(cfg.q->to_string()) : Json("random:<seed+trial>,-1,1");
    opts["format"] = o.common.format;
    const Json manifest = make_manifest("repr-check", opts);
    Json summary{{"rows", rows.size()}, {"failures", failures}, {"max_deviation", worst},
                 {"status", failures == 0 ? "PASS" : "FAIL"}};

    if (o.common.format == "json") {
        Json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["manifest"] = manifest;
        doc["summary"] = summary;
        Json arr = Json::array();
        for (const auto& r : rows) {
            arr.push_back(Json{{"trial", r.trial},
                               {"kind", std::string(1, r.kind)},
                               {"lambda", r.lambda},
                               {"h", r.h ? Json(*r.h) : Json(nullptr)},
                               {"q", r.potential},
                               {"max_deviation", r.max_deviation},
                               {"pass", r.pass}});
        }
        doc["rows"] = std::move(arr);
        write_output(o.common.out, doc.dump(2) + "\n");
    } else {
        CsvTable t({"trial", "kind", "lambda", "h", "q", "max_deviation", "pass"});
        t.add_comment("manifest", manifest);
        t.add_comment("summary", summary);
        for (const auto& r : rows) {
            t.add_row({std::to_string(r.trial), std::string(1, r.kind), format_number(r.lambda),
                       r.h ? format_number(*r.h) : "", r.potential, format_number(r.max_deviation), yes_no(r.pass)});
        }
        write_output(o.common.out, t.str());
    }
    std::cerr << "repr-check: " << summary["status"].get<std::string>() << " (max deviation "
              << format_number(worst) << ", tol " << format_number(o.tol) << ")\n";
    return failures == 0 ? kSuccess : kCheckFailed;
}

// ---------------------------------------------------------------------------

struct EigenOpts {
    CommonOpts common;
    ProblemOpts problem;
    std::string method = "both";
    double tol = 1e-10;
    bool vectors = false;
};

int cmd_eigen(const EigenOpts& o) {
    if (!(o.tol > 0.0)) fail(ErrorKind::invalid_argument, "--tol must be positive");
    const auto bp = build_problem(o.problem, o.problem.b);
    const auto& spec = bp.spec;

    std::vector<double> values;
    std::vector<double> shooting;
    std::string note;
    Method used = Method::sturm_bisection;
    std::optional<SpectrumReport> report;

    if (o.method == "both") {
        report = cross_validate(spec, o.tol);
        values = report->sturm;
        shooting = report->shooting;
        note = report->shooting_note;
    } else if (o.method == "shooting") {
        try {
            values = eigenvalues_shooting(spec, o.tol);
            used = Method::shooting;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::numeric) throw;
            note = std::string(e.what()) + "; falling back to Sturm bisection";
            values = eigenvalues_bisection(assemble_operator(spec), o.tol);
        }
    } else {
        values = eigenvalues_bisection(assemble_operator(spec), o.tol);
    }
    if (!note.empty()) std::cerr << "eigen: " << note << "\n";

    std::vector<EigenPair> pairs;
    if (o.vectors) {
        if (report) pairs = report->pairs;
        else
            for (double ev : values) pairs.push_back(eigenvector(spec, ev, used));
    }

    Json opts = problem_manifest(o.problem, bp);
    opts["method"] = o.method;
    opts["tol"] = o.tol;
    opts["vectors"] = o.vectors;
    opts["format"] = o.common.format;
    const Json manifest = make_manifest("eigen", opts);

    Json cross;
    if (report) {
        cross["shooting_ok"] = report->shooting_ok;
        cross["max_deviation"] = report->shooting_ok ? Json(report->max_deviation) : Json(nullptr);
        cross["max_orthogonality"] = report->max_orthogonality;
        cross["max_boundary_defect"] = report->max_boundary_defect;
        cross["min_gap"] = report->gaps.empty() ? Json(nullptr)
                                                : Json(*std::min_element(report->gaps.begin(), report->gaps.end()));
        Json outside = Json::array();
        for (std::size_t j = 0; j < values.size(); ++j)
            if (report->outside_closed_disc[j]) outside.push_back(j);
        cross["outside_0_4"] = outside;
    }
    if (!note.empty()) cross["note"] = note;

    const bool with_shooting = report && report->shooting_ok;
    if (o.common.format == "json") {
        Json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["manifest"] = manifest;
        doc["method"] = o.method == "both" ? "both" : to_string(used);
        Json ev = Json::array();
        for (std::size_t j = 0; j < values.size(); ++j) {
            Json e{{"index", j}, {"lambda", values[j]}};
            if (with_shooting) e["lambda_shooting"] = shooting[j];
            if (o.vectors) {
                Json comp = Json::array();
                for (double v : pairs[j].vector.values()) comp.push_back(v);
                e["vector_start"] = pairs[j].vector.first();
                e["vector"] = std::move(comp);
                e["boundary_defect"] = pairs[j].boundary_defect;
            }
            ev.push_back(std::move(e));
        }
        doc["eigenvalues"] = std::move(ev);
        if (!cross.empty()) doc["cross_validation"] = cross;
        write_output(o.common.out, doc.dump(2) + "\n");
    } else {
        std::vector<std::string> header{"index", "lambda"};
        if (with_shooting) header.push_back("lambda_shooting");
        if (o.vectors) {
            header.push_back("n");
            header.push_back("value");
        }
        CsvTable t(header);
        t.add_comment("manifest", manifest);
        if (!cross.empty()) t.add_comment("cross_validation", cross);
        for (std::size_t j = 0; j < values.size(); ++j) {
            std::vector<std::string> base{std::to_string(j), format_number(values[j])};
            if (with_shooting) base.push_back(format_number(shooting[j]));
            if (!o.vectors) {
                t.add_row(base);
                continue;
            }
            const auto& v = pairs[j].vector;
            for (Index n = v.first(); n <= v.last(); ++n) {
                auto row = base;
                row.push_back(std::to_string(n));
                row.push_back(format_number(v[n]));
                t.add_row(std::move(row));
            }
        }
        write_output(o.common.out, t.str());
    }
    return kSuccess;
}

// ---------------------------------------------------------------------------

struct IdentityOpts {
    CommonOpts common;
    std::string which = "all";
    int trials = 100;
    std::uint64_t seed = 1;
    Index steps = 50;
    double tol = 1e-10;
};

int cmd_identity_check(const IdentityOpts& o) {
    if (o.trials < 1) fail(ErrorKind::invalid_argument, "--trials must be at least 1 (empty suite)");
    std::vector<IdentityRow> rows;
    auto append = [&](std::vector<IdentityRow> r) { rows.insert(rows.end(), r.begin(), r.end()); };
    if (o.which == "casoratian" || o.which == "all") append(casoratian_suite(o.trials, o.seed, o.steps, o.tol));
    if (o.which == "sbp" || o.which == "all") append(sbp_suite(o.trials, o.seed));
    if (o.which == "telescope" || o.which == "all") append(telescope_suite(o.trials, o.seed));

    Json per = Json::object();
    bool all_pass = true;
    for (const auto& r : rows) {
        auto& e = per[r.identity];
        if (e.is_null()) e = Json{{"trials", 0}, {"failures", 0}, {"max_error", 0.0}};
        e["trials"] = e["trials"].get<int>() + 1;
        if (!r.pass) e["failures"] = e["failures"].get<int>() + 1;
        e["max_error"] = std::max(e["max_error"].get<double>(), r.max_error);
        all_pass = all_pass && r.pass;
    }
    for (auto& [name, e] : per.items()) e["status"] = e["failures"].get<int>() == 0 ? "PASS" : "FAIL";

    Json opts{{"which", o.which}, {"trials", o.trials}, {"seed", o.seed}, {"steps", o.steps}, {"tol", o.tol},
              {"format", o.common.format}};
    const Json manifest = make_manifest("identity-check", opts);

    if (o.common.format == "json") {
        Json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["manifest"] = manifest;
        doc["summary"] = per;
        Json arr = Json::array();
        for (const auto& r : rows)
            arr.push_back(Json{{"identity", r.identity}, {"trial", r.trial}, {"detail", r.detail},
                               {"max_error", r.max_error}, {"pass", r.pass}});
        doc["rows"] = std::move(arr);
        write_output(o.common.out, doc.dump(2) + "\n");
    } else {
        CsvTable t({"identity", "trial", "detail", "max_error", "pass"});
        t.add_comment("manifest", manifest);
        t.add_comment("summary", per);
        for (const auto& r : rows)
            t.add_row({r.identity, std::to_string(r.trial), r.detail, format_number(r.max_error), yes_no(r.pass)});
        write_output(o.common.out, t.str());
    }
    for (auto& [name, e] : per.items())
        std::cerr << "identity-check " << name << ": " << e["status"].get<std::string>() << "\n";
    return all_pass ? kSuccess : kCheckFailed;
}

// ---------------------------------------------------------------------------

struct ScanOpts {
    CommonOpts common;
    std::string mode;
    std::string lambda_grid;
    std::string h_grid = "100,10000";
    Index N = 10000;
    std::vector<std::string> families{"const:0"};
    double stab_ratio = 1.05;
    std::optional<std::string> summary;
};

int cmd_scan(const ScanOpts& o) {
    ScanConfig cfg;
    cfg.lambda_grid = parse_list(o.lambda_grid, "--lambda-grid");
    cfg.h_grid = parse_list(o.h_grid, "--h-grid");
    cfg.horizon = o.N;
    for (const auto& f : o.families) cfg.families.push_back(PotentialSpec::parse(f));
    cfg.stabilization_ratio = o.stab_ratio;
    cfg.jobs = resolve_jobs(o.common.jobs);
    for (double l : cfg.lambda_grid)
        if (!(l > 0.0 && l < 4.0))
            std::cerr << "scan: warning: lambda = " << format_number(l) << " lies outside (0, 4); row flagged outside_disc\n";

    const bool h_mode = o.mode == "h-growth";
    const EstimateReport rep = h_mode ? scan_h_growth(cfg) : scan_y_bound(cfg);

    auto count = [](const auto& rows) {
        std::size_t pass = 0;
        for (const auto& r : rows) pass += r.pass ? 1 : 0;
        return Json{{"rows", rows.size()}, {"pass", pass}, {"fail", rows.size() - pass}};
    };
    Json fams = Json::array();
    for (const auto& f : cfg.families) fams.push_back(f.to_string());
    Json opts{{"mode", o.mode},
              {"lambda_grid", json_list(cfg.lambda_grid)},
              {"h_grid", json_list(cfg.h_grid)},
              {"n", o.N},
              {"q_family", fams},
              {"stab_ratio", o.stab_ratio},
              {"h_ratio_tolerance", cfg.h_ratio_tolerance},
              {"format", o.common.format}};
    const Json manifest = make_manifest("scan", opts);
    Json summary;
    summary["schema_version"] = kSchemaVersion;
    summary["manifest"] = manifest;
    summary["mode"] = o.mode;
    summary["y_bound"] = count(rep.y_rows);
    if (h_mode) summary["h_growth"] = count(rep.h_rows);
    const auto& main_rows = h_mode ? count(rep.h_rows) : count(rep.y_rows);
    summary["pass"] = main_rows["pass"];
    summary["fail"] = main_rows["fail"];

    std::string body;
    if (o.common.format == "json") {
        Json doc = summary;
        Json arr = Json::array();
        if (h_mode) {
            for (const auto& r : rep.h_rows)
                arr.push_back(Json{{"lambda", r.lambda}, {"family", r.family}, {"h", r.h}, {"sup_x", r.sup_x},
                                   {"ratio", r.ratio}, {"affine_defect", r.affine_defect},
                                   {"sandwich_slack", r.sandwich_slack}, {"outside_disc", r.outside_disc},
                                   {"y_bounded", r.y_bounded}, {"pass", r.pass}});
        } else {
            for (const auto& r : rep.y_rows)
                arr.push_back(Json{{"lambda", r.lambda}, {"family", r.family}, {"sup_full", r.sup_full},
                                   {"sup_tenth", r.sup_tenth}, {"log10_sup_full", r.log10_sup_full},
                                   {"log10_sup_tenth", r.log10_sup_tenth}, {"ratio", r.ratio},
                                   {"outside_disc", r.outside_disc}, {"pass", r.pass}});
        }
        doc["rows"] = std::move(arr);
        body = doc.dump(2) + "\n";
    } else if (h_mode) {
        CsvTable t({"lambda", "family", "h", "sup_x", "ratio", "affine_defect", "sandwich_slack", "outside_disc",
                    "y_bounded", "pass"});
        t.add_comment("manifest", manifest);
        for (const auto& r : rep.h_rows)
            t.add_row({format_number(r.lambda), r.family, format_number(r.h), format_number(r.sup_x),
                       format_number(r.ratio), format_number(r.affine_defect), format_number(r.sandwich_slack),
                       yes_no(r.outside_disc), yes_no(r.y_bounded), yes_no(r.pass)});
        body = t.str();
    } else {
        CsvTable t({"lambda", "family", "sup_full", "sup_tenth", "log10_sup_full", "log10_sup_tenth", "ratio",
                    "outside_disc", "pass"});
        t.add_comment("manifest", manifest);
        for (const auto& r : rep.y_rows)
            t.add_row({format_number(r.lambda), r.family, format_number(r.sup_full), format_number(r.sup_tenth),
                       format_number(r.log10_sup_full), format_number(r.log10_sup_tenth), format_number(r.ratio),
                       yes_no(r.outside_disc), yes_no(r.pass)});
        body = t.str();
    }
    write_output(o.common.out, body);

    if (o.common.format == "csv") {
        std::optional<std::string> path = o.summary;
        if (!path && o.common.out != "-") path = o.common.out + ".summary.json";
        if (path) write_output(*path, summary.dump(2) + "\n");
    }
    std::cerr << "scan " << o.mode << ": " << summary["pass"].get<std::size_t>() << " PASS, "
              << summary["fail"].get<std::size_t>() << " FAIL\n";
    return kSuccess;
}

} // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Discrete Sturm-Liouville toolkit: recurrence solutions, variation-of-parameters representations, "
                 "spectra and growth scans",
                 "dslv"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    SolveOpts solve;
    auto* s = app.add_subcommand("solve", "March the recurrence from named initial data");
    add_problem_options(s, solve.problem);
    s->add_option("--lambda", solve.lambda, "Spectral parameter")->required();
    s->add_option("--init", solve.init, "Initial data: x = (-h, 1), y = (1, 0), s = (0, 1) at (a-1, a)")
        ->check(CLI::IsMember({"x", "y", "s"}))
        ->capture_default_str();
    s->add_option("--horizon", solve.horizon, "Last index to produce (default b+1)");
    add_common(s, solve.common);

    ReprOpts repr;
    auto* rc = app.add_subcommand("repr-check", "Compare the closed-form representations with the recurrence");
    rc->add_option("--trials", repr.trials, "Number of random potentials")->capture_default_str();
    rc->add_option("--seed", repr.seed, "Base seed")->capture_default_str();
    rc->add_option("--lambda-set", repr.lambda_set, "Comma-separated lambda values")->capture_default_str();
    rc->add_option("--h-set", repr.h_set, "Comma-separated h values")->capture_default_str();
    rc->add_option("--N", repr.N, "Horizon")->capture_default_str();
    rc->add_option("--tol", repr.tol, "Relative deviation tolerance")->capture_default_str();
    rc->add_option("--q", repr.q, "Fixed potential for every trial (default: random:<seed+trial>,-1,1)");
    add_common(rc, repr.common);

    EigenOpts eig;
    auto* e = app.add_subcommand("eigen", "Eigenvalues of the two-point boundary problem");
    add_problem_options(e, eig.problem);
    e->add_option("--method", eig.method, "sturm | shooting | both")
        ->check(CLI::IsMember({"sturm", "shooting", "both"}))
        ->capture_default_str();
    e->add_option("--tol", eig.tol, "Bracket width")->capture_default_str();
    e->add_flag("--vectors", eig.vectors, "Also write normalized eigenvectors");
    add_common(e, eig.common);

    IdentityOpts ident;
    auto* ic = app.add_subcommand("identity-check", "Property suites for the lattice identities");
    ic->add_option("--which", ident.which, "casoratian | sbp | telescope | all")
        ->check(CLI::IsMember({"casoratian", "sbp", "telescope", "all"}))
        ->capture_default_str();
    ic->add_option("--trials", ident.trials, "Trials per identity")->capture_default_str();
    ic->add_option("--seed", ident.seed, "Base seed")->capture_default_str();
    ic->add_option("--steps", ident.steps, "Casoratian problem length")->capture_default_str();
    ic->add_option("--tol", ident.tol, "Casoratian relative drift tolerance")->capture_default_str();
    add_common(ic, ident.common);

    ScanOpts scan;
    auto* sc = app.add_subcommand("scan", "Growth scans for the x and y solutions");
    sc->add_option("--mode", scan.mode, "h-growth | y-bound")->check(CLI::IsMember({"h-growth", "y-bound"}))->required();
    sc->add_option("--lambda-grid", scan.lambda_grid, "Comma-separated lambda values")->required();
    sc->add_option("--h-grid", scan.h_grid, "Comma-separated h values")->capture_default_str();
    sc->add_option("--N", scan.N, "Horizon")->capture_default_str();
    sc->add_option("--q-family", scan.families, "Potential family (repeatable)")->capture_default_str();
    sc->add_option("--stab-ratio", scan.stab_ratio, "Allowed sup growth between N/10 and N")->capture_default_str();
    sc->add_option("--summary", scan.summary, "Path for the JSON summary (CSV mode)");
    add_common(sc, scan.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        if (s->parsed()) return cmd_solve(solve);
        if (rc->parsed()) return cmd_repr_check(repr);
        if (e->parsed()) return cmd_eigen(eig);
        if (ic->parsed()) return cmd_identity_check(ident);
        if (sc->parsed()) return cmd_scan(scan);
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return err.kind() == ErrorKind::numeric ? kNumeric : kUsage;
    }
    return kUsage;
}

} // namespace dslv::cli
