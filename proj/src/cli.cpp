#include "riordan/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>

#include "riordan/antecedent.hpp"
#include "riordan/error.hpp"
#include "riordan/expr.hpp"
#include "riordan/halves.hpp"
#include "riordan/identify.hpp"
#include "riordan/moments.hpp"
#include "riordan/render.hpp"
#include "riordan/verify.hpp"

namespace riordan::cli {

namespace {

// extra working precision above what the output needs
constexpr std::size_t kPad = 4;

struct JobSpec {
    std::string g_text;
    std::string f_text;
    std::string expr_text;
    std::string psi_text;
    std::string phi_text;
    std::size_t precision = kDefaultPrecision;
    std::size_t rows = kDefaultRows;
    std::string format = "text";
    std::string oeis_db;
    bool vertical = false;
    bool horizontal = false;
    std::size_t nmax = 6;
    std::size_t depth = 6;
    std::size_t min_match = 6;
    std::optional<std::size_t> column;
};

Series eval_flag(const char* flag, const std::string& text, std::size_t precision) {
    if (text.empty()) throw Error(Errc::Usage, std::string("missing expression for ") + flag);
    try {
        return eval(text, precision);
    } catch (const Error& e) {
        const std::string msg = std::string(flag) + " \"" + text + "\": " + e.detail();
        if (e.span()) throw Error(e.code(), msg, *e.span());
        throw Error(e.code(), msg);
    }
}

Format format_of(const JobSpec& job) {
    const auto f = parse_format(job.format);
    if (!f) throw Error(Errc::Usage, "--format must be text, json or csv, got '" + job.format + "'");
    return *f;
}

// Half-style commands read source row 2(n-1); raise N to 2 * rows.
void raise_for_halves(JobSpec& job, std::ostream& err) {
    if (job.precision < 2 * job.rows) {
        err << "notice: precision raised from " << job.precision << " to " << 2 * job.rows
            << " (2 x rows)\n";
        job.precision = 2 * job.rows;
    }
}

void raise_for_rows(JobSpec& job, std::ostream& err) {
    if (job.precision < job.rows) {
        err << "notice: precision raised from " << job.precision << " to " << job.rows << " (rows)\n";
        job.precision = job.rows;
    }
}

RiordanArray source_array(const JobSpec& job, std::size_t precision) {
    Series g = eval_flag("-g", job.g_text, precision);
    Series f = eval_flag("-f", job.f_text, precision);
    try {
        return RiordanArray(std::move(g), std::move(f));
    } catch (const Error& e) {
        throw Error(e.code(), "(-g \"" + job.g_text + "\", -f \"" + job.f_text + "\"): " + e.detail());
    }
}

void require_one_direction(const JobSpec& job) {
    if (job.vertical == job.horizontal) throw Error(Errc::Usage, "pass exactly one of --vertical, --horizontal");
}

void emit_array(const RiordanArray& a, const JobSpec& job, std::ostream& out, bool matrix_only_text) {
    const ArrayReport report = make_report(a, job.rows, job.precision);
    const Format format = format_of(job);
    if (format == Format::Text && matrix_only_text) {
        out << render_grid(report.matrix);
        return;
    }
    out << render(report, format);
}

int cmd_expand(JobSpec job, std::ostream& out, std::ostream& err) {
    raise_for_rows(job, err);
    emit_array(source_array(job, job.precision), job, out, true);
    return kExitOk;
}

int cmd_half(JobSpec job, std::ostream& out, std::ostream& err) {
    require_one_direction(job);
    raise_for_halves(job, err);
    const RiordanArray src = source_array(job, job.precision + kPad);
    emit_array(job.vertical ? vertical_half(src) : horizontal_half(src), job, out, false);
    return kExitOk;
}

int cmd_factor(JobSpec job, std::ostream& out, std::ostream& err) {
    raise_for_halves(job, err);
    const HalfDecomposition d = decompose(source_array(job, job.precision + kPad));
    const HalfIdentities ids = check_identities(d);
    const std::vector<std::pair<const char*, bool>> checks = {
        {"V = (g(phi), x) (x phi'/phi, phi)", ids.vertical_factorization},
        {"H = (g(phi), x) (x phi'/phi, f(phi))", ids.horizontal_factorization},
        {"H = V (1, f)", ids.horizontal_from_vertical},
        {"V^-1 H = (1, f)", ids.vinv_h_is_associated},
        {"V (g, f) = (g(phi), x) H", ids.v_times_source},
        {"(x phi'/phi, phi) is hitting-time", ids.hitting_factor_in_subgroup},
        {"f(phi) = phi^2 / x", ids.f_of_phi_is_phi_squared_over_x},
    };
    const std::vector<std::pair<const char*, const RiordanArray*>> parts = {
        {"left_factor", &d.left_factor},
        {"hitting_factor", &d.hitting_factor},
        {"vertical", &d.vertical},
        {"horizontal", &d.horizontal},
    };
    const Series phi = d.phi.truncated(job.rows);
    const std::vector<Rational> phi_list(phi.coeffs().begin(), phi.coeffs().end());
    switch (format_of(job)) {
        case Format::Json: {
            nlohmann::json j;
            j["phi"] = to_json(phi_list);
            for (const auto& [name, arr] : parts) j[name] = to_json(make_report(*arr, job.rows, job.precision));
            nlohmann::json idj = nlohmann::json::object();
            for (const auto& [name, ok] : checks) idj[name] = ok;
            j["identities"] = idj;
            j["meta"] = {{"precision", job.precision}, {"rows", job.rows}};
            out << j.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i) out << "\n";
                out << render_csv(expand(*parts[i].second, job.rows));
            }
            break;
        case Format::Text:
            out << "phi: " << join(phi_list) << "\n";
            for (const auto& [name, arr] : parts)
                out << "\n[" << name << "]\n" << render(make_report(*arr, job.rows, job.precision), Format::Text);
            out << "\n[identities]\n";
            for (const auto& [name, ok] : checks) out << name << ": " << (ok ? "yes" : "no") << "\n";
            break;
    }
    return ids.all() ? kExitOk : kExitMath;
}

int cmd_antecedent(JobSpec job, std::ostream& out, std::ostream& err) {
    require_one_direction(job);
    raise_for_rows(job, err);
    const std::size_t w = job.precision + kPad;
    const Series psi = eval_flag("--psi", job.psi_text, w);
    const Series phi = eval_flag("--phi", job.phi_text, w);
    const AntecedentResult r = job.vertical ? vertical_antecedent(psi, phi) : horizontal_antecedent(psi, phi);
    emit_array(r.antecedent, job, out, false);
    return kExitOk;
}

int cmd_pseudo(JobSpec job, std::ostream& out, std::ostream&) {
    const Series f = eval_flag("-f", job.f_text, job.precision + kPad);
    const bool verdict = vertical_pseudo_involution_test(f);
    switch (format_of(job)) {
        case Format::Json:
            out << nlohmann::json{{"pseudo_involution", verdict}, {"meta", {{"precision", job.precision}}}}.dump(2)
                << "\n";
            break;
        case Format::Csv: out << (verdict ? "true" : "false") << "\n"; break;
        case Format::Text:
            out << "vertical half of (1, f) is " << (verdict ? "" : "not ") << "a pseudo-involution\n";
            break;
    }
    return kExitOk;
}

int cmd_hankel(JobSpec job, std::ostream& out, std::ostream&) {
    const Series a = eval_flag("--expr", job.expr_text, std::max(job.precision, 2 * job.nmax + 1));
    const std::vector<Rational> terms(a.coeffs().begin(), a.coeffs().end());
    const auto h = hankel_transform(terms, job.nmax);
    switch (format_of(job)) {
        case Format::Json:
            out << nlohmann::json{{"h", to_json(h)}, {"meta", {{"nmax", job.nmax}}}}.dump(2) << "\n";
            break;
        case Format::Csv: out << join(h, ",") << "\n"; break;
        case Format::Text: out << "h: " << join(h) << "\n"; break;
    }
    return kExitOk;
}

int cmd_jfraction(JobSpec job, std::ostream& out, std::ostream& err) {
    const Series g = eval_flag("--expr", job.expr_text, std::max(job.precision, 2 * job.depth + 1));
    JacobiFraction jf;
    try {
        jf = jfraction(g, job.depth);
    } catch (const TerminatedFraction& t) {
        err << "partial b: " << join(t.partial().b) << "\npartial lambda: " << join(t.partial().lam) << "\n";
        throw;
    }
    switch (format_of(job)) {
        case Format::Json:
            out << nlohmann::json{{"b", to_json(jf.b)}, {"lambda", to_json(jf.lam)}, {"meta", {{"depth", job.depth}}}}
                       .dump(2)
                << "\n";
            break;
        case Format::Csv: out << join(jf.b, ",") << "\n" << join(jf.lam, ",") << "\n"; break;
        case Format::Text: out << "b: " << join(jf.b) << "\nlambda: " << join(jf.lam) << "\n"; break;
    }
    return kExitOk;
}

int cmd_identify(JobSpec job, std::ostream& out, std::ostream&) {
    std::string path = job.oeis_db;
    if (path.empty()) {
        if (const char* env = std::getenv(kOeisPathEnv)) path = env;
    }
    if (path.empty())
        throw Error(Errc::Usage, std::string("no sequence database: pass --oeis-db or set ") + kOeisPathEnv);

    std::vector<Rational> seq;
    if (job.column) {
        if (!job.expr_text.empty()) throw Error(Errc::Usage, "pass either --expr or --column, not both");
        const std::size_t k = *job.column;
        const std::size_t n = std::max(job.precision, k + job.min_match);
        const TriangleMatrix m = expand(source_array(job, n), n);
        for (std::size_t row = k; row < n; ++row) seq.push_back(m.at(row, k));
    } else {
        const Series s = eval_flag("--expr", job.expr_text, std::max(job.precision, job.min_match));
        seq.assign(s.coeffs().begin(), s.coeffs().end());
    }
    const SequenceDb db = SequenceDb::load(path);
    const IdentifyResult r = identify(db, seq, job.min_match);
    switch (format_of(job)) {
        case Format::Json: {
            nlohmann::json matches = nlohmann::json::array();
            for (const auto& m : r.matches) matches.push_back({{"id", m.id}, {"offset", m.offset}});
            nlohmann::json j{{"matches", matches}};
            if (r.note) j["note"] = *r.note;
            out << j.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            for (const auto& m : r.matches) out << m.id << "," << m.offset << "\n";
            break;
        case Format::Text:
            if (r.note) out << "note: " << *r.note << "\n";
            if (r.matches.empty()) out << "no match\n";
            for (const auto& m : r.matches) out << m.id << " offset " << m.offset << "\n";
            break;
    }
    return kExitOk;
}

int cmd_verify(std::ostream& out) {
    const auto outcomes = run_checks(builtin_checks());
    std::size_t passed = 0;
    for (const auto& o : outcomes) {
        if (o.passed) {
            ++passed;
            out << "PASS " << o.name << "\n";
        } else {
            out << "FAIL " << o.name << ": " << o.detail << "\n";
        }
    }
    out << passed << "/" << outcomes.size() << " checks passed\n";
    return passed == outcomes.size() ? kExitOk : kExitMath;
}

// "-psi", "-phi" and "-expr" are accepted as spelled in the docs.
std::vector<std::string> normalize(std::vector<std::string> args) {
    for (auto& a : args)
        if (a == "-psi" || a == "-phi" || a == "-expr") a = "-" + a;
    return args;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    JobSpec job;
    CLI::App app{"Exact Riordan array engine: halves, antecedents, Hankel and J-fraction analyses", "riordan"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub) {
        sub->add_option("--precision,-N", job.precision, "working precision N")->check(CLI::PositiveNumber);
        sub->add_option("--rows", job.rows, "output rows")->check(CLI::PositiveNumber);
        sub->add_option("--format", job.format, "text | json | csv");
    };
    auto pair = [&](CLI::App* sub, bool required) {
        auto* g = sub->add_option("-g", job.g_text, "g(x) expression");
        auto* f = sub->add_option("-f", job.f_text, "f(x) expression");
        if (required) {
            g->required();
            f->required();
        }
    };
    auto direction = [&](CLI::App* sub) {
        sub->add_flag("--vertical", job.vertical, "vertical half");
        sub->add_flag("--horizontal", job.horizontal, "horizontal half");
    };

    auto* expand_cmd = app.add_subcommand("expand", "print the matrix of (g, f)");
    common(expand_cmd);
    pair(expand_cmd, true);

    auto* half_cmd = app.add_subcommand("half", "vertical or horizontal half of (g, f)");
    common(half_cmd);
    pair(half_cmd, true);
    direction(half_cmd);

    auto* factor_cmd = app.add_subcommand("factor", "half decomposition and hitting-time factorization");
    common(factor_cmd);
    pair(factor_cmd, true);

    auto* ante_cmd = app.add_subcommand("antecedent", "Riordan antecedent of (psi, phi)");
    common(ante_cmd);
    direction(ante_cmd);
    ante_cmd->add_option("--psi", job.psi_text, "first component of the target")->required();
    ante_cmd->add_option("--phi", job.phi_text, "second component of the target")->required();

    auto* pseudo_cmd = app.add_subcommand("pseudo", "is the vertical half of (1, f) a pseudo-involution");
    common(pseudo_cmd);
    pseudo_cmd->add_option("-f", job.f_text, "f(x) expression")->required();

    auto* hankel_cmd = app.add_subcommand("hankel", "Hankel transform of a generating function");
    common(hankel_cmd);
    hankel_cmd->add_option("--expr", job.expr_text, "generating function")->required();
    hankel_cmd->add_option("--nmax", job.nmax, "largest n");

    auto* jf_cmd = app.add_subcommand("jfraction", "Jacobi continued fraction parameters");
    common(jf_cmd);
    jf_cmd->add_option("--expr", job.expr_text, "generating function with g(0) = 1")->required();
    jf_cmd->add_option("--depth", job.depth, "number of levels");

    auto* id_cmd = app.add_subcommand("identify", "look a sequence up in a local OEIS stripped dump");
    common(id_cmd);
    pair(id_cmd, false);
    id_cmd->add_option("--expr", job.expr_text, "generating function of the sequence");
    id_cmd->add_option("--column", job.column, "column k of (g, f)");
    id_cmd->add_option("--oeis-db", job.oeis_db, std::string("stripped dump (default $") + kOeisPathEnv + ")");
    id_cmd->add_option("--min-match", job.min_match, "terms that must match")->check(CLI::PositiveNumber);

    auto* verify_cmd = app.add_subcommand("verify", "run the built-in example suite");

    std::vector<std::string> args = normalize(raw_args);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (expand_cmd->parsed()) return cmd_expand(job, out, err);
        if (half_cmd->parsed()) return cmd_half(job, out, err);
        if (factor_cmd->parsed()) return cmd_factor(job, out, err);
        if (ante_cmd->parsed()) return cmd_antecedent(job, out, err);
        if (pseudo_cmd->parsed()) return cmd_pseudo(job, out, err);
        if (hankel_cmd->parsed()) return cmd_hankel(job, out, err);
        if (jf_cmd->parsed()) return cmd_jfraction(job, out, err);
        if (id_cmd->parsed()) {
            if (job.column && (job.g_text.empty() || job.f_text.empty()))
                throw Error(Errc::Usage, "--column needs -g and -f");
            if (!job.column && job.expr_text.empty()) throw Error(Errc::Usage, "pass --expr or --column");
            return cmd_identify(job, out, err);
        }
        if (verify_cmd->parsed()) return cmd_verify(out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return is_input_error(e.code()) ? kExitInput : kExitMath;
    }
    return kExitInput;
}

}  // namespace riordan::cli
