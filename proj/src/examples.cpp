#include <future>
#include <sstream>

#include <json.hpp>

#include "riordan/antecedent.hpp"
#include "riordan/cli.hpp"
#include "riordan/error.hpp"
#include "riordan/expr.hpp"
#include "riordan/halves.hpp"
#include "riordan/identify.hpp"
#include "riordan/moments.hpp"
#include "riordan/render.hpp"
#include "riordan/verify.hpp"

namespace riordan {

namespace {

constexpr std::size_t N = 20;

const char* const kFibonacciG = "(4+6*x^2+2*x*sqrt(4+5*x^2))/(4+5*x^2+x*sqrt(4+5*x^2))";

void require(bool ok, const std::string& what) {
    if (!ok) throw CheckFailure(what);
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \n\t");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \n\t") - b + 1);
}

std::vector<Rational> values(const std::string& list) {
    std::vector<Rational> out;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(Rational::parse(trim(tok)));
    return out;
}

// "1; 3,1; 13,5,1"
TriangleMatrix rows(const std::string& text) {
    std::vector<std::vector<Rational>> out;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';')) out.push_back(values(row));
    return TriangleMatrix(std::move(out));
}

void expect_rows(const TriangleMatrix& got, const std::string& want) {
    const TriangleMatrix w = rows(want);
    const TriangleMatrix g = got.truncated(w.size());
    if (!(g == w)) {
        std::ostringstream os;
        os << "matrix mismatch, got\n" << g;
        throw CheckFailure(os.str());
    }
}

void expect_rows(const RiordanArray& a, const std::string& want) {
    expect_rows(expand(a, rows(want).size()), want);
}

void expect_coeffs(const Series& s, const std::string& want) {
    const auto w = values(want);
    std::ostringstream os;
    os << "series mismatch, got " << s;
    require(s.precision() >= w.size(), os.str());
    for (std::size_t i = 0; i < w.size(); ++i) require(s[i] == w[i], os.str());
}

void expect_same(const Series& a, const Series& b) {
    std::ostringstream os;
    os << "series differ: " << a << " vs " << b;
    require(agree(a, b), os.str());
}

Series e(const char* text, std::size_t n = N) { return eval(text, n); }

RiordanArray pair(const char* g, const char* f, std::size_t n = N) { return RiordanArray(e(g, n), e(f, n)); }

RiordanArray pascal() { return pair("1/(1-x)", "x/(1-x)"); }
RiordanArray example2() { return pair("1/(1-x)", "x*(1+x)/(1-x)"); }
RiordanArray catalan_assoc() { return pair("1", "x*catalan(x)"); }

const char* const kExample2V =
    "1; 3,1; 13,5,1; 63,25,7,1; 321,129,41,9,1; 1683,681,231,61,11,1; 8989,3653,1289,377,85,13,1";
const char* const kExample2H =
    "1; 3,1; 13,7,1; 63,41,11,1; 321,231,85,15,1; 1683,1289,575,145,19,1; 8989,7183,3649,1159,221,23,1";
const char* const kCatalanV =
    "1; 1,1; 5,2,1; 28,9,3,1; 165,48,14,4,1; 1001,275,75,20,5,1; 6188,1638,429,110,27,6,1";
const char* const kCatalanH =
    "1; 1,1; 5,3,1; 28,14,5,1; 165,75,27,7,1; 1001,429,154,44,9,1; 6188,2548,910,273,65,11,1";
const char* const kBinomialShift =
    "1; 0,1; 0,1,1; 0,0,2,1; 0,0,1,3,1; 0,0,0,3,4,1; 0,0,0,1,6,5,1; 0,0,0,0,4,10,6,1";
const char* const kPascalHorizontalAntecedent =
    "1; 1/2,1; 0,1,1; -1/16,3/8,3/2,1; 0,0,1,2,1; 3/256,-5/128,5/16,15/8,5/2,1; 0,0,0,1,3,3,1;"
    "-5/2048,7/1024,-7/256,35/128,35/16,35/8,7/2,1; 0,0,0,0,1,4,6,4,1;"
    "35/65536,-45/32768,9/2048,-21/1024,63/256,315/128,105/16,63/8,9/2,1; 0,0,0,0,0,1,5,10,10,5,1";

const char* const kFixture =
    "# fixture\n"
    "A000045 ,0,1,1,2,3,5,8,13,21,34,55,\n"
    "A000108 ,1,1,2,5,14,42,132,429,1430,4862,\n"
    "A001850 ,1,3,13,63,321,1683,8989,48639,265729,1462563,\n";

std::string run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int rc = cli::run(args, out, err);
    require(rc == cli::kExitOk, "exit status " + std::to_string(rc) + ": " + err.str());
    return out.str();
}

std::vector<NamedCheck> series_checks() {
    return {
        {"series/recip-geometric", [] { expect_coeffs(recip(Series{1, -1, 0, 0, 0, 0, 0, 0}), "1,1,1,1,1,1,1,1"); }},
        {"series/compose-catalan",
         [] { expect_same(compose(e("x*(1-x)"), e("x*catalan(x)")), Series::x(N)); }},
        {"series/revert-catalan", [] { expect_coeffs(revert(e("x*(1-x)")), "0,1,1,2,5,14,42,132"); }},
        {"series/derive-catalan", [] {
             const Series d = derive(e("x*catalan(x)"));
             expect_coeffs(d, "1,2,6,20,70");
             expect_same(d, e("1/sqrt(1-4*x)"));
         }},
        {"series/coeff-geometric", [] { require(e("1/(1-x)").coeff(5) == 1, "[x^5] 1/(1-x)"); }},
        {"series/coeff-delannoy", [] { require(e("1/sqrt(1-6*x+x^2)").coeff(4) == 321, "[x^4] 1/sqrt(1-6x+x^2)"); }},
    };
}

std::vector<NamedCheck> expr_checks() {
    return {
        {"expr/pascal-g", [] {
             require(print(parse("1/(1-x)")) == "(1/(1-x))", "printed form " + print(parse("1/(1-x)")));
             expect_same(e("1/(1-x)"), recip(Series::one(N) - Series::x(N)));
         }},
        {"expr/example-f", [] {
             const Series x = Series::x(N);
             expect_same(e("x*(1+x)/(1-x)"), x * (Series::one(N) + x) * recip(Series::one(N) - x));
         }},
        {"expr/phi-closed-form", [] {
             const Series phi = eval("(1-x-sqrt(1-6*x+x^2))/2", 5);
             expect_coeffs(phi, "0,1,2,6,22");
             expect_same(phi, revert(e("x*(1-x)/(1+x)")));
         }},
        {"expr/catalan", [] { expect_coeffs(eval("catalan(x)", 5), "1,1,2,5,14"); }},
    };
}

std::vector<NamedCheck> riordan_checks() {
    return {
        {"riordan/pascal", [] { expect_rows(pascal(), "1; 1,1; 1,2,1; 1,3,3,1; 1,4,6,4,1"); }},
        {"riordan/example-array", [] {
             expect_rows(example2(),
                         "1; 1,1; 1,3,1; 1,5,5,1; 1,7,13,7,1; 1,9,25,25,9,1; 1,11,41,63,41,11,1");
         }},
        {"riordan/fibonacci-array", [] {
             expect_rows(pair("1/(1-x-x^2)", "x/(1-x-x^2)"), "1; 1,1; 2,2,1; 3,5,3,1; 5,10,9,4,1");
         }},
        {"riordan/a085478", [] {
             expect_rows(pair("1/(1-x)", "x/(1-x)^2"), "1; 1,1; 1,3,1; 1,6,5,1; 1,10,15,7,1");
         }},
        {"riordan/catalan-triangle", [] {
             expect_rows(pair("catalan(x)", "x*catalan(x)"),
                         "1; 1,1; 2,2,1; 5,5,3,1; 14,14,9,4,1; 42,42,28,14,5,1");
         }},
        {"riordan/catalan-associated", [] {
             expect_rows(catalan_assoc(), "1; 0,1; 0,1,1; 0,2,2,1; 0,5,5,3,1; 0,14,14,9,4,1; 0,42,42,28,14,5,1");
         }},
        {"riordan/v-times-associated", [] {
             const RiordanArray a = example2();
             expect_rows(vertical_half(a) * RiordanArray(Series::one(N), a.f()), kExample2H);
         }},
        {"riordan/vinv-h", [] {
             const RiordanArray a = example2();
             expect_rows(inverse(vertical_half(a)) * horizontal_half(a),
                         "1; 0,1; 0,2,1; 0,2,4,1; 0,2,8,6,1; 0,2,12,18,8,1; 0,2,16,38,32,10,1");
         }},
        {"riordan/pascal-flags", [] {
             const SubgroupFlags fl = subgroup_flags(pascal());
             require(fl == SubgroupFlags{true, true, false}, "flags " + to_string(fl));
         }},
        {"riordan/pascal-pseudo-involution", [] { require(is_pseudo_involution(pascal()), "not a pseudo-involution"); }},
    };
}

std::vector<NamedCheck> halves_checks() {
    return {
        {"halves/phi-associated", [] { expect_same(phi_of(e("x*(1+x)")), e("x/(1-x)")); }},
        {"halves/phi-example", [] {
             const Series phi = phi_of(e("x*(1+x)/(1-x)"));
             expect_coeffs(phi, "0,1,2,6,22");
             expect_same(phi, e("(1-x-sqrt(1-6*x+x^2))/2"));
         }},
        {"halves/vertical-example", [] {
             const RiordanArray v = vertical_half(example2());
             expect_same(v.g(), e("1/sqrt(1-6*x+x^2)"));
             expect_same(v.f(), e("(1-x-sqrt(1-6*x+x^2))/2"));
             expect_rows(v, kExample2V);
         }},
        {"halves/horizontal-example", [] {
             const RiordanArray h = horizontal_half(example2());
             expect_same(h.g(), e("1/sqrt(1-6*x+x^2)"));
             expect_same(h.f(), e("(1-4*x+x^2-(1-x)*sqrt(1-6*x+x^2))/(2*x)"));
             expect_rows(h, kExample2H);
         }},
        {"halves/vertical-catalan", [] { expect_rows(vertical_half(catalan_assoc()), kCatalanV); }},
        {"halves/horizontal-catalan", [] { expect_rows(horizontal_half(catalan_assoc()), kCatalanH); }},
        {"halves/vertical-oracle", [] {
             const TriangleMatrix v = vertical_half_oracle(expand(example2(), 13), 7);
             expect_rows(v, kExample2V);
             require(v.at(1, 0) == 3, "V[1][0] = T[2][1] = 3");
         }},
        {"halves/horizontal-oracle", [] {
             const TriangleMatrix h = horizontal_half_oracle(expand(example2(), 13), 7);
             expect_rows(h, kExample2H);
             require(h.at(2, 1) == 7, "H[2][1] = T[4][3] = 7");
         }},
        {"halves/factorization-example", [] {
             const HalfDecomposition d = decompose(example2());
             expect_rows(d.left_factor * d.hitting_factor, kExample2V);
             require(check_identities(d).all(), "identity failed");
         }},
        {"halves/associated-left-factor", [] {
             const HalfDecomposition d = decompose(RiordanArray(Series::one(N), e("x*(1+x)/(1-x)")));
             require(agree(d.left_factor, RiordanArray::identity(N)), "left factor is not (1, x)");
         }},
        {"halves/vertical-inverse-catalan", [] {
             const TriangleMatrix vinv = expand(vertical_inverse_closed(e("x*catalan(x)")), 8);
             const TriangleMatrix v = expand(vertical_half(catalan_assoc()), 8);
             expect_rows(v, kCatalanV);
             require(vinv * v == TriangleMatrix::identity(8), "closed V^-1 times V is not I");
         }},
        {"halves/pseudo-involution-binomial", [] {
             require(vertical_pseudo_involution_test(e("x*(1+x)")), "test returned false");
             expect_rows(vertical_half(RiordanArray(Series::one(N), e("x*(1+x)"))),
                         "1; 1,1; 1,2,1; 1,3,3,1; 1,4,6,4,1");
         }},
    };
}

std::vector<NamedCheck> antecedent_checks() {
    return {
        {"antecedent/vertical-pascal", [] {
             const AntecedentResult r = vertical_antecedent(e("1/(1-x)"), e("x/(1-x)"));
             expect_same(r.antecedent.g(), Series::one(N));
             expect_same(r.antecedent.f(), e("x*(1+x)"));
             expect_rows(r.antecedent, kBinomialShift);
         }},
        {"antecedent/vertical-example", [] {
             const AntecedentResult r = vertical_antecedent(e("1/(1-x)"), e("x*(1+x)/(1-x)"));
             expect_same(r.antecedent.g(), e("(1+x+sqrt(1+6*x+x^2))/(2*sqrt(1+6*x+x^2))"));
             expect_same(r.antecedent.f(), e("x*(1+x+sqrt(1+6*x+x^2))/2"));
             expect_rows(r.antecedent,
                         "1; -1,1; 5,1,1; -25,1,3,1; 129,-7,1,5,1; -681,41,-1,5,7,1; 3653,-231,9,1,13,9,1;"
                         "-19825,1289,-61,1,7,25,11,1");
         }},
        {"antecedent/horizontal-pascal", [] {
             const AntecedentResult r = horizontal_antecedent(e("1/(1-x)"), e("x/(1-x)"));
             expect_same(r.antecedent.g(), e("(x+sqrt(x^2+4))/sqrt(x^2+4)"));
             expect_same(r.antecedent.f(), e("(x^2+x*sqrt(x^2+4))/2"));
             expect_same(r.phi_bar, e("x*(sqrt(x^2+4)-x)/2"));
             expect_rows(r.antecedent, kPascalHorizontalAntecedent);
             const RiordanArray inv = inverse(r.antecedent);
             expect_same(inv.g(), e("(2+x)/(2*(1+x))"));
             expect_same(inv.f(), e("x/sqrt(1+x)"));
         }},
        {"antecedent/horizontal-a085478", [] {
             const AntecedentResult r = horizontal_antecedent(e("1/(1-x)"), e("x/(1-x)^2"));
             expect_same(r.antecedent.g(), Series::one(N));
             expect_same(r.antecedent.f(), e("x*(1+x)"));
             expect_rows(r.antecedent, kBinomialShift);
         }},
        {"antecedent/vertical-catalan-triangle", [] {
             const AntecedentResult r = vertical_antecedent(e("catalan(x)"), e("x*catalan(x)"));
             expect_same(r.antecedent.g(), e("(1-2*x)/(1-x)^2"));
             expect_same(r.antecedent.f(), e("x/(1-x)"));
             expect_rows(r.antecedent, "1; 0,1; -1,1,1; -2,0,2,1; -3,-2,2,3,1; -4,-5,0,5,4,1; -5,-9,-5,5,9,5,1");
         }},
        {"antecedent/horizontal-catalan-triangle", [] {
             const AntecedentResult r = horizontal_antecedent(e("catalan(x)"), e("x*catalan(x)"));
             const RiordanArray closed = inverse(pair("(2-5*x+3*x^2)/(2-4*x)", "x*sqrt(1-x)"));
             require(agree(r.antecedent, closed), "antecedent differs from the closed-form inverse");
             expect_rows(r.antecedent,
                         "1; 1/2,1; 0,1,1; -21/16,7/8,3/2,1; -5,0,2,2,1; -3861/256,-429/128,33/16,27/8,5/2,1;"
                         "-42,-14,0,5,5,3,1; -230945/2048,-46189/1024,-2431/256,715/128,143/16,55/8,7/2,1");
         }},
        {"antecedent/horizontal-fibonacci", [] {
             const AntecedentResult r = horizontal_antecedent(e("1/(1-x-x^2)"), e("x/(1-x-x^2)"));
             expect_coeffs(r.antecedent.g(), "1,1/2,0,-5/16,0,75/256,0,-625/2048,0,21875/65536,0");
             expect_same(r.antecedent.g(), e(kFibonacciG));
             expect_same(r.antecedent.f(), e("(x^2+x*sqrt(4+5*x^2))/2"));
             expect_same(r.phi_bar, e("2*x^2/(x^2+x*sqrt(4+5*x^2))"));
             expect_rows(r.antecedent,
                         "1; 1/2,1; 0,1,1; -5/16,7/8,3/2,1; 0,0,2,2,1; 75/256,-45/128,17/16,27/8,5/2,1;"
                         "0,0,0,3,5,3,1; -625/2048,275/1024,-95/256,203/128,95/16,55/8,7/2,1; 0,0,0,0,5,10,9,4,1");
             expect_rows(horizontal_half(r.antecedent), "1; 1,1; 2,2,1; 3,5,3,1; 5,10,9,4,1");
         }},
    };
}

std::vector<NamedCheck> moments_checks() {
    return {
        {"moments/hankel-fibonacci-antecedent", [] {
             const Series g = e(kFibonacciG, 13);
             const auto h = hankel_transform(std::vector<Rational>(g.coeffs().begin(), g.coeffs().end()), 6);
             for (long n = 0; n <= 6; ++n) {
                 const long sign = (n * (n + 1) / 2) % 2 ? -1 : 1;
                 const Rational want = Rational(sign) * pow(Rational(5), 2 * (n * n / 4)) / pow(Rational(4), n * n);
                 require(h[static_cast<std::size_t>(n)] == want,
                         "h_" + std::to_string(n) + " = " + h[static_cast<std::size_t>(n)].str() + ", want " + want.str());
             }
         }},
        {"moments/jfraction-fibonacci-antecedent", [] {
             const Series g = e(kFibonacciG, 13);
             const JacobiFraction jf = jfraction(g, 6);
             require(jf.b == values("1/2,3/4,-1,1,-1,1"), "b = " + join(jf.b));
             require(std::vector<Rational>(jf.lam.begin(), jf.lam.begin() + 5) == values("-1/4,-25/16,-1/16,-25/16,-1/16"),
                     "lambda = " + join(jf.lam));
             require(jfraction_reconstruct(jf, 13) == g, "reconstruction differs mod x^13");
         }},
    };
}

std::vector<NamedCheck> identify_checks() {
    return {
        {"identify/central-delannoy", [] {
             std::istringstream in(kFixture);
             const SequenceDb db = SequenceDb::parse(in, "fixture");
             const TriangleMatrix v = expand(vertical_half(example2()), 8);
             std::vector<Rational> column;
             for (std::size_t n = 0; n < v.size(); ++n) column.push_back(v.at(n, 0));
             const IdentifyResult r = identify(db, column, 6);
             require(r.matches.size() == 1 && r.matches[0].id == "A001850" && r.matches[0].offset == 0,
                     "expected A001850 at offset 0");
         }},
    };
}

std::vector<NamedCheck> cli_checks() {
    return {
        {"cli/half-vertical", [] {
             const auto j = nlohmann::json::parse(run_cli(
                 {"half", "--vertical", "-g", "1/(1-x)", "-f", "x*(1+x)/(1-x)", "--rows", "5", "--format", "json"}));
             expect_rows(matrix_from_json(j["matrix"]), "1; 3,1; 13,5,1; 63,25,7,1; 321,129,41,9,1");
         }},
        {"cli/jfraction", [] {
             const auto j = nlohmann::json::parse(
                 run_cli({"jfraction", "-expr", kFibonacciG, "--depth", "5", "--format", "json"}));
             require(rationals_from_json(j["b"]) == values("1/2,3/4,-1,1,-1"), "b = " + j["b"].dump());
             require(rationals_from_json(j["lambda"]) == values("-1/4,-25/16,-1/16,-25/16,-1/16"),
                     "lambda = " + j["lambda"].dump());
         }},
        {"cli/render-rational-entry", [] {
             const AntecedentResult r = horizontal_antecedent(e("1/(1-x)"), e("x/(1-x)"));
             const ArrayReport report = make_report(r.antecedent, 5, N);
             for (Format f : {Format::Text, Format::Json, Format::Csv})
                 require(render(report, f).find("-1/16") != std::string::npos, "-1/16 missing");
         }},
    };
}

}  // namespace

std::vector<NamedCheck> builtin_checks() {
    std::vector<NamedCheck> all;
    for (auto group : {series_checks(), expr_checks(), riordan_checks(), halves_checks(), antecedent_checks(),
                       moments_checks(), identify_checks(), cli_checks()})
        for (auto& c : group) all.push_back(std::move(c));
    return all;
}

std::vector<CheckOutcome> run_checks(const std::vector<NamedCheck>& checks, bool parallel) {
    auto one = [](const NamedCheck& c) {
        CheckOutcome o{c.name, false, ""};
        try {
            c.run();
            o.passed = true;
        } catch (const std::exception& ex) {
            o.detail = ex.what();
        }
        return o;
    };
    std::vector<CheckOutcome> out;
    if (!parallel) {
        for (const auto& c : checks) out.push_back(one(c));
        return out;
    }
    std::vector<std::future<CheckOutcome>> pending;
    for (const auto& c : checks) pending.push_back(std::async(std::launch::async, one, std::cref(c)));
    for (auto& p : pending) out.push_back(p.get());
    return out;
}

}  // namespace riordan
