// eiscoc: command-line front end for the cocycle toolkit and its verification suites.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "eiscoc/cone.hpp"
#include "eiscoc/gm.hpp"
#include "eiscoc/siegel.hpp"
#include "eiscoc/suites.hpp"

using json = nlohmann::ordered_json;
using namespace eiscoc;
namespace fs = std::filesystem;

namespace {

constexpr int kExitPass = 0, kExitFail = 1, kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Mat2Z gamma_arg(const std::string& s)
{
    try {
        return parse_mat(s);
    } catch (const std::exception& e) {
        throw UsageError("--gamma expects \"a b c d\": " + std::string(e.what()));
    }
}

json rat_json(const Rat& r) { return {{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}}; }
json vec_json(const Vec2& v) { return json::array({v.x, v.y}); }
json mat_json(const Mat2Z& g) { return json::array({g.a, g.b, g.c, g.d}); }

json circ_json(const CircFn& f)
{
    if (f.is_constant()) return {{"constant", f.constant_value()}};
    json br = json::array(), vals = json::array();
    for (const auto& b : f.breaks()) br.push_back(vec_json(b));
    for (Int v : f.values()) vals.push_back(v);
    return {{"breaks", br}, {"values", vals}};
}

json symbols_json(const SymbolSum& s)
{
    json terms = json::array();
    for (const auto& t : s.terms) terms.push_back({{"coef", t.coef}, {"v", vec_json(t.v)}, {"w", vec_json(t.w)}});
    return {{"terms", terms}, {"minus_one_coef", s.minus_one_coef}};
}

json cyc_vec_json(const CycSymbolVec& v)
{
    json out = json::array();
    for (const auto& [k, c] : v.entries()) out.push_back({{"a", k.first}, {"b", k.second}, {"coef", c}});
    return out;
}

std::string seq_str(const ConnectingSeq& s)
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + s[i].str();
    return out;
}

json seq_json(const ConnectingSeq& s)
{
    json out = json::array();
    for (const auto& v : s) out.push_back(vec_json(v));
    return out;
}

json report_json(const Report& r)
{
    json recs = json::array();
    for (const auto& c : r.records)
        recs.push_back({{"id", c.id}, {"inputs", c.inputs}, {"expected", c.expected}, {"got", c.got}, {"pass", c.pass}});
    return {{"suite", r.suite}, {"pass", r.pass()}, {"seconds", r.seconds}, {"version", r.version}, {"records", recs}};
}

json envelope(const std::string& command)
{
    return {{"schema", "eiscoc-report/1"}, {"command", command}, {"version", kToolVersion}};
}

// ---------------------------------------------------------------- cache

fs::path cache_dir()
{
    const char* env = std::getenv("EISCOC_CACHE");
    return fs::path(env && *env ? env : ".eiscoc");
}

fs::path lattice_file(Int N) { return cache_dir() / ("relation_lattice_N" + std::to_string(N) + ".txt"); }

void cache_load(const std::set<Int>& levels)
{
    for (Int N : levels) {
        std::ifstream in(lattice_file(N));
        if (!in) continue;
        std::stringstream ss;
        ss << in.rdbuf();
        try {
            ColumnLattice L = lattice_deserialize(ss.str());
            if (L.dim() == (int)((N - 1) * (N - 1))) relation_lattice_seed(N, std::move(L));
        } catch (const std::exception& e) {
            std::cerr << "warning: ignoring cache entry for N=" << N << ": " << e.what() << "\n";
        }
    }
}

void cache_store(const std::set<Int>& levels)
{
    std::error_code ec;
    fs::create_directories(cache_dir(), ec);
    if (ec) {
        std::cerr << "warning: cache directory unavailable: " << ec.message() << "\n";
        return;
    }
    for (Int N : levels) {
        if (fs::exists(lattice_file(N))) continue;
        std::ofstream out(lattice_file(N));
        if (out) out << lattice_serialize(relation_lattice_cached(N));
    }
}

// ---------------------------------------------------------------- commands

int emit(bool as_json, const json& j, const std::string& text, int code = kExitPass)
{
    if (as_json) std::cout << j.dump(2) << "\n";
    else std::cout << text;
    return code;
}

int cmd_theta(const Mat2Z& g, bool js)
{
    ConnectingSeq mono = monotone_connecting_sequence(g), cf = connecting_sequence(g);
    SymbolSum2 th = theta_gamma(g);
    CircFn canon = canonical(th);
    json j = envelope("theta");
    j["gamma"] = mat_json(g);
    j["monotone_sequence"] = seq_json(mono);
    j["continued_fraction_sequence"] = seq_json(cf);
    j["symbols"] = symbols_json(th);
    j["circle"] = circ_json(canon);
    std::ostringstream os;
    os << "gamma              " << g.str() << "\n"
       << "monotone sequence  " << seq_str(mono) << "\n"
       << "cf sequence        " << seq_str(cf) << "\n"
       << "symbols            " << th.str() << "\n"
       << "circle form        " << canon.str() << "\n";
    return emit(js, j, os.str());
}

int cmd_theta_n(Int N, const Mat2Z& g, bool js)
{
    ConnectingSeq s = n_connecting_sequence(g, N);
    CycSymbolVec v = specialize_theta_N(g, N);
    json j = envelope("theta_n");
    j["level"] = N;
    j["gamma"] = mat_json(g);
    j["sequence"] = seq_json(s);
    j["symbols"] = cyc_vec_json(v);
    std::ostringstream os;
    os << "N-connecting sequence  " << seq_str(s) << "\n"
       << "Theta_N                " << v.str() << "\n";
    return emit(js, j, os.str());
}

int cmd_defect(Int N, Int ell, const Mat2Z& g, bool js)
{
    cache_load({N});
    DefectReport r = defect_report(g, ell, N, true);
    cache_store({N});
    json tame = json::array();
    for (const auto& [p, v] : r.tame) tame.push_back({{"prime", p}, {"value", v}});
    json j = envelope("defect");
    j["level"] = N;
    j["ell"] = ell;
    j["gamma"] = mat_json(g);
    j["doubled"] = r.doubled;
    j["defect"] = cyc_vec_json(r.defect);
    j["tame"] = tame;
    j["tame_all_one"] = r.tame_all_one;
    j["membership_2adic_k"] = r.membership ? json(*r.membership) : json(nullptr);
    std::ostringstream os;
    os << "defect" << (r.doubled ? " (doubled)" : "") << "  " << r.defect.str() << "\n";
    for (const auto& [p, v] : r.tame) os << "tame symbol at prime over " << p << ": " << v << "\n";
    os << "tame symbols all one: " << (r.tame_all_one ? "yes" : "no") << "\n"
       << "relation lattice (experimental): "
       << (r.membership ? "2^" + std::to_string(*r.membership) + " * defect is a member" : "not a member") << "\n";
    return emit(js, j, os.str());
}

int cmd_phi(const Mat2Z& g1, const Mat2Z& g2, bool js)
{
    Rat chain = phi_pair(g1, g2, PhiMethod::Chain);
    Rat series = phi_pair(g1, g2, PhiMethod::Series);
    json j = envelope("phi");
    j["gamma1"] = mat_json(g1);
    j["gamma2"] = mat_json(g2);
    j["phi"] = rat_json(chain);
    j["paths_agree"] = chain == series;
    std::ostringstream os;
    os << "phi = " << rat_str(chain) << (chain == series ? "" : "  (series path disagrees: " + rat_str(series) + ")")
       << "\n";
    return emit(js, j, os.str(), chain == series ? kExitPass : kExitFail);
}

int cmd_dedekind(Int p, Int q, bool js)
{
    if (q <= 0) throw UsageError("q must be positive");
    Rat s = dedekind_sum(p, q);
    json j = envelope("dedekind");
    j["p"] = p;
    j["q"] = q;
    j["s"] = rat_str(s);
    j["value"] = rat_json(s);
    return emit(js, j, rat_str(s) + "\n");
}

int cmd_rademacher(const Mat2Z& g, bool js)
{
    RademacherResult r = rademacher_compare(g);
    json j = envelope("rademacher");
    j["gamma"] = mat_json(g);
    j["regularized"] = rat_json(r.lhs);
    j["closed_form"] = rat_json(r.rhs);
    j["equal"] = r.lhs == r.rhs;
    std::ostringstream os;
    os << "phi(I, gamma) by regularized values  " << rat_str(r.lhs) << "\n"
       << "1/4 + s(p,q) - (p+q')/(12q)          " << rat_str(r.rhs) << "\n";
    return emit(js, j, os.str(), r.lhs == r.rhs ? kExitPass : kExitFail);
}

int cmd_brion(const Vec2& l1, const Vec2& l2, int T, bool js)
{
    if (l1.is_zero() || l2.is_zero()) throw UsageError("rays must be nonzero");
    if (T < 2) throw UsageError("--prec must be at least 2 for brion");
    PoleSeries s = theta_L_arc(make_ray(l1), make_ray(l2), T);
    HomRat h = degree_zero(s);
    json j = envelope("brion");
    j["l1"] = vec_json(l1);
    j["l2"] = vec_json(l2);
    j["T"] = T;
    j["series"] = s.str();
    j["degree_zero"] = h.str();
    std::ostringstream os;
    os << "theta_L      " << s.str() << "\n"
       << "degree zero  " << h.str() << "\n";
    return emit(js, j, os.str());
}

int cmd_siegel(Int M, Int m, Int c, Int d, Int prec, bool js)
{
    DistributionResult r = distribution_check(m, c, d, M, prec);
    FracQSeries g = siegel_g12(c, d, M, std::min<Int>(prec, 3));
    json j = envelope("siegel");
    j["M"] = M;
    j["m"] = m;
    j["c"] = c;
    j["d"] = d;
    j["prec"] = prec;
    j["g12_head"] = g.str();
    j["lead_exponent"] = rat_json(siegel_lead_exponent(c, M));
    j["distribution"] = {{"ratio", r.ratio.str()},
                         {"constant", r.constant},
                         {"root_of_unity", r.root_of_unity},
                         {"ok", r.ok()}};
    std::ostringstream os;
    os << "g12 head          " << g.str() << "\n"
       << "lead exponent     " << rat_str(siegel_lead_exponent(c, M)) << "\n"
       << "distribution      ratio " << r.ratio.str() << ", constant " << (r.constant ? "yes" : "no")
       << ", root of unity " << (r.root_of_unity ? "yes" : "no") << "\n";
    bool ok = r.ok();
    try {
        bool compat = m_compatibility_check(m, c, d, M, prec);
        ok = ok && compat;
        j["m_compatibility"] = compat;
        os << "m_g compatibility " << (compat ? "holds" : "fails") << "\n";
    } catch (const Error& e) {
        if (e.kind() != Err::BadAuxiliary) throw;
        j["m_compatibility"] = nullptr;
        os << "m_g compatibility not defined: " << e.what() << "\n";
    }
    return emit(js, j, os.str(), ok ? kExitPass : kExitFail);
}

int cmd_verify(const std::string& suite, const SuiteOptions& opt, bool js)
{
    std::vector<int> ks = suite_criteria(suite);
    std::set<Int> levels;
    for (int k : ks)
        if (k == 5) levels = {5, 7, 9, 12};
    cache_load(levels);
    Report r = run_suite(suite, opt);
    cache_store(levels);
    json j = envelope("verify");
    j["seed"] = opt.seed;
    j["slow"] = opt.slow;
    j["report"] = report_json(r);
    std::ostringstream os;
    for (const auto& c : r.records) {
        os << (c.pass ? "PASS " : "FAIL ") << c.id << "  [" << c.inputs << "]\n";
        if (!c.pass) os << "     expected: " << c.expected << "\n     got:      " << c.got << "\n";
    }
    os << (r.pass() ? "all " : "some ") << "checks " << (r.pass() ? "passed" : "FAILED") << " (" << r.records.size()
       << " records, " << r.seconds << "s)\n";
    return emit(js, j, os.str(), r.pass() ? kExitPass : kExitFail);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cocycle toolkit: symbols, Dedekind sums, torsion cycles, Siegel units"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    std::string gamma;
    std::vector<std::string> gammas;
    Int level = 0, ell = 0, p = 0, q = 0;
    std::uint64_t seed = kDefaultSeed;
    bool slow = false;
    std::string suite;
    std::vector<Int> rays;
    std::vector<Int> siegel_args;

    auto* theta = app.add_subcommand("theta", "connecting sequence, symbols and circle form of Theta_gamma");
    theta->add_option("--gamma", gamma, "matrix \"a b c d\"")->required();

    auto* theta_n = app.add_subcommand("theta_n", "specialization Theta_N(gamma)");
    theta_n->add_option("--gamma", gamma, "matrix \"a b c d\"")->required();
    theta_n->add_option("--level", level, "level N")->required();

    auto* defect = app.add_subcommand("defect", "Eisenstein defect and its tame symbols");
    defect->add_option("--gamma", gamma, "matrix \"a b c d\" in Gamma1(N)")->required();
    defect->add_option("--level", level, "level N")->required();
    defect->add_option("--ell", ell, "Hecke prime")->required();

    auto* phi = app.add_subcommand("phi", "phi(gamma1, gamma2); a single --gamma means phi(I, gamma)");
    phi->add_option("--gamma", gammas, "matrix \"a b c d\", once or twice")->required()->expected(1, 2);

    auto* dedekind = app.add_subcommand("dedekind", "Dedekind sum s(p, q)");
    dedekind->add_option("p", p)->required();
    dedekind->add_option("q", q)->required();

    auto* rademacher = app.add_subcommand("rademacher", "phi(I, gamma) against the Dedekind-sum closed form");
    rademacher->add_option("--gamma", gamma, "matrix \"a b c d\" with -b > 0")->required();

    int T = kDefaultT;
    auto* brion = app.add_subcommand("brion", "theta_L of the counterclockwise arc from (x1,y1) to (x2,y2)");
    brion->add_option("rays", rays, "x1 y1 x2 y2")->required()->expected(4);
    brion->add_option("--prec", T, "expansion degree T");

    Int siegel_prec = 40;
    auto* siegel = app.add_subcommand("siegel", "distribution relation for 12th powers of Siegel units");
    siegel->add_option("args", siegel_args, "M m c d")->required()->expected(4);
    siegel->add_option("--prec", siegel_prec, "integer q-exponent cutoff (>= 20)");

    auto* verify = app.add_subcommand("verify", "run an acceptance suite");
    verify->add_option("suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"circle", "cone", "gm", "torsion", "siegel", "linalg", "all"}));
    verify->add_option("--seed", seed, "random seed");
    verify->add_flag("--slow", slow, "include the larger parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    bool js = format == "json";
    try {
        if (*theta) return cmd_theta(gamma_arg(gamma), js);
        if (*theta_n) return cmd_theta_n(level, gamma_arg(gamma), js);
        if (*defect) return cmd_defect(level, ell, gamma_arg(gamma), js);
        if (*phi) {
            Mat2Z g1 = gammas.size() == 2 ? gamma_arg(gammas[0]) : Mat2Z::identity();
            return cmd_phi(g1, gamma_arg(gammas.back()), js);
        }
        if (*dedekind) return cmd_dedekind(p, q, js);
        if (*rademacher) return cmd_rademacher(gamma_arg(gamma), js);
        if (*brion) return cmd_brion({rays[0], rays[1]}, {rays[2], rays[3]}, T, js);
        if (*siegel)
            return cmd_siegel(siegel_args[0], siegel_args[1], siegel_args[2], siegel_args[3], siegel_prec, js);
        if (*verify) return cmd_verify(suite, SuiteOptions{seed, slow}, js);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
