#include "efluct/errors.hpp"
#include "efluct/freeness.hpp"
#include "efluct/json_io.hpp"
#include "efluct/limits.hpp"
#include "efluct/sampler.hpp"
#include "efluct/spoke_arc.hpp"
#include "efluct/verify.hpp"
#include "efluct/wick.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

using namespace efluct;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitInput = 2;

int default_threads() {
    if (const char* env = std::getenv("EFLUCT_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0) return n;
        } catch (const std::exception&) {
        }
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

// "0.25" -> 1/4 exactly; also accepts "-1", "3/8", "1e-1".
Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const Rational num = parse_rational(text.substr(0, slash));
        const Rational den = parse_rational(text.substr(slash + 1));
        if (den == 0) throw InputError("zero denominator in '" + text + "'");
        return num / den;
    }
    std::string mant = text;
    long exp10 = 0;
    const auto e = text.find_first_of("eE");
    if (e != std::string::npos) {
        mant = text.substr(0, e);
        try {
            exp10 = std::stol(text.substr(e + 1));
        } catch (const std::exception&) {
            throw InputError("bad exponent in '" + text + "'");
        }
    }
    bool neg = false;
    std::size_t i = 0;
    if (i < mant.size() && (mant[i] == '-' || mant[i] == '+')) neg = mant[i++] == '-';
    boost::multiprecision::cpp_int digits = 0;
    long frac = 0;
    bool dot = false, any = false;
    for (; i < mant.size(); ++i) {
        const char c = mant[i];
        if (c == '.' && !dot) {
            dot = true;
        } else if (c >= '0' && c <= '9') {
            digits = digits * 10 + (c - '0');
            any = true;
            if (dot) ++frac;
        } else {
            throw InputError("bad number '" + text + "' at position " + std::to_string(i));
        }
    }
    if (!any) throw InputError("bad number '" + text + "'");
    Rational r(digits);
    const long shift = exp10 - frac;
    for (long k = 0; k < std::labs(shift); ++k) r = shift > 0 ? Rational(r * 10) : Rational(r / 10);
    return neg ? -r : r;
}

// "0.5" for every color, or "1:0.5,2:-0.25".
struct GammaInput {
    std::map<int, Rational> per_color;
    std::optional<Rational> all;

    Rational of(int color) const {
        auto it = per_color.find(color);
        if (it != per_color.end()) return it->second;
        if (all) return *all;
        throw InputError("no gamma given for color " + std::to_string(color));
    }
};

GammaInput parse_gamma(const std::string& text) {
    GammaInput g;
    if (text.find(':') == std::string::npos) {
        g.all = parse_rational(text);
    } else {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto colon = item.find(':');
            if (colon == std::string::npos) throw InputError("gamma entry '" + item + "' lacks 'color:'");
            int color = 0;
            try {
                color = std::stoi(item.substr(0, colon));
            } catch (const std::exception&) {
                throw InputError("bad color in gamma entry '" + item + "'");
            }
            g.per_color[color] = parse_rational(item.substr(colon + 1));
        }
    }
    auto check = [](const Rational& r) {
        if (r > 1 || r < -1) throw InputError("gamma must lie in [-1, 1]");
    };
    if (g.all) check(*g.all);
    for (const auto& [c, r] : g.per_color) check(r);
    return g;
}

std::set<int> colors_of(const GammaPoly& p) {
    std::set<int> out;
    for (const auto& [m, c] : p.terms())
        for (auto [color, e] : m) out.insert(color);
    return out;
}

std::map<int, Rational> gamma_map(const GammaInput& g, const std::set<int>& colors) {
    std::map<int, Rational> out;
    for (int c : colors) out[c] = g.of(c);
    return out;
}

json rational_json(const Rational& r) {
    std::ostringstream os;
    os << r;
    return {{"exact", os.str()}, {"value", static_cast<double>(r)}};
}

Word apply_colors(Word w, const std::string& colors) {
    if (colors.empty()) return w;
    std::vector<int> c;
    std::stringstream ss(colors);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            c.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw InputError("bad color '" + item + "'");
        }
    }
    if (c.size() != w.size())
        throw InputError("color list has " + std::to_string(c.size()) + " entries for " + std::to_string(w.size()) +
                         " letters");
    w.colors = std::move(c);
    return w;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct EnumerateArgs {
    int p = 1, q = 1;
    int spokes = 0;
    bool decompose = false;
    std::string format = "json";
};

int cmd_enumerate(const EnumerateArgs& a) {
    if (a.p < 1 || a.q < 1) throw InputError("--p and --q must be at least 1");
    if (a.p + a.q > 14) throw ResourceError("p+q = " + std::to_string(a.p + a.q) + " exceeds the enumeration cap 14");
    const AnnularFrame frame(a.p, a.q);
    std::vector<Pairing> rows;
    for (auto& pi : enumerate_nc2_annular(frame))
        if (a.spokes == 0 || spoke_count(pi, frame) == a.spokes) rows.push_back(std::move(pi));
    if (a.format == "csv") {
        std::cout << "index,pairs,spokes\n";
        for (std::size_t i = 0; i < rows.size(); ++i)
            std::cout << i + 1 << ",\"" << rows[i].to_string() << "\"," << spoke_count(rows[i], frame) << "\n";
        return kExitOk;
    }
    RunManifest m;
    m.command = "enumerate";
    m.params = {{"p", a.p}, {"q", a.q}, {"spokes", a.spokes}, {"decompose", a.decompose}};
    json list = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        json row = {{"index", i + 1}, {"pairs", to_json(rows[i])}, {"spokes", spoke_count(rows[i], frame)}};
        if (a.decompose) row["decomposition"] = to_json(decompose(rows[i], frame));
        list.push_back(row);
    }
    emit({{"manifest", to_json(m)}, {"count", rows.size()}, {"diagrams", list}});
    return kExitOk;
}

struct CovArgs {
    std::string family = "pure";
    int p = 1, q = 1;
    std::string tau_inner, tau_outer, colors_inner, colors_outer;
    std::string channel = "complex";
    std::string method = "semiclosed";
    std::string gamma;
    bool symbolic = false;
    int N = 0;
    int reps = 20000;
    std::uint64_t seed = 20240917;
    std::string check;
    int threads = 1;
};

WordPair cov_words(const CovArgs& a) {
    if (a.family == "custom") {
        if (a.tau_inner.empty() || a.tau_outer.empty())
            throw InputError("--family custom needs --tau-inner and --tau-outer");
        return {apply_colors(parse_word(a.tau_inner), a.colors_inner),
                apply_colors(parse_word(a.tau_outer), a.colors_outer)};
    }
    if (!a.tau_inner.empty() || !a.tau_outer.empty())
        throw InputError("--tau-inner/--tau-outer only apply to --family custom");
    return family_words(parse_family(a.family), a.p, a.q);
}

struct MethodResult {
    json out;
    std::optional<GammaPoly> poly;     // limit methods
    std::optional<NExpansion> expansion;
    std::optional<CovEstimate> estimate;
};

MethodResult run_method(const std::string& method, const CovArgs& a, const WordPair& wp, Channel ch,
                        const std::optional<GammaInput>& gamma) {
    MethodResult r;
    auto with_value = [&](const GammaPoly& p) {
        json j = {{"poly", to_json(p)}, {"text", p.to_string()}};
        if (gamma && !a.symbolic) j["value"] = rational_json(p.evaluate_exact(gamma_map(*gamma, colors_of(p))));
        return j;
    };
    if (method == "closed") {
        if (a.family == "custom") throw InputError("--method closed needs a named family");
        r.poly = cov_limit_closed(parse_family(a.family), a.p, a.q, ch);
        r.out = with_value(*r.poly);
    } else if (method == "semiclosed") {
        r.poly = cov_limit_semiclosed(wp, ch);
        r.out = with_value(*r.poly);
    } else if (method == "oracle") {
        r.expansion = exact_cov(wp.inner, wp.outer, ch);
        r.poly = r.expansion->coefficient(0);
        r.out = {{"expansion", to_json(*r.expansion)}, {"text", r.expansion->to_string()}};
        if (gamma && a.N > 0 && !a.symbolic) {
            std::set<int> colors;
            for (const auto& [e, c] : r.expansion->terms())
                for (int k : colors_of(c)) colors.insert(k);
            r.out["N"] = a.N;
            r.out["value"] = rational_json(r.expansion->evaluate_exact(Rational(a.N), gamma_map(*gamma, colors)));
        }
    } else if (method == "mc") {
        if (!gamma) throw InputError("--method mc needs a numeric --gamma");
        if (a.symbolic) throw InputError("--method mc cannot be symbolic");
        if (a.N < 2) throw InputError("--method mc needs --N >= 2");
        if (a.reps < 100) throw InputError("--reps must be at least 100");
        EnsembleSpec spec;
        spec.N = a.N;
        spec.channel = ch;
        spec.seed = a.seed;
        spec.threads = a.threads;
        if (gamma->all) spec.default_gamma = static_cast<double>(*gamma->all);
        std::set<int> colors(wp.inner.colors.begin(), wp.inner.colors.end());
        colors.insert(wp.outer.colors.begin(), wp.outer.colors.end());
        for (int c : colors) spec.gamma[c] = static_cast<double>(gamma->of(c));
        r.estimate = estimate_cov(spec, wp.inner, wp.outer, a.reps);
        r.out = to_json(*r.estimate);
    } else {
        throw InputError("unknown method '" + method + "'");
    }
    return r;
}

int cmd_cov(const CovArgs& a) {
    const Channel ch = parse_channel(a.channel);
    const WordPair wp = cov_words(a);
    if (a.symbolic && !a.gamma.empty()) throw InputError("--symbolic and --gamma are exclusive");
    std::optional<GammaInput> gamma;
    if (!a.gamma.empty()) gamma = parse_gamma(a.gamma);

    RunManifest m;
    m.command = "cov";
    m.seed = a.seed;
    m.params = {{"family", a.family},
                {"p", static_cast<int>(wp.inner.size())},
                {"q", static_cast<int>(wp.outer.size())},
                {"inner", format_word(wp.inner)},
                {"outer", format_word(wp.outer)},
                {"channel", a.channel},
                {"method", a.method},
                {"gamma", a.gamma.empty() ? json(nullptr) : json(a.gamma)},
                {"symbolic", a.symbolic}};
    if (a.family != "custom") {
        m.params["p"] = a.p;
        m.params["q"] = a.q;
    }
    if (a.method == "mc" || a.method == "oracle") m.params["N"] = a.N;
    if (a.method == "mc") m.params["reps"] = a.reps;

    auto primary = run_method(a.method, a, wp, ch, gamma);
    json doc = {{"manifest", to_json(m)}, {"result", primary.out}};
    int code = kExitOk;
    if (!a.check.empty()) {
        if (a.check == a.method) throw InputError("--check must name a different method");
        auto other = run_method(a.check, a, wp, ch, gamma);
        json check = {{"method", a.check}, {"result", other.out}};
        bool agree = false;
        const MethodResult* mc = primary.estimate ? &primary : other.estimate ? &other : nullptr;
        if (mc) {
            const MethodResult& ref = mc == &primary ? other : primary;
            if (a.check != "oracle" && a.method != "oracle")
                throw InputError("Monte Carlo can only be checked against the oracle at the same N");
            std::set<int> colors;
            for (const auto& [e, c] : ref.expansion->terms())
                for (int k : colors_of(c)) colors.insert(k);
            const double exact = static_cast<double>(ref.expansion->evaluate_exact(Rational(a.N), gamma_map(*gamma, colors)));
            const double dev = std::abs(mc->estimate->estimate - cplx(exact));
            agree = dev <= 4.0 * mc->estimate->se;
            check["deviation"] = dev;
            check["tolerance"] = 4.0 * mc->estimate->se;
        } else {
            agree = *primary.poly == *other.poly;
        }
        check["agree"] = agree;
        doc["check"] = check;
        if (!agree) code = kExitVerify;
    }
    emit(doc);
    return code;
}

struct VerifyArgs {
    std::string suite = "all";
    int max_letters = 10;
    std::string grid;
    std::string report;
};

int cmd_verify(const VerifyArgs& a) {
    if (a.max_letters < 2 || a.max_letters > kRealLetterCap)
        throw ResourceError("--max-letters must lie in [2, " + std::to_string(kRealLetterCap) + "]");
    VerifyOptions opt;
    opt.max_letters = a.max_letters;
    RunManifest m;
    m.command = "verify";
    m.seed = opt.corpus_seed;
    m.params = {{"suite", a.suite}, {"max_letters", a.max_letters}};
    json doc = {{"manifest", to_json(m)}};
    bool ok = true;
    bool rejected = false;
    if (!a.grid.empty()) {
        std::ifstream in(a.grid);
        if (!in) throw InputError("cannot open grid file '" + a.grid + "'");
        json g;
        try {
            g = json::parse(in);
        } catch (const json::exception& e) {
            throw InputError(std::string("grid file: ") + e.what());
        }
        const auto report = verify_second_order_freeness(freeness_grid_from_json(g));
        doc["freeness"] = to_json(report);
        ok = report.ok();
        rejected = report.rejected > 0;
    } else {
        json suites = json::array();
        for (const auto& r : run_suite(a.suite, opt)) {
            suites.push_back(to_json(r));
            ok = ok && r.ok();
            std::cerr << (r.ok() ? "PASS " : "FAIL ") << r.suite << " (" << r.passed() << "/" << r.checks.size()
                      << ", " << r.seconds << " s)\n";
        }
        doc["suites"] = suites;
    }
    doc["ok"] = ok;
    if (!a.report.empty()) {
        std::ofstream out(a.report);
        out << doc.dump(2) << "\n";
    } else {
        emit(doc);
    }
    if (!ok) return kExitVerify;
    return rejected ? kExitInput : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"annular diagrams, covariance limits and Monte Carlo for elliptic matrices"};
    app.set_version_flag("--version", std::string(EFLUCT_VERSION));
    app.require_subcommand(1);
    int threads = default_threads();
    app.add_option("--threads", threads, "worker threads (default: $EFLUCT_THREADS or logical cores)")
        ->check(CLI::PositiveNumber);

    EnumerateArgs ea;
    auto* en = app.add_subcommand("enumerate", "list NC_2(p,q)");
    en->add_option("--p", ea.p, "inner points")->required();
    en->add_option("--q", ea.q, "outer points")->required();
    en->add_option("--spokes", ea.spokes, "keep diagrams with exactly this many spokes");
    en->add_flag("--decompose", ea.decompose, "attach spoke-arc decompositions");
    en->add_option("--format", ea.format)->check(CLI::IsMember({"json", "csv"}));

    CovArgs ca;
    auto* cv = app.add_subcommand("cov", "covariance of two traces");
    cv->add_option("--family", ca.family)->check(CLI::IsMember({"pure", "pure-adjoint", "alternating", "custom"}));
    cv->add_option("--p", ca.p, "inner length (cycle count for alternating)");
    cv->add_option("--q", ca.q, "outer length (cycle count for alternating)");
    cv->add_option("--tau-inner", ca.tau_inner, "inner word, e.g. 'x s x1 s2'");
    cv->add_option("--tau-outer", ca.tau_outer, "outer word");
    cv->add_option("--colors-inner", ca.colors_inner, "comma-separated colors for the inner word");
    cv->add_option("--colors-outer", ca.colors_outer, "comma-separated colors for the outer word");
    cv->add_option("--channel", ca.channel)->check(CLI::IsMember({"complex", "real"}));
    cv->add_option("--method", ca.method)->check(CLI::IsMember({"closed", "semiclosed", "oracle", "mc"}));
    cv->add_option("--gamma", ca.gamma, "decimal for all colors, or 'c:g,...'");
    cv->add_flag("--symbolic", ca.symbolic, "keep gamma symbolic");
    cv->add_option("--N", ca.N, "matrix size (oracle value, mc)");
    cv->add_option("--reps", ca.reps, "Monte Carlo replicates");
    cv->add_option("--seed", ca.seed, "Monte Carlo master seed");
    cv->add_option("--check", ca.check, "second method to cross-compare")
        ->check(CLI::IsMember({"closed", "semiclosed", "oracle", "mc"}));

    VerifyArgs va;
    auto* vf = app.add_subcommand("verify", "run property suites");
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    vf->add_option("--suite", va.suite)->check(CLI::IsMember(suites));
    vf->add_option("--max-letters", va.max_letters, "letter cap for the oracle corpus");
    vf->add_option("--grid", va.grid, "freeness grid JSON file");
    vf->add_option("--report", va.report, "write the JSON report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        ca.threads = threads;
        if (*en) return cmd_enumerate(ea);
        if (*cv) return cmd_cov(ca);
        if (*vf) return cmd_verify(va);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kExitVerify;
    }
    return kExitInput;
}
