// nschur: command-line front end to the N-Schur engine.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nschur/parse.hpp"
#include "nschur/verify.hpp"

using namespace nschur;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kConfigError = 2, kSingular = 3 };

struct Options {
    std::uint64_t seed = kDefaultSeed;
    std::optional<int> count;
    std::optional<double> tolerance;
    int jobs = 1;
    int depth = PsiDO::kDefaultDepth;
    std::optional<int> K;
    std::optional<int> m;
    std::string output;
    std::string format = "json";
};

struct Result {
    json payload;
    int code = kOk;
    std::string text;  // rendering for --format text
};

json header(const std::string& check, const std::string& status, const Options& o) {
    return {{"schema_version", kSchemaVersion}, {"check", check}, {"status", status}, {"seed", o.seed},
            {"convention_flags", convention_flags()}};
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw ParseError("empty entry in list '" + text + "'");
        item = item.substr(b, e - b + 1);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw ParseError("not an integer: '" + item + "'");
        }
        if (used != item.size()) throw ParseError("not an integer: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

HModel load_model(const std::string& spec, int N, const Options& o, int sign, const VirtualSequence& s) {
    if (spec == "formal") return HModel::formal(N, o.K);
    if (spec == "exponential") {
        if (N != 1) throw InvalidRange("the exponential model has N = 1");
        return HModel::exponential(o.K.value_or(std::max(1, s.weight() + s.stable_from())), sign);
    }
    std::ifstream in(spec);
    if (!in) throw ParseError("model must be formal, exponential or a readable JSON file: '" + spec + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("model file: ") + e.what());
    }
    HModel m = HModel::from_json(j);
    if (m.N() != N) throw InvalidRange("model has N = " + std::to_string(m.N()) + ", expected " + std::to_string(N));
    return m;
}

Result cmd_nschur(int N, const std::string& seq, const std::string& model_spec, int sign, const Options& o) {
    VirtualSequence s(parse_int_list(seq));
    HModel model = load_model(model_spec, N, o, sign, s);
    RationalFunction f = nschur::nschur(s, model, o.m);
    json j = header("nschur", "ok", o);
    j["N"] = N;
    j["sequence"] = s.to_string();
    j["partition"] = to_partition(s).to_string();
    j["weight"] = s.weight();
    j["m"] = o.m.value_or(stabilization_m(s, N));
    j["model"] = model.to_json();
    j["value"] = f.to_string();
    j["value_json"] = to_json(f);
    return {j, kOk, f.to_string()};
}

Result cmd_enumerate(const std::vector<int>& grassmann, std::optional<int> weight_max, const Options& o) {
    if (grassmann.empty() == !weight_max) throw InvalidRange("give exactly one of --grassmann K N and --weight-max W");
    json entries = json::array();
    std::ostringstream text;
    if (!grassmann.empty()) {
        const int k = grassmann[0], n = grassmann[1];
        for (const auto& s : enumerate_Skn(k, n)) {
            auto label = subset_label(s, k, n);
            entries.push_back({{"sequence", s.to_string()}, {"weight", s.weight()},
                               {"partition", to_partition(s).to_string()}, {"label", label}});
            text << "(" << s.to_string() << ")  weight " << s.weight() << "  label " << subset_string(label) << "\n";
        }
    } else {
        for (const auto& s : enumerate_by_weight(*weight_max)) {
            entries.push_back({{"sequence", s.to_string()}, {"weight", s.weight()}, {"partition", to_partition(s).to_string()}});
            text << "(" << s.to_string() << ")  weight " << s.weight() << "\n";
        }
    }
    json j = header("enumerate", "ok", o);
    j["count"] = entries.size();
    j["entries"] = entries;
    return {j, kOk, text.str()};
}

Result cmd_relations(int k, int n, const Options& o) {
    auto rels = exchange_relations(k, n);
    json list = json::array();
    std::string text;
    for (const auto& r : rels) {
        list.push_back(r.to_string());
        text += r.to_string() + "\n";
    }
    json j = header("pluecker/relations", "ok", o);
    j["k"] = k;
    j["n"] = n;
    j["relations"] = list;
    j["rank"] = relation_rank(rels);
    return {j, kOk, text};
}

PluckerVector<BigRational> parse_coords(int k, int n, const std::string& text) {
    // "12=1,34=-2/3"; subset entries are single digits
    PluckerVector<BigRational> v{k, n, {}};
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("expected subset=value, got '" + item + "'");
        Subset s;
        for (char c : item.substr(0, eq)) {
            if (c == ' ') continue;
            if (c < '1' || c > '9') throw ParseError("bad subset '" + item.substr(0, eq) + "'");
            s.push_back(c - '0');
        }
        if (static_cast<int>(s.size()) != k) throw InvalidRange("subset size must be k");
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] > n || (i && s[i] <= s[i - 1])) throw InvalidRange("subset entries must increase within 1..n");
        v.coords[s] = parse_rational_function(item.substr(eq + 1)).constant_value();
    }
    return v;
}

Result cmd_check(int k, int n, const std::string& coords, const std::string& input, const Options& o) {
    PluckerVector<BigRational> v;
    if (!input.empty()) {
        std::ifstream in(input);
        if (!in) throw ParseError("cannot read '" + input + "'");
        try {
            v = plucker_from_json(json::parse(in));
        } catch (const json::exception& e) {
            throw ParseError(std::string("coordinates file: ") + e.what());
        }
    } else {
        v = parse_coords(k, n, coords);
    }
    json res = json::array();
    bool ok = true;
    if (v.k > 0 && v.k < v.n)
        for (const auto& r : exchange_relations(v.k, v.n)) {
            BigRational val = r.evaluate(v.coords);
            ok = ok && val == 0;
            res.push_back({{"relation", r.to_string()}, {"value", to_string(val)}});
        }
    json j = header("pluecker/check", ok ? "pass" : "fail", o);
    j["coordinates"] = to_json(v);
    j["residuals"] = res;
    return {j, ok ? kOk : kCheckFailed, ok ? "satisfied\n" : "violated\n"};
}

Result cmd_pdo(const std::string& action, const std::string& a, const std::string& b, int flow, int sign, const Options& o) {
    PsiDO A = parse_psido(a);  // literals are exact; --depth bounds the computation
    PsiDO out;
    json j = header("pdo/" + action, "ok", o);
    if (action == "compose") {
        out = compose(A, parse_psido(b)).truncated(o.depth);
    } else if (action == "root") {
        out = nth_root(A, o.depth);
        j["n"] = A.order();
    } else {
        out = lax_residual(A, flow, sign, o.depth);
        j["flow"] = flow;
        j["sign"] = sign;
        j["zero"] = out.is_zero();
    }
    j["depth"] = o.depth;
    j["result"] = out.to_string();
    j["result_json"] = to_json(out);
    return {j, kOk, out.to_string()};
}

Result cmd_hirota(const std::string& tau, const Options& o) {
    Polynomial r = hirota_residual(parse_polynomial(tau));
    json j = header("hirota", "ok", o);
    j["tau"] = tau;
    j["residual"] = r.to_string();
    j["zero"] = r.is_zero();
    return {j, kOk, r.to_string()};
}

Result cmd_kp(const std::string& u, const std::string& tau, const Options& o) {
    if (u.empty() == tau.empty()) throw InvalidRange("give exactly one of --u and --tau");
    RationalFunction field = u.empty() ? tau_to_u(parse_rational_function(tau)) : parse_rational_function(u);
    RationalFunction r = kp_residual(field);
    json j = header("kp", "ok", o);
    j["u"] = field.to_string();
    j["residual"] = r.to_string();
    j["zero"] = r.is_zero();
    return {j, kOk, r.to_string()};
}

std::string verify_text(const json& j) {
    std::ostringstream os;
    os << j.at("check").get<std::string>() << ": " << j.at("status").get<std::string>() << "\n";
    for (const auto& [key, value] : j.items())
        if (key != "check" && key != "status" && key != "residuals" && key != "convention_flags") os << "  " << key << ": " << value.dump() << "\n";
    return os.str();
}

Result cmd_verify(const std::string& suite, const Options& o) {
    VerifyConfig cfg;
    cfg.seed = o.seed;
    cfg.count = o.count;
    cfg.tolerance = o.tolerance;
    cfg.jobs = o.jobs;
    cfg.depth = o.depth;
    cfg.K = o.K.value_or(6);
    json j = run_verify(suite, cfg);
    const bool pass = j.at("status") == "pass";
    return {j, pass ? kOk : kCheckFailed, verify_text(j)};
}

int emit(const Result& r, const Options& o) {
    std::string body = o.format == "text" ? r.text : r.payload.dump(2);
    if (!body.empty() && body.back() != '\n') body += '\n';
    if (o.output.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(o.output, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << o.output << "\n";
            return kConfigError;
        }
        out << body;
    }
    return r.code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact N-Schur functions, Plucker relations, PsiDO calculus and KP checks"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--seed", o.seed, "root seed for randomized suites")->envname("NSCHUR_SEED");
    app.add_option("--count", o.count, "number of random instances")->check(CLI::PositiveNumber);
    app.add_option("--tolerance", o.tolerance, "numeric tolerance")->check(CLI::PositiveNumber);
    app.add_option("--jobs", o.jobs, "worker threads (results keep their order)")->check(CLI::PositiveNumber);
    app.add_option("--depth", o.depth, "PsiDO truncation depth")->check(CLI::PositiveNumber);
    app.add_option("--K", o.K, "h-support / Taylor order")->check(CLI::NonNegativeNumber);
    app.add_option("--m", o.m, "override of the block count m")->check(CLI::PositiveNumber);
    app.add_option("--output", o.output, "write the report here instead of stdout");
    app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

    std::function<Result()> action;

    auto* ns = app.add_subcommand("nschur", "compute f_S^N");
    int N = 1, sign = 1;
    std::string seq, model = "formal";
    ns->add_option("--n", N, "matrix size N")->check(CLI::PositiveNumber);
    ns->add_option("--sequence", seq, "comma-separated prefix s_0,...,s_r")->required();
    ns->add_option("--model", model, "formal | exponential | path to a model JSON");
    ns->add_option("--sign", sign, "sign of the exponential model")->check(CLI::IsMember({1, -1}));
    ns->callback([&] { action = [&] { return cmd_nschur(N, seq, model, sign, o); }; });

    auto* en = app.add_subcommand("enumerate", "list sequences of S_{k,n} or by weight");
    std::vector<int> grassmann;
    std::optional<int> weight_max;
    en->add_option("--grassmann", grassmann, "k n")->expected(2);
    en->add_option("--weight-max", weight_max, "largest weight");
    en->callback([&] { action = [&] { return cmd_enumerate(grassmann, weight_max, o); }; });

    auto* pl = app.add_subcommand("pluecker", "Grassmannian Plucker relations");
    pl->require_subcommand(1);
    int pk = 2, pn = 4;
    std::string coords, input;
    auto* rel = pl->add_subcommand("relations", "list the exchange relations of Gr(k,n)");
    rel->add_option("--k", pk)->required();
    rel->add_option("--n", pn)->required();
    rel->callback([&] { action = [&] { return cmd_relations(pk, pn, o); }; });
    auto* chk = pl->add_subcommand("check", "test coordinates against the relations");
    chk->add_option("--k", pk);
    chk->add_option("--n", pn);
    chk->add_option("--coords", coords, "e.g. 12=1,34=1");
    chk->add_option("--input", input, "JSON coordinates file");
    chk->callback([&] { action = [&] { return cmd_check(pk, pn, coords, input, o); }; });

    auto* pdo = app.add_subcommand("pdo", "pseudo-differential operators (terms exp:coeff;...)");
    pdo->require_subcommand(1);
    std::string opA, opB;
    int flow = 1, lax_sign = kDefaultBracketSign;
    auto* cmp = pdo->add_subcommand("compose", "A o B");
    cmp->add_option("--a", opA)->required();
    cmp->add_option("--b", opB)->required();
    cmp->callback([&] { action = [&] { return cmd_pdo("compose", opA, opB, 0, 0, o); }; });
    auto* rt = pdo->add_subcommand("root", "N-th root of a monic operator of order N");
    rt->add_option("--op", opA)->required();
    rt->callback([&] { action = [&] { return cmd_pdo("root", opA, "", 0, 0, o); }; });
    auto* lx = pdo->add_subcommand("lax", "Lax-flow residual");
    lx->add_option("--op", opA)->required();
    lx->add_option("--flow", flow)->check(CLI::PositiveNumber);
    lx->add_option("--sign", lax_sign)->check(CLI::IsMember({1, -1}));
    lx->callback([&] { action = [&] { return cmd_pdo("lax", opA, "", flow, lax_sign, o); }; });

    auto* hi = app.add_subcommand("hirota", "bilinear KP residual of a polynomial tau");
    std::string tau, u;
    hi->add_option("--tau", tau)->required();
    hi->callback([&] { action = [&] { return cmd_hirota(tau, o); }; });

    auto* kp = app.add_subcommand("kp", "KP residual of u, or of u = 2 (log tau)_xx");
    kp->add_option("--u", u);
    kp->add_option("--tau", tau);
    kp->callback([&] { action = [&] { return cmd_kp(u, tau, o); }; });

    auto* ve = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    ve->add_option("--suite", suite)->required()->check(CLI::IsMember(verify_suites()));
    ve->callback([&] { action = [&] { return cmd_verify(suite, o); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kConfigError;
    }

    try {
        return emit(action(), o);
    } catch (const SingularH0& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kSingular;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kConfigError;
    } catch (const InvalidRange& e) {
        std::cerr << "invalid range: " << e.what() << "\n";
        return kConfigError;
    } catch (const NotInSkn& e) {
        std::cerr << "invalid range: " << e.what() << "\n";
        return kConfigError;
    } catch (const NonMonic& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kCheckFailed;
    }
}
