// qweyl: Weyl groupoids of braidings of diagonal type on the command line.
// Subcommands cover the orbit, root systems, linkage data, block partitions,
// characters, the affine dot action, and a self-check suite.
//
// Exit codes: 0 success, 1 domain error (stable error name on stderr),
// 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "qweyl/catalog.hpp"
#include "qweyl/verification.hpp"

using nlohmann::json;
using namespace qweyl;

namespace {

bool g_json = false;

constexpr const char* kSchema = "qweyl/1";

struct EntryOptions {
    std::string catalog;
    std::vector<std::string> params;
    std::string file;
};

void add_entry_options(CLI::App* cmd, EntryOptions& opt) {
    cmd->add_option("--catalog", opt.catalog, "Catalog key (list them with `qweyl catalog`)");
    cmd->add_option("--param", opt.params, "Catalog parameter key=value (repeatable)");
    cmd->add_option("--file", opt.file, "Braiding matrix JSON file");
    cmd->add_flag("--json", g_json, "Machine-readable JSON on stdout");
}

BraidingMatrix resolve_entry(const EntryOptions& opt) {
    if (!opt.catalog.empty() && !opt.file.empty())
        throw UsageError("pass either --catalog or --file, not both");
    if (!opt.catalog.empty()) {
        ParamMap params;
        for (const std::string& p : opt.params) {
            auto eq = p.find('=');
            if (eq == std::string::npos)
                throw UsageError("--param expects key=value, got '" + p + "'");
            params[p.substr(0, eq)] = p.substr(eq + 1);
        }
        return catalog_matrix(opt.catalog, params);
    }
    if (!opt.file.empty()) return load_matrix_file(opt.file);
    throw UsageError("pass --catalog KEY or --file PATH");
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, sep)) out.push_back(item);
    if (!text.empty() && text.back() == sep) out.push_back("");
    return out;
}

long long parse_int(const std::string& text) {
    try {
        size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError("expected an integer, got '" + text + "'");
    }
}

Weight parse_weight(const std::string& text, size_t theta) {
    std::vector<long long> c;
    for (const std::string& item : split(text, ',')) c.push_back(parse_int(item));
    if (c.size() != theta)
        throw UsageError("expected " + std::to_string(theta) + " comma-separated coordinates");
    return Weight(std::move(c));
}

// Words use 1-based generator indices on the outside.
std::vector<int> parse_word(const std::string& text, size_t theta) {
    std::vector<int> out;
    if (text.empty()) return out;
    for (const std::string& item : split(text, ',')) {
        long long g = parse_int(item);
        if (g < 1 || static_cast<size_t>(g) > theta)
            throw UsageError("generator index " + item + " outside 1.." + std::to_string(theta));
        out.push_back(static_cast<int>(g - 1));
    }
    return out;
}

TorusCharacter parse_pi(const std::string& text, size_t theta) {
    if (text.empty()) return TorusCharacter::trivial(theta);
    auto items = split(text, ',');
    if (items.size() != 2 * theta)
        throw UsageError("--pi expects " + std::to_string(2 * theta) +
                         " rotation exponents a/N: values on K_1..K_t, then L_1..L_t");
    TorusCharacter pi = TorusCharacter::trivial(theta);
    for (size_t i = 0; i < theta; ++i) pi.k[i] = RootOfUnity::parse(items[i]);
    for (size_t i = 0; i < theta; ++i) pi.l[i] = RootOfUnity::parse(items[theta + i]);
    return pi;
}

WeightBox parse_window(const std::string& text, size_t theta) {
    auto halves = split(text, ';');
    if (halves.size() != 2)
        throw UsageError("--window expects 'lo1,..,lok;hi1,..,hik'");
    WeightBox box{parse_weight(halves[0], theta), parse_weight(halves[1], theta)};
    if (!leq(box.lo, box.hi)) throw UsageError("--window lower corner exceeds upper corner");
    return box;
}

json weight_json(const Weight& w) {
    json a = json::array();
    for (long long c : w.coords()) a.push_back(c);
    return a;
}

json word_json(const std::vector<int>& word) {
    json a = json::array();
    for (int g : word) a.push_back(g + 1);
    return a;
}

std::string word_str(const std::vector<int>& word) {
    if (word.empty()) return "id";
    std::string s;
    for (int g : word) s += (s.empty() ? "s" : " s") + std::to_string(g + 1);
    return s;
}

json matrix_json_rows(const BraidingMatrix& q) {
    json rows = json::array();
    for (size_t i = 0; i < q.theta(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < q.theta(); ++j) row.push_back(q.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

json character_json(const FormalCharacter& ch) {
    json terms = json::array();
    for (const auto& [mu, c] : ch.terms())
        terms.push_back(json{{"weight", weight_json(mu)}, {"coeff", c}});
    return json{{"terms", terms},
                {"term_count", ch.term_count()},
                {"coefficient_sum", ch.coefficient_sum()}};
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

// ---- subcommand handlers ----

void run_catalog() {
    if (g_json) {
        json keys = json::array();
        for (const auto& k : catalog_keys()) keys.push_back(k);
        emit(json{{"schema", kSchema}, {"command", "catalog"}, {"keys", keys}});
        return;
    }
    for (const auto& k : catalog_keys()) std::cout << k << "\n";
}

void run_orbit(const EntryOptions& entry) {
    Groupoid g = Groupoid::orbit(resolve_entry(entry));
    auto edges = g.edges();
    if (g_json) {
        json objects = json::array();
        for (size_t i = 0; i < g.size(); ++i)
            objects.push_back(json{{"index", i}, {"matrix", matrix_json_rows(g.object(i))}});
        json es = json::array();
        for (const auto& e : edges)
            es.push_back(json{{"from", e.from}, {"gen", e.gen + 1}, {"to", e.to}});
        emit(json{{"schema", kSchema},
                  {"command", "orbit"},
                  {"object_count", g.size()},
                  {"objects", objects},
                  {"edges", es}});
        return;
    }
    std::cout << g.size() << " objects\n";
    for (size_t i = 0; i < g.size(); ++i)
        std::cout << "[" << i << "] " << g.object(i).str() << "\n";
    for (const auto& e : edges)
        std::cout << e.from << " --s" << e.gen + 1 << "-- " << e.to << "\n";
}

void run_roots(const EntryOptions& entry, long long object) {
    Groupoid g = Groupoid::orbit(resolve_entry(entry));
    if (object < 0 || static_cast<size_t>(object) >= g.size())
        throw UsageError("--object outside 0.." + std::to_string(g.size() - 1));
    auto hom = hom_into(g, static_cast<int>(object));
    RootSystemData rs = compute_root_system(g, static_cast<int>(object), hom);
    Int dim = 1;
    for (long long b : rs.bounds) dim *= b;
    if (g_json) {
        json roots = json::array();
        for (size_t r = 0; r < rs.positive_roots.size(); ++r)
            roots.push_back(json{{"root", weight_json(rs.positive_roots[r])},
                                 {"bound", rs.bounds[r]},
                                 {"cartan", static_cast<bool>(rs.is_cartan[r])},
                                 {"word", word_json(rs.presentations[r].w.word)},
                                 {"simple", rs.presentations[r].simple + 1}});
        emit(json{{"schema", kSchema},
                  {"command", "roots"},
                  {"object", object},
                  {"positive_roots", roots},
                  {"beta_top", weight_json(rs.beta_top)},
                  {"longest_word", word_json(rs.w0.word)},
                  {"dim_negative_part", dim.str()}});
        return;
    }
    std::cout << rs.positive_roots.size() << " positive roots at object " << object << "\n";
    for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
        std::cout << rs.positive_roots[r].str() << "  bound " << rs.bounds[r] << "  "
                  << (rs.is_cartan[r] ? "cartan" : "      ") << "  = (" << word_str(rs.presentations[r].w.word)
                  << ")(alpha_" << rs.presentations[r].simple + 1 << ")\n";
    }
    std::cout << "beta_top = " << rs.beta_top.str() << "  (twice the half-sum varrho)\n";
    std::cout << "longest word: " << word_str(rs.w0.word) << "\n";
    std::cout << "dim of the negative part: " << dim.str() << "\n";
}

void run_linkage(const EntryOptions& entry, const std::string& mu_text,
                 const std::string& pi_text) {
    BraidingMatrix q = resolve_entry(entry);
    Groupoid g = Groupoid::orbit(q);
    auto hom = hom_into(g, 0);
    RootSystemData rs = compute_root_system(g, 0, hom);
    Weight mu = parse_weight(mu_text, q.theta());
    TorusCharacter pi = parse_pi(pi_text, q.theta());
    Atypicality a = atypicality(q, rs, pi, mu);
    auto linked = strongly_linked_set(q, rs, pi, mu);
    if (g_json) {
        json roots = json::array();
        for (const Weight& beta : rs.positive_roots) {
            long long n = n_beta(q, rs, pi, mu, beta);
            roots.push_back(json{{"root", weight_json(beta)},
                                 {"bound", rs.bound_of(beta)},
                                 {"n", n},
                                 {"down", weight_json(mu - beta * n)}});
        }
        json sl = json::array();
        for (const auto& lw : linked) {
            json chain = json::array();
            for (const auto& [beta, n] : lw.chain)
                chain.push_back(json{{"beta", weight_json(beta)}, {"n", n}});
            sl.push_back(json{{"lambda", weight_json(lw.lambda)}, {"chain", chain}});
        }
        emit(json{{"schema", kSchema},
                  {"command", "linkage"},
                  {"mu", weight_json(mu)},
                  {"degree", a.degree},
                  {"typical", a.typical()},
                  {"roots", roots},
                  {"strongly_linked", sl}});
        return;
    }
    std::cout << "mu = " << mu.str() << ": atypicality degree " << a.degree
              << (a.typical() ? " (typical; the standard module is simple)" : "") << "\n";
    for (const Weight& beta : rs.positive_roots) {
        long long n = n_beta(q, rs, pi, mu, beta);
        std::cout << beta.str() << "  n = " << n;
        if (n != 0) std::cout << "  down-arrow to " << (mu - beta * n).str();
        std::cout << "\n";
    }
    std::cout << "strongly linked: " << linked.size() << " weights\n";
    for (const auto& lw : linked) {
        std::cout << "  " << lw.lambda.str();
        if (!lw.chain.empty()) {
            std::cout << "  via";
            for (const auto& [beta, n] : lw.chain) std::cout << " (" << beta.str() << ", n=" << n << ")";
        }
        std::cout << "\n";
    }
}

void run_blocks(const EntryOptions& entry, const std::string& mu_text,
                const std::string& pi_text, const std::string& window_text) {
    BraidingMatrix q = resolve_entry(entry);
    Groupoid g = Groupoid::orbit(q);
    auto hom = hom_into(g, 0);
    RootSystemData rs = compute_root_system(g, 0, hom);
    Weight mu = mu_text.empty() ? Weight::zero(q.theta()) : parse_weight(mu_text, q.theta());
    TorusCharacter pi = parse_pi(pi_text, q.theta());
    WeightBox window = window_text.empty() ? default_block_window(rs, mu)
                                           : parse_window(window_text, q.theta());
    auto classes = linkage_classes(q, rs, pi, window);
    if (g_json) {
        json cs = json::array();
        for (const auto& cls : classes) {
            json members = json::array();
            for (const Weight& w : cls) members.push_back(weight_json(w));
            cs.push_back(json{{"size", cls.size()}, {"members", members}});
        }
        emit(json{{"schema", kSchema},
                  {"command", "blocks"},
                  {"window", json{{"lo", weight_json(window.lo)}, {"hi", weight_json(window.hi)}}},
                  {"weight_count", window.cardinality()},
                  {"class_count", classes.size()},
                  {"classes", cs}});
        return;
    }
    std::cout << "window " << window.lo.str() << " .. " << window.hi.str() << ": "
              << window.cardinality() << " weights in " << classes.size() << " classes\n";
    for (size_t c = 0; c < classes.size(); ++c) {
        std::cout << "class " << c + 1 << " (size " << classes[c].size() << "):";
        for (const Weight& w : classes[c]) std::cout << " " << w.str();
        std::cout << "\n";
    }
}

void run_character(const EntryOptions& entry, const std::string& kind,
                   const std::string& mu_text, const std::string& pi_text,
                   const std::string& word_text, long long simple, long long t) {
    BraidingMatrix q = resolve_entry(entry);
    Groupoid g = Groupoid::orbit(q);
    auto hom = hom_into(g, 0);
    RootSystemData rs = compute_root_system(g, 0, hom);
    Weight mu = parse_weight(mu_text, q.theta());
    FormalCharacter ch;
    json extra;
    if (kind == "verma") {
        ch = ch_verma(rs, mu);
    } else if (kind == "twisted") {
        Morphism w = morphism_from_word(g, 0, parse_word(word_text, q.theta()));
        ch = ch_twisted_verma(rs, w, mu);
    } else if (kind == "simple") {
        TorusCharacter pi = parse_pi(pi_text, q.theta());
        Atypicality a = atypicality(q, rs, pi, mu);
        ch = a.degree == 0 ? ch_simple_typical(q, rs, pi, mu)
                           : ch_simple_1atypical(q, rs, pi, mu);
        extra["degree"] = a.degree;
    } else if (kind == "kernel") {
        if (simple < 1 || static_cast<size_t>(simple) > q.theta())
            throw UsageError("--simple outside 1.." + std::to_string(q.theta()));
        Morphism w = morphism_from_word(g, 0, parse_word(word_text, q.theta()));
        Weight beta = w.map.apply(Weight::basis(q.theta(), static_cast<size_t>(simple - 1)));
        ch = ch_kernel_phi(rs, w, beta, t, mu);
        extra["beta"] = weight_json(beta);
    } else {
        throw UsageError("--kind must be verma, twisted, simple or kernel");
    }
    if (g_json) {
        json doc{{"schema", kSchema},
                 {"command", "character"},
                 {"kind", kind},
                 {"mu", weight_json(mu)},
                 {"character", character_json(ch)}};
        for (auto& [k, v] : extra.items()) doc[k] = v;
        emit(doc);
        return;
    }
    std::cout << "terms: " << ch.term_count() << ", coefficient sum: " << ch.coefficient_sum()
              << "\n";
    std::cout << ch.str() << "\n";
}

void run_dot_check(const EntryOptions& entry, const std::string& mu_text,
                   const std::string& beta_text) {
    BraidingMatrix q = resolve_entry(entry);
    ObjectContext ctx = make_context(q);
    const RootSystemData& rs = ctx.base_system();
    StandardBundle bundle = require_standard_type(ctx.groupoid, ctx.systems);
    TorusCharacter pi = TorusCharacter::trivial(q.theta());
    Weight mu = parse_weight(mu_text, q.theta());

    auto one = [&](const Weight& beta) {
        long long m = match_down_to_dot(q, rs, bundle, pi, beta, mu);
        return std::pair<long long, Weight>(m, down(q, rs, pi, beta, mu));
    };

    if (!beta_text.empty()) {
        Weight beta = parse_weight(beta_text, q.theta());
        auto [m, dn] = one(beta);  // domain errors propagate to exit 1
        json shift;  // null when the rewrite does not apply to this root
        std::string shift_text = "not applicable";
        try {
            bool ok = delta_shift_identity(rs, bundle, beta, mu);
            shift = ok;
            shift_text = ok ? "ok" : "FAILED";
        } catch (const PreconditionUnmet&) {
        }
        if (g_json) {
            emit(json{{"schema", kSchema},
                      {"command", "dot-check"},
                      {"mu", weight_json(mu)},
                      {"beta", weight_json(beta)},
                      {"m", m},
                      {"down", weight_json(dn)},
                      {"delta_shift", shift}});
            return;
        }
        std::cout << beta.str() << ": down-arrow to " << dn.str()
                  << " is the dot reflection with m = " << m << ", delta-shift "
                  << shift_text << "\n";
        return;
    }

    json results = json::array();
    for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
        const Weight& beta = rs.positive_roots[r];
        json row{{"beta", weight_json(beta)},
                 {"cartan", static_cast<bool>(rs.is_cartan[r])}};
        try {
            auto [m, dn] = one(beta);
            row["ok"] = true;
            row["m"] = m;
            row["down"] = weight_json(dn);
        } catch (const Error& e) {
            row["ok"] = false;
            row["error"] = e.name();
        }
        results.push_back(row);
    }
    if (g_json) {
        emit(json{{"schema", kSchema},
                  {"command", "dot-check"},
                  {"mu", weight_json(mu)},
                  {"results", results}});
        return;
    }
    for (const auto& row : results) {
        std::cout << row["beta"].dump() << (row["cartan"].get<bool>() ? " cartan" : "       ");
        if (row["ok"].get<bool>())
            std::cout << "  m = " << row["m"].get<long long>() << ", down to "
                      << row["down"].dump() << "\n";
        else
            std::cout << "  " << row["error"].get<std::string>() << "\n";
    }
}

int run_verify(const EntryOptions& entry, uint64_t seed) {
    BraidingMatrix q = resolve_entry(entry);
    auto checks = run_suite(q, seed);
    bool all = true;
    for (const auto& [name, outcome] : checks) all = all && outcome.pass;
    if (g_json) {
        json cs = json::array();
        for (const auto& [name, outcome] : checks)
            cs.push_back(json{{"name", name}, {"pass", outcome.pass}, {"detail", outcome.detail}});
        emit(json{{"schema", kSchema},
                  {"command", "verify"},
                  {"seed", seed},
                  {"checks", cs},
                  {"all_pass", all}});
    } else {
        for (const auto& [name, outcome] : checks)
            std::cout << (outcome.pass ? "pass  " : "FAIL  ") << name << ": " << outcome.detail
                      << "\n";
        std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return all ? 0 : 1;
}

int run_app(int argc, char** argv) {
    CLI::App app{"Weyl groupoids of diagonal braidings: orbits, root systems, linkage, "
                 "characters"};
    app.require_subcommand(1);

    auto* cmd_catalog = app.add_subcommand("catalog", "List built-in braiding families");
    cmd_catalog->add_flag("--json", g_json, "Machine-readable JSON on stdout");

    EntryOptions orbit_entry;
    auto* cmd_orbit = app.add_subcommand("orbit", "Objects and edges of the reflection orbit");
    add_entry_options(cmd_orbit, orbit_entry);

    EntryOptions roots_entry;
    long long roots_object = 0;
    auto* cmd_roots = app.add_subcommand("roots", "Positive roots, bounds and beta_top");
    add_entry_options(cmd_roots, roots_entry);
    cmd_roots->add_option("--object", roots_object, "Orbit object index (default 0)");

    EntryOptions linkage_entry;
    std::string linkage_mu, linkage_pi;
    auto* cmd_linkage =
        app.add_subcommand("linkage", "Scan exponents, down-arrows and the strongly linked set");
    add_entry_options(cmd_linkage, linkage_entry);
    cmd_linkage->add_option("--mu", linkage_mu, "Weight, comma-separated integers")->required();
    cmd_linkage->add_option("--pi", linkage_pi,
                            "Torus character: 2*theta exponents a/N (K's then L's)");

    EntryOptions blocks_entry;
    std::string blocks_mu, blocks_pi, blocks_window;
    auto* cmd_blocks = app.add_subcommand("blocks", "Linkage classes inside a weight window");
    add_entry_options(cmd_blocks, blocks_entry);
    cmd_blocks->add_option("--mu", blocks_mu, "Window anchor (default 0)");
    cmd_blocks->add_option("--pi", blocks_pi, "Torus character exponents");
    cmd_blocks->add_option("--window", blocks_window,
                           "'lo1,..;hi1,..' (default mu-2*beta_top .. mu+beta_top)");

    EntryOptions ch_entry;
    std::string ch_kind = "verma", ch_mu, ch_pi, ch_word;
    long long ch_simple = 1, ch_t = 1;
    auto* cmd_character = app.add_subcommand("character", "Formal characters on Z^theta");
    add_entry_options(cmd_character, ch_entry);
    cmd_character->add_option("--kind", ch_kind, "verma | twisted | simple | kernel");
    cmd_character->add_option("--mu", ch_mu, "Highest weight")->required();
    cmd_character->add_option("--pi", ch_pi, "Torus character (simple characters)");
    cmd_character->add_option("--word", ch_word,
                              "Twisting word, 1-based generators, target-anchored");
    cmd_character->add_option("--simple", ch_simple, "Index i with beta = w(alpha_i) (kernel)");
    cmd_character->add_option("--t", ch_t, "Kernel parameter t in 1..b(beta)-1");

    EntryOptions dot_entry;
    std::string dot_mu, dot_beta;
    auto* cmd_dot = app.add_subcommand("dot-check",
                                       "Match down-arrows against the affine dot action");
    add_entry_options(cmd_dot, dot_entry);
    cmd_dot->add_option("--mu", dot_mu, "Weight")->required();
    cmd_dot->add_option("--beta", dot_beta, "One positive root (default: all)");

    EntryOptions verify_entry;
    uint64_t verify_seed = 12345;
    auto* cmd_verify = app.add_subcommand("verify", "Run the consistency suite on an entry");
    add_entry_options(cmd_verify, verify_entry);
    cmd_verify->add_option("--seed", verify_seed, "Sampling seed (default 12345)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (cmd_catalog->parsed()) {
        run_catalog();
    } else if (cmd_orbit->parsed()) {
        run_orbit(orbit_entry);
    } else if (cmd_roots->parsed()) {
        run_roots(roots_entry, roots_object);
    } else if (cmd_linkage->parsed()) {
        run_linkage(linkage_entry, linkage_mu, linkage_pi);
    } else if (cmd_blocks->parsed()) {
        run_blocks(blocks_entry, blocks_mu, blocks_pi, blocks_window);
    } else if (cmd_character->parsed()) {
        run_character(ch_entry, ch_kind, ch_mu, ch_pi, ch_word, ch_simple, ch_t);
    } else if (cmd_dot->parsed()) {
        run_dot_check(dot_entry, dot_mu, dot_beta);
    } else if (cmd_verify->parsed()) {
        return run_verify(verify_entry, verify_seed);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_app(argc, argv);
    } catch (const UsageError& e) {
        if (g_json) emit(json{{"schema", kSchema}, {"error", {{"name", "UsageError"}, {"detail", e.what()}}}});
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        if (g_json) emit(json{{"schema", kSchema}, {"error", {{"name", e.name()}, {"detail", e.what()}}}});
        std::cerr << e.what() << "\n";
        return 1;
    }
}
