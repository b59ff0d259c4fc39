// nichols-lab: racks, enveloping groups and Nichols algebras from the command line.

#include <nicholslab/json_io.hpp>
#include <nicholslab/verify.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace nicholslab;

namespace {

enum Exit { ok = 0, verification_failed = 1, usage = 2, resource_cap = 3 };

struct Config {
    std::size_t threads = 1;
    std::size_t max_cosets = CosetLimits{}.max_cosets;
    std::size_t enumeration_cap = EnumerationLimits{}.max_size_cap;
    std::size_t max_dim = 0;
    double desk_budget_seconds = VerifyOptions{}.desk_budget_seconds;
    double extended_budget_seconds = VerifyOptions{}.extended_budget_seconds;
};

Config load_config(const std::string& path)
{
    Config c;
    if (const char* t = std::getenv("NICHOLSLAB_THREADS")) {
        try {
            c.threads = std::max<std::size_t>(1, std::stoul(t));
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("NICHOLSLAB_THREADS must be a positive integer, got '") + t + "'");
        }
    }
    if (path.empty()) return c;
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    const json j = json::parse(in);
    for (const auto& [k, v] : j.items()) {
        if (k == "threads") c.threads = v.get<std::size_t>();
        else if (k == "max_cosets") c.max_cosets = v.get<std::size_t>();
        else if (k == "enumeration_cap") c.enumeration_cap = v.get<std::size_t>();
        else if (k == "max_dim") c.max_dim = v.get<std::size_t>();
        else if (k == "desk_budget_seconds") c.desk_budget_seconds = v.get<double>();
        else if (k == "extended_budget_seconds") c.extended_budget_seconds = v.get<double>();
        else throw std::invalid_argument("unknown config key '" + k + "'");
    }
    return c;
}

struct RackArg {
    std::string name;  // builtin name or path
    std::string file;

    std::pair<Rack, std::string> resolve() const
    {
        if (!file.empty()) return {load_rack_file(file), file};
        if (name.empty()) throw std::invalid_argument("give a rack name or --file");
        try {
            return {builtin_rack(name), name};
        } catch (const std::invalid_argument&) {
            if (std::filesystem::exists(name)) return {load_rack_file(name), name};
            throw;
        }
    }
};

std::string cycle_type_string(const Perm& p)
{
    std::string s;
    for (auto n : p.cycle_type()) s += (s.empty() ? "" : ",") + std::to_string(n);
    return "(" + s + ")";
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

// --------------------------------------------------------------------------- rack

json rack_info(const Rack& r, const std::string& label, const Config& cfg)
{
    RackProperties props = properties(r);
    json j{{"rack", label}, {"size", r.size()}, {"table", r.one_based_table()}};
    try {
        props.injective = injectivity(r, CosetLimits{cfg.max_cosets});
    } catch (const CosetEnumerationFailed&) {
        props.injective.reset();
    }
    j["properties"] = properties_to_json(props);
    json phis = json::array();
    for (std::uint32_t i = 0; i < r.size(); ++i) phis.push_back(r.phi(i).to_string());
    j["phi"] = phis;
    std::map<std::string, std::size_t> types;
    for (std::uint32_t i = 0; i < r.size(); ++i) ++types[cycle_type_string(r.phi(i))];
    j["phi_cycle_types"] = types;
    const auto p = profile(r);
    j["profile"] = profile_to_json(p);
    if (props.quandle && props.indecomposable) {
        const auto c = classify(r);
        j["match"] = c.match ? json(*c.match) : json(nullptr);
        j["counterexample"] = c.counterexample && props.injective.value_or(false);
    } else {
        j["match"] = nullptr;
        j["classification"] = props.quandle ? "not applicable: decomposable" : "not applicable: not a quandle";
    }
    return j;
}

void print_rack_text(const json& j)
{
    std::cout << "rack " << j["rack"].get<std::string>() << " (d = " << j["size"] << ")\n";
    for (const auto& [k, v] : j["properties"].items())
        std::cout << "  " << k << ": " << (v.is_null() ? "unknown" : yesno(v.get<bool>())) << "\n";
    std::cout << "  phi:";
    for (const auto& p : j["phi"]) std::cout << " " << p.get<std::string>();
    std::cout << "\n  cycle types:";
    for (const auto& [t, n] : j["phi_cycle_types"].items()) std::cout << " " << t << " x" << n;
    const auto& p = j["profile"];
    std::cout << "\n  k:";
    for (const auto& [n, v] : p["k"].items()) std::cout << " k_" << n << "=" << v;
    std::cout << "\n  l:";
    for (const auto& [n, v] : p["l"].items()) std::cout << " l_" << n << "=" << v;
    std::cout << "\n  S = " << p["S"].get<std::string>() << ", S <= 1: " << yesno(p["condition"].get<bool>()) << "\n";
    if (p.contains("advisory")) std::cout << "  note: " << p["advisory"].get<std::string>() << "\n";
    if (j.contains("classification")) std::cout << "  classification: " << j["classification"].get<std::string>() << "\n";
    else std::cout << "  match: " << (j["match"].is_null() ? "none" : j["match"].get<std::string>()) << "\n";
}

// --------------------------------------------------------------------------- group

struct GroupArgs {
    RackArg rack;
    bool hat = false;
    std::string centralizer;
    std::vector<std::string> relations;
    bool presentation = false;
};

json group_report(const GroupArgs& a, const Config& cfg)
{
    const auto [r, label] = a.rack.resolve();
    const CosetLimits lim{cfg.max_cosets};
    const QuotientGroup q = a.hat ? hat_group(r, lim) : bar_group(r, lim);
    json j{{"rack", label}, {"quotient", a.hat ? "hat" : "bar"}, {"order", q.order()}};
    json powers = json::array();
    for (std::size_t o = 0; o < q.presentation().orbit_rep.size(); ++o)
        powers.push_back({{"generator", "x" + std::to_string(q.presentation().orbit_rep[o] + 1)},
                          {"power", q.presentation().power[o]}});
    j["power_relators"] = powers;
    j["abelian"] = q.group().is_abelian();
    j["center_order"] = q.group().center().order();
    j["injective"] = injectivity(r, lim);
    if (a.presentation) {
        json rels = json::array();
        for (const auto& w : q.presentation().relators) rels.push_back(w.to_string());
        j["relators"] = rels;
    }
    if (!a.centralizer.empty() || !a.relations.empty()) {
        std::vector<GradedWord> gens;
        std::stringstream ss(a.centralizer);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) gens.push_back(parse_word(item));
        std::vector<std::pair<GradedWord, GradedWord>> rels;
        for (const auto& text : a.relations) {
            const auto eq = text.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("relation '" + text + "' needs '='");
            rels.emplace_back(parse_word(text.substr(0, eq)), parse_word(text.substr(eq + 1)));
        }
        const auto cr = centralizer_report(r, gens, rels, lim);
        json rj = json::array();
        for (std::size_t k = 0; k < cr.relations.size(); ++k) rj.push_back({{"relation", a.relations[k]}, {"holds", cr.relations[k].holds}});
        j["centralizer"] = {{"claimed_generators", a.centralizer},
                            {"centralizer_order", cr.centralizer_order},
                            {"generated_order", cr.generated_order},
                            {"in_centralizer", cr.in_centralizer},
                            {"generates", cr.generates},
                            {"abelian", cr.abelian},
                            {"cyclic", cr.cyclic},
                            {"relations", rj},
                            {"certified", cr.certified()},
                            {"failures", cr.failures}};
    }
    return j;
}

void print_group_text(const json& j)
{
    std::cout << (j["quotient"] == "hat" ? "hat G" : "bar G") << " of " << j["rack"].get<std::string>() << ": order "
              << j["order"] << ", abelian " << yesno(j["abelian"].get<bool>()) << ", center order " << j["center_order"]
              << ", rack injective " << yesno(j["injective"].get<bool>()) << "\n";
    for (const auto& p : j["power_relators"])
        std::cout << "  " << p["generator"].get<std::string>() << "^" << p["power"] << " = 1\n";
    if (j.contains("relators"))
        for (const auto& r : j["relators"]) std::cout << "  relator " << r.get<std::string>() << "\n";
    if (j.contains("centralizer")) {
        const auto& c = j["centralizer"];
        std::cout << "  centralizer of x1: order " << c["centralizer_order"] << ", claimed generators span "
                  << c["generated_order"] << ", certified " << yesno(c["certified"].get<bool>()) << "\n";
        for (const auto& r : c["relations"])
            std::cout << "    " << r["relation"].get<std::string>() << ": " << (r["holds"].get<bool>() ? "holds" : "fails") << "\n";
        for (const auto& f : c["failures"]) std::cout << "    failure: " << f.get<std::string>() << "\n";
    }
}

// --------------------------------------------------------------------------- nichols

struct NicholsArgs {
    RackArg rack;
    std::string rho;
    std::string field = "Q";
    std::string method = "deriv";
    std::string gauge = "normalized";
    std::size_t max_degree = 0;
    std::size_t symmetrizer_degree = 4;
    std::string integral;
    std::string chain;
    bool long_running = false;
};

bool is_long_running(const Rack& r) { return r.size() >= 7; }

json nichols_report(const NicholsArgs& a, const Config& cfg)
{
    const auto [r, label] = a.rack.resolve();
    NicholsRequest req;
    req.rack = r;
    req.rack_name = label;
    if (a.rho.empty()) {
        for (const auto& bc : builtin_characters())
            if (bc.rack == label) {
                req.character = bc.spec;
                break;
            }
        if (req.character.values.empty()) throw std::invalid_argument("--rho is required for rack " + label);
    } else {
        req.character = character_from_text(a.rho);
    }
    req.p = parse_field_name(a.field);
    req.gauge = parse_gauge(a.gauge);
    if (a.method != "deriv" && a.method != "symmetrizer" && a.method != "both")
        throw std::invalid_argument("--method must be deriv, symmetrizer or both");
    req.use_engine = a.method != "symmetrizer";
    if (a.method != "deriv") req.symmetrizer_up_to = a.symmetrizer_degree;
    req.engine.threads = cfg.threads;
    req.engine.max_dim = cfg.max_dim;
    if (a.max_degree) req.engine.max_degree = a.max_degree;
    if (req.use_engine && is_long_running(r) && !a.max_degree) {
        if (!a.long_running)
            throw std::invalid_argument("the full computation for " + label +
                                        " is long-running; pass --long-running or bound it with --max-degree");
        req.engine.deadline = std::chrono::steady_clock::now() +
                              std::chrono::milliseconds(static_cast<long long>(cfg.extended_budget_seconds * 1000));
    }
    if (!a.integral.empty()) req.integral = a.integral;
    if (!a.chain.empty()) req.chain = a.chain;
    if (req.chain && !req.integral) throw std::invalid_argument("--chain needs --integral");
    return nichols_to_json(run_nichols(req));
}

void print_nichols_text(const json& j)
{
    std::cout << "B(V) for " << j["rack"].get<std::string>() << " over " << j["field"].get<std::string>() << ", rho "
              << j["character"].dump() << "\n";
    if (j.contains("dims")) {
        std::cout << "  dims:";
        for (const auto& d : j["dims"]) std::cout << " " << d;
        std::cout << (j["truncated"].get<bool>() ? " (truncated)" : "") << "\n  total: " << j["total"] << "\n";
        if (!j["factorization"].is_null()) {
            std::vector<std::size_t> blocks = j["factorization"];
            std::cout << "  Hilbert series: " << blocks_to_string(blocks) << "\n";
        }
    }
    if (j.contains("integral")) {
        const auto& i = j["integral"];
        std::cout << "  " << i["monomial"].get<std::string>() << " is " << (i["is_integral"].get<bool>() ? "" : "not ")
                  << "an integral; chain value " << i["chain_value"].get<std::string>() << "\n";
    }
    if (j.contains("symmetrizer"))
        for (const auto& s : j["symmetrizer"]) {
            std::cout << "  symmetrizer rank in degree " << s["degree"] << ": " << s["rank"];
            if (s.contains("engine")) std::cout << " (engine " << s["engine"] << ")";
            std::cout << "\n";
        }
}

// --------------------------------------------------------------------------- verify

struct VerifyArgs {
    std::string scale = "desk";
    std::vector<int> criteria;
    bool timings = false;
};

void print_report_text(const VerificationReport& rep, bool timings)
{
    for (const auto& c : rep.claims) {
        std::cout << "[" << status_name(c.status) << "] " << c.criterion << ". " << c.id << ": " << c.computed;
        if (c.status == ClaimStatus::fail) std::cout << " (expected " << c.expected << ")";
        if (!c.note.empty()) std::cout << " -- " << c.note;
        if (timings) std::cout << " [" << c.runtime << " s]";
        std::cout << "\n";
    }
    std::cout << (rep.ok() ? "all claims hold" : "some claims failed") << " at " << scale_name(rep.scale) << " scale\n";
}

// --------------------------------------------------------------------------- search

json search_report(std::size_t max_size, const Config& cfg)
{
    EnumerationLimits lim;
    lim.max_size_cap = cfg.enumeration_cap;
    lim.cosets.max_cosets = cfg.max_cosets;
    const auto res = classification_search(max_size, lim);
    auto entry = [](const SearchEntry& e) {
        return json{{"size", e.rack.size()},
                    {"table", e.rack.one_based_table()},
                    {"profile", profile_to_json(e.profile)},
                    {"match", e.match ? json(*e.match) : json(nullptr)}};
    };
    json sat = json::array(), fail = json::array();
    for (const auto& e : res.satisfying) sat.push_back(entry(e));
    for (const auto& e : res.failing) fail.push_back(entry(e));
    return json{{"max_size", max_size},
                {"enumerated", res.enumerated},
                {"satisfying", sat},
                {"not_satisfying", fail},
                {"counterexample", res.has_counterexample()}};
}

void print_search_text(const json& j)
{
    std::cout << "indecomposable injective quandles up to size " << j["max_size"] << ": " << j["enumerated"] << "\n";
    for (const auto& e : j["satisfying"])
        std::cout << "  d=" << e["size"] << " S=" << e["profile"]["S"].get<std::string>() << " -> "
                  << (e["match"].is_null() ? std::string("NO MATCH") : e["match"].get<std::string>()) << "\n";
    for (const auto& e : j["not_satisfying"])
        std::cout << "  d=" << e["size"] << " S=" << e["profile"]["S"].get<std::string>() << " (S > 1)\n";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"racks, enveloping groups and Nichols algebras over Q and F_p"};
    app.require_subcommand(1);
    std::string format = "json", config_path;
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--config", config_path, "JSON file with caps and budgets");

    auto* rack_cmd = app.add_subcommand("rack", "inspect racks");
    rack_cmd->require_subcommand(1);
    RackArg info_rack;
    auto* info = rack_cmd->add_subcommand("info", "properties, orbit profile and classification match");
    info->add_option("rack", info_rack.name, "built-in name or JSON file");
    info->add_option("--file", info_rack.file, "rack JSON file");
    auto* list = rack_cmd->add_subcommand("list", "built-in rack names");
    RackArg iso_a, iso_b;
    auto* iso = rack_cmd->add_subcommand("iso", "find an isomorphism between two racks");
    iso->add_option("a", iso_a.name)->required();
    iso->add_option("b", iso_b.name)->required();

    GroupArgs ga;
    auto* group = app.add_subcommand("group", "finite quotients of the enveloping group");
    group->add_option("rack", ga.rack.name, "built-in name or JSON file");
    group->add_option("--file", ga.rack.file, "rack JSON file");
    group->add_flag("--hat", ga.hat, "use the quotient with doubled power relators");
    group->add_option("--centralizer", ga.centralizer, "claimed generators of the centralizer of x1, e.g. x1,x4x2");
    group->add_option("--relation", ga.relations, "relation to certify, e.g. (x4x2)^2=x1^4");
    group->add_flag("--presentation", ga.presentation, "print all relators");

    NicholsArgs na;
    auto* nichols = app.add_subcommand("nichols", "graded dimensions of the Nichols algebra");
    nichols->add_option("rack", na.rack.name, "built-in name or JSON file");
    nichols->add_option("--file", na.rack.file, "rack JSON file");
    nichols->add_option("--rho", na.rho, "character, e.g. x1=-1,x4=1 or {\"x1\":-1}");
    nichols->add_option("--field", na.field, "Q or F<p>");
    nichols->add_option("--method", na.method, "deriv, symmetrizer or both");
    nichols->add_option("--gauge", na.gauge, "section normalization: normalized or generators");
    nichols->add_option("--max-degree", na.max_degree, "stop after this degree (result flagged as truncated)");
    nichols->add_option("--symmetrizer-degree", na.symmetrizer_degree, "highest degree for the symmetrizer (<= 6)");
    nichols->add_option("--integral", na.integral, "monomial to test, e.g. v1v2v1v3");
    nichols->add_option("--chain", na.chain, "derivation chain as written, e.g. 2,1,4,1");
    nichols->add_flag("--long-running", na.long_running, "allow the full computation for racks with d >= 7");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check every tabulated claim");
    verify->add_option("--scale", va.scale, "desk or extended")->check(CLI::IsMember({"desk", "extended"}));
    verify->add_option("--criteria", va.criteria, "only these criteria (1-11)")->delimiter(',');
    verify->add_flag("--timings", va.timings, "include runtimes (output is then not byte-stable)");

    std::size_t max_size = 6;
    auto* search = app.add_subcommand("search", "bounded classification search over small quandles");
    search->add_option("--max-size", max_size, "largest quandle size");

    // global options may follow the subcommand
    for (auto* sub : {rack_cmd, info, list, iso, group, nichols, verify, search}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Exit::usage;
    }

    const bool text = format == "text";
    try {
        const Config cfg = load_config(config_path);
        if (info->parsed()) {
            const auto [r, label] = info_rack.resolve();
            const json j = rack_info(r, label, cfg);
            if (text) print_rack_text(j);
            else std::cout << j.dump(2) << "\n";
        } else if (list->parsed()) {
            if (text) {
                for (const auto& n : builtin_rack_names()) std::cout << n << "\n";
            } else {
                std::cout << json(builtin_rack_names()).dump(2) << "\n";
            }
        } else if (iso->parsed()) {
            const auto [a, la] = iso_a.resolve();
            const auto [b, lb] = iso_b.resolve();
            const auto f = isomorphism(a, b);
            json j{{"a", la}, {"b", lb}, {"isomorphic", f.has_value()}};
            if (f) {
                std::vector<std::uint32_t> one;
                for (auto x : *f) one.push_back(x + 1);
                j["map"] = one;
            }
            if (text) {
                std::cout << la << (f ? " is isomorphic to " : " is not isomorphic to ") << lb << "\n";
                if (f) {
                    std::cout << "  map:";
                    for (std::size_t i = 0; i < f->size(); ++i) std::cout << " " << i + 1 << "->" << (*f)[i] + 1;
                    std::cout << "\n";
                }
            } else {
                std::cout << j.dump(2) << "\n";
            }
        } else if (group->parsed()) {
            const json j = group_report(ga, cfg);
            if (text) print_group_text(j);
            else std::cout << j.dump(2) << "\n";
        } else if (nichols->parsed()) {
            const json j = nichols_report(na, cfg);
            if (text) print_nichols_text(j);
            else std::cout << j.dump(2) << "\n";
        } else if (verify->parsed()) {
            VerifyOptions o;
            o.scale = parse_scale(va.scale);
            o.threads = cfg.threads;
            o.desk_budget_seconds = cfg.desk_budget_seconds;
            o.extended_budget_seconds = cfg.extended_budget_seconds;
            for (int k : va.criteria)
                if (k < 1 || k > 11) throw std::invalid_argument("criteria are numbered 1 to 11");
            const auto rep = verify_tables(o, va.criteria);
            if (text) print_report_text(rep, va.timings);
            else std::cout << report_to_json(rep, va.timings).dump(2) << "\n";
            if (rep.ok()) return Exit::ok;
            return rep.resource_cap_hit() ? Exit::resource_cap : Exit::verification_failed;
        } else if (search->parsed()) {
            const json j = search_report(max_size, cfg);
            if (text) print_search_text(j);
            else std::cout << j.dump(2) << "\n";
        }
    } catch (const EnumerationCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::resource_cap;
    } catch (const ResourceCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::resource_cap;
    } catch (const CosetEnumerationFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::resource_cap;
    } catch (const GroupTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::resource_cap;
    } catch (const SymmetrizerGuard& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::usage;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::usage;
    }
    return Exit::ok;
}
