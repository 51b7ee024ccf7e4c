#include "conerank/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "conerank/complex_io.hpp"
#include "conerank/error.hpp"
#include "conerank/hochster.hpp"
#include "conerank/poly_text.hpp"
#include "conerank/random_complexes.hpp"
#include "conerank/sr_ideal.hpp"

namespace conerank {

namespace {

using nlohmann::ordered_json;

std::string face_text(const SimplicialComplex& complex, FaceSet f) {
    std::string out = "{";
    for (auto i : f.indices()) out += (out.size() > 1 ? "," : "") + complex.name(i);
    return out + "}";
}

std::vector<std::string> face_list(const SimplicialComplex& complex, const std::vector<FaceSet>& faces) {
    std::vector<std::string> out;
    for (auto f : faces) out.push_back(face_text(complex, f));
    return out;
}

std::string joined(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) out += (out.empty() ? "" : " ") + s;
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// "x1,x2", "{x1,x2}" or "" (the empty face).
FaceSet parse_face(const SimplicialComplex& complex, std::string text) {
    text = trim(text);
    if (!text.empty() && text.front() == '{') {
        if (text.back() != '}') throw InvalidInput("unbalanced braces in face '" + text + "'");
        text = text.substr(1, text.size() - 2);
    }
    std::vector<std::string> names;
    if (!trim(text).empty()) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (item.empty()) throw InvalidInput("empty vertex name in face list");
            names.push_back(item);
        }
    }
    return complex.face_from_names(names);
}

std::string fresh_vertex(const SimplicialComplex& complex, const std::string& requested) {
    if (!requested.empty()) return requested;
    std::string name = "x0";
    for (std::size_t k = 1; complex.index_of(name); ++k) name = "x0_" + std::to_string(k);
    return name;
}

std::vector<Polynomial> load_witness(const std::string& path, const SimplicialComplex& complex, Field field) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open witness file '" + path + "'");
    std::vector<Polynomial> out;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        out.push_back(parse_polynomial(line, complex.names(), field));
    }
    return out;
}

template <class F>
std::string or_undefined(F&& f) {
    try {
        return f();
    } catch (const Undefined&) {
        return "undefined";
    }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

ordered_json maybe_number(const std::string& s) {
    if (s == "undefined" || s == "unavailable") return nullptr;
    if (s == "yes") return true;
    if (s == "no") return false;
    return std::stoull(s);
}

ConeOptions cone_options(const RunConfig& config) {
    ConeOptions options;
    options.case_choice = config.case_choice;
    options.prefer_roots = config.prefer_roots;
    options.groebner = config.groebner;
    return options;
}

int exit_code_of(const VerificationReport& r) {
    if (r.inconclusive) return kExitInconclusive;
    return r.pass() ? kExitOk : kExitVerificationFailed;
}

std::string verdict(const VerificationReport& r) {
    if (r.inconclusive) return "inconclusive";
    return r.pass() ? "pass" : "fail";
}

std::string ara_bound_text(const SimplicialComplex& complex, Field field) {
    try {
        return std::to_string(ara_lower_bound(complex, field));
    } catch (const InvalidInput&) {
        return "unavailable";
    }
}

ordered_json presentation_json(const RadicalPresentation& p) {
    ordered_json doc;
    doc["case"] = to_string(p.kind);
    doc["field"] = p.field.to_string();
    doc["h"] = p.h;
    doc["s"] = p.s;
    doc["t"] = p.t;
    doc["ell"] = p.ell ? ordered_json(*p.ell) : ordered_json(nullptr);
    ordered_json omegas = ordered_json::array();
    for (const auto& w : p.omegas) omegas.push_back(w.to_string());
    doc["omega"] = omegas;
    ordered_json polys = ordered_json::array();
    for (const auto& f : p.polynomials) polys.push_back(format_polynomial(f, p.names));
    doc["polynomials"] = polys;
    if (p.verification) doc["verification"] = ordered_json::parse(report_to_json(*p.verification, p.names));
    return doc;
}

}  // namespace

CommandResult cmd_info(const std::string& complex_path, const RunConfig& config) {
    const auto complex = load_complex(complex_path);
    const auto subfacets = or_undefined([&] { return joined(face_list(complex, complex.subfacets())); });
    const auto connected = or_undefined([&] { return yes_no(is_strongly_connected(complex)); });
    const auto primes = face_list(complex, minimal_primes(complex));
    const auto ideal = stanley_reisner_ideal(complex);
    std::vector<std::string> generators;
    for (const auto& g : ideal.generator_polynomials(config.field))
        generators.push_back(format_polynomial(g, complex.names()));

    CommandResult r;
    if (config.format == OutputFormat::json) {
        ordered_json doc;
        doc["vertices"] = complex.names();
        doc["facets"] = face_list(complex, complex.facets());
        doc["dimension"] = complex.dimension();
        doc["pure"] = complex.is_pure();
        doc["strongly_connected"] = maybe_number(connected);
        doc["subfacets"] = subfacets == "undefined" ? ordered_json(nullptr)
                                                     : ordered_json(face_list(complex, complex.subfacets()));
        doc["minimal_primes"] = primes;
        doc["height"] = height(complex);
        doc["degree"] = degree(complex);
        doc["ideal"] = generators;
        r.out = doc.dump(2) + "\n";
        return r;
    }
    std::ostringstream os;
    os << "vertices: " << joined(complex.names()) << "\n"
       << "facets: " << joined(face_list(complex, complex.facets())) << "\n"
       << "dimension: " << complex.dimension() << "\n"
       << "pure: " << yes_no(complex.is_pure()) << "\n"
       << "strongly connected: " << connected << "\n"
       << "subfacets: " << subfacets << "\n"
       << "minimal primes: " << joined(primes) << "\n"
       << "height: " << height(complex) << "\n"
       << "degree: " << degree(complex) << "\n"
       << "ideal: " << (generators.empty() ? "0" : joined(generators)) << "\n";
    r.out = os.str();
    return r;
}

CommandResult cmd_betti(const std::string& complex_path, const RunConfig& config) {
    const auto complex = load_complex(complex_path);
    const auto table = graded_betti(complex, config.field);
    const auto pd = proj_dim(table);
    const auto reg = or_undefined([&] { return std::to_string(regularity(table)); });
    const auto linear = or_undefined([&] { return yes_no(has_2_linear_resolution(complex, config.field)); });

    CommandResult r;
    if (config.format == OutputFormat::json) {
        ordered_json doc;
        doc["field"] = config.field.to_string();
        ordered_json entries = ordered_json::array();
        for (const auto& [ij, value] : table.entries()) entries.push_back({ij.first, ij.second, value});
        doc["betti"] = entries;
        doc["pd"] = pd;
        doc["reg"] = maybe_number(reg);
        doc["two_linear"] = maybe_number(linear);
        r.out = doc.dump(2) + "\n";
        return r;
    }
    std::ostringstream os;
    os << "field: " << config.field.to_string() << "\n"
       << format_betti_table(table) << "pd: " << pd << "\n"
       << "reg: " << reg << "\n"
       << "2-linear: " << linear << "\n";
    r.out = os.str();
    return r;
}

CommandResult cmd_cone(const std::string& complex_path, const std::string& face, const std::string& new_vertex,
                       const RunConfig&) {
    const auto complex = load_complex(complex_path);
    const auto cone = cone_union(complex, parse_face(complex, face), fresh_vertex(complex, new_vertex));
    return {kExitOk, format_complex(cone)};
}

CommandResult cmd_construct(const std::string& complex_path, const std::string& face,
                            const std::string& new_vertex, const RunConfig& config) {
    const auto complex = load_complex(complex_path);
    const auto f = parse_face(complex, face);
    const auto vertex = fresh_vertex(complex, new_vertex);
    std::optional<std::vector<Polynomial>> witness;
    if (config.witness_path) witness = load_witness(*config.witness_path, complex, config.field);

    auto options = cone_options(config);
    options.throw_on_failure = false;
    const auto pres = cone_generators(complex, f, vertex, witness, config.field, options);
    const auto cone = cone_union(complex, f, vertex);
    const std::size_t t = complex.vertex_count() - f.size();
    const std::size_t bound = std::max(pres.h + 1, t);
    const auto lower = ara_bound_text(cone, config.field);

    CommandResult r;
    r.exit_code = exit_code_of(*pres.verification);
    if (config.format == OutputFormat::json) {
        ordered_json doc;
        doc["complex"] = ordered_json::parse(format_complex(cone));
        doc["face"] = face_text(complex, f);
        doc["vertex"] = vertex;
        doc["presentation"] = presentation_json(pres);
        doc["size"] = pres.size();
        doc["size_bound"] = pres.h >= 1 ? ordered_json(bound) : ordered_json(nullptr);
        doc["ara_lower_bound"] = maybe_number(lower);
        r.out = doc.dump(2) + "\n";
        return r;
    }
    std::ostringstream os;
    os << format_presentation(pres) << "verification: " << verdict(*pres.verification) << "\n"
       << "size: " << pres.size();
    if (pres.h >= 1) os << " (max(h+1, n-|F|) = " << bound << ")";
    os << "\nara lower bound: " << lower << "\n";
    r.out = os.str();
    return r;
}

CommandResult cmd_classify(const std::string& complex_path, const RunConfig& config) {
    const auto complex = load_complex(complex_path);
    const auto peel = peel_generalized_tree(complex);
    const bool dtree = is_d_tree(complex);
    const auto shape = recognize_lemma3_shape(complex);
    std::string reg_law = "undefined";
    std::string reg_text = "undefined";
    if (!complex.is_simplex()) {
        const auto reg = regularity(complex, config.field);
        reg_text = std::to_string(reg);
        reg_law = yes_no(reg == degree(complex) - codim(complex) + 1);
    }
    const auto linear = or_undefined([&] { return yes_no(has_2_linear_resolution(complex, config.field)); });

    // Each base is named in the complex left after its removal.
    std::vector<std::string> steps;
    if (peel) {
        SimplicialComplex current = complex;
        for (const auto& s : peel->steps) {
            const std::size_t v = s.index;
            std::vector<std::string> names;
            for (std::size_t i = 0; i < current.vertex_count(); ++i)
                if (i != v) names.push_back(current.name(i));
            std::string b = "{";
            for (auto i : s.base.indices()) b += (b.size() > 1 ? "," : "") + names.at(i);
            steps.push_back(s.vertex + ":" + b + "}");
            current = induced_subcomplex(current, current.vertex_set() - FaceSet{v});
        }
    }

    CommandResult r;
    if (config.format == OutputFormat::json) {
        ordered_json doc;
        doc["generalized_tree"] = peel.has_value();
        doc["peel"] = peel ? ordered_json(steps) : ordered_json(nullptr);
        doc["d_tree"] = dtree;
        doc["lemma3_shape"] = shape.has_value();
        doc["r"] = shape ? ordered_json(shape->r) : ordered_json(nullptr);
        doc["reg"] = maybe_number(reg_text);
        doc["degree"] = degree(complex);
        doc["codim"] = codim(complex);
        doc["reg_equals_deg_minus_codim_plus_1"] = maybe_number(reg_law);
        doc["two_linear"] = maybe_number(linear);
        r.out = doc.dump(2) + "\n";
        return r;
    }
    std::ostringstream os;
    os << "generalized tree: " << yes_no(peel.has_value());
    if (peel && !steps.empty()) os << " (peel: " << joined(steps) << ")";
    os << "\nd-tree: " << yes_no(dtree) << "\n"
       << "lemma-3 shape: " << yes_no(shape.has_value());
    if (shape) os << " (r=" << shape->r << ")";
    os << "\nreg: " << reg_text << "\n"
       << "deg: " << degree(complex) << "\n"
       << "codim: " << codim(complex) << "\n"
       << "reg = deg - codim + 1: " << reg_law << "\n"
       << "2-linear: " << linear << "\n";
    r.out = os.str();
    return r;
}

CommandResult cmd_pipeline(const std::string& complex_path, const RunConfig& config) {
    const auto complex = load_complex(complex_path);
    const auto options = cone_options(config);
    std::string route;
    std::optional<RadicalPresentation> pres;
    std::string claim;

    if (complex.is_simplex()) {
        route = "simplex";
        claim = "zero ideal";
    } else if (is_d_tree(complex)) {
        route = "d-tree";
        pres = dtree_sci_generators(plan_from_peel(*peel_generalized_tree(complex), BuildPlan::Base::simplex),
                                    config.field, options);
        claim = "set-theoretic complete intersection: " + std::to_string(pres->size()) + " = height";
    } else if (recognize_lemma3_shape(complex)) {
        route = "lemma-3";
        pres = lemma3_sci_generators(complex, config.field, options);
        claim = "set-theoretic complete intersection: " + std::to_string(pres->size()) + " = height";
    } else if (peel_generalized_tree(complex)) {
        route = "generalized tree";
        pres = generalized_tree_generators(complex, config.field, options);
        const auto pd = proj_dim(complex, config.field);
        if (pres->size() != pd)
            throw VerificationFailure("fold produced " + std::to_string(pres->size()) + " polynomials but pd = " +
                                      std::to_string(pd));
        claim = "ara = pd = " + std::to_string(pd);
    }

    CommandResult r;
    if (route.empty()) {
        r.exit_code = kExitVerificationFailed;
        std::string reason = "not a generalized tree, not a d-tree, not of the ∂Δ(r)*Δ(d-r+2) + branches shape";
        std::string open;
        try {
            if (regularity(complex, config.field) == 3)
                open = "reg I = 3: whether ara equals pd here is an open problem (already for the n-gon)";
        } catch (const Error&) {
        }
        if (config.format == OutputFormat::json) {
            ordered_json doc;
            doc["certificate"] = nullptr;
            doc["reason"] = reason;
            doc["open_case"] = open.empty() ? ordered_json(nullptr) : ordered_json(open);
            r.out = doc.dump(2) + "\n";
        } else {
            r.out = "no certificate: " + reason + "\n";
            if (!open.empty()) r.out += "open case: " + open + "\n";
        }
        return r;
    }

    if (config.format == OutputFormat::json) {
        ordered_json doc;
        doc["route"] = route;
        doc["certificate"] = claim;
        doc["presentation"] = pres ? presentation_json(*pres) : ordered_json(nullptr);
        r.out = doc.dump(2) + "\n";
        return r;
    }
    std::ostringstream os;
    os << "route: " << route << "\n";
    if (pres) os << format_presentation(*pres) << "verification: " << verdict(*pres->verification) << "\n";
    os << "certificate: " << claim << "\n";
    r.out = os.str();
    return r;
}

CommandResult cmd_check(std::size_t count, std::size_t max_vertices, const RunConfig& config) {
    if (max_vertices < 2 || max_vertices > kMaxBettiVertices)
        throw InvalidInput("max vertices must lie in [2, " + std::to_string(kMaxBettiVertices) + "]");
    Rng rng(config.seed);
    std::uniform_int_distribution<std::size_t> size_dist(2, max_vertices);
    std::size_t cone_ok = 0, lemma1_ok = 0, lemma2_ok = 0, lemma2_runs = 0;
    std::vector<std::string> failures;

    for (std::size_t k = 0; k < count; ++k) {
        const auto complex = random_complex(rng, size_dist(rng));
        const auto face = random_proper_face(rng, complex);
        const auto cone = cone_union(complex, face, fresh_vertex(complex, ""));

        // Facets of the cone: the new simplex plus every old facet except F.
        std::vector<FaceSet> expected{face | FaceSet{complex.vertex_count()}};
        for (auto g : complex.facets())
            if (g != face) expected.push_back(g);
        std::vector<FaceSet> actual;
        for (auto g : cone.facets()) {
            FaceSet moved;
            for (auto i : g.indices()) moved.insert(i == 0 ? complex.vertex_count() : i - 1);
            actual.push_back(moved);
        }
        if (maximal_sets(expected) == maximal_sets(actual)) ++cone_ok;
        else failures.push_back("cone-facets #" + std::to_string(k));

        if (proj_dim(cone, config.field) == lemma1_rhs(complex, face, config.field)) ++lemma1_ok;
        else failures.push_back("lemma1 #" + std::to_string(k));

        if (!complex.is_simplex()) {
            ++lemma2_runs;
            if (peel_generalized_tree(complex).has_value() == has_2_linear_resolution(complex, config.field))
                ++lemma2_ok;
            else failures.push_back("lemma2 #" + std::to_string(k));
        }
    }

    CommandResult r;
    r.exit_code = failures.empty() ? kExitOk : kExitVerificationFailed;
    if (config.format == OutputFormat::json) {
        ordered_json doc;
        doc["seed"] = config.seed;
        doc["field"] = config.field.to_string();
        doc["cone_facets"] = {cone_ok, count};
        doc["lemma1"] = {lemma1_ok, count};
        doc["lemma2"] = {lemma2_ok, lemma2_runs};
        doc["failures"] = failures;
        r.out = doc.dump(2) + "\n";
        return r;
    }
    std::ostringstream os;
    os << "seed: " << config.seed << "\n"
       << "field: " << config.field.to_string() << "\n"
       << "cone-facets: " << cone_ok << "/" << count << "\n"
       << "lemma1: " << lemma1_ok << "/" << count << "\n"
       << "lemma2: " << lemma2_ok << "/" << lemma2_runs << "\n";
    for (const auto& f : failures) os << "FAIL " << f << "\n";
    r.out = os.str();
    return r;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Stanley-Reisner ideals of cones: invariants and up-to-radical generators", "conerank"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t characteristic = 0;
    std::string case_text = "auto";
    std::string format_text = "text";
    RunConfig config;
    std::string witness;
    app.add_option("--char", characteristic, "Field characteristic: 0 for QQ or a prime p");
    app.add_option("--case", case_text, "Construction case when h+1 <= t")
        ->check(CLI::IsMember({"auto", "1", "21", "22"}));
    app.add_flag("--prefer-roots", config.prefer_roots,
                 "In characteristic p, use roots of unity whenever h divides p-1");
    app.add_option("--witness", witness, "File with one polynomial per line generating I up to radical");
    app.add_option("--seed", config.seed, "Seed for the randomized suites");
    app.add_option("--format", format_text, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-pairs", config.groebner.max_pairs, "S-pair budget per Gröbner run");
    app.add_option("--max-seconds", config.groebner.max_seconds, "Wall-clock budget per Gröbner run (0: none)");

    std::string path, face, vertex;
    std::size_t count = 200, max_vertices = 7;
    auto* info = app.add_subcommand("info", "Combinatorial invariants of a complex");
    info->add_option("complex", path, "Complex file")->required();
    auto* betti = app.add_subcommand("betti", "Graded Betti numbers, pd and reg");
    betti->add_option("complex", path, "Complex file")->required();
    auto* cone = app.add_subcommand("cone", "Print the complex with a cone over a face attached");
    cone->add_option("complex", path, "Complex file")->required();
    cone->add_option("face", face, "Comma-separated vertex names (empty for the empty face)")->required();
    cone->add_option("--vertex", vertex, "Name of the cone vertex (default x0)");
    auto* construct = app.add_subcommand("construct", "Up-to-radical generators of the cone's ideal");
    construct->add_option("complex", path, "Complex file")->required();
    construct->add_option("face", face, "Comma-separated vertex names (empty for the empty face)")->required();
    construct->add_option("--vertex", vertex, "Name of the cone vertex (default x0)");
    auto* classify = app.add_subcommand("classify", "Tree and regularity verdicts");
    classify->add_option("complex", path, "Complex file")->required();
    auto* pipeline = app.add_subcommand("pipeline", "Certificate of ara when the complex admits one");
    pipeline->add_option("complex", path, "Complex file")->required();
    auto* check = app.add_subcommand("check", "Seeded property suites on random complexes");
    check->add_option("--count", count, "Number of random complexes");
    check->add_option("--max-vertices", max_vertices, "Largest vertex count");

    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        config.field = Field::from_characteristic(characteristic);
        config.case_choice = case_text == "1"    ? CaseChoice::case1
                             : case_text == "21" ? CaseChoice::case21
                             : case_text == "22" ? CaseChoice::case22
                                                 : CaseChoice::automatic;
        if (config.case_choice == CaseChoice::case21 && !config.field.is_prime())
            throw InvalidInput("--case 21 needs a prime characteristic");
        if (config.prefer_roots && config.case_choice != CaseChoice::automatic)
            throw InvalidInput("--prefer-roots only applies to --case auto");
        if (!witness.empty()) config.witness_path = witness;
        config.format = format_text == "json" ? OutputFormat::json : OutputFormat::text;

        CommandResult result;
        if (*info) result = cmd_info(path, config);
        else if (*betti) result = cmd_betti(path, config);
        else if (*cone) result = cmd_cone(path, face, vertex, config);
        else if (*construct) result = cmd_construct(path, face, vertex, config);
        else if (*classify) result = cmd_classify(path, config);
        else if (*pipeline) result = cmd_pipeline(path, config);
        else result = cmd_check(count, max_vertices, config);
        out << result.out;
        return result.exit_code;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Undefined& e) {
        err << "undefined: " << e.what() << "\n";
        return kExitUsage;
    } catch (const VerificationFailure& e) {
        err << "verification failed: " << e.what() << "\n";
        return kExitVerificationFailed;
    } catch (const Inconclusive& e) {
        err << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace conerank
