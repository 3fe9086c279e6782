// Batch driver: loads JSON inputs, runs one computation, prints a report.
// Exit codes: 0 success, 1 nonvanishing obstruction (a successful
// computation), 2 invalid input.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tothom/examples.hpp"
#include "tothom/freesimp.hpp"
#include "tothom/gamma.hpp"
#include "tothom/io.hpp"
#include "tothom/specseq.hpp"

using namespace tothom;
namespace io = tothom::io;
using Json = io::Json;

namespace {

struct Report {
    Json body = Json::object();
    int exit_code = 0;
};

/// FNV-1a over the file bytes; reports identify their inputs by this digest.
std::string digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io::IoError("cannot open '" + path + "'");
    unsigned long long h = 14695981039346656037ull;
    char c;
    while (in.get(c)) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

/// Text rendering walks the same tree the JSON rendering prints, so both
/// carry identical numbers.
void render_text(const Json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            std::string key = prefix.empty() ? k : prefix + "." + k;
            if (v.is_object() || (v.is_array() && !v.empty() && v[0].is_structured()))
                render_text(v, key, out);
            else
                out << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                    << "\n";
        }
    } else if (j.is_array()) {
        for (size_t i = 0; i < j.size(); ++i)
            render_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

Json dims_table(const std::vector<int>& dims, int lo) {
    Json t = Json::object();
    for (size_t i = 0; i < dims.size(); ++i) t[std::to_string(lo + static_cast<int>(i))] = dims[i];
    return t;
}

std::pair<int, int> parse_degrees(const std::string& spec) {
    auto dots = spec.find("..");
    if (dots == std::string::npos) {
        int n = std::stoi(spec);
        return {n, n};
    }
    return {std::stoi(spec.substr(0, dots)), std::stoi(spec.substr(dots + 2))};
}

Json bracket_to_json(const ObstructionClass& t) {
    Json j;
    j["order"] = t.order;
    j["position"] = t.position;
    j["class_dim"] = t.classes.dim();
    j["indeterminacy_dim"] = t.indeterminacy.dim();
    Json coords = Json::array();
    for (const Rat& x : t.coords) coords.push_back(io::rat_str(x));
    j["coords"] = std::move(coords);
    j["verdict"] = t.vanishes() ? "vanishing" : "nonvanishing";
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tothom: exact chain-level computations"};
    app.require_subcommand(1);

    std::string input, map_path, table, degrees, variance = "co", format = "text";
    std::string group_op, example_kind, probe_path;
    int order = 2, position = 0, window = 3, truncation = 4, pages_r = 3, degree = 0;
    bool have_degree = false;

    auto add_common = [&](CLI::App* s) {
        s->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    };
    auto* c_hom = app.add_subcommand("homology", "homology of a chain complex");
    c_hom->add_option("--input", input)->required();
    c_hom->add_option("--degrees", degrees);
    auto* c_cone = app.add_subcommand("cone", "mapping cone of a chain map");
    c_cone->add_option("--map", map_path)->required();
    auto* c_tot = app.add_subcommand("tot", "totalization of a bicomplex");
    c_tot->add_option("--input", input)->required();
    auto* c_gr = app.add_subcommand("gr", "filtration subquotient F_n / F_{n-l}");
    c_gr->add_option("--input", input)->required();
    c_gr->add_option("--window", window)->required();
    c_gr->add_option("--position", position)->required();
    auto* c_toda = app.add_subcommand("toda", "Toda bracket T(k,n;f)");
    c_toda->add_option("--map", map_path)->required();
    c_toda->add_option("--order", order);
    c_toda->add_option("--position", position);
    auto* c_ext = app.add_subcommand("extend", "extend f across Gr^k_n");
    c_ext->add_option("--map", map_path)->required();
    c_ext->add_option("--order", order);
    c_ext->add_option("--position", position);
    auto* c_bn = app.add_subcommand("bntower", "totalization tower of a twisted complex");
    c_bn->add_option("--input", input)->required();
    auto* c_ss = app.add_subcommand("ss", "spectral sequence pages of a filtered complex");
    c_ss->add_option("--input", input)->required();
    c_ss->add_option("--probe", probe_path);
    c_ss->add_option("--variance", variance)->check(CLI::IsMember({"co", "contra"}));
    c_ss->add_option("--pages", pages_r);
    auto* c_grp = app.add_subcommand("group", "group homology computations");
    c_grp->add_option("op", group_op)->required()->check(CLI::IsMember({"hh", "hc", "burghelea"}));
    c_grp->add_option("--table", table)->required();
    c_grp->add_option("--truncation", truncation);
    c_grp->add_option("--position", position);
    c_grp->add_option("--degrees", degrees);
    auto* c_gam = app.add_subcommand("gamma", "free simplicial group on surjections");
    c_gam->add_option("--order", order)->required();
    c_gam->add_option("--truncation", truncation);
    auto* c_ex = app.add_subcommand("example", "built-in counterexample inputs");
    c_ex->add_option("kind", example_kind)->required()->check(CLI::IsMember({"window", "surrogate"}));
    c_ex->add_option("--window", window);
    for (auto* s : app.get_subcommands({})) add_common(s);
    c_hom->add_option("--degree", degree)->each([&](const std::string&) { have_degree = true; });

    CLI11_PARSE(app, argc, argv);

    Report rep;
    Json& body = rep.body;
    {
        std::string echo;
        for (int i = 0; i < argc; ++i) echo += (i ? " " : "") + std::string(argv[i]);
        body["command"] = echo;
    }
    try {
        Json digests = Json::object();
        for (const std::string& p : {input, map_path, table, probe_path})
            if (!p.empty()) digests[p] = digest(p);
        body["inputs"] = std::move(digests);

        if (app.got_subcommand(c_hom)) {
            auto c = io::complex_from_json(io::load_file(input));
            auto dims = homology_dims(c);
            if (have_degree) degrees = std::to_string(degree);
            if (!degrees.empty()) {
                auto [a, b] = parse_degrees(degrees);
                Json t = Json::object();
                for (int n = a; n <= b; ++n)
                    t[std::to_string(n)] =
                        (n >= c->lo() && n <= c->hi()) ? dims[n - c->lo()] : 0;
                body["homology"] = std::move(t);
            } else {
                body["homology"] = dims_table(dims, c->lo());
            }
        } else if (app.got_subcommand(c_cone)) {
            auto f = io::chain_map_from_json(io::load_file(map_path));
            auto cone = mapping_cone(f);
            body["cone_dims"] = dims_table(
                [&] {
                    std::vector<int> d;
                    for (int n = cone.complex->lo(); n <= cone.complex->hi(); ++n)
                        d.push_back(cone.complex->dim(n));
                    return d;
                }(),
                cone.complex->lo());
            body["homology"] = dims_table(homology_dims(cone.complex), cone.complex->lo());
        } else if (app.got_subcommand(c_tot)) {
            auto b = io::bicomplex_from_json(io::load_file(input));
            auto t = totalize(b);
            body["filtration_length"] = t.filt.length;
            body["homology"] = dims_table(homology_dims(t.tot), t.tot->lo());
        } else if (app.got_subcommand(c_gr)) {
            auto f = io::filtered_from_json(io::load_file(input));
            auto gr = gr_subquotient(f, window, position);
            body["homology"] = dims_table(homology_dims(gr.complex), gr.complex->lo());
        } else if (app.got_subcommand(c_toda)) {
            auto f = io::hsmap_from_json(io::load_file(map_path));
            if (order <= 2) {
                auto t = toda_bracket(f, order, position);
                body["bracket"] = bracket_to_json(t);
                if (!t.vanishes()) rep.exit_code = 1;
            } else {
                // higher brackets need the lower witness tower; solve it first
                auto r = extend_tower(f, order + 1, position);
                if (r.map) {
                    auto t = toda_bracket(f, order, position, r.witnesses);
                    body["bracket"] = bracket_to_json(t);
                    if (!t.vanishes()) rep.exit_code = 1;
                } else {
                    body["bracket"] = bracket_to_json(*r.obstruction);
                    if (r.obstruction->order != order || r.obstruction->position != position)
                        body["note"] =
                            "a lower bracket obstructs; the requested bracket is undefined";
                    rep.exit_code = 1;
                }
            }
        } else if (app.got_subcommand(c_ext)) {
            auto f = io::hsmap_from_json(io::load_file(map_path));
            auto r = extend_tower(f, order, position);
            body["success"] = r.map.has_value();
            if (r.obstruction) {
                body["obstruction"] = bracket_to_json(*r.obstruction);
                rep.exit_code = 1;
            }
        } else if (app.got_subcommand(c_bn)) {
            auto x = io::hco_from_json(io::load_file(input));
            auto r = bn_totalization_tower(x);
            Json brackets = Json::array();
            for (const auto& b : r.brackets) {
                Json jb;
                jb["n"] = b.n;
                jb["class_dim"] = b.class_dim;
                jb["verdict"] = b.vanishes ? "vanishing" : "nonvanishing";
                brackets.push_back(std::move(jb));
            }
            body["brackets"] = std::move(brackets);
            body["totalizable"] = r.totalizable();
            if (r.totalizable()) {
                const auto& t = r.t_infinity();
                body["homology"] = dims_table(homology_dims(t), t->lo());
            } else {
                body["obstruction_at"] = *r.obstruction_at;
                rep.exit_code = 1;
            }
        } else if (app.got_subcommand(c_ss)) {
            auto f = io::filtered_from_json(io::load_file(input));
            ProbeComplex probe = ProbeComplex::trivial();
            if (!probe_path.empty())
                probe = ProbeComplex{io::complex_from_json(io::load_file(probe_path)),
                                     variance == "contra"};
            auto pgs = pages(f, probe, pages_r);
            Json jp = Json::array();
            for (const auto& pg : pgs) {
                Json cells = Json::object();
                for (const auto& [st, sq] : pg.cell)
                    if (sq.dim > 0)
                        cells["(" + std::to_string(st.first) + "," +
                              std::to_string(st.second) + ")"] = sq.dim;
                Json one;
                one["r"] = pg.r;
                one["cells"] = std::move(cells);
                jp.push_back(std::move(one));
            }
            body["pages"] = std::move(jp);
        } else if (app.got_subcommand(c_grp)) {
            auto G = FiniteGroup::from_table(table);
            if (group_op == "burghelea") {
                auto bm = burghelea_maps(G, position, truncation);
                body["class_of"] = position;
                body["bcy_homology"] = dims_table(homology_dims(chains(bm.bcy)), 0);
                body["component_homology"] =
                    dims_table(homology_dims(chains(bm.target.s)), 0);
            } else {
                if (!degrees.empty()) truncation = parse_degrees(degrees).second + 1;
                auto cx = cyclic_homology(G, truncation);
                auto dims = group_op == "hh" ? cx.hh : cx.hc;
                if (!degrees.empty()) {
                    auto [a, b] = parse_degrees(degrees);
                    Json t = Json::object();
                    for (int n = a; n <= b; ++n)
                        t[std::to_string(n)] = n < static_cast<int>(dims.size()) ? dims[n] : 0;
                    body[group_op] = std::move(t);
                } else {
                    body[group_op] = dims_table(dims, 0);
                }
            }
        } else if (app.got_subcommand(c_gam)) {
            auto g = gamma_truncation(order, truncation);
            Json ranks = Json::array();
            for (int n = 0; n <= g.N; ++n) ranks.push_back(g.rank(n));
            body["ranks"] = std::move(ranks);
            auto ch = alternating_chains(abelianize(g));
            body["abelianized_homology"] = dims_table(homology_dims(ch), 0);
        } else if (app.got_subcommand(c_ex)) {
            if (example_kind == "surrogate") {
                auto m = surrogate_counterexample();
                auto t = toda_bracket(m, 2, 0);
                body["bracket"] = bracket_to_json(t);
                Json h = Json::object();
                h["C"] = dims_table(homology_dims(totalize(m.C).tot), 0);
                h["D"] = dims_table(homology_dims(totalize(m.D).tot), 0);
                body["total_homology"] = std::move(h);
            } else {
                auto p = build_example_bicomplexes(2, 3, window);
                auto vC = window_verdict(p.totC, p.iota_coord_C);
                auto vD = window_verdict(p.totD, p.iota_coord_D);
                body["window"] = window;
                body["stable_range"] = stable_range(p);
                Json v = Json::object();
                v["C"] = {{"e2_dim", vC.e2_dim}, {"e3_dim", vC.e3_dim},
                          {"alive_e2", vC.alive_e2}, {"alive_e3", vC.alive_e3}};
                v["D"] = {{"e2_dim", vD.e2_dim}, {"e3_dim", vD.e3_dim},
                          {"alive_e2", vD.alive_e2}, {"alive_e3", vD.alive_e3}};
                body["verdicts"] = std::move(v);
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    body["exit"] = rep.exit_code;
    if (format == "json")
        std::cout << io::render(body);
    else
        render_text(body, "", std::cout);
    return rep.exit_code;
}
