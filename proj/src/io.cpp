#include "tothom/io.hpp"

#include <cctype>
#include <fstream>

namespace tothom::io {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw IoError(what);
}

const Json& field(const Json& j, const char* key) {
    auto it = j.find(key);
    require(it != j.end(), std::string("missing field '") + key + "'");
    return *it;
}

void check_header(const Json& j, const char* type) {
    require(j.is_object(), "expected an object");
    require(field(j, "format_version").get<int>() == kFormatVersion,
            "unsupported format_version");
    require(field(j, "type").get<std::string>() == type,
            std::string("expected type '") + type + "'");
}

Json header(const char* type) {
    Json j;
    j["format_version"] = kFormatVersion;
    j["type"] = type;
    return j;
}

/// Per-degree matrix table {"n": matrix, ...}.
Json comp_to_json(const std::map<int, SparseMat>& comp) {
    Json j = Json::object();
    for (const auto& [n, m] : comp)
        if (!m.is_zero()) j[std::to_string(n)] = mat_to_json(m);
    return j;
}

std::map<int, SparseMat> comp_from_json(const Json& j) {
    require(j.is_object(), "matrix table must be an object");
    std::map<int, SparseMat> comp;
    for (const auto& [key, val] : j.items()) {
        try {
            comp[std::stoi(key)] = mat_from_json(val);
        } catch (const std::invalid_argument&) {
            throw IoError("matrix table key '" + key + "' is not a degree");
        }
    }
    return comp;
}

}  // namespace

std::string rat_str(const Rat& r) {
    return rat_to_string(r);
}

Rat parse_rat(const std::string& s) {
    // reject whitespace and other laxness the gmp parser accepts silently
    for (char c : s)
        require(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/',
                "malformed rational '" + s + "'");
    try {
        return rat_from_string(s);
    } catch (const std::invalid_argument& e) {
        throw IoError(e.what());
    }
}

Json mat_to_json(const SparseMat& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (const auto& [c, v] : m.row(i)) entries.push_back({i, c, rat_str(v)});
    j["entries"] = std::move(entries);
    return j;
}

SparseMat mat_from_json(const Json& j) {
    require(j.is_object(), "matrix must be an object");
    int rows = field(j, "rows").get<int>(), cols = field(j, "cols").get<int>();
    require(rows >= 0 && cols >= 0, "negative matrix shape");
    SparseMat m(rows, cols);
    for (const Json& e : field(j, "entries")) {
        require(e.is_array() && e.size() == 3, "matrix entry must be [row, col, value]");
        int r = e[0].get<int>(), c = e[1].get<int>();
        require(r >= 0 && r < rows && c >= 0 && c < cols, "matrix entry out of range");
        m.set(r, c, parse_rat(e[2].get<std::string>()));
    }
    return m;
}

Json complex_to_json(const ComplexPtr& c) {
    Json j = header("complex");
    j["support"] = {c->lo(), c->hi()};
    Json dims = Json::array();
    for (int n = c->lo(); n <= c->hi(); ++n) dims.push_back(c->dim(n));
    j["dims"] = std::move(dims);
    std::map<int, SparseMat> d;
    for (int n = c->lo(); n <= c->hi(); ++n) d[n] = c->d(n);
    j["differentials"] = comp_to_json(d);
    return j;
}

ComplexPtr complex_from_json(const Json& j) {
    check_header(j, "complex");
    const Json& sup = field(j, "support");
    require(sup.is_array() && sup.size() == 2, "support must be [lo, hi]");
    int lo = sup[0].get<int>(), hi = sup[1].get<int>();
    auto dims = field(j, "dims").get<std::vector<int>>();
    require(static_cast<int>(dims.size()) == hi - lo + 1, "dims do not match support");
    return ChainComplex::make(lo, std::move(dims), comp_from_json(field(j, "differentials")));
}

Json chain_map_to_json(const ChainMap& f) {
    Json j = header("chain_map");
    j["source"] = complex_to_json(f.source());
    j["target"] = complex_to_json(f.target());
    j["components"] = comp_to_json(f.g.comp);
    return j;
}

ChainMap chain_map_from_json(const Json& j) {
    check_header(j, "chain_map");
    return ChainMap(complex_from_json(field(j, "source")),
                    complex_from_json(field(j, "target")),
                    comp_from_json(field(j, "components")));
}

Json graded_map_to_json(const GradedMap& g) {
    Json j = header("graded_map");
    j["source"] = complex_to_json(g.source);
    j["target"] = complex_to_json(g.target);
    j["degree"] = g.degree;
    j["components"] = comp_to_json(g.comp);
    return j;
}

GradedMap graded_map_from_json(const Json& j) {
    check_header(j, "graded_map");
    GradedMap g(complex_from_json(field(j, "source")),
                complex_from_json(field(j, "target")), field(j, "degree").get<int>());
    for (auto& [n, m] : comp_from_json(field(j, "components"))) g.set(n, std::move(m));
    return g;
}

Json bicomplex_to_json(const Bicomplex& b) {
    Json j = header("bicomplex");
    Json cols = Json::array();
    for (const auto& c : b.column) cols.push_back(complex_to_json(c));
    j["columns"] = std::move(cols);
    Json horiz = Json::object();
    for (int n = 1; n < b.cols(); ++n)
        horiz[std::to_string(n)] = comp_to_json(b.horiz[n].g.comp);
    j["horiz"] = std::move(horiz);
    return j;
}

Bicomplex bicomplex_from_json(const Json& j) {
    check_header(j, "bicomplex");
    Bicomplex b;
    for (const Json& c : field(j, "columns")) b.column.push_back(complex_from_json(c));
    require(!b.column.empty(), "bicomplex needs at least one column");
    b.horiz.resize(b.cols());
    for (int n = 1; n < b.cols(); ++n) {
        const Json& h = field(j, "horiz");
        auto it = h.find(std::to_string(n));
        std::map<int, SparseMat> comp;
        if (it != h.end()) comp = comp_from_json(*it);
        b.horiz[n] = ChainMap(b.column[n], b.column[n - 1], std::move(comp));
    }
    b.validate();
    return b;
}

Json filtered_to_json(const FilteredComplex& f) {
    Json j = header("filtered_complex");
    j["total"] = complex_to_json(f.total);
    j["length"] = f.length;
    j["levels"] = f.level;
    return j;
}

FilteredComplex filtered_from_json(const Json& j) {
    check_header(j, "filtered_complex");
    FilteredComplex f;
    f.total = complex_from_json(field(j, "total"));
    f.length = field(j, "length").get<int>();
    f.level = field(j, "levels").get<std::vector<std::vector<int>>>();
    f.validate();
    return f;
}

Json hsmap_to_json(const HomotopySimplicialMap& m) {
    Json j = header("homotopy_simplicial_map");
    j["C"] = bicomplex_to_json(m.C);
    j["D"] = bicomplex_to_json(m.D);
    Json f = Json::array();
    for (const auto& fn : m.f) f.push_back(comp_to_json(fn.g.comp));
    j["f"] = std::move(f);
    Json s1 = Json::object();
    for (int n = 1; n < static_cast<int>(m.s1.size()); ++n)
        if (!m.s1[n].comp.empty()) s1[std::to_string(n)] = comp_to_json(m.s1[n].comp);
    j["s1"] = std::move(s1);
    return j;
}

HomotopySimplicialMap hsmap_from_json(const Json& j) {
    check_header(j, "homotopy_simplicial_map");
    HomotopySimplicialMap m;
    m.C = bicomplex_from_json(field(j, "C"));
    m.D = bicomplex_from_json(field(j, "D"));
    const Json& f = field(j, "f");
    require(static_cast<int>(f.size()) == m.C.cols(), "one f block per column required");
    for (int n = 0; n < m.C.cols(); ++n)
        m.f.push_back(ChainMap(m.C.column[n], m.D.column[n], comp_from_json(f[n])));
    m.s1.resize(m.C.cols());
    for (int n = 1; n < m.C.cols(); ++n) {
        GradedMap w(m.C.column[n], m.D.column[n - 1], 1);
        const Json& s1 = field(j, "s1");
        auto it = s1.find(std::to_string(n));
        if (it != s1.end())
            for (auto& [k, mat] : comp_from_json(*it)) w.set(k, std::move(mat));
        m.s1[n] = std::move(w);
    }
    m.validate();
    return m;
}

Json hco_to_json(const HomotopyChainObject& x) {
    Json j = header("homotopy_chain_object");
    Json objs = Json::array();
    for (const auto& c : x.objects) objs.push_back(complex_to_json(c));
    j["objects"] = std::move(objs);
    Json d = Json::object();
    for (int n = 1; n <= x.N(); ++n) d[std::to_string(n)] = comp_to_json(x.d[n].g.comp);
    j["d"] = std::move(d);
    Json h = Json::object();
    for (int n = 2; n <= x.N(); ++n)
        if (!x.h[n].comp.empty()) h[std::to_string(n)] = comp_to_json(x.h[n].comp);
    j["h"] = std::move(h);
    return j;
}

HomotopyChainObject hco_from_json(const Json& j) {
    check_header(j, "homotopy_chain_object");
    HomotopyChainObject x;
    for (const Json& c : field(j, "objects")) x.objects.push_back(complex_from_json(c));
    require(!x.objects.empty(), "at least one object required");
    x.d.resize(x.objects.size());
    x.h.resize(x.objects.size());
    for (int n = 1; n <= x.N(); ++n) {
        const Json& d = field(j, "d");
        auto it = d.find(std::to_string(n));
        std::map<int, SparseMat> comp;
        if (it != d.end()) comp = comp_from_json(*it);
        x.d[n] = ChainMap(x.objects[n], x.objects[n - 1], std::move(comp));
    }
    for (int n = 2; n <= x.N(); ++n) {
        GradedMap w(x.objects[n], x.objects[n - 2], 1);
        const Json& h = field(j, "h");
        auto it = h.find(std::to_string(n));
        if (it != h.end())
            for (auto& [k, m] : comp_from_json(*it)) w.set(k, std::move(m));
        x.h[n] = std::move(w);
    }
    x.validate();
    return x;
}

std::string render(const Json& j) {
    return j.dump(1) + "\n";
}

Json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw IoError(path + ": " + e.what());
    }
}

void save_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << render(j);
}

}  // namespace tothom::io
