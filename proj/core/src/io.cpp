#include "sacs/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "sacs/errors.hpp"

namespace sacs {
namespace {

using nlohmann::json;

std::string elem(const std::string& path, std::size_t k) {
    return path + "[" + std::to_string(k) + "]";
}
std::string key(const std::string& path, const std::string& k) {
    return path.empty() ? k : path + "." + k;
}

[[noreturn]] void fail(const std::string& path, const std::string& reason) {
    throw ParseError(path, reason);
}

const json& require_key(const json& obj, const std::string& path, const std::string& k) {
    if (!obj.contains(k)) fail(path, "missing required key '" + k + "'");
    return obj.at(k);
}

void reject_unknown(const json& obj, const std::string& path, std::initializer_list<const char*> known) {
    for (const auto& [k, v] : obj.items()) {
        bool ok = false;
        for (const char* name : known)
            if (k == name) { ok = true; break; }
        if (!ok) fail(path, "unknown key '" + k + "'");
    }
}

std::int64_t as_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    return v.get<std::int64_t>();
}

std::vector<std::int64_t> as_int_array(const json& v, const std::string& path, int expected_len) {
    if (!v.is_array()) fail(path, "expected an array of integers");
    if (static_cast<int>(v.size()) != expected_len)
        fail(path, "expected " + std::to_string(expected_len) + " coordinates, found " + std::to_string(v.size()));
    std::vector<std::int64_t> out;
    out.reserve(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out.push_back(as_int(v[k], elem(path, k)));
    return out;
}

CohClass as_class(const json& v, const std::string& path, int degree, const GradedGroup& g) {
    return CohClass{degree, as_int_array(v, path, g.dim(degree))};
}

W6Spec as_w6(const json& v, const std::string& path, const GradedGroup& g) {
    if (v.is_string()) {
        if (v.get<std::string>() != "nonliftable")
            fail(path, "expected \"nonliftable\" or an object with a \"lift\" key");
        return W6Spec::nonliftable();
    }
    if (!v.is_object()) fail(path, "expected \"nonliftable\" or an object with a \"lift\" key");
    reject_unknown(v, path, {"lift"});
    return W6Spec::with_lift(as_class(require_key(v, path, "lift"), key(path, "lift"), 6, g));
}

int resolve_basis(const json& v, const std::string& path, int degree, const GradedGroup& g,
                  const BasisLabels& labels) {
    if (v.is_number_integer()) {
        std::int64_t idx = v.get<std::int64_t>();
        if (idx < 0 || idx >= g.dim(degree))
            fail(path, "basis index " + std::to_string(idx) + " out of range for degree " + std::to_string(degree));
        return static_cast<int>(idx);
    }
    if (v.is_string()) {
        const std::vector<std::string>& names = labels[static_cast<std::size_t>(degree)];
        if (names.empty()) fail(path, "label used but no basis_labels given for degree " + std::to_string(degree));
        std::string want = v.get<std::string>();
        for (std::size_t k = 0; k < names.size(); ++k)
            if (names[k] == want) return static_cast<int>(k);
        fail(path, "unknown basis label '" + want + "' in degree " + std::to_string(degree));
    }
    fail(path, "expected a basis index or label");
}

}  // namespace

Manifold parse_manifold(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail("(document)", e.what());
    }
    if (!doc.is_object()) fail("(document)", "top level must be an object");
    reject_unknown(doc, "(document)",
                   {"name", "groups", "basis_labels", "products", "orientation", "char", "bundles"});

    const json& jname = require_key(doc, "(document)", "name");
    if (!jname.is_string()) fail("name", "expected a string");
    std::string name = jname.get<std::string>();

    // groups
    const json& jgroups = require_key(doc, "(document)", "groups");
    if (!jgroups.is_array()) fail("groups", "expected an array");
    if (jgroups.size() != kTopDegree + 1)
        fail("groups", "expected " + std::to_string(kTopDegree + 1) + " entries (degrees 0..10), found " +
                           std::to_string(jgroups.size()));
    std::array<GroupLevel, kTopDegree + 1> levels;
    for (std::size_t d = 0; d < jgroups.size(); ++d) {
        std::string gpath = elem("groups", d);
        const json& jg = jgroups[d];
        if (!jg.is_object()) fail(gpath, "expected an object");
        reject_unknown(jg, gpath, {"free", "torsion"});
        std::int64_t fr = as_int(require_key(jg, gpath, "free"), key(gpath, "free"));
        if (fr < 0) fail(key(gpath, "free"), "free rank must be non-negative");
        GroupLevel lv;
        lv.free_rank = static_cast<int>(fr);
        if (jg.contains("torsion")) {
            const json& jt = jg.at("torsion");
            if (!jt.is_array()) fail(key(gpath, "torsion"), "expected an array");
            for (std::size_t k = 0; k < jt.size(); ++k) {
                std::string tpath = elem(key(gpath, "torsion"), k);
                std::int64_t t = as_int(jt[k], tpath);
                if (t < 2) fail(tpath, "torsion coefficient must be at least 2");
                if (!lv.torsion.empty() && t % lv.torsion.back() != 0)
                    fail(tpath, "torsion coefficients must be in divisibility order (" +
                                    std::to_string(lv.torsion.back()) + " does not divide " + std::to_string(t) + ")");
                lv.torsion.push_back(t);
            }
        }
        levels[d] = std::move(lv);
    }
    GradedGroup groups(std::move(levels));

    // basis_labels
    BasisLabels labels{};
    if (doc.contains("basis_labels")) {
        const json& jl = doc.at("basis_labels");
        if (!jl.is_array()) fail("basis_labels", "expected an array");
        if (jl.size() != kTopDegree + 1)
            fail("basis_labels", "expected " + std::to_string(kTopDegree + 1) + " entries, found " +
                                     std::to_string(jl.size()));
        for (std::size_t d = 0; d < jl.size(); ++d) {
            std::string lpath = elem("basis_labels", d);
            if (!jl[d].is_array()) fail(lpath, "expected an array of strings");
            if (!jl[d].empty() && static_cast<int>(jl[d].size()) != groups.dim(static_cast<int>(d)))
                fail(lpath, "expected " + std::to_string(groups.dim(static_cast<int>(d))) +
                                " labels to match the degree-" + std::to_string(d) + " basis, found " +
                                std::to_string(jl[d].size()));
            for (std::size_t k = 0; k < jl[d].size(); ++k) {
                if (!jl[d][k].is_string()) fail(elem(lpath, k), "expected a string");
                labels[d].push_back(jl[d][k].get<std::string>());
            }
        }
    }

    // products
    RingTable table(groups);
    std::map<std::tuple<int, int, int, int>, bool> seen;
    if (doc.contains("products")) {
        const json& jp = doc.at("products");
        if (!jp.is_array()) fail("products", "expected an array");
        for (std::size_t k = 0; k < jp.size(); ++k) {
            std::string ppath = elem("products", k);
            const json& je = jp[k];
            if (!je.is_object()) fail(ppath, "expected an object");
            reject_unknown(je, ppath, {"i", "j", "a", "b", "value"});
            std::int64_t i = as_int(require_key(je, ppath, "i"), key(ppath, "i"));
            std::int64_t j = as_int(require_key(je, ppath, "j"), key(ppath, "j"));
            if (i < 0 || j < 0 || i > kTopDegree || j > kTopDegree)
                fail(ppath, "degrees must lie in 0..10");
            if (i > j) fail(ppath, "products are listed once per degree pair with i <= j");
            if (i + j > kTopDegree)
                fail(ppath, "product degree " + std::to_string(i + j) + " exceeds the top degree");
            if (i == 0) fail(ppath, "degree-0 products are implicit (the unit acts as identity)");
            int a = resolve_basis(require_key(je, ppath, "a"), key(ppath, "a"), static_cast<int>(i), groups, labels);
            int b = resolve_basis(require_key(je, ppath, "b"), key(ppath, "b"), static_cast<int>(j), groups, labels);
            auto sig = std::make_tuple(static_cast<int>(i), static_cast<int>(j), a, b);
            if (seen.count(sig)) fail(ppath, "duplicate product entry");
            seen[sig] = true;
            table.set_product(static_cast<int>(i), static_cast<int>(j), a, b,
                              as_int_array(require_key(je, ppath, "value"), key(ppath, "value"),
                                           groups.dim(static_cast<int>(i + j))));
        }
    }

    // orientation
    CohClass orientation = as_class(require_key(doc, "(document)", "orientation"), "orientation", kTopDegree, groups);

    // char
    const json& jchar = require_key(doc, "(document)", "char");
    if (!jchar.is_object()) fail("char", "expected an object");
    reject_unknown(jchar, "char", {"c", "q1", "w6", "p1", "p2"});
    ManifoldCharData chr;
    chr.c = as_class(require_key(jchar, "char", "c"), "char.c", 2, groups);
    chr.q1 = as_class(require_key(jchar, "char", "q1"), "char.q1", 4, groups);
    chr.w6 = as_w6(require_key(jchar, "char", "w6"), "char.w6", groups);
    if (jchar.contains("p1")) chr.p1 = as_class(jchar.at("p1"), "char.p1", 4, groups);
    if (jchar.contains("p2")) chr.p2 = as_class(jchar.at("p2"), "char.p2", 8, groups);

    // bundles
    std::vector<BundleCharData> bundles;
    if (doc.contains("bundles")) {
        const json& jb = doc.at("bundles");
        if (!jb.is_array()) fail("bundles", "expected an array");
        for (std::size_t k = 0; k < jb.size(); ++k) {
            std::string bpath = elem("bundles", k);
            const json& je = jb[k];
            if (!je.is_object()) fail(bpath, "expected an object");
            reject_unknown(je, bpath, {"name", "d0", "q1p", "w6", "w8lift", "p1"});
            BundleCharData bd;
            const json& jn = require_key(je, bpath, "name");
            if (!jn.is_string()) fail(key(bpath, "name"), "expected a string");
            bd.name = jn.get<std::string>();
            for (const BundleCharData& prev : bundles)
                if (prev.name == bd.name) fail(key(bpath, "name"), "duplicate bundle name '" + bd.name + "'");
            bd.d0 = as_class(require_key(je, bpath, "d0"), key(bpath, "d0"), 2, groups);
            bd.q1p = as_class(require_key(je, bpath, "q1p"), key(bpath, "q1p"), 4, groups);
            bd.w6 = as_w6(require_key(je, bpath, "w6"), key(bpath, "w6"), groups);
            bd.w8lift = as_class(require_key(je, bpath, "w8lift"), key(bpath, "w8lift"), 8, groups);
            if (je.contains("p1")) bd.p1 = as_class(je.at("p1"), key(bpath, "p1"), 4, groups);
            bundles.push_back(std::move(bd));
        }
    }

    return Manifold(std::move(name), std::move(groups), std::move(table), std::move(orientation),
                    std::move(chr), std::move(bundles), std::move(labels));
}

Manifold load_manifold_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ParseError(file.string(), "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_manifold(buf.str());
}

namespace {

void write_ints(std::ostream& os, const std::vector<std::int64_t>& v) {
    os << "[";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) os << ",";
        os << v[k];
    }
    os << "]";
}

void write_string(std::ostream& os, const std::string& s) {
    os << '"';
    for (char ch : s) {
        switch (ch) {
            case '"': os << "\\\""; break;
            case '\\': os << "\\\\"; break;
            case '\n': os << "\\n"; break;
            case '\t': os << "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    os << buf;
                } else {
                    os << ch;
                }
        }
    }
    os << '"';
}

void write_basis_ref(std::ostream& os, const Manifold& m, int degree, int index) {
    const std::vector<std::string>& names = m.labels()[static_cast<std::size_t>(degree)];
    if (index < static_cast<int>(names.size())) write_string(os, names[static_cast<std::size_t>(index)]);
    else os << index;
}

void write_w6(std::ostream& os, const W6Spec& w6) {
    if (!w6.lift) {
        os << "\"nonliftable\"";
        return;
    }
    os << "{\"lift\": ";
    write_ints(os, w6.lift->coords);
    os << "}";
}

bool all_zero(const std::vector<std::int64_t>& v) {
    for (std::int64_t x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace

std::string serialize_manifold(const Manifold& m) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"name\": ";
    write_string(os, m.name());
    os << ",\n  \"groups\": [\n";
    for (int d = 0; d <= kTopDegree; ++d) {
        const GroupLevel& lv = m.groups().level(d);
        os << "    {\"free\": " << lv.free_rank << ", \"torsion\": ";
        write_ints(os, lv.torsion);
        os << "}" << (d < kTopDegree ? "," : "") << "\n";
    }
    os << "  ]";

    bool any_labels = false;
    for (const std::vector<std::string>& names : m.labels())
        if (!names.empty()) any_labels = true;
    if (any_labels) {
        os << ",\n  \"basis_labels\": [\n";
        for (int d = 0; d <= kTopDegree; ++d) {
            const std::vector<std::string>& names = m.labels()[static_cast<std::size_t>(d)];
            os << "    [";
            for (std::size_t k = 0; k < names.size(); ++k) {
                if (k) os << ",";
                write_string(os, names[k]);
            }
            os << "]" << (d < kTopDegree ? "," : "") << "\n";
        }
        os << "  ]";
    }

    // canonical product list: nonzero entries, (i, j, a, b) sorted, and for
    // equal degrees only the a <= b representative
    std::vector<std::tuple<int, int, int, int>> prods;
    for (int i = 1; i <= 5; ++i)
        for (int j = i; j <= kTopDegree - i; ++j)
            for (int a = 0; a < m.groups().dim(i); ++a)
                for (int b = 0; b < m.groups().dim(j); ++b) {
                    if (i == j && b < a) continue;
                    CohClass v = m.canonical(CohClass{i + j, m.table().product(i, j, a, b)});
                    if (all_zero(v.coords)) continue;
                    prods.emplace_back(i, j, a, b);
                }
    if (!prods.empty()) {
        os << ",\n  \"products\": [\n";
        for (std::size_t k = 0; k < prods.size(); ++k) {
            auto [i, j, a, b] = prods[k];
            CohClass v = m.canonical(CohClass{i + j, m.table().product(i, j, a, b)});
            os << "    {\"i\": " << i << ", \"j\": " << j << ", \"a\": ";
            write_basis_ref(os, m, i, a);
            os << ", \"b\": ";
            write_basis_ref(os, m, j, b);
            os << ", \"value\": ";
            write_ints(os, v.coords);
            os << "}" << (k + 1 < prods.size() ? "," : "") << "\n";
        }
        os << "  ]";
    }

    os << ",\n  \"orientation\": ";
    write_ints(os, m.orientation().coords);

    os << ",\n  \"char\": {\n    \"c\": ";
    write_ints(os, m.chr().c.coords);
    os << ",\n    \"q1\": ";
    write_ints(os, m.chr().q1.coords);
    os << ",\n    \"w6\": ";
    write_w6(os, m.chr().w6);
    if (m.chr().p1) {
        os << ",\n    \"p1\": ";
        write_ints(os, m.chr().p1->coords);
    }
    if (m.chr().p2) {
        os << ",\n    \"p2\": ";
        write_ints(os, m.chr().p2->coords);
    }
    os << "\n  }";

    if (!m.bundles().empty()) {
        os << ",\n  \"bundles\": [\n";
        for (std::size_t k = 0; k < m.bundles().size(); ++k) {
            const BundleCharData& b = m.bundles()[k];
            os << "    {\"name\": ";
            write_string(os, b.name);
            os << ", \"d0\": ";
            write_ints(os, b.d0.coords);
            os << ", \"q1p\": ";
            write_ints(os, b.q1p.coords);
            os << ", \"w6\": ";
            write_w6(os, b.w6);
            os << ", \"w8lift\": ";
            write_ints(os, b.w8lift.coords);
            if (b.p1) {
                os << ", \"p1\": ";
                write_ints(os, b.p1->coords);
            }
            os << "}" << (k + 1 < m.bundles().size() ? "," : "") << "\n";
        }
        os << "  ]";
    }

    os << "\n}\n";
    return os.str();
}

}  // namespace sacs
