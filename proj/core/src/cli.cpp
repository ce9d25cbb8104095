#include "sacs/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sacs/catalog.hpp"
#include "sacs/charclass.hpp"
#include "sacs/decide.hpp"
#include "sacs/errors.hpp"
#include "sacs/io.hpp"
#include "sacs/validate.hpp"

namespace sacs {
namespace {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------- catalog

struct CatalogRef {
    std::string name;
    std::string source;  // "builtin" or a file path
};

std::optional<std::filesystem::path> user_catalog_dir() {
    const char* env = std::getenv("SACS_CATALOG_DIR");
    if (env == nullptr || *env == '\0') return std::nullopt;
    return std::filesystem::path(env);
}

// Built-in entries first, then *.m10 files from SACS_CATALOG_DIR (sorted,
// keyed by file stem).  Built-in names shadow user files.
std::vector<CatalogRef> catalog_refs() {
    std::vector<CatalogRef> refs;
    for (const auto& name : catalog_names()) refs.push_back({name, "builtin"});
    if (auto dir = user_catalog_dir()) {
        std::vector<CatalogRef> user;
        std::error_code ec;
        for (const auto& entry : std::filesystem::directory_iterator(*dir, ec)) {
            const auto& p = entry.path();
            if (p.extension() == ".m10") user.push_back({p.stem().string(), p.string()});
        }
        std::sort(user.begin(), user.end(),
                  [](const CatalogRef& a, const CatalogRef& b) { return a.name < b.name; });
        for (auto& u : user) {
            bool shadowed = std::any_of(refs.begin(), refs.end(),
                                        [&](const CatalogRef& r) { return r.name == u.name; });
            if (!shadowed) refs.push_back(std::move(u));
        }
    }
    return refs;
}

Manifold load_catalog_name(const std::string& name) {
    for (const auto& m : catalog())
        if (m.name() == name) return m;
    if (auto dir = user_catalog_dir()) {
        auto p = *dir / (name + ".m10");
        if (std::filesystem::exists(p)) return load_manifold_file(p);
    }
    throw Error("no catalog entry named '" + name + "'");
}

// A positional input is a file path when one exists, a catalog name
// otherwise.
Manifold resolve_input(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) return load_manifold_file(arg);
    for (const auto& r : catalog_refs())
        if (r.name == arg) return load_catalog_name(arg);
    throw Error("input '" + arg + "' is neither a file nor a catalog entry");
}

// ---------------------------------------------------------------- helpers

const char* answer_str(bool yes) { return yes ? "YES" : "NO"; }

std::string error_kind(const Error& e) {
    if (dynamic_cast<const OverflowError*>(&e) != nullptr) return "overflow";
    if (dynamic_cast<const DegreeError*>(&e) != nullptr) return "degree";
    if (dynamic_cast<const ParseError*>(&e) != nullptr) return "parse";
    if (dynamic_cast<const InconsistentInputError*>(&e) != nullptr) return "inconsistent-input";
    if (dynamic_cast<const NotInDError*>(&e) != nullptr) return "not-in-d";
    if (dynamic_cast<const InapplicablePathError*>(&e) != nullptr) return "inapplicable-path";
    if (dynamic_cast<const IntegralityViolation*>(&e) != nullptr) return "integrality";
    if (dynamic_cast<const SearchBoundError*>(&e) != nullptr) return "search-bound";
    if (dynamic_cast<const InternalError*>(&e) != nullptr) return "internal";
    return "input";
}

int emit_error(bool js, std::ostream& out, std::ostream& err, const std::string& command,
               const std::string& input, const std::string& kind, const std::string& message,
               int code, std::optional<std::int64_t> n = std::nullopt) {
    if (js) {
        ordered_json doc;
        doc["command"] = command;
        if (!input.empty()) doc["input"] = input;
        ordered_json e;
        e["type"] = kind;
        e["message"] = message;
        if (n.has_value()) e["n"] = *n;
        doc["error"] = std::move(e);
        doc["exit"] = code;
        out << doc.dump(2) << "\n";
    } else {
        err << "error: " << message << "\n";
    }
    return code;
}

ordered_json class_json(const Manifold& m, const CohClass& a) {
    ordered_json j;
    j["degree"] = a.degree;
    j["coords"] = a.coords;
    j["text"] = m.format_class(a);
    return j;
}

ordered_json check_json(const Manifold& m, const GeneratorCheck& c) {
    ordered_json j;
    j["x"] = class_json(m, c.x);
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    return j;
}

ordered_json violations_json(const Report& r) {
    auto arr = ordered_json::array();
    for (const auto& v : r.violations) {
        ordered_json j;
        j["kind"] = v.kind;
        j["where"] = v.where;
        j["detail"] = v.detail;
        arr.push_back(std::move(j));
    }
    return arr;
}

Report validate_all(const Manifold& m) {
    Report r = validate_hypotheses(m);
    r.merge(validate_ring(m));
    r.merge(validate_pd(m));
    r.merge(wu_validate(m));
    return r;
}

// Shared pre-decision validation: emits a report and returns an exit code
// when the input is invalid.
std::optional<int> precheck(const Manifold& m, const std::string& command,
                            const std::string& input, bool js, std::ostream& out,
                            std::ostream& err) {
    Report r = validate_all(m);
    if (r.ok()) return std::nullopt;
    if (js) {
        ordered_json doc;
        doc["command"] = command;
        doc["input"] = input;
        doc["name"] = m.name();
        ordered_json e;
        e["type"] = "validation";
        e["message"] = "input failed validation";
        doc["error"] = std::move(e);
        doc["violations"] = violations_json(r);
        doc["exit"] = 2;
        out << doc.dump(2) << "\n";
    } else {
        err << "error: input failed validation (" << r.violations.size() << " violation"
            << (r.violations.size() == 1 ? "" : "s") << ")\n";
        for (const auto& v : r.violations)
            err << "  [" << v.kind << "] " << v.where << ": " << v.detail << "\n";
    }
    return 2;
}

// ---------------------------------------------------------------- validate

int cmd_validate(const Manifold& m, const std::string& input, bool js, std::ostream& out) {
    Report r = validate_all(m);
    int code = r.ok() ? 0 : 2;
    if (js) {
        ordered_json doc;
        doc["command"] = "validate";
        doc["input"] = input;
        doc["name"] = m.name();
        doc["valid"] = r.ok();
        doc["violations"] = violations_json(r);
        doc["exit"] = code;
        out << doc.dump(2) << "\n";
    } else {
        out << "manifold: " << m.name() << "\n";
        for (const auto& v : r.violations)
            out << "violation [" << v.kind << "] " << v.where << ": " << v.detail << "\n";
        if (r.ok())
            out << "valid\n";
        else
            out << "invalid (" << r.violations.size() << " violation"
                << (r.violations.size() == 1 ? "" : "s") << ")\n";
    }
    return code;
}

// ---------------------------------------------------------------- dm

int cmd_dm(const Manifold& m, const std::string& input, bool js, std::ostream& out,
           std::ostream& err) {
    if (auto code = precheck(m, "dm", input, js, out, err)) return *code;
    DmSubgroup d = compute_D(m);
    std::size_t kernel = d.kernel_lifts.size();
    if (js) {
        ordered_json doc;
        doc["command"] = "dm";
        doc["input"] = input;
        doc["name"] = m.name();
        doc["rank_deg2"] = m.groups().free_rank(2);
        doc["kernel_rank"] = kernel;
        auto rows = ordered_json::array();
        for (std::size_t i = 0; i < d.generators.size(); ++i) {
            ZxSplit s = split_zx(m, d.generators[i]);
            ordered_json row;
            row["x"] = class_json(m, d.generators[i]);
            row["from_kernel"] = i < kernel;
            row["z"] = class_json(m, s.z);
            row["t"] = class_json(m, s.t);
            rows.push_back(std::move(row));
        }
        doc["generators"] = std::move(rows);
        doc["exit"] = 0;
        out << doc.dump(2) << "\n";
    } else {
        out << "manifold: " << m.name() << "\n";
        out << "degree-2 rank: " << m.groups().free_rank(2) << "\n";
        out << "kernel rank: " << kernel << "\n";
        out << "generators (" << d.generators.size() << "):\n";
        for (std::size_t i = 0; i < d.generators.size(); ++i) {
            ZxSplit s = split_zx(m, d.generators[i]);
            out << "  x = " << m.format_class(d.generators[i])
                << (i < kernel ? "  (kernel lift)" : "  (doubled basis)") << "\n";
            out << "    z_x = " << m.format_class(s.z) << "\n";
            out << "    t_x = " << m.format_class(s.t) << "\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------- decide

struct FastPathRun {
    std::string name;
    std::optional<Verdict> verdict;
};

ordered_json fast_path_json(const FastPathRun& fp, bool main_yes) {
    ordered_json row;
    row["path"] = fp.name;
    row["applicable"] = fp.verdict.has_value();
    if (fp.verdict.has_value()) {
        row["answer"] = answer_str(fp.verdict->yes);
        row["agrees"] = fp.verdict->yes == main_yes;
    } else {
        row["answer"] = nullptr;
        row["agrees"] = nullptr;
    }
    if (fp.name == "w6t") {
        row["combination"] = nullptr;
        row["functional"] = nullptr;
        if (fp.verdict.has_value()) {
            const auto* span = std::get_if<SpanCertificate>(&fp.verdict->certificate);
            if (span != nullptr) {
                if (fp.verdict->yes) {
                    row["combination"] = span->combination;
                } else {
                    auto bits = ordered_json::array();
                    for (auto b : span->functional) bits.push_back(static_cast<int>(b));
                    row["functional"] = std::move(bits);
                }
            }
        }
    }
    return row;
}

int cmd_decide(const Manifold& m, const std::string& input, bool js, std::ostream& out,
               std::ostream& err) {
    if (auto code = precheck(m, "decide", input, js, out, err)) return *code;

    Verdict main = decide_tangent(m);
    std::vector<FastPathRun> fast;
    fast.push_back({"w40", decide_w40(m)});
    fast.push_back({"w6t", w6t_applicable(m) ? std::optional<Verdict>(membership_w6t(m))
                                             : std::nullopt});
    fast.push_back({"h", decide_corollary_h(m)});

    bool disagree = std::any_of(fast.begin(), fast.end(), [&](const FastPathRun& fp) {
        return fp.verdict.has_value() && fp.verdict->yes != main.yes;
    });

    const auto* gate = std::get_if<GateCertificate>(&main.certificate);
    const auto* witness = std::get_if<WitnessCertificate>(&main.certificate);
    const auto* table = std::get_if<TableCertificate>(&main.certificate);
    int code = disagree ? 2 : (main.yes ? 0 : 1);

    if (js) {
        ordered_json doc;
        doc["command"] = "decide";
        doc["input"] = input;
        doc["name"] = m.name();
        doc["answer"] = answer_str(main.yes);
        doc["path"] = path_name(main.path);
        doc["reason"] = gate != nullptr ? ordered_json(gate->reason) : ordered_json(nullptr);
        if (table != nullptr) {
            auto rows = ordered_json::array();
            for (const auto& row : table->rows) rows.push_back(check_json(m, row));
            doc["table"] = std::move(rows);
        } else {
            doc["table"] = nullptr;
        }
        doc["witness"] =
            witness != nullptr ? check_json(m, witness->check) : ordered_json(nullptr);
        auto fps = ordered_json::array();
        for (const auto& fp : fast) fps.push_back(fast_path_json(fp, main.yes));
        doc["fast_paths"] = std::move(fps);
        if (disagree) {
            ordered_json e;
            e["type"] = "path-disagreement";
            e["message"] = "a fast path disagrees with the main path";
            doc["error"] = std::move(e);
        }
        doc["exit"] = code;
        out << doc.dump(2) << "\n";
    } else {
        out << "manifold: " << m.name() << "\n";
        out << "answer: " << answer_str(main.yes) << "\n";
        out << "path: " << path_name(main.path) << "\n";
        if (gate != nullptr) out << "reason: " << gate->reason << "\n";
        if (witness != nullptr)
            out << "witness: x = " << m.format_class(witness->check.x) << ", lhs "
                << witness->check.lhs << ", rhs " << witness->check.rhs << "\n";
        if (table != nullptr) {
            out << "generators (" << table->rows.size() << "):\n";
            for (const auto& row : table->rows)
                out << "  x = " << m.format_class(row.x) << ": lhs " << row.lhs << ", rhs "
                    << row.rhs << "\n";
        }
        out << "fast paths:\n";
        for (const auto& fp : fast) {
            out << "  " << fp.name << ": ";
            if (!fp.verdict.has_value()) {
                out << "not applicable\n";
            } else if (fp.verdict->yes == main.yes) {
                out << answer_str(fp.verdict->yes) << " (agrees)\n";
            } else {
                out << answer_str(fp.verdict->yes) << " (DISAGREES with main path)\n";
            }
        }
        if (disagree) err << "error: decision paths disagree; input is inconsistent\n";
    }
    return code;
}

// ---------------------------------------------------------------- decide-bundle

int cmd_decide_bundle(const Manifold& m, const std::string& input,
                      const std::string& bundle_name, int search_bound, bool js,
                      std::ostream& out, std::ostream& err) {
    if (auto code = precheck(m, "decide-bundle", input, js, out, err)) return *code;

    std::optional<BundleCharData> xi;
    for (const auto& b : m.bundles())
        if (b.name == bundle_name) xi = b;
    if (!xi.has_value() && bundle_name == "tangent") xi = tangent_as_bundle(m);
    if (!xi.has_value())
        throw Error("manifold '" + m.name() + "' has no bundle named '" + bundle_name + "'");

    Verdict v = decide_bundle(m, *xi, search_bound);
    const auto* gate = std::get_if<GateCertificate>(&v.certificate);
    const auto* table = std::get_if<TableCertificate>(&v.certificate);
    const auto* search = std::get_if<SearchCertificate>(&v.certificate);
    int code = v.yes ? 0 : 1;

    if (js) {
        ordered_json doc;
        doc["command"] = "decide-bundle";
        doc["input"] = input;
        doc["name"] = m.name();
        doc["bundle"] = bundle_name;
        doc["search_bound"] = search_bound;
        doc["answer"] = answer_str(v.yes);
        doc["path"] = path_name(v.path);
        doc["reason"] = gate != nullptr ? ordered_json(gate->reason) : ordered_json(nullptr);
        if (table != nullptr && table->d.has_value())
            doc["d"] = class_json(m, *table->d);
        else
            doc["d"] = nullptr;
        if (table != nullptr) {
            auto rows = ordered_json::array();
            for (const auto& row : table->rows) rows.push_back(check_json(m, row));
            doc["table"] = std::move(rows);
        } else {
            doc["table"] = nullptr;
        }
        if (search != nullptr) {
            auto rows = ordered_json::array();
            for (const auto& f : search->failures) {
                ordered_json row;
                row["d"] = class_json(m, f.d);
                row["witness"] = check_json(m, f.witness);
                rows.push_back(std::move(row));
            }
            doc["failures"] = std::move(rows);
        } else {
            doc["failures"] = nullptr;
        }
        doc["exit"] = code;
        out << doc.dump(2) << "\n";
    } else {
        out << "manifold: " << m.name() << "\n";
        out << "bundle: " << bundle_name << "\n";
        out << "answer: " << answer_str(v.yes) << "\n";
        if (gate != nullptr) out << "reason: " << gate->reason << "\n";
        if (table != nullptr && table->d.has_value())
            out << "d = " << m.format_class(*table->d) << "\n";
        if (table != nullptr) {
            out << "generators (" << table->rows.size() << "):\n";
            for (const auto& row : table->rows)
                out << "  x = " << m.format_class(row.x) << ": lhs " << row.lhs << ", rhs "
                    << row.rhs << "\n";
        }
        if (search != nullptr) {
            out << "searched " << search->failures.size() << " candidate twisting class"
                << (search->failures.size() == 1 ? "" : "es") << ", none match:\n";
            for (const auto& f : search->failures)
                out << "  d = " << m.format_class(f.d) << ": witness x = "
                    << m.format_class(f.witness.x) << ", lhs " << f.witness.lhs << ", rhs "
                    << f.witness.rhs << "\n";
        }
        (void)err;
    }
    return code;
}

// ---------------------------------------------------------------- catalog

int cmd_catalog_list(bool js, std::ostream& out) {
    auto refs = catalog_refs();
    if (js) {
        ordered_json doc;
        doc["command"] = "catalog";
        doc["action"] = "list";
        auto arr = ordered_json::array();
        for (const auto& r : refs) {
            ordered_json row;
            row["name"] = r.name;
            row["source"] = r.source;
            arr.push_back(std::move(row));
        }
        doc["entries"] = std::move(arr);
        doc["exit"] = 0;
        out << doc.dump(2) << "\n";
    } else {
        for (const auto& r : refs) out << r.name << "  (" << r.source << ")\n";
    }
    return 0;
}

std::string group_text(const GroupLevel& lv) {
    std::vector<std::string> parts;
    if (lv.free_rank == 1) parts.push_back("Z");
    if (lv.free_rank > 1) parts.push_back("Z^" + std::to_string(lv.free_rank));
    for (auto t : lv.torsion) parts.push_back("Z/" + std::to_string(t));
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
    return s;
}

void show_w6_text(const Manifold& m, const W6Spec& w6, std::ostream& out) {
    if (w6.liftable())
        out << "w6 lift = " << m.format_class(*w6.lift) << "\n";
    else
        out << "w6: nonliftable\n";
}

ordered_json w6_json(const Manifold& m, const W6Spec& w6) {
    if (!w6.liftable()) return "nonliftable";
    ordered_json j;
    j["lift"] = class_json(m, *w6.lift);
    return j;
}

int cmd_catalog_show(const Manifold& m, bool js, std::ostream& out) {
    if (js) {
        ordered_json doc;
        doc["command"] = "catalog";
        doc["action"] = "show";
        doc["name"] = m.name();
        auto groups = ordered_json::array();
        for (int d = 0; d <= kTopDegree; ++d) {
            const auto& lv = m.groups().level(d);
            ordered_json row;
            row["degree"] = d;
            row["free"] = lv.free_rank;
            row["torsion"] = lv.torsion;
            row["labels"] = m.labels()[static_cast<std::size_t>(d)];
            groups.push_back(std::move(row));
        }
        doc["groups"] = std::move(groups);
        ordered_json chr;
        chr["c"] = class_json(m, m.chr().c);
        chr["q1"] = class_json(m, m.chr().q1);
        chr["w6"] = w6_json(m, m.chr().w6);
        chr["p1"] = m.chr().p1.has_value() ? class_json(m, *m.chr().p1) : ordered_json(nullptr);
        chr["p2"] = m.chr().p2.has_value() ? class_json(m, *m.chr().p2) : ordered_json(nullptr);
        doc["char"] = std::move(chr);
        auto bundles = ordered_json::array();
        for (const auto& b : m.bundles()) {
            ordered_json row;
            row["name"] = b.name;
            row["d0"] = class_json(m, b.d0);
            row["q1p"] = class_json(m, b.q1p);
            row["w6"] = w6_json(m, b.w6);
            row["w8lift"] = class_json(m, b.w8lift);
            row["p1"] = b.p1.has_value() ? class_json(m, *b.p1) : ordered_json(nullptr);
            bundles.push_back(std::move(row));
        }
        doc["bundles"] = std::move(bundles);
        doc["exit"] = 0;
        out << doc.dump(2) << "\n";
    } else {
        out << "name: " << m.name() << "\n";
        out << "groups:\n";
        for (int d = 0; d <= kTopDegree; ++d) {
            const auto& labels = m.labels()[static_cast<std::size_t>(d)];
            out << "  deg " << d << ": " << group_text(m.groups().level(d));
            if (!labels.empty()) {
                out << "  (";
                for (std::size_t i = 0; i < labels.size(); ++i)
                    out << (i > 0 ? ", " : "") << labels[i];
                out << ")";
            }
            out << "\n";
        }
        out << "char:\n";
        out << "  c = " << m.format_class(m.chr().c) << "\n";
        out << "  q1 = " << m.format_class(m.chr().q1) << "\n  ";
        show_w6_text(m, m.chr().w6, out);
        if (m.chr().p1.has_value()) out << "  p1 = " << m.format_class(*m.chr().p1) << "\n";
        if (m.chr().p2.has_value()) out << "  p2 = " << m.format_class(*m.chr().p2) << "\n";
        if (m.bundles().empty()) {
            out << "bundles: none\n";
        } else {
            for (const auto& b : m.bundles()) {
                out << "bundle " << b.name << ":\n";
                out << "  d0 = " << m.format_class(b.d0) << "\n";
                out << "  q1p = " << m.format_class(b.q1p) << "\n  ";
                show_w6_text(m, b.w6, out);
                out << "  w8 lift = " << m.format_class(b.w8lift) << "\n";
                if (b.p1.has_value()) out << "  p1 = " << m.format_class(*b.p1) << "\n";
            }
        }
    }
    return 0;
}

}  // namespace

// ---------------------------------------------------------------- run

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"stable almost complex structure decision tool", "sacs"};
    app.require_subcommand(1);

    std::string input;
    std::string format = "text";
    std::string bundle_name;
    int search_bound = kDefaultSearchBound;

    auto add_format = [&format](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    auto* cmd_val = app.add_subcommand(
        "validate", "check hypotheses, ring axioms, duality, and characteristic data");
    cmd_val->add_option("input", input, "input file or catalog name")->required();
    add_format(cmd_val);

    auto* cmd_dm_ = app.add_subcommand(
        "dm", "print the distinguished degree-2 subgroup with its z_x table");
    cmd_dm_->add_option("input", input, "input file or catalog name")->required();
    add_format(cmd_dm_);

    auto* cmd_dec = app.add_subcommand(
        "decide", "decide existence of a stable almost complex structure");
    cmd_dec->add_option("input", input, "input file or catalog name")->required();
    add_format(cmd_dec);

    auto* cmd_db = app.add_subcommand(
        "decide-bundle", "decide stable complex structure existence for a described bundle");
    cmd_db->add_option("input", input, "input file or catalog name")->required();
    cmd_db->add_option("--bundle", bundle_name, "bundle name from the input, or 'tangent'")
        ->required();
    cmd_db->add_option("--search-bound", search_bound,
                       "largest degree-2 rank to search twisting classes over")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    add_format(cmd_db);

    auto* cmd_cat = app.add_subcommand("catalog", "built-in and user example manifolds");
    cmd_cat->require_subcommand(1);
    auto* cat_list = cmd_cat->add_subcommand("list", "list entries");
    add_format(cat_list);
    auto* cat_show = cmd_cat->add_subcommand("show", "summarize one entry");
    cat_show->add_option("name", input, "catalog entry name")->required();
    add_format(cat_show);
    auto* cat_export = cmd_cat->add_subcommand("export", "write the canonical .m10 document");
    cat_export->add_option("name", input, "catalog entry name")->required();
    add_format(cat_export);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("sacs");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 4;
    }

    std::string command = "catalog";
    if (app.got_subcommand(cmd_val)) command = "validate";
    if (app.got_subcommand(cmd_dm_)) command = "dm";
    if (app.got_subcommand(cmd_dec)) command = "decide";
    if (app.got_subcommand(cmd_db)) command = "decide-bundle";
    const bool js = format == "json";

    try {
        if (app.got_subcommand(cmd_val)) return cmd_validate(resolve_input(input), input, js, out);
        if (app.got_subcommand(cmd_dm_)) return cmd_dm(resolve_input(input), input, js, out, err);
        if (app.got_subcommand(cmd_dec))
            return cmd_decide(resolve_input(input), input, js, out, err);
        if (app.got_subcommand(cmd_db))
            return cmd_decide_bundle(resolve_input(input), input, bundle_name, search_bound, js,
                                     out, err);
        if (cmd_cat->got_subcommand(cat_list)) return cmd_catalog_list(js, out);
        if (cmd_cat->got_subcommand(cat_show))
            return cmd_catalog_show(load_catalog_name(input), js, out);
        if (cmd_cat->got_subcommand(cat_export)) {
            out << serialize_manifold(load_catalog_name(input));
            return 0;
        }
        throw InternalError("unhandled subcommand");
    } catch (const IntegralityViolation& e) {
        return emit_error(js, out, err, command, input, "integrality", e.what(), 3, e.n);
    } catch (const Error& e) {
        return emit_error(js, out, err, command, input, error_kind(e), e.what(), 2);
    }
}

}  // namespace sacs
