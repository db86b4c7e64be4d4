#pragma once

// Command-line front end. Five subcommands over the data files described in
// io.hpp: validate, classify, iso, homology, tables. Text output is for
// humans; --format json is the stable machine interface (sorted keys, exact
// integers, strings for anything beyond 64 bits).
//
// Exit codes: 0 success (including a definite "not isomorphic"), 1 usage
// error or unsupported operation, 2 parse or validation failure, 3 undecided
// isomorphism verdict.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <tstrata/chardata.hpp>
#include <tstrata/classify.hpp>
#include <tstrata/io.hpp>
#include <tstrata/iso.hpp>
#include <tstrata/model.hpp>
#include <tstrata/orbit_space.hpp>

namespace tstrata {
namespace detail {

struct OutputStyle {
    bool json = false;
    bool color = false;

    std::string paint(const std::string& s, const char* code) const {
        if (!color) return s;
        return std::string("\033[") + code + "m" + s + "\033[0m";
    }
    std::string good(const std::string& s) const { return paint(s, "32"); }
    std::string bad(const std::string& s) const { return paint(s, "31"); }
    std::string warn(const std::string& s) const { return paint(s, "33"); }
};

inline nlohmann::json json_int(const Int& x) {
    static const Int lo(std::numeric_limits<std::int64_t>::min());
    static const Int hi(std::numeric_limits<std::int64_t>::max());
    if (x >= lo && x <= hi) return x.convert_to<std::int64_t>();
    return x.str();
}

inline nlohmann::json json_profile(const HomologyProfile& h) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t k = 0; k < h.groups.size(); ++k) {
        nlohmann::json g;
        g["degree"] = k;
        g["free_rank"] = h.groups[k].free_rank;
        nlohmann::json torsion = nlohmann::json::array();
        for (const Int& t : h.groups[k].torsion) torsion.push_back(json_int(t));
        g["torsion"] = std::move(torsion);
        arr.push_back(std::move(g));
    }
    return arr;
}

inline nlohmann::json json_lmn(const Lmn& lmn) {
    return nlohmann::json::array({lmn.l, lmn.m, lmn.n});
}

inline nlohmann::json json_matrix(const IntMatrix& p) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < p.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < p.cols(); ++j) row.push_back(json_int(p.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::optional<std::string> slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Shared loader for the commands that need valid data up front (classify,
// iso, homology). Failures are already rendered; callers print and exit.
struct LoadOutcome {
    int code = 0;  // 0 ok, 1 unreadable, 2 parse or validation failure
    std::optional<BuildResult> result;
    std::string message;      // one-line text rendering when code != 0
    nlohmann::json details;   // machine rendering of the failure
};

inline LoadOutcome load_file(const std::string& path) {
    LoadOutcome outcome;
    auto text = slurp(path);
    if (!text) {
        outcome.code = 1;
        outcome.message = "cannot read file '" + path + "'";
        outcome.details = {{"file", path}, {"error", outcome.message}};
        return outcome;
    }
    try {
        outcome.result = build_data(parse(*text));
    } catch (const ParseError& e) {
        outcome.code = 2;
        outcome.message = path + ": " + e.what();
        outcome.details = {{"file", path},
                           {"error", e.what()},
                           {"line", e.line()},
                           {"field", e.field()}};
    } catch (const ValidationError& e) {
        outcome.code = 2;
        outcome.message = path + ": invalid: " + e.what();
        nlohmann::json violations = nlohmann::json::array();
        for (const Violation& v : e.report().violations)
            violations.push_back(
                {{"code", v.code}, {"subject", v.subject}, {"message", v.message}});
        outcome.details = {{"file", path}, {"violations", std::move(violations)}};
    }
    return outcome;
}

inline void emit_json(const nlohmann::json& entries, std::ostream& out) {
    if (entries.is_array() && entries.size() == 1)
        out << entries[0].dump(2) << "\n";
    else
        out << entries.dump(2) << "\n";
}

inline int cmd_validate(const std::vector<std::string>& paths,
                        const OutputStyle& style, std::ostream& out,
                        std::ostream& err) {
    int worst = 0;
    nlohmann::json results = nlohmann::json::array();
    for (const std::string& path : paths) {
        auto text = slurp(path);
        if (!text) {
            err << "cannot read file '" << path << "'\n";
            results.push_back({{"file", path}, {"valid", false},
                               {"error", "cannot read file"}});
            worst = std::max(worst, 1);
            continue;
        }
        std::optional<BuildResult> built;
        try {
            built = build_data(parse(*text));
        } catch (const ParseError& e) {
            if (!style.json)
                out << path << ": " << style.bad("invalid") << "\n  " << e.what()
                    << "\n";
            results.push_back({{"file", path},
                               {"valid", false},
                               {"error", e.what()},
                               {"line", e.line()},
                               {"field", e.field()}});
            worst = std::max(worst, 2);
            continue;
        } catch (const ValidationError& e) {
            if (!style.json) {
                out << path << ": " << style.bad("invalid") << "\n";
                for (const Violation& v : e.report().violations)
                    out << "  " << v.code << " at '" << v.subject
                        << "': " << v.message << "\n";
            }
            nlohmann::json violations = nlohmann::json::array();
            for (const Violation& v : e.report().violations)
                violations.push_back({{"code", v.code},
                                      {"subject", v.subject},
                                      {"message", v.message}});
            results.push_back({{"file", path},
                               {"valid", false},
                               {"violations", std::move(violations)}});
            worst = std::max(worst, 2);
            continue;
        }

        std::vector<std::string> warnings;
        const CharacteristicData& d = built->data;
        if (d.lmn().n == 1 && !is_normal(d.space()).normal)
            warnings.push_back(
                "the orbit space is not normal; the total space is not a "
                "topological manifold");
        if (!style.json) {
            out << path << ": " << style.good("valid")
                << " (l,m,n) = " << d.lmn().to_string() << "\n";
            for (const std::string& w : warnings)
                out << "  " << style.warn("warning") << ": " << w << "\n";
            for (const std::string& n : built->notes) out << "  note: " << n << "\n";
        }
        results.push_back({{"file", path},
                           {"valid", true},
                           {"lmn", json_lmn(d.lmn())},
                           {"warnings", warnings},
                           {"notes", built->notes}});
    }
    if (style.json) emit_json(results, out);
    return worst;
}

inline int cmd_classify(const std::vector<std::string>& paths,
                        const OutputStyle& style, std::ostream& out,
                        std::ostream& err) {
    int worst = 0;
    nlohmann::json results = nlohmann::json::array();
    for (const std::string& path : paths) {
        LoadOutcome loaded = load_file(path);
        if (loaded.code != 0) {
            err << loaded.message << "\n";
            results.push_back(loaded.details);
            worst = std::max(worst, loaded.code);
            continue;
        }
        const ClassificationResult r = classify(loaded.result->data);
        std::vector<std::string> notes = loaded.result->notes;
        notes.insert(notes.end(), r.notes.begin(), r.notes.end());
        if (!style.json) {
            out << path << ": " << r.display << "; manifold: "
                << (r.manifold.value ? style.good("yes") : style.bad("no")) << "\n";
            out << "  type: " << r.named_type << "\n";
            out << "  (l,m,n) = " << r.lmn.to_string() << "\n";
            out << "  reason: " << r.manifold.reason << "\n";
            if (!r.tags.empty()) {
                out << "  tags:";
                for (const std::string& t : r.tags) out << " " << t;
                out << "\n";
            }
            if (r.homology)
                out << "  homology: " << r.homology->to_string() << "\n";
            for (const std::string& n : notes) out << "  note: " << n << "\n";
        }
        nlohmann::json entry = {{"file", path},
                                {"lmn", json_lmn(r.lmn)},
                                {"type", r.named_type},
                                {"display", r.display},
                                {"manifold", {{"value", r.manifold.value},
                                              {"reason", r.manifold.reason}}},
                                {"tags", r.tags},
                                {"notes", notes}};
        if (r.homology) entry["homology"] = json_profile(*r.homology);
        results.push_back(std::move(entry));
    }
    if (style.json) emit_json(results, out);
    return worst;
}

inline int cmd_iso(const std::string& left, const std::string& right, bool weak,
                   const OutputStyle& style, std::ostream& out, std::ostream& err) {
    LoadOutcome a = load_file(left);
    if (a.code != 0) { err << a.message << "\n"; return a.code; }
    LoadOutcome b = load_file(right);
    if (b.code != 0) { err << b.message << "\n"; return b.code; }

    const IsoVerdict verdict =
        decide_iso(a.result->data, b.result->data, weak);
    const std::string mode = weak ? "weak" : "strict";
    nlohmann::json entry = {{"left", left}, {"right", right}, {"mode", mode}};

    switch (verdict.kind()) {
    case IsoVerdict::Kind::isomorphic: {
        const IsoWitness& w = verdict.witness();
        if (!style.json) {
            out << style.good("Isomorphic") << " (" << mode << ")\n";
            out << "  psi = " << w.psi.to_string() << "\n";
            for (const auto& [from, to] : w.stratum_map)
                out << "  " << from << " -> " << to << "\n";
            if (!w.note.empty()) out << "  note: " << w.note << "\n";
        }
        entry["verdict"] = "isomorphic";
        entry["psi"] = json_matrix(w.psi);
        entry["stratum_map"] = w.stratum_map;
        entry["note"] = w.note;
        if (style.json) out << entry.dump(2) << "\n";
        return 0;
    }
    case IsoVerdict::Kind::not_isomorphic: {
        const IsoCertificate& c = verdict.certificate();
        if (!style.json) {
            out << style.bad("Not isomorphic") << " (" << mode << ")\n";
            out << "  invariant: " << c.invariant << "\n";
            out << "  left:  " << c.left << "\n";
            out << "  right: " << c.right << "\n";
        }
        entry["verdict"] = "not-isomorphic";
        entry["certificate"] = {{"invariant", c.invariant},
                                {"left", c.left},
                                {"right", c.right}};
        if (style.json) out << entry.dump(2) << "\n";
        return 0;
    }
    case IsoVerdict::Kind::unknown:
        break;
    }
    if (!style.json)
        out << style.warn("Unknown") << ": " << verdict.reason() << "\n";
    entry["verdict"] = "unknown";
    entry["reason"] = verdict.reason();
    if (style.json) out << entry.dump(2) << "\n";
    return 3;
}

inline int cmd_homology(const std::string& path, const std::string& dump_path,
                        const OutputStyle& style, std::ostream& out,
                        std::ostream& err) {
    LoadOutcome loaded = load_file(path);
    if (loaded.code != 0) { err << loaded.message << "\n"; return loaded.code; }
    std::optional<ChainComplex> complex;
    try {
        complex = build_canonical_complex(loaded.result->data);
    } catch (const std::invalid_argument& e) {
        err << "homology: " << e.what() << "\n";
        return 1;
    }
    const HomologyProfile profile = homology(*complex);

    if (!dump_path.empty()) {
        std::ofstream dump(dump_path);
        if (!dump) {
            err << "cannot write '" << dump_path << "'\n";
            return 1;
        }
        dump << to_text(*complex);
    }

    if (!style.json) {
        out << path << ": homology " << profile.to_string() << "\n";
        out << "  cells per degree: [";
        for (std::size_t k = 0; k < complex->dims().size(); ++k)
            out << (k ? ", " : "") << complex->dims()[k];
        out << "]\n";
        out << "  euler characteristic: " << complex->euler_characteristic()
            << "\n";
        if (!dump_path.empty())
            out << "  chain complex written to " << dump_path << "\n";
    } else {
        nlohmann::json entry = {{"file", path},
                                {"homology", json_profile(profile)},
                                {"dims", complex->dims()},
                                {"euler", json_int(complex->euler_characteristic())}};
        if (!dump_path.empty()) entry["dump"] = dump_path;
        out << entry.dump(2) << "\n";
    }
    return 0;
}

inline int cmd_tables(const OutputStyle& style, std::ostream& out) {
    const TableSet t = enumerate_tables();
    if (!style.json) {
        out << t.table1 << "\n\n" << t.table2 << "\n\n" << t.table3 << "\n";
    } else {
        nlohmann::json entry = {
            {"table1", t.table1}, {"table2", t.table2}, {"table3", t.table3}};
        out << entry.dump(2) << "\n";
    }
    return 0;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"characteristic data for locally standard torus actions in "
                 "dimension at most 3"};
    app.name("torus-strata");
    app.require_subcommand(1);

    std::string format = "text";
    std::vector<std::string> files;
    std::string iso_left, iso_right, hom_file, dump_path;
    bool weak = false;

    auto add_format = [&format](CLI::App* sub) {
        sub->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* validate_cmd =
        app.add_subcommand("validate", "check input files against the data axioms");
    validate_cmd->add_option("files", files, "input files")->required();
    add_format(validate_cmd);

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "name the total space of each input");
    classify_cmd->add_option("files", files, "input files")->required();
    add_format(classify_cmd);

    CLI::App* iso_cmd =
        app.add_subcommand("iso", "decide isomorphism of two data files");
    iso_cmd->add_option("left", iso_left, "left input file")->required();
    iso_cmd->add_option("right", iso_right, "right input file")->required();
    iso_cmd->add_flag("--weak", weak,
                      "allow a global torus automorphism on the labels");
    add_format(iso_cmd);

    CLI::App* hom_cmd = app.add_subcommand(
        "homology", "homology of the canonical model over a graph base");
    hom_cmd->add_option("file", hom_file, "input file")->required();
    hom_cmd->add_option("--dump-complex", dump_path,
                        "write the cellular chain complex to this path");
    add_format(hom_cmd);

    CLI::App* tables_cmd =
        app.add_subcommand("tables", "print the classification tables");
    add_format(tables_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        for (CLI::App* sub : {validate_cmd, classify_cmd, iso_cmd, hom_cmd, tables_cmd})
            if (sub->parsed()) { out << sub->help(); return 0; }
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    detail::OutputStyle style;
    style.json = format == "json";
    const char* color_env = std::getenv("TORUS_STRATA_COLOR");
    style.color = !style.json && color_env && std::string(color_env) == "1";

    try {
        if (validate_cmd->parsed())
            return detail::cmd_validate(files, style, out, err);
        if (classify_cmd->parsed())
            return detail::cmd_classify(files, style, out, err);
        if (iso_cmd->parsed())
            return detail::cmd_iso(iso_left, iso_right, weak, style, out, err);
        if (hom_cmd->parsed())
            return detail::cmd_homology(hom_file, dump_path, style, out, err);
        if (tables_cmd->parsed()) return detail::cmd_tables(style, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no command\n";
    return 1;
}

}  // namespace tstrata
