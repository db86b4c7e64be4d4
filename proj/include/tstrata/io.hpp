#pragma once

// Reading and writing characteristic data as structured text. The format is
// a small TOML subset: [space], [torus], [labels], [chern] sections plus one
// [piece.<id>] section per surface piece of a stratifold base. One datum per
// file. The exact grammar is documented in the README; everything the parser
// rejects carries a line number and a field path, and everything the builder
// rejects carries either a field path or a validation report.

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <tstrata/chardata.hpp>
#include <tstrata/lattice.hpp>
#include <tstrata/orbit_space.hpp>

namespace tstrata {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::string field, const std::string& message)
        : std::runtime_error(render(line, field, message)),
          line_(line), field_(std::move(field)) {}

    std::size_t line() const { return line_; }  // 0 when not tied to a line
    const std::string& field() const { return field_; }

private:
    static std::string render(std::size_t line, const std::string& field,
                              const std::string& message) {
        std::ostringstream os;
        if (line) os << "line " << line << ": ";
        if (!field.empty()) os << field << ": ";
        os << message;
        return os.str();
    }
    std::size_t line_;
    std::string field_;
};

struct PieceSpec {
    std::string id;
    bool orientable = true;
    std::size_t genus = 0;
    std::vector<std::pair<std::string, std::size_t>> boundary;  // (circle, degree)
    bool operator==(const PieceSpec&) const = default;
};

// The syntactic layer: what a file says, before any validation. Labels are
// generator lists, not subtori; build_data turns them into characteristic
// data or reports why it cannot.
struct InputDocument {
    std::string kind;  // points | circle | graph | surface | stratifold
    std::size_t point_count = 0;
    bool orientable = true;
    std::size_t genus = 0;
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::string> circles;
    std::vector<PieceSpec> pieces;
    std::size_t torus_rank = 1;
    std::map<std::string, std::vector<std::vector<Int>>> labels;
    std::optional<std::vector<Int>> chern_free;
    std::optional<std::vector<int>> chern_torsion;

    // Source positions, kept for error reporting only.
    std::size_t space_line = 0;
    std::map<std::string, std::size_t> label_lines;

    bool operator==(const InputDocument& o) const {
        return kind == o.kind && point_count == o.point_count &&
               orientable == o.orientable && genus == o.genus &&
               vertices == o.vertices && edges == o.edges &&
               circles == o.circles && pieces == o.pieces &&
               torus_rank == o.torus_rank && labels == o.labels &&
               chern_free == o.chern_free && chern_torsion == o.chern_torsion;
    }
};

namespace detail {

struct TomlValue {
    enum class Type { string, boolean, integer, array };
    Type type = Type::integer;
    std::string str;
    bool flag = false;
    Int num;
    std::vector<TomlValue> items;
};

inline const char* type_name(TomlValue::Type t) {
    switch (t) {
    case TomlValue::Type::string: return "a string";
    case TomlValue::Type::boolean: return "a boolean";
    case TomlValue::Type::integer: return "an integer";
    case TomlValue::Type::array: return "an array";
    }
    return "a value";
}

// Single-line value parser: strings, booleans, integers and (possibly
// nested) arrays. Comments start at an unquoted '#'.
class ValueScanner {
public:
    ValueScanner(const std::string& text, std::size_t line, std::string field)
        : s_(text), line_(line), field_(std::move(field)) {}

    TomlValue scan() {
        skip_ws();
        TomlValue v = value();
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] != '#')
            fail("unexpected text after value: '" + s_.substr(pos_) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& m) const {
        throw ParseError(line_, field_, m);
    }
    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }

    TomlValue value() {
        if (pos_ >= s_.size()) fail("missing value");
        const char c = s_[pos_];
        if (c == '"') return string_value();
        if (c == '[') return array_value();
        return scalar_value();
    }

    TomlValue string_value() {
        ++pos_;  // opening quote
        TomlValue v;
        v.type = TomlValue::Type::string;
        while (pos_ < s_.size() && s_[pos_] != '"') {
            char c = s_[pos_++];
            if (c == '\\') {
                if (pos_ >= s_.size()) fail("unterminated escape in string");
                const char e = s_[pos_++];
                if (e == '"' || e == '\\') c = e;
                else fail(std::string("unsupported escape '\\") + e + "'");
            }
            v.str += c;
        }
        if (pos_ >= s_.size()) fail("unterminated string");
        ++pos_;  // closing quote
        return v;
    }

    TomlValue array_value() {
        ++pos_;  // opening bracket
        TomlValue v;
        v.type = TomlValue::Type::array;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == ']') { ++pos_; return v; }
        for (;;) {
            v.items.push_back(value());
            skip_ws();
            if (pos_ >= s_.size()) fail("unterminated array");
            if (s_[pos_] == ',') { ++pos_; skip_ws(); continue; }
            if (s_[pos_] == ']') { ++pos_; return v; }
            fail("expected ',' or ']' in array");
        }
    }

    TomlValue scalar_value() {
        std::size_t end = pos_;
        while (end < s_.size() && s_[end] != ' ' && s_[end] != '\t' &&
               s_[end] != ',' && s_[end] != ']' && s_[end] != '#')
            ++end;
        const std::string token = s_.substr(pos_, end - pos_);
        pos_ = end;
        TomlValue v;
        if (token == "true" || token == "false") {
            v.type = TomlValue::Type::boolean;
            v.flag = token == "true";
            return v;
        }
        bool numeric = !token.empty();
        for (std::size_t i = 0; i < token.size(); ++i) {
            if (i == 0 && token[i] == '-' && token.size() > 1) continue;
            if (!std::isdigit(static_cast<unsigned char>(token[i]))) numeric = false;
        }
        if (!numeric) fail("cannot parse value '" + token + "'");
        v.type = TomlValue::Type::integer;
        v.num = Int(token);
        return v;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::string field_;
};

// Typed extractors; every mismatch names the field and the line.
inline std::string as_string(const TomlValue& v, std::size_t line,
                             const std::string& field) {
    if (v.type != TomlValue::Type::string)
        throw ParseError(line, field, std::string("expected a string, got ") +
                                          type_name(v.type));
    return v.str;
}

inline bool as_bool(const TomlValue& v, std::size_t line, const std::string& field) {
    if (v.type != TomlValue::Type::boolean)
        throw ParseError(line, field, std::string("expected true or false, got ") +
                                          type_name(v.type));
    return v.flag;
}

inline Int as_int(const TomlValue& v, std::size_t line, const std::string& field) {
    if (v.type != TomlValue::Type::integer)
        throw ParseError(line, field, std::string("expected an integer, got ") +
                                          type_name(v.type));
    return v.num;
}

inline std::size_t as_count(const TomlValue& v, std::size_t line,
                            const std::string& field, std::size_t minimum = 0) {
    const Int x = as_int(v, line, field);
    if (x < Int(minimum) || x > Int(1000000))
        throw ParseError(line, field,
                         "expected an integer in [" + std::to_string(minimum) +
                             ", 1000000], got " + x.str());
    return x.convert_to<std::size_t>();
}

inline const std::vector<TomlValue>& as_array(const TomlValue& v, std::size_t line,
                                              const std::string& field) {
    if (v.type != TomlValue::Type::array)
        throw ParseError(line, field, std::string("expected an array, got ") +
                                          type_name(v.type));
    return v.items;
}

inline std::vector<std::string> as_string_array(const TomlValue& v, std::size_t line,
                                                const std::string& field) {
    std::vector<std::string> out;
    for (const auto& item : as_array(v, line, field))
        out.push_back(as_string(item, line, field));
    return out;
}

inline std::vector<std::vector<Int>> as_vector_list(const TomlValue& v,
                                                    std::size_t line,
                                                    const std::string& field) {
    std::vector<std::vector<Int>> out;
    for (const auto& item : as_array(v, line, field)) {
        if (item.type != TomlValue::Type::array)
            throw ParseError(line, field,
                             "expected a list of integer vectors, e.g. [[1, 0]]");
        if (item.items.empty())
            throw ParseError(line, field, "generator vector must be nonempty");
        std::vector<Int> vec;
        for (const auto& entry : item.items) vec.push_back(as_int(entry, line, field));
        out.push_back(std::move(vec));
    }
    return out;
}

inline bool bare_key_ok(const std::string& key) {
    if (key.empty()) return false;
    for (char c : key)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-')
            return false;
    return true;
}

}  // namespace detail

inline InputDocument parse(const std::string& text) {
    InputDocument doc;
    std::string section;                       // current section name
    std::set<std::string> sections_seen;
    std::map<std::string, std::set<std::string>> keys_seen;
    std::vector<std::pair<std::string, std::size_t>> space_keys;  // (key, line)
    std::size_t piece_index = 0;               // current [piece.*] target
    std::size_t torus_line = 0;
    std::size_t first_piece_line = 0;
    bool rank_set = false;
    std::optional<std::size_t> chern_line_free, chern_line_torsion;

    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::size_t i = raw.find_first_not_of(" \t");
        if (i == std::string::npos || raw[i] == '#') continue;

        if (raw[i] == '[') {
            const std::size_t close = raw.find(']', i);
            if (close == std::string::npos)
                throw ParseError(line_no, "", "unterminated section header");
            const std::string rest = raw.substr(close + 1);
            const std::size_t j = rest.find_first_not_of(" \t");
            if (j != std::string::npos && rest[j] != '#')
                throw ParseError(line_no, "", "unexpected text after section header");
            section = raw.substr(i + 1, close - i - 1);
            if (section.rfind("piece.", 0) == 0) {
                const std::string id = section.substr(6);
                if (id.empty())
                    throw ParseError(line_no, section, "piece section needs an id");
                if (!sections_seen.insert(section).second)
                    throw ParseError(line_no, section, "duplicate section");
                if (!first_piece_line) first_piece_line = line_no;
                PieceSpec p;
                p.id = id;
                doc.pieces.push_back(std::move(p));
                piece_index = doc.pieces.size() - 1;
            } else if (section == "space" || section == "torus" ||
                       section == "labels" || section == "chern") {
                if (!sections_seen.insert(section).second)
                    throw ParseError(line_no, section, "duplicate section");
                if (section == "space") doc.space_line = line_no;
                if (section == "torus") torus_line = line_no;
            } else {
                throw ParseError(line_no, section, "unknown section");
            }
            continue;
        }

        // key = value
        std::string key;
        std::size_t k = i;
        if (raw[k] == '"') {
            ++k;
            while (k < raw.size() && raw[k] != '"') {
                char c = raw[k++];
                if (c == '\\' && k < raw.size()) c = raw[k++];
                key += c;
            }
            if (k >= raw.size())
                throw ParseError(line_no, "", "unterminated quoted key");
            ++k;
        } else {
            while (k < raw.size() && (std::isalnum(static_cast<unsigned char>(raw[k])) ||
                                      raw[k] == '_' || raw[k] == '-'))
                key += raw[k++];
            if (key.empty())
                throw ParseError(line_no, "", "expected a key or section header");
        }
        while (k < raw.size() && (raw[k] == ' ' || raw[k] == '\t')) ++k;
        if (k >= raw.size() || raw[k] != '=')
            throw ParseError(line_no, key, "expected '=' after key");
        ++k;
        if (section.empty())
            throw ParseError(line_no, key, "key outside any section");
        const std::string field = section + "." + key;
        if (!keys_seen[section].insert(key).second)
            throw ParseError(line_no, field, "duplicate key");
        detail::TomlValue value =
            detail::ValueScanner(raw.substr(k), line_no, field).scan();

        if (section == "space") {
            space_keys.emplace_back(key, line_no);
            if (key == "kind") {
                doc.kind = detail::as_string(value, line_no, field);
                if (doc.kind != "points" && doc.kind != "circle" &&
                    doc.kind != "graph" && doc.kind != "surface" &&
                    doc.kind != "stratifold")
                    throw ParseError(line_no, field,
                                     "unknown kind '" + doc.kind +
                                         "' (expected points, circle, graph, "
                                         "surface or stratifold)");
            } else if (key == "count") {
                doc.point_count = detail::as_count(value, line_no, field);
            } else if (key == "orientable") {
                doc.orientable = detail::as_bool(value, line_no, field);
            } else if (key == "genus") {
                doc.genus = detail::as_count(value, line_no, field);
            } else if (key == "vertices") {
                doc.vertices = detail::as_string_array(value, line_no, field);
            } else if (key == "edges") {
                for (const auto& item : detail::as_array(value, line_no, field)) {
                    const auto& pair = detail::as_array(item, line_no, field);
                    if (pair.size() != 2)
                        throw ParseError(line_no, field,
                                         "each edge is a pair [\"a\", \"b\"]");
                    doc.edges.emplace_back(detail::as_string(pair[0], line_no, field),
                                           detail::as_string(pair[1], line_no, field));
                }
            } else if (key == "circles") {
                doc.circles = detail::as_string_array(value, line_no, field);
            } else {
                throw ParseError(line_no, field, "unknown key in [space]");
            }
        } else if (section == "torus") {
            if (key != "rank")
                throw ParseError(line_no, field, "unknown key in [torus]");
            doc.torus_rank = detail::as_count(value, line_no, field, 1);
            rank_set = true;
        } else if (section == "labels") {
            doc.labels.emplace(key, detail::as_vector_list(value, line_no, field));
            doc.label_lines.emplace(key, line_no);
        } else if (section == "chern") {
            if (key == "free") {
                std::vector<Int> c;
                for (const auto& item : detail::as_array(value, line_no, field))
                    c.push_back(detail::as_int(item, line_no, field));
                doc.chern_free = std::move(c);
                chern_line_free = line_no;
            } else if (key == "torsion") {
                std::vector<int> c;
                for (const auto& item : detail::as_array(value, line_no, field)) {
                    const Int x = detail::as_int(item, line_no, field);
                    if (x < Int(-1000000) || x > Int(1000000))
                        throw ParseError(line_no, field, "mod-2 entry out of range");
                    c.push_back(x.convert_to<int>());
                }
                doc.chern_torsion = std::move(c);
                chern_line_torsion = line_no;
            } else {
                throw ParseError(line_no, field, "unknown key in [chern]");
            }
        } else {  // piece section
            PieceSpec& p = doc.pieces[piece_index];
            if (key == "orientable") {
                p.orientable = detail::as_bool(value, line_no, field);
            } else if (key == "genus") {
                p.genus = detail::as_count(value, line_no, field);
            } else if (key == "boundary") {
                for (const auto& item : detail::as_array(value, line_no, field)) {
                    const auto& pair = detail::as_array(item, line_no, field);
                    if (pair.size() != 2)
                        throw ParseError(
                            line_no, field,
                            "each attachment is a pair [\"circle\", degree]");
                    p.boundary.emplace_back(
                        detail::as_string(pair[0], line_no, field),
                        detail::as_count(pair[1], line_no, field));
                }
            } else {
                throw ParseError(line_no, field, "unknown key in [" + section + "]");
            }
        }
    }

    if (!sections_seen.count("space"))
        throw ParseError(0, "space", "missing [space] section");
    if (doc.kind.empty())
        throw ParseError(doc.space_line, "space.kind", "missing required key 'kind'");
    if (!sections_seen.count("torus"))
        throw ParseError(0, "torus", "missing [torus] section");
    if (!rank_set)
        throw ParseError(torus_line, "torus.rank", "missing required key 'rank'");
    if (chern_line_free && chern_line_torsion)
        throw ParseError(*chern_line_torsion, "chern",
                         "give either 'free' or 'torsion', not both");

    // Keys that do not apply to the declared kind.
    const std::map<std::string, std::string> key_kind = {
        {"count", "points"},   {"orientable", "surface"}, {"genus", "surface"},
        {"vertices", "graph"}, {"edges", "graph"},        {"circles", "stratifold"}};
    for (const auto& [key, line] : space_keys) {
        auto it = key_kind.find(key);
        if (it != key_kind.end() && it->second != doc.kind)
            throw ParseError(line, "space." + key,
                             "key '" + key + "' only applies to kind \"" +
                                 it->second + "\"");
    }
    if (!doc.pieces.empty() && doc.kind != "stratifold")
        throw ParseError(first_piece_line, "piece",
                         "piece sections only apply to kind \"stratifold\"");
    return doc;
}

struct BuildResult {
    CharacteristicData data;
    std::vector<std::string> notes;
};

// Turn a parsed document into validated characteristic data. Structural
// problems the space constructors reject come back as ParseErrors with a
// field path; everything else surfaces as a ValidationError carrying the
// full report.
inline BuildResult build_data(const InputDocument& doc) {
    std::optional<OrbitSpace> q;
    try {
        if (doc.kind == "points") {
            q = OrbitSpace::points(doc.point_count);
        } else if (doc.kind == "circle") {
            q = OrbitSpace::circle();
        } else if (doc.kind == "graph") {
            std::vector<GraphEdge> edges;
            for (const auto& [a, b] : doc.edges) edges.push_back({a, b});
            q = OrbitSpace::graph(doc.vertices, std::move(edges));
        } else if (doc.kind == "surface") {
            q = OrbitSpace::closed_surface(doc.orientable, doc.genus);
        } else if (doc.kind == "stratifold") {
            std::vector<SurfacePiece> pieces;
            for (const PieceSpec& spec : doc.pieces) {
                SurfacePiece p;
                p.id = spec.id;
                p.orientable = spec.orientable;
                p.genus = spec.genus;
                for (const auto& [circle, degree] : spec.boundary)
                    p.boundary.push_back({circle, degree});
                pieces.push_back(std::move(p));
            }
            q = OrbitSpace::stratifold(doc.circles, std::move(pieces));
        } else {
            throw ParseError(doc.space_line, "space.kind",
                             "unknown kind '" + doc.kind + "'");
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(doc.space_line, "space", e.what());
    }

    const std::size_t m = doc.torus_rank;
    CharacteristicFunctor f = default_functor(*q, m);
    std::vector<std::string> notes;
    for (const auto& [id, gens] : doc.labels) {
        const auto line_it = doc.label_lines.find(id);
        const std::size_t line =
            line_it == doc.label_lines.end() ? 0 : line_it->second;
        const std::size_t ambient = gens.empty() ? m : gens[0].size();
        PrimitiveSubtorus sub = PrimitiveSubtorus::trivial(ambient);
        try {
            sub = subtorus_from_vectors(ambient, gens);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line, "labels." + id, e.what());
        }
        if (!gens.empty() &&
            hermite_row_basis(IntMatrix::from_rows(gens)) != sub.basis())
            notes.push_back("label of '" + id +
                            "' is not primitive; saturated to " + sub.to_string());
        f.assignment.insert_or_assign(id, std::move(sub));
    }

    ChernClass c = ChernClass::zero();
    if (doc.chern_free)
        c = ChernClass::free_vector(*doc.chern_free);
    else if (doc.chern_torsion)
        c = ChernClass::torsion_vector(*doc.chern_torsion);

    CharacteristicData data =
        CharacteristicData::make(std::move(*q), std::move(f), std::move(c));
    return {std::move(data), std::move(notes)};
}

// The canonical document of validated data: labels are emitted only where
// they differ from what default_functor would fill in, as the basis rows of
// the subtorus, so serialize(document_of(d)) round-trips d exactly.
inline InputDocument document_of(const CharacteristicData& d) {
    InputDocument doc;
    const OrbitSpace& q = d.space();
    switch (q.kind()) {
    case SpaceKind::points:
        doc.kind = "points";
        doc.point_count = q.point_count();
        break;
    case SpaceKind::circle:
        doc.kind = "circle";
        break;
    case SpaceKind::graph:
        doc.kind = "graph";
        doc.vertices = q.vertices();
        for (const GraphEdge& e : q.edges()) doc.edges.emplace_back(e.a, e.b);
        break;
    case SpaceKind::closed_surface:
        doc.kind = "surface";
        doc.orientable = q.surface_orientable();
        doc.genus = q.surface_genus();
        break;
    case SpaceKind::stratifold:
        doc.kind = "stratifold";
        doc.circles = q.circles();
        for (const SurfacePiece& p : q.pieces()) {
            PieceSpec spec;
            spec.id = p.id;
            spec.orientable = p.orientable;
            spec.genus = p.genus;
            for (const BoundaryAttachment& att : p.boundary)
                spec.boundary.emplace_back(att.circle, att.degree);
            doc.pieces.push_back(std::move(spec));
        }
        break;
    }
    doc.torus_rank = d.functor().torus_rank;
    const CharacteristicFunctor def = default_functor(q, doc.torus_rank);
    for (const auto& [id, sub] : d.functor().assignment) {
        auto it = def.assignment.find(id);
        if (it != def.assignment.end() && it->second == sub) continue;
        std::vector<std::vector<Int>> gens;
        for (std::size_t i = 0; i < sub.basis().rows(); ++i)
            gens.push_back(sub.basis().row(i));
        doc.labels.emplace(id, std::move(gens));
    }
    const ChernClass& c = d.chern();
    if (!c.is_zero()) {
        if (c.kind() == ChernClass::Kind::free_vector)
            doc.chern_free = c.free();
        else
            doc.chern_torsion = c.torsion();
    }
    return doc;
}

namespace detail {

inline std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

inline std::string render_key(const std::string& key) {
    return bare_key_ok(key) ? key : quote(key);
}

inline std::string render_string_array(const std::vector<std::string>& items) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i)
        out += (i ? ", " : "") + quote(items[i]);
    return out + "]";
}

inline std::string render_vector_list(const std::vector<std::vector<Int>>& gens) {
    std::string out = "[";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < gens[i].size(); ++j)
            out += (j ? ", " : "") + gens[i][j].str();
        out += "]";
    }
    return out + "]";
}

}  // namespace detail

inline std::string serialize(const InputDocument& doc) {
    std::ostringstream os;
    os << "[space]\n";
    os << "kind = \"" << doc.kind << "\"\n";
    if (doc.kind == "points") os << "count = " << doc.point_count << "\n";
    if (doc.kind == "surface") {
        os << "orientable = " << (doc.orientable ? "true" : "false") << "\n";
        os << "genus = " << doc.genus << "\n";
    }
    if (doc.kind == "graph") {
        os << "vertices = " << detail::render_string_array(doc.vertices) << "\n";
        os << "edges = [";
        for (std::size_t i = 0; i < doc.edges.size(); ++i)
            os << (i ? ", [" : "[") << detail::quote(doc.edges[i].first) << ", "
               << detail::quote(doc.edges[i].second) << "]";
        os << "]\n";
    }
    if (doc.kind == "stratifold")
        os << "circles = " << detail::render_string_array(doc.circles) << "\n";

    os << "\n[torus]\nrank = " << doc.torus_rank << "\n";

    if (!doc.labels.empty()) {
        os << "\n[labels]\n";
        for (const auto& [id, gens] : doc.labels)
            os << detail::render_key(id) << " = "
               << detail::render_vector_list(gens) << "\n";
    }
    if (doc.chern_free || doc.chern_torsion) {
        os << "\n[chern]\n";
        if (doc.chern_free) {
            os << "free = [";
            for (std::size_t i = 0; i < doc.chern_free->size(); ++i)
                os << (i ? ", " : "") << (*doc.chern_free)[i];
            os << "]\n";
        } else {
            os << "torsion = [";
            for (std::size_t i = 0; i < doc.chern_torsion->size(); ++i)
                os << (i ? ", " : "") << (*doc.chern_torsion)[i];
            os << "]\n";
        }
    }
    for (const PieceSpec& p : doc.pieces) {
        os << "\n[piece." << p.id << "]\n";
        os << "orientable = " << (p.orientable ? "true" : "false") << "\n";
        os << "genus = " << p.genus << "\n";
        os << "boundary = [";
        for (std::size_t i = 0; i < p.boundary.size(); ++i)
            os << (i ? ", [" : "[") << detail::quote(p.boundary[i].first) << ", "
               << p.boundary[i].second << "]";
        os << "]\n";
    }
    return os.str();
}

}  // namespace tstrata
