#include "sunflower/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sunflower {

namespace {

using nlohmann::json;

json parse_line(const std::string& line, std::size_t lineno) {
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded())
        throw input_error("line " + std::to_string(lineno) + ": not valid JSON");
    if (!j.is_object())
        throw input_error("line " + std::to_string(lineno) + ": expected an object");
    return j;
}

std::vector<ordinal> ordinal_array(const json& j, const char* key, std::size_t lineno) {
    if (!j.contains(key))
        throw input_error("line " + std::to_string(lineno) + ": missing \"" + key + "\"");
    const json& a = j.at(key);
    if (!a.is_array())
        throw input_error("line " + std::to_string(lineno) + ": \"" + key + "\" must be an array");
    std::vector<ordinal> out;
    for (const auto& x : a) {
        if (!x.is_number_unsigned())
            throw input_error("line " + std::to_string(lineno) + ": \"" + key +
                              "\" must hold nonnegative integers");
        out.push_back(x.get<ordinal>());
    }
    return out;
}

OrdSet ordset_field(const json& j, const char* key, std::size_t lineno) {
    std::vector<ordinal> xs = ordinal_array(j, key, lineno);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        if (!(xs[i] < xs[i + 1]))
            throw input_error("line " + std::to_string(lineno) + ": \"" + key +
                              "\" must be strictly increasing");
    return OrdSet::from_sorted(std::move(xs));
}

std::int64_t int_field(const json& j, const char* key, std::size_t lineno) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw input_error("line " + std::to_string(lineno) + ": missing integer \"" + key + "\"");
    return j.at(key).get<std::int64_t>();
}

json ordset_json(const OrdSet& s) { return json(s.elems()); }

struct LineReader {
    std::istream& in;
    std::size_t lineno = 0;
    bool next(std::string& line) {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty()) return true;
        }
        return false;
    }
};

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    return in;
}

} // namespace

std::string write_family(const Family& f) {
    std::ostringstream out;
    out << json{{"ground", f.ground().elems()}, {"n", f.dim()}}.dump() << '\n';
    for (const auto& [index, value] : f.entries())
        out << json{{"index", ordset_json(index)}, {"set", ordset_json(value)}}.dump() << '\n';
    return out.str();
}

Family read_family(std::istream& in) {
    LineReader reader{in};
    std::string line;
    if (!reader.next(line)) throw input_error("family file: empty");
    json header = parse_line(line, reader.lineno);
    if (!header.contains("n")) throw input_error("family file: header is missing \"n\"");
    if (!header.at("n").is_number_unsigned() || header.at("n").get<std::uint64_t>() < 1)
        throw input_error("family file: \"n\" must be a positive integer");
    const auto n = header.at("n").get<std::uint32_t>();
    OrdSet ground = ordset_field(header, "ground", reader.lineno);

    std::map<OrdSet, OrdSet> entries;
    while (reader.next(line)) {
        json j = parse_line(line, reader.lineno);
        OrdSet index = ordset_field(j, "index", reader.lineno);
        if (index.otp() != n)
            throw input_error("line " + std::to_string(reader.lineno) + ": index size != n");
        if (!entries.emplace(std::move(index), ordset_field(j, "set", reader.lineno)).second)
            throw input_error("line " + std::to_string(reader.lineno) + ": duplicate index");
    }
    return Family(n, std::move(ground), std::move(entries));
}

Family read_family_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_family(in);
}

std::string write_coloring(const ColorMap& c) {
    std::ostringstream out;
    for (const auto& [index, color] : c)
        out << json{{"color", color}, {"index", ordset_json(index)}}.dump() << '\n';
    return out.str();
}

ColorMap read_coloring(std::istream& in) {
    LineReader reader{in};
    std::string line;
    ColorMap c;
    while (reader.next(line)) {
        json j = parse_line(line, reader.lineno);
        OrdSet index = ordset_field(j, "index", reader.lineno);
        if (!c.emplace(std::move(index), int_field(j, "color", reader.lineno)).second)
            throw input_error("line " + std::to_string(reader.lineno) + ": duplicate index");
    }
    return c;
}

ColorMap read_coloring_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_coloring(in);
}

std::string write_tuple_coloring(const TupleColoring& c) {
    std::ostringstream out;
    for (const auto& [tuple, color] : c.map)
        out << json{{"color", color}, {"tuple", tuple}}.dump() << '\n';
    return out.str();
}

TupleColoring read_tuple_coloring(std::istream& in) {
    LineReader reader{in};
    std::string line;
    TupleColoring c;
    c.mu = 0;
    c.colors = 1;
    bool first = true;
    while (reader.next(line)) {
        json j = parse_line(line, reader.lineno);
        std::vector<ordinal> tuple = ordinal_array(j, "tuple", reader.lineno);
        if (first) {
            c.n = static_cast<std::uint32_t>(tuple.size());
            first = false;
        } else if (tuple.size() != c.n) {
            throw input_error("line " + std::to_string(reader.lineno) + ": tuple length varies");
        }
        for (ordinal x : tuple) c.mu = std::max<ordinal>(c.mu, x + 1);
        const std::int64_t color = int_field(j, "color", reader.lineno);
        c.colors = std::max(c.colors, color + 1);
        if (!c.map.emplace(std::move(tuple), color).second)
            throw input_error("line " + std::to_string(reader.lineno) + ": duplicate tuple");
    }
    if (first) throw input_error("tuple coloring: empty file");
    std::uint64_t expected = 1;
    for (std::uint32_t i = 0; i < c.n; ++i) expected *= c.mu;
    if (c.map.size() != expected)
        throw input_error("tuple coloring: not total over mu^n");
    return c;
}

TupleColoring read_tuple_coloring_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_tuple_coloring(in);
}

std::string write_condition_family(const ConditionFamily& cf) {
    std::ostringstream out;
    out << json{{"ground", cf.ground().elems()}, {"n", cf.dim()}}.dump() << '\n';
    for (const auto& [index, cond] : cf.entries()) {
        json pairs = json::array();
        for (const auto& [coord, bit] : cond.assignments())
            pairs.push_back(json::array({coord, bit ? 1 : 0}));
        out << json{{"cond", pairs}, {"index", ordset_json(index)}}.dump() << '\n';
    }
    return out.str();
}

ConditionFamily read_condition_family(std::istream& in) {
    LineReader reader{in};
    std::string line;
    if (!reader.next(line)) throw input_error("condition family file: empty");
    json header = parse_line(line, reader.lineno);
    if (!header.contains("n") || !header.at("n").is_number_unsigned())
        throw input_error("condition family file: header is missing \"n\"");
    const auto n = header.at("n").get<std::uint32_t>();
    OrdSet ground = ordset_field(header, "ground", reader.lineno);

    std::map<OrdSet, Condition> entries;
    while (reader.next(line)) {
        json j = parse_line(line, reader.lineno);
        OrdSet index = ordset_field(j, "index", reader.lineno);
        if (!j.contains("cond") || !j.at("cond").is_array())
            throw input_error("line " + std::to_string(reader.lineno) + ": missing \"cond\"");
        std::vector<std::pair<ordinal, bool>> assignments;
        ordinal prev = 0;
        bool have_prev = false;
        for (const auto& pair : j.at("cond")) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
                !pair[1].is_number_unsigned() || pair[1].get<int>() > 1)
                throw input_error("line " + std::to_string(reader.lineno) +
                                  ": \"cond\" entries must be [coord, bit]");
            const ordinal coord = pair[0].get<ordinal>();
            if (have_prev && !(prev < coord))
                throw input_error("line " + std::to_string(reader.lineno) +
                                  ": \"cond\" must be sorted by coordinate");
            prev = coord;
            have_prev = true;
            assignments.emplace_back(coord, pair[1].get<int>() == 1);
        }
        if (!entries.emplace(std::move(index), Condition(std::move(assignments))).second)
            throw input_error("line " + std::to_string(reader.lineno) + ": duplicate index");
    }
    return ConditionFamily(n, std::move(ground), std::move(entries));
}

ConditionFamily read_condition_family_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_condition_family(in);
}

std::string write_witness(const UniformWitness& w) {
    std::ostringstream out;
    out << json{{"rho", w.rho}}.dump() << '\n';
    for (std::uint32_t mask = 0; mask < w.rmap.size(); ++mask) {
        json m = json::array();
        for (auto i : PosSet::from_bits(mask)) m.push_back(i);
        json positions = json::array();
        for (auto i : w.rmap[mask]) positions.push_back(i);
        out << json{{"m", m}, {"positions", positions}}.dump() << '\n';
    }
    return out.str();
}

UniformWitness read_witness(std::istream& in) {
    LineReader reader{in};
    std::string line;
    if (!reader.next(line)) throw input_error("witness file: empty");
    json header = parse_line(line, reader.lineno);
    if (!header.contains("rho") || !header.at("rho").is_number_unsigned())
        throw input_error("witness file: header is missing \"rho\"");

    std::map<std::uint32_t, PosSet> masks;
    while (reader.next(line)) {
        json j = parse_line(line, reader.lineno);
        std::vector<ordinal> m = ordinal_array(j, "m", reader.lineno);
        std::vector<ordinal> ps = ordinal_array(j, "positions", reader.lineno);
        std::vector<std::uint32_t> mv(m.begin(), m.end());
        std::vector<std::uint32_t> pv(ps.begin(), ps.end());
        if (!masks.emplace(PosSet(std::move(mv)).bits(), PosSet(std::move(pv))).second)
            throw input_error("line " + std::to_string(reader.lineno) + ": duplicate mask");
    }
    // The record count fixes n: 2^n masks.
    std::uint32_t n = 0;
    while ((std::size_t{1} << n) < masks.size()) ++n;
    if ((std::size_t{1} << n) != masks.size())
        throw input_error("witness file: expected one record per subset of n");
    UniformWitness w;
    w.n = n;
    w.rho = header.at("rho").get<std::uint32_t>();
    w.rmap.assign(std::size_t{1} << n, PosSet{});
    for (auto& [mask, ps] : masks) {
        if (mask >= w.rmap.size()) throw input_error("witness file: mask outside n");
        w.rmap[mask] = std::move(ps);
    }
    return w;
}

UniformWitness read_witness_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_witness(in);
}

std::string write_roots(const RootSystem& rs) {
    std::ostringstream out;
    out << json{{"n", rs.dim()}}.dump() << '\n';
    for (const auto& [key, root] : rs.roots()) {
        json m = json::array();
        for (auto i : PosSet::from_bits(key.first)) m.push_back(i);
        out << json{{"index", ordset_json(key.second)}, {"m", m}, {"root", ordset_json(root)}}
                   .dump()
            << '\n';
    }
    return out.str();
}

RootSystem read_roots(std::istream& in) {
    LineReader reader{in};
    std::string line;
    if (!reader.next(line)) throw input_error("roots file: empty");
    json header = parse_line(line, reader.lineno);
    if (!header.contains("n") || !header.at("n").is_number_unsigned())
        throw input_error("roots file: header is missing \"n\"");
    RootSystem rs(header.at("n").get<std::uint32_t>());
    while (reader.next(line)) {
        json j = parse_line(line, reader.lineno);
        std::vector<ordinal> m = ordinal_array(j, "m", reader.lineno);
        std::vector<std::uint32_t> mv(m.begin(), m.end());
        rs.set(PosSet(std::move(mv)).bits(), ordset_field(j, "index", reader.lineno),
               ordset_field(j, "root", reader.lineno));
    }
    return rs;
}

RootSystem read_roots_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_roots(in);
}

std::string write_extension(std::uint32_t n, const OrdSet& ground,
                            const std::map<OrdSet, OrdSet>& ext) {
    std::ostringstream out;
    out << json{{"ground", ground.elems()}, {"n", n}}.dump() << '\n';
    for (const auto& [index, value] : ext)
        out << json{{"index", ordset_json(index)}, {"set", ordset_json(value)}}.dump() << '\n';
    return out.str();
}

std::map<OrdSet, OrdSet> read_extension(std::istream& in) {
    LineReader reader{in};
    std::string line;
    if (!reader.next(line)) throw input_error("extension file: empty");
    parse_line(line, reader.lineno); // header is advisory for extensions
    std::map<OrdSet, OrdSet> ext;
    while (reader.next(line)) {
        json j = parse_line(line, reader.lineno);
        OrdSet index = ordset_field(j, "index", reader.lineno);
        if (!ext.emplace(std::move(index), ordset_field(j, "set", reader.lineno)).second)
            throw input_error("line " + std::to_string(reader.lineno) + ": duplicate index");
    }
    return ext;
}

std::map<OrdSet, OrdSet> read_extension_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_extension(in);
}

} // namespace sunflower
