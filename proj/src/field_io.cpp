#include <tanperiod/field.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include <tanperiod/errors.hpp>

namespace tanperiod
{

namespace
{

using nlohmann::json;

constexpr int max_document_order = 64;

ExactScalar parse_coefficient(const json &c)
{
    if (c.is_string()) {
        return ExactScalar::parse(c.get<std::string>());
    }
    if (c.is_number_integer()) {
        return ExactScalar(c.get<long>());
    }
    throw ParseError("non-rational coefficient literal " + c.dump());
}

Series2 parse_component(const json &doc, const char *side, const char *comp, int order)
{
    const std::string name = std::string(side) + "." + comp;
    if (!doc.contains(side) || !doc[side].is_object() || !doc[side].contains(comp)) {
        throw ParseError("missing component " + name);
    }
    const json &terms = doc[side][comp];
    if (!terms.is_array()) {
        throw ParseError("malformed document: " + name + " must be a list of [i, j, \"p/q\"] triples");
    }
    Series2 s(order);
    std::set<std::pair<int, int>> seen;
    for (const json &t : terms) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer()) {
            throw ParseError("malformed document: bad term " + t.dump() + " in " + name);
        }
        const long i = t[0].get<long>();
        const long j = t[1].get<long>();
        if (i < 0 || j < 0) {
            throw ParseError("malformed document: negative exponent in " + name);
        }
        if (i + j > order) {
            throw ParseError("malformed document: term x^" + std::to_string(i) + " y^" + std::to_string(j) + " in "
                             + name + " exceeds declared order " + std::to_string(order));
        }
        if (!seen.emplace(static_cast<int>(i), static_cast<int>(j)).second) {
            throw ParseError("malformed document: duplicate term x^" + std::to_string(i) + " y^" + std::to_string(j)
                             + " in " + name);
        }
        s.set(static_cast<int>(i), static_cast<int>(j), parse_coefficient(t[2]));
    }
    return s;
}

nlohmann::ordered_json dump_component(const Series2 &s)
{
    auto terms = nlohmann::ordered_json::array();
    for (int d = 0; d <= s.order(); ++d) {
        for (int j = 0; j <= d; ++j) {
            const ExactScalar &c = s.at(d - j, j);
            if (!c.is_zero()) {
                terms.push_back(nlohmann::ordered_json::array({d - j, j, c.to_string()}));
            }
        }
    }
    return terms;
}

} // namespace

PiecewiseField load_field(std::string_view document)
{
    json doc;
    try {
        doc = json::parse(document.begin(), document.end());
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("malformed document: top level must be an object");
    }
    if (!doc.contains("order") || !doc["order"].is_number_integer()) {
        throw ParseError("malformed document: integer field \"order\" is required");
    }
    const long order = doc["order"].get<long>();
    if (order < 0 || order > max_document_order) {
        throw ParseError("malformed document: order must lie in [0, " + std::to_string(max_document_order) + "]");
    }
    const int n = static_cast<int>(order);

    PiecewiseField field;
    field.order = n;
    field.x_plus = parse_component(doc, "plus", "X", n);
    field.y_plus = parse_component(doc, "plus", "Y", n);
    field.x_minus = parse_component(doc, "minus", "X", n);
    field.y_minus = parse_component(doc, "minus", "Y", n);
    return field;
}

PiecewiseField load_field_file(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open input file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("cannot read input file " + path.string());
    }
    return load_field(buf.str());
}

std::string dump_field(const PiecewiseField &field)
{
    nlohmann::ordered_json doc;
    doc["order"] = field.order;
    doc["plus"]["X"] = dump_component(field.x_plus);
    doc["plus"]["Y"] = dump_component(field.y_plus);
    doc["minus"]["X"] = dump_component(field.x_minus);
    doc["minus"]["Y"] = dump_component(field.y_minus);
    return doc.dump(2);
}

} // namespace tanperiod
