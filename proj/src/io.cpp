#include "amen/io.hpp"

#include <fstream>
#include <sstream>

namespace amen {

std::string digest(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json algebra_to_json(const Algebra& a) {
    Json j;
    j["label"] = a.label();
    j["field"] = "Q";
    j["dim"] = a.dim();
    const std::size_t n = a.dim();
    Json table = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
        Json row = Json::array();
        for (std::size_t jj = 0; jj < n; ++jj) {
            Json cell = Json::array();
            for (std::size_t k = 0; k < n; ++k) cell.push_back(rational_to_string(a.c(i, jj, k)));
            row.push_back(std::move(cell));
        }
        table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
    if (a.unit()) {
        Json u = Json::array();
        for (const auto& x : *a.unit()) u.push_back(rational_to_string(x));
        j["unit"] = std::move(u);
    }
    if (a.declared_characters()) {
        Json ch;
        Json vals = Json::array();
        for (const auto& v : a.declared_characters()->values) {
            Json vec = Json::array();
            for (const auto& x : v) vec.push_back(rational_to_string(x));
            vals.push_back(std::move(vec));
        }
        ch["values"] = std::move(vals);
        ch["complete"] = a.declared_characters()->complete;
        j["characters"] = std::move(ch);
    }
    return j;
}

namespace {

QVector parse_vector(const Json& j, std::size_t n, const char* what) {
    if (!j.is_array() || j.size() != n)
        throw std::runtime_error(std::string(what) + " must be an array of length " +
                                 std::to_string(n));
    QVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = parse_rational(j[i].get<std::string>());
    return v;
}

}  // namespace

Algebra algebra_from_json(const Json& j) {
    if (!j.is_object()) throw std::runtime_error("algebra file must be a JSON object");
    if (j.value("field", "") != "Q") throw std::runtime_error("field must be \"Q\"");
    const std::size_t n = j.at("dim").get<std::size_t>();
    const Json& table = j.at("table");
    if (!table.is_array() || table.size() != n)
        throw std::runtime_error("table must have dim rows");
    std::vector<Rational> t(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!table[i].is_array() || table[i].size() != n)
            throw std::runtime_error("table row " + std::to_string(i) + " malformed");
        for (std::size_t jj = 0; jj < n; ++jj) {
            QVector cell = parse_vector(table[i][jj], n, "table cell");
            for (std::size_t k = 0; k < n; ++k) t[(i * n + jj) * n + k] = cell[k];
        }
    }
    Algebra a(j.value("label", ""), n, std::move(t));
    if (j.contains("unit")) a.set_unit(parse_vector(j["unit"], n, "unit"));
    if (j.contains("characters")) {
        DeclaredCharacters d;
        for (const auto& v : j["characters"].at("values"))
            d.values.push_back(parse_vector(v, n, "declared character"));
        d.complete = j["characters"].value("complete", false);
        a.set_declared_characters(std::move(d));
    }
    return a;
}

std::string write_algebra_file(const Algebra& a) { return algebra_to_json(a).dump(2) + "\n"; }

Algebra read_algebra_file(const std::string& text) {
    return algebra_from_json(Json::parse(text));
}

Algebra load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return read_algebra_file(ss.str());
}

void save_algebra(const Algebra& a, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << write_algebra_file(a);
}

Json character_set_to_json(const CharacterSet& cs) {
    Json j;
    Json vals = Json::array();
    for (const auto& c : cs.characters) {
        Json vec = Json::array();
        for (const auto& x : c.values) vec.push_back(rational_to_string(x));
        vals.push_back(std::move(vec));
    }
    j["values"] = std::move(vals);
    j["complete"] = cs.complete;
    return j;
}

Json report_to_json(const AmenabilityReport& r, const std::string& label,
                    const std::string& input_digest) {
    Json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["input_digest"] = input_digest;
    j["label"] = label;
    j["field"] = r.field;
    j["dim"] = r.dim;
    Json dims;
    dims["derivation"] = r.der_dim;
    dims["inner"] = r.inner_dim;
    dims["cyclic"] = r.cyclic_dim;
    dims["quasi_additive"] = r.qa_dim;
    dims["inner_quasi_additive"] = r.inner_qa_dim;
    dims["cyclic_quasi_additive"] = r.cyclic_qa_dim;
    Json pts = Json::array();
    for (const auto& e : r.point_dims) {
        Json p;
        Json vec = Json::array();
        for (const auto& x : e.character) vec.push_back(rational_to_string(x));
        p["character"] = std::move(vec);
        p["dim"] = e.dim;
        pts.push_back(std::move(p));
    }
    dims["point"] = std::move(pts);
    dims["point_at_zero"] = r.point_dim_at_zero;
    j["dims"] = std::move(dims);
    Json v;
    v["weakly_amenable"] = to_string(r.weakly_amenable);
    v["cyclically_amenable"] = to_string(r.cyclically_amenable);
    v["cyclically_weakly_amenable"] = to_string(r.cyclically_weakly_amenable);
    v["point_amenable"] = to_string(r.point_amenable);
    v["zero_point_amenable"] = to_string(r.zero_point_amenable);
    j["verdicts"] = std::move(v);
    Json q;
    q["weakly_amenable"] = to_string(r.wa_via_qa);
    q["cyclically_amenable"] = to_string(r.ca_via_qa);
    q["cyclically_weakly_amenable"] = to_string(r.cwa_via_qa);
    j["qa_verdicts"] = std::move(q);
    j["routes_agree"] = r.routes_agree;
    Json f;
    f["essential"] = r.essential;
    f["semisimple"] = r.semisimple;
    f["commutative"] = r.commutative;
    f["unital"] = r.unital;
    f["character_set_complete"] = r.character_set_complete;
    f["character_count"] = r.character_count;
    j["flags"] = std::move(f);
    return j;
}

}  // namespace amen
