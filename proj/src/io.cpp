#include "sl2pf/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace sl2pf {

using nlohmann::json;

namespace {

json field_json(const Field& f) {
    json j;
    j["p"] = f.p();
    j["n"] = f.n();
    if (f.n() > 1) {
        // modulus over F_p in the same text grammar, variable T
        FieldPtr base = Field::make(f.p(), 1);
        std::vector<Fq> coeffs;
        for (long c : f.modulus()) coeffs.push_back(static_cast<Fq>(c));
        j["modulus"] = Poly(base, coeffs).to_string();
    }
    return j;
}

FieldPtr field_from_json(const json& j) {
    require(j.contains("p") && j.contains("n"), Errc::ParseError, "field needs p and n");
    long p = j.at("p").get<long>();
    int n = j.at("n").get<int>();
    if (n > 1 && j.contains("modulus")) {
        FieldPtr base = Field::make(p, 1);
        Poly m = Poly::parse(base, j.at("modulus").get<std::string>());
        std::vector<long> coeffs;
        for (int i = 0; i <= m.degree(); ++i) coeffs.push_back(m.coeff(i));
        return Field::make(p, n, coeffs);
    }
    return Field::make(p, n);
}

json parsed(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    require(!j.is_discarded(), Errc::ParseError, "malformed JSON");
    return j;
}

void check_version(const json& j) {
    require(j.contains("v") && j.at("v").get<int>() == 1, Errc::ParseError,
            "unsupported format version");
}

json word_json(const Word& w, const std::string& name) {
    json j;
    j["family"] = name;
    json params = json::array();
    for (const Poly& p : w.family_params()) params.push_back(p.to_string());
    j["params"] = params;
    return j;
}

json quintuple_json(const Quintuple& t, const std::string& name) {
    json j;
    j["family"] = name;
    json q = json::array();
    for (const Poly& p : lambda_from_quintuple(t)) q.push_back(p.to_string());
    j["quintuple"] = q;
    return j;
}

Word word_from_json(FieldPtr f, const json& j, WordFamily fam, int arity,
                    const std::string& name) {
    require(j.contains("family") && j.at("family").get<std::string>() == name, Errc::ParseError,
            "expected slot family " + name);
    require(j.contains("params") && j.at("params").is_array(), Errc::ParseError,
            "slot " + name + " needs params");
    std::vector<Poly> params;
    for (const auto& s : j.at("params")) params.push_back(Poly::parse(f, s.get<std::string>()));
    require(static_cast<int>(params.size()) == arity, Errc::ParseError,
            "slot " + name + " needs " + std::to_string(arity) + " params");
    return Word::from_family(fam, std::move(f), std::move(params));
}

Quintuple quintuple_from_json(FieldPtr f, const json& j, const std::string& name) {
    require(j.contains("family") && j.at("family").get<std::string>() == name, Errc::ParseError,
            "expected slot family " + name);
    require(j.contains("quintuple") && j.at("quintuple").is_array() &&
                j.at("quintuple").size() == 5,
            Errc::ParseError, "slot " + name + " needs a quintuple of 5");
    const auto& arr = j.at("quintuple");
    return Quintuple{Poly::parse(f, arr[0].get<std::string>()),
                     Poly::parse(f, arr[1].get<std::string>()),
                     Poly::parse(f, arr[2].get<std::string>()),
                     Poly::parse(f, arr[3].get<std::string>()),
                     Poly::parse(f, arr[4].get<std::string>())};
}

}  // namespace

std::string field_to_json(const Field& f) { return field_json(f).dump(); }

FieldPtr field_from_json_text(const std::string& text) { return field_from_json(parsed(text)); }

std::string matrix_to_json(const Mat2& m) {
    json j;
    j["v"] = 1;
    j["field"] = field_json(m.field());
    json rows = json::array();
    rows.push_back(json::array({m.a.to_string(), m.b.to_string()}));
    rows.push_back(json::array({m.c.to_string(), m.d.to_string()}));
    j["matrix"] = rows;
    return j.dump();
}

Mat2 matrix_from_json_text(const std::string& text) {
    json j = parsed(text);
    check_version(j);
    require(j.contains("field") && j.contains("matrix"), Errc::ParseError,
            "matrix document needs field and matrix");
    FieldPtr f = field_from_json(j.at("field"));
    const auto& m = j.at("matrix");
    require(m.is_array() && m.size() == 2 && m[0].is_array() && m[0].size() == 2 &&
                m[1].is_array() && m[1].size() == 2,
            Errc::ParseError, "matrix must be 2x2");
    return Mat2(Poly::parse(f, m[0][0].get<std::string>()),
                Poly::parse(f, m[0][1].get<std::string>()),
                Poly::parse(f, m[1][0].get<std::string>()),
                Poly::parse(f, m[1][1].get<std::string>()));
}

std::string certificate_to_json(const Certificate& cert) {
    validate_certificate(cert);
    json j;
    j["v"] = 1;
    j["field"] = field_json(*cert.field_ptr());
    json slots = json::array();
    slots.push_back(word_json(cert.g9, "G9"));
    slots.push_back(quintuple_json(cert.lambda_t_front, "LambdaT"));
    slots.push_back(word_json(cert.g4_front, "G4"));
    slots.push_back(quintuple_json(cert.lambda_front, "Lambda"));
    slots.push_back(word_json(cert.f11, "F11"));
    slots.push_back(quintuple_json(cert.lambda_back, "Lambda"));
    slots.push_back(word_json(cert.f4, "F4"));
    slots.push_back(quintuple_json(cert.lambda_t_back, "LambdaT"));
    slots.push_back(word_json(cert.g4_back, "G4"));
    j["slots"] = slots;
    return j.dump();
}

Certificate certificate_from_json_text(const std::string& text) {
    json j = parsed(text);
    check_version(j);
    require(j.contains("field") && j.contains("slots"), Errc::ParseError,
            "certificate document needs field and slots");
    FieldPtr f = field_from_json(j.at("field"));
    const auto& slots = j.at("slots");
    require(slots.is_array() && slots.size() == 9, Errc::ParseError,
            "certificate needs exactly 9 slots");
    Certificate cert{word_from_json(f, slots[0], WordFamily::G, 9, "G9"),
                     quintuple_from_json(f, slots[1], "LambdaT"),
                     word_from_json(f, slots[2], WordFamily::G, 4, "G4"),
                     quintuple_from_json(f, slots[3], "Lambda"),
                     word_from_json(f, slots[4], WordFamily::F, 11, "F11"),
                     quintuple_from_json(f, slots[5], "Lambda"),
                     word_from_json(f, slots[6], WordFamily::F, 4, "F4"),
                     quintuple_from_json(f, slots[7], "LambdaT"),
                     word_from_json(f, slots[8], WordFamily::G, 4, "G4")};
    validate_certificate(cert);
    return cert;
}

std::string read_stream(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") return read_stream(std::cin);
    std::ifstream in(path);
    require(in.good(), Errc::ParseError, "cannot open input: " + path);
    return read_stream(in);
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        std::cout.flush();
        return;
    }
    std::ofstream out(path);
    require(out.good(), Errc::ParseError, "cannot open output: " + path);
    out << data;
}

}  // namespace sl2pf
