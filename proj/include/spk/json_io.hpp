#pragma once

#include <json.hpp>

#include "spk/hecke.hpp"
#include "spk/ssyt.hpp"
#include "spk/tensor.hpp"
#include "spk/truncpoly.hpp"

namespace spk::io {

using json = nlohmann::ordered_json;

inline json word_to_json(const shapes::Word& w) {
    json arr = json::array();
    for (const auto& a : w) arr.push_back(shapes::to_string(a));
    return arr;
}

inline shapes::Word word_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("word must be a JSON array of letters");
    shapes::Word w;
    for (const auto& item : j) w.push_back(shapes::parse_letter(item.get<std::string>()));
    return w;
}

inline json tableau_to_json(const shapes::Tableau& t) {
    json rows = json::array();
    for (const auto& row : t.rows) {
        json r = json::array();
        for (const auto& a : row) r.push_back(shapes::to_string(a));
        rows.push_back(r);
    }
    json shape = json::array();
    for (long len : shapes::shape_of(t)) shape.push_back(len);
    return json{{"shape", shape}, {"rows", rows}};
}

inline shapes::Tableau tableau_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows"))
        throw ParseError("tableau JSON needs a 'rows' field");
    shapes::Tableau t;
    for (const auto& row : j.at("rows")) {
        std::vector<shapes::SignedLetter> r;
        for (const auto& item : row) r.push_back(shapes::parse_letter(item.get<std::string>()));
        t.rows.push_back(std::move(r));
    }
    shapes::Partition profile = shapes::shape_of(t); // validates the profile
    if (j.contains("shape")) {
        shapes::Partition declared;
        for (const auto& v : j.at("shape")) declared.push_back(v.get<long>());
        if (declared != profile)
            throw ShapeError("declared shape does not match the rows");
    }
    return t;
}

inline json charpoly_to_json(const exact::TruncatedPoly& p) {
    json arr = json::array();
    const auto& t = p.terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        json exps = json::array();
        for (int e : it->first) exps.push_back(e);
        arr.push_back(json{{"exponents", exps}, {"coefficient", exact::to_string(it->second)}});
    }
    return arr;
}

inline json tensor_to_json(const freealg::TensorElement& e) {
    json arr = json::array();
    for (const auto& [w, c] : e.terms()) {
        arr.push_back(json{{"word", word_to_json(w)},
                           {"coefficient",
                            json{{"num", c.num().to_string()}, {"den", c.den().to_string()}}}});
    }
    return arr;
}

inline json hecke_to_json(const hecke::HeckeElement& e) {
    json terms = json::array();
    for (const auto& [w, c] : e.terms()) {
        json perm = json::array();
        for (int v : w) perm.push_back(v);
        terms.push_back(json{{"perm", perm}, {"coeff", c.to_string()}});
    }
    return json{{"r", e.r()}, {"terms", terms}};
}

} // namespace spk::io
