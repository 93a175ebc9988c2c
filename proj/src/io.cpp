#include "matinv/io.hpp"

namespace matinv::io {

Json to_json(const GaussianRational& x) {
    Json j;
    j["re"] = fraction_string(x.real());
    j["im"] = fraction_string(x.imag());
    return j;
}

Json to_json(const Mat2& m) {
    return Json::array({Json::array({to_json(m(0, 0)), to_json(m(0, 1))}),
                        Json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
}

Json to_json(const MatTuple& a) {
    Json doc;
    doc["n"] = a.size();
    doc["matrices"] = Json::array();
    for (const auto& m : a) doc["matrices"].push_back(to_json(m));
    return doc;
}

Json to_json(const InvariantProfile& profile) {
    Json arr = Json::array();
    for (const auto& e : profile.entries()) {
        Json item;
        item["label"] = e.label;
        item["value"] = to_json(e.value);
        arr.push_back(std::move(item));
    }
    return arr;
}

Json to_json(const SlotTriple& t) { return Json::array({t[0] + 1, t[1] + 1, t[2] + 1}); }

Json to_json(const ReducedSet& set) {
    Json doc;
    doc["n"] = set.n;
    doc["scheme"] = scheme_name(set.scheme);
    doc["combinations"] = Json::array();
    for (const auto& combo : set.combinations) {
        Json c;
        c["level"] = combo.level;
        c["terms"] = Json::array();
        for (const auto& term : combo.terms) {
            Json t;
            t["ijk"] = to_json(term.slots);
            t["coeff"] = fraction_string(term.coeff.real());
            c["terms"].push_back(std::move(t));
        }
        doc["combinations"].push_back(std::move(c));
    }
    return doc;
}

Json to_json(const Decision& decision) {
    Json j;
    j["inseparable"] = decision.inseparable;
    j["witness"] = decision.witness ? Json(*decision.witness) : Json(nullptr);
    return j;
}

Json to_json(const ClassificationReport& report) {
    Json j;
    j["classification"] = classification_name(report.verdict);
    j["pair_form"] = report.form ? Json(pair_class_name(*report.form)) : Json(nullptr);
    if (report.m) {
        j["rank"] = report.m->rank;
        j["nonzero_minors"] = Json::array();
        for (const auto& t : report.m->nonzero_minors) j["nonzero_minors"].push_back(to_json(t));
    } else {
        j["rank"] = nullptr;
        j["nonzero_minors"] = Json::array();
    }
    return j;
}

GaussianRational parse_scalar(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im")) {
        throw ParseError(where + ": expected an object with \"re\" and \"im\"");
    }
    const auto part = [&](const char* key) {
        const auto& v = j.at(key);
        if (!v.is_string()) throw ParseError(where + "." + key + ": expected a fraction string");
        try {
            return parse_fraction(v.get<std::string>());
        } catch (const ZeroDenominator& e) {
            throw ZeroDenominator(where + "." + key + ": " + e.what());
        } catch (const ParseError& e) {
            throw ParseError(where + "." + key + ": " + e.what());
        }
    };
    return GaussianRational(part("re"), part("im"));
}

MatTuple parse_tuple(const Json& doc) {
    if (!doc.is_object()) throw ParseError("tuple document must be a JSON object");
    if (!doc.contains("n") || !doc.at("n").is_number_integer()) throw ParseError("n: expected an integer");
    if (!doc.contains("matrices") || !doc.at("matrices").is_array()) throw ParseError("matrices: expected an array");
    const auto n = doc.at("n").get<long long>();
    const auto& mats = doc.at("matrices");
    if (n < 1) throw LengthMismatch("n must be at least 1");
    if (static_cast<long long>(mats.size()) != n) {
        throw LengthMismatch("n is " + std::to_string(n) + " but " + std::to_string(mats.size()) +
                             " matrices were given");
    }
    std::vector<Mat2> out;
    for (std::size_t s = 0; s < mats.size(); ++s) {
        const std::string where = "matrices[" + std::to_string(s) + "]";
        const auto& m = mats[s];
        if (!m.is_array() || m.size() != 2) throw ParseError(where + ": expected 2 rows");
        Mat2 parsed;
        for (std::size_t r = 0; r < 2; ++r) {
            if (!m[r].is_array() || m[r].size() != 2) {
                throw ParseError(where + "[" + std::to_string(r) + "]: expected 2 entries");
            }
            for (std::size_t c = 0; c < 2; ++c) {
                parsed(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                    parse_scalar(m[r][c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
            }
        }
        out.push_back(std::move(parsed));
    }
    return MatTuple(std::move(out));
}

MatTuple parse_tuple_text(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_tuple(doc);
}

}  // namespace matinv::io
