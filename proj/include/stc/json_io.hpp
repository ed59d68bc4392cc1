#pragma once

#include "stc/laurent.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace stc {

/// JSON schema for a Laurent polynomial:
///   { "vars": ["x1", ...],
///     "terms": [ {"exp": [..], "num": "3", "den": "2"}          (rational)
///              | {"exp": [..], "cyclo": ["n/d", ... 16 of them]} ] }
inline nlohmann::ordered_json poly_to_json(const LaurentPoly& p,
                                           const std::vector<std::string>& names) {
    nlohmann::ordered_json out;
    out["vars"] = names;
    out["terms"] = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::ordered_json t;
        t["exp"] = e;
        if (c.is_rational()) {
            Rat r = c.to_rat();
            t["num"] = r.num_str();
            t["den"] = r.den_str();
        } else {
            auto cyc = nlohmann::ordered_json::array();
            for (int k = 0; k < 16; ++k) cyc.push_back(c.coeff(k).str());
            t["cyclo"] = cyc;
        }
        out["terms"].push_back(std::move(t));
    }
    return out;
}

inline LaurentPoly poly_from_json(const nlohmann::json& j) {
    const auto& vars = j.at("vars");
    LaurentPoly p(static_cast<int>(vars.size()));
    for (const auto& t : j.at("terms")) {
        ExpVec e = t.at("exp").get<ExpVec>();
        CycloNum c;
        if (t.contains("cyclo")) {
            int k = 0;
            for (const auto& s : t.at("cyclo"))
                c += CycloNum(Rat::from_string(s.get<std::string>())) *
                     CycloNum::zeta_pow(k++);
        } else {
            c = CycloNum(Rat::from_string(t.at("num").get<std::string>() + "/" +
                                          t.at("den").get<std::string>()));
        }
        p.add_term(e, c);
    }
    return p;
}

}  // namespace stc
