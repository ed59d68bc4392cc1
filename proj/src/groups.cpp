#include "stc/groups.hpp"

#include <map>

namespace stc {

namespace {

struct GroupInfo {
    STGroup h;
    const char* id;
    const char* display;
    int genus;
};

const std::vector<GroupInfo>& table() {
    static const std::vector<GroupInfo> t = {
        {STGroup::C1, "C1", "C_1", 2},       {STGroup::C2, "C2", "C_2", 2},
        {STGroup::C3, "C3", "C_3", 2},       {STGroup::C4, "C4", "C_4", 2},
        {STGroup::C6, "C6", "C_6", 2},       {STGroup::D2, "D2", "D_2", 2},
        {STGroup::D3, "D3", "D_3", 2},       {STGroup::D4, "D4", "D_4", 2},
        {STGroup::D6, "D6", "D_6", 2},       {STGroup::T, "T", "T", 2},
        {STGroup::O, "O", "O", 2},           {STGroup::JC1, "JC1", "J(C_1)", 2},
        {STGroup::JC2, "JC2", "J(C_2)", 2},  {STGroup::JC3, "JC3", "J(C_3)", 2},
        {STGroup::JC4, "JC4", "J(C_4)", 2},  {STGroup::JC6, "JC6", "J(C_6)", 2},
        {STGroup::JD2, "JD2", "J(D_2)", 2},  {STGroup::JD3, "JD3", "J(D_3)", 2},
        {STGroup::JD4, "JD4", "J(D_4)", 2},  {STGroup::JD6, "JD6", "J(D_6)", 2},
        {STGroup::JT, "JT", "J(T)", 2},      {STGroup::JO, "JO", "J(O)", 2},
        {STGroup::C21, "C21", "C_{2,1}", 2}, {STGroup::C41, "C41", "C_{4,1}", 2},
        {STGroup::C61, "C61", "C_{6,1}", 2}, {STGroup::D21, "D21", "D_{2,1}", 2},
        {STGroup::D41, "D41", "D_{4,1}", 2}, {STGroup::D61, "D61", "D_{6,1}", 2},
        {STGroup::D32, "D32", "D_{3,2}", 2}, {STGroup::D42, "D42", "D_{4,2}", 2},
        {STGroup::D62, "D62", "D_{6,2}", 2}, {STGroup::O1, "O1", "O_1", 2},
        {STGroup::E1, "E1", "E_1", 2},       {STGroup::E2, "E2", "E_2", 2},
        {STGroup::E3, "E3", "E_3", 2},       {STGroup::E4, "E4", "E_4", 2},
        {STGroup::E6, "E6", "E_6", 2},       {STGroup::JE1, "JE1", "J(E_1)", 2},
        {STGroup::JE2, "JE2", "J(E_2)", 2},  {STGroup::JE3, "JE3", "J(E_3)", 2},
        {STGroup::JE4, "JE4", "J(E_4)", 2},  {STGroup::JE6, "JE6", "J(E_6)", 2},
        {STGroup::U2, "U2", "U(2)", 2},      {STGroup::NU2, "NU2", "N(U(2))", 2},
        {STGroup::F, "F", "F", 2},           {STGroup::Fa, "Fa", "F_a", 2},
        {STGroup::Fc, "Fc", "F_c", 2},       {STGroup::Fab, "Fab", "F_{ab}", 2},
        {STGroup::Fac, "Fac", "F_{ac}", 2},  {STGroup::Fa_b, "Fa_b", "F_{a,b}", 2},
        {STGroup::Fab_c, "Fab_c", "F_{ab,c}", 2},
        {STGroup::Fabc, "Fabc", "F_{a,b,c}", 2},
        {STGroup::G13, "G13", "G_{1,3}", 2},
        {STGroup::NG13, "NG13", "N(G_{1,3})", 2},
        {STGroup::G33, "G33", "G_{3,3}", 2},
        {STGroup::NG33, "NG33", "N(G_{3,3})", 2},
        {STGroup::USp4, "USp4", "USp(4)", 2},
        {STGroup::U1, "U1", "U(1)", 1},
        {STGroup::NU1, "NU1", "N(U(1))", 1},
        {STGroup::USp2, "USp2", "USp(2)", 1},
        {STGroup::USp6, "USp6", "USp(6)", 3},
    };
    return t;
}

const GroupInfo& info(STGroup h) {
    for (const auto& g : table())
        if (g.h == h) return g;
    throw UnknownGroup("group not in table");
}

std::string normalize(const std::string& s) {
    // Commas are significant: they are all that separates F_{ab} from F_{a,b}.
    // Subscript underscores, braces, parentheses and spaces are decorative.
    std::string out;
    for (char c : s) {
        if (c == '{' || c == '}' || c == '(' || c == ')' || c == ' ' || c == '_') continue;
        if (c == ',') {
            out.push_back('#');
            continue;
        }
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string group_id(STGroup h) { return info(h).id; }
std::string group_display(STGroup h) { return info(h).display; }
int group_genus(STGroup h) { return info(h).genus; }

STGroup parse_group(const std::string& name) {
    // Canonical id or literal display name first; then a normalized form so that
    // "J(C_2)", "JC2", "F_{a,b,c}" and "Fa,b,c" all resolve. In canonical ids the
    // underscore plays the comma's role ("Fa_b" is F_{a,b}).
    static const std::map<std::string, STGroup> aliases = [] {
        std::map<std::string, STGroup> m;
        for (const auto& g : table()) {
            m[g.id] = g.h;
            m[g.display] = g.h;
        }
        return m;
    }();
    auto it = aliases.find(name);
    if (it != aliases.end()) return it->second;

    static const std::map<std::string, STGroup> norm = [] {
        std::map<std::string, STGroup> m;
        for (const auto& g : table()) m[normalize(g.display)] = g.h;
        m["Sp4"] = STGroup::USp4;
        m["Sp2"] = STGroup::USp2;
        m["Sp6"] = STGroup::USp6;
        return m;
    }();
    auto nit = norm.find(normalize(name));
    if (nit != norm.end()) return nit->second;
    // Underscore-as-comma spelling ("Fab_c" style).
    std::string swapped = name;
    for (char& c : swapped)
        if (c == '_') c = ',';
    nit = norm.find(normalize(swapped));
    if (nit != norm.end()) return nit->second;
    throw UnknownGroup("unknown group name: " + name);
}

const std::vector<STGroup>& all_groups() {
    static const std::vector<STGroup> v = [] {
        std::vector<STGroup> out;
        for (const auto& g : table())
            if (g.h != STGroup::USp6) out.push_back(g.h);
        return out;
    }();
    return v;
}

const std::vector<STGroup>& genus2_groups() {
    static const std::vector<STGroup> v = [] {
        std::vector<STGroup> out;
        for (const auto& g : table())
            if (g.genus == 2) out.push_back(g.h);
        return out;
    }();
    return v;
}

}  // namespace stc
