#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace stc {

struct UnknownGroup : std::runtime_error {
    explicit UnknownGroup(const std::string& what) : std::runtime_error(what) {}
};

/// Closed enumeration: the 57 subgroups of USp(4), the 3 rank-1 groups, and USp(6)
/// (the last is carried only for moment computations, not for coefficient tables).
enum class STGroup {
    C1, C2, C3, C4, C6,
    D2, D3, D4, D6,
    T, O,
    JC1, JC2, JC3, JC4, JC6,
    JD2, JD3, JD4, JD6,
    JT, JO,
    C21, C41, C61,
    D21, D41, D61,
    D32, D42, D62,
    O1,
    E1, E2, E3, E4, E6,
    JE1, JE2, JE3, JE4, JE6,
    U2, NU2,
    F, Fa, Fc, Fab, Fac, Fa_b, Fab_c, Fabc,
    G13, NG13, G33, NG33,
    USp4,
    U1, NU1, USp2,
    USp6,
};

/// Canonical ASCII identifier (e.g. "JC2", "Fabc", "NU2").
std::string group_id(STGroup h);
/// Display name (e.g. "J(C_2)", "F_{a,b,c}", "N(U(2))").
std::string group_display(STGroup h);
/// Parses canonical ids and common aliases; throws UnknownGroup.
STGroup parse_group(const std::string& name);

/// 1 for the rank-1 groups, 2 for subgroups of USp(4), 3 for USp(6).
int group_genus(STGroup h);

/// The 60 groups of the coefficient table (excludes USp(6)), in a fixed order.
const std::vector<STGroup>& all_groups();
/// The 57 rank-2 groups.
const std::vector<STGroup>& genus2_groups();

}  // namespace stc
