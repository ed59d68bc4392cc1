#include "stc/partitions.hpp"

#include <algorithm>
#include <sstream>

namespace stc {

Partition trim(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

std::string partition_str(const Partition& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << p[i];
    }
    os << ")";
    return os.str();
}

Partition transpose(const Partition& p) {
    Partition q = trim(p);
    if (q.empty()) return {};
    Partition out(q[0], 0);
    for (int part : q)
        for (int j = 0; j < part; ++j) ++out[j];
    return out;
}

Partition tilde_complement(const Partition& p, int m, int g) {
    Partition q = trim(p);
    if (static_cast<int>(q.size()) > m || (!q.empty() && q[0] > g))
        throw NotInRectangle("tilde_complement: " + partition_str(q) + " not inside " +
                             std::to_string(g) + "^" + std::to_string(m));
    Partition t = transpose(q);
    t.resize(g, 0);
    Partition out(g);
    for (int i = 0; i < g; ++i) out[i] = m - t[g - 1 - i];
    return trim(out);
}

namespace {
void enumerate_rec(int g, int m, Partition& cur, std::vector<Partition>& out) {
    out.push_back(trim(cur));
    if (static_cast<int>(cur.size()) == m) return;
    int maxpart = cur.empty() ? g : cur.back();
    for (int part = 1; part <= maxpart; ++part) {
        cur.push_back(part);
        enumerate_rec(g, m, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> rect_subpartitions(int g, int m) {
    if (g < 1 || m < 1) throw OutOfRange("rect_subpartitions: g, m must be >= 1");
    std::vector<Partition> out;
    Partition cur;
    enumerate_rec(g, m, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<Partition, Partition> zb_to_lambda(int z, int b, int m) {
    if (z < 0 || b < 0 || b + 2 * z > m)
        throw OutOfRange("zb_to_lambda: need z, b >= 0 and b + 2z <= m");
    Partition tilde;
    if (b + 2 * z > 0) tilde = {b + 2 * z, b};
    tilde = trim(tilde);
    Partition lam;
    for (int i = 0; i < m - b - 2 * z; ++i) lam.push_back(2);
    for (int i = 0; i < 2 * z; ++i) lam.push_back(1);
    return {lam, tilde};
}

}  // namespace stc
