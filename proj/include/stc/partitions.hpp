#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stc {

/// Weakly decreasing nonnegative parts, trailing zeros trimmed.
using Partition = std::vector<int>;

struct NotInRectangle : std::runtime_error {
    explicit NotInRectangle(const std::string& what) : std::runtime_error(what) {}
};
struct OutOfRange : std::runtime_error {
    explicit OutOfRange(const std::string& what) : std::runtime_error(what) {}
};

Partition trim(Partition p);
bool is_partition(const Partition& p);
std::string partition_str(const Partition& p);

/// Conjugate (Young-diagram flip).
Partition transpose(const Partition& p);

/// Complement of p inside the g x m rectangle: with p' padded to length g,
/// returns (m - p'_g, ..., m - p'_1). Requires p to fit (length <= m, parts <= g).
Partition tilde_complement(const Partition& p, int m, int g);

/// All partitions with at most m parts, each at most g, in lexicographic order.
std::vector<Partition> rect_subpartitions(int g, int m);

/// The pair (lambda, lambda~) indexed by (z, b) at width m:
/// lambda~ = (b+2z, b) and lambda = (2^(m-b-2z), 1^(2z)).
std::pair<Partition, Partition> zb_to_lambda(int z, int b, int m);

}  // namespace stc
