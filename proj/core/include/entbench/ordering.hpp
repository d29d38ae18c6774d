#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace entb {

enum class Relation { Less, Equal, Greater };

char relation_symbol(Relation r);     // '<', '=', '>'
Relation mirror(Relation r);          // swaps Less and Greater
Relation compare(double a, double b, double tol);

// Ordered list of (measure name, relation) describing how one record
// compares to another measure by measure.
struct OrderingClass {
    std::vector<std::pair<std::string, Relation>> pattern;

    std::string to_string() const;  // e.g. "C<,N>,E<"
    OrderingClass mirrored() const;

    bool operator<(const OrderingClass& o) const;
    bool operator==(const OrderingClass& o) const;
};

// One relation per measure; values aligned with `names`. `tols` gives the
// equality tolerance per measure.
OrderingClass classify_pair(std::span<const double> values1, std::span<const double> values2,
                            std::span<const std::string> names, std::span<const double> tols);

struct CensusEntry {
    OrderingClass pattern;  // canonical orientation (see census)
    std::size_t count;
};

// Counts ordering classes over all unordered pairs of records. Each pair
// is counted once under the canonical orientation: the lexicographically
// smaller of the pattern and its mirror. Rows are value vectors aligned
// with `names`. `record_tols` (same shape as `records`, may be empty)
// holds per-record tolerance floors; the effective tolerance for a pair
// is the max over the shared default and both records' floors — this is
// how estimator noise (the REE gap) widens equality.
std::vector<CensusEntry> census(const std::vector<std::vector<double>>& records,
                                std::span<const std::string> names, std::span<const double> tols,
                                const std::vector<std::vector<double>>& record_tols = {});

struct EnvelopeBin {
    double x_lo, x_hi;
    double y_min, y_max;
    std::size_t count;
};

// Per-x-bin min/max of y; empty bins are omitted.
std::vector<EnvelopeBin> scatter_bounds(std::span<const double> xs, std::span<const double> ys,
                                        std::size_t bins = 50);

}  // namespace entb
