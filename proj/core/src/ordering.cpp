#include "entbench/ordering.hpp"

#include <algorithm>
#include <cmath>

#include "entbench/errors.hpp"

namespace entb {

char relation_symbol(Relation r) {
    switch (r) {
        case Relation::Less: return '<';
        case Relation::Equal: return '=';
        case Relation::Greater: return '>';
    }
    return '?';
}

Relation mirror(Relation r) {
    if (r == Relation::Less) return Relation::Greater;
    if (r == Relation::Greater) return Relation::Less;
    return Relation::Equal;
}

Relation compare(double a, double b, double tol) {
    if (std::abs(a - b) <= tol) return Relation::Equal;
    return a < b ? Relation::Less : Relation::Greater;
}

std::string OrderingClass::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (i) s += ',';
        s += pattern[i].first;
        s += relation_symbol(pattern[i].second);
    }
    return s;
}

OrderingClass OrderingClass::mirrored() const {
    OrderingClass m = *this;
    for (auto& [name, rel] : m.pattern) rel = mirror(rel);
    return m;
}

bool OrderingClass::operator<(const OrderingClass& o) const {
    return to_string() < o.to_string();
}

bool OrderingClass::operator==(const OrderingClass& o) const { return pattern == o.pattern; }

OrderingClass classify_pair(std::span<const double> values1, std::span<const double> values2,
                            std::span<const std::string> names, std::span<const double> tols) {
    if (values1.size() != names.size() || values2.size() != names.size() ||
        tols.size() != names.size())
        throw MissingMeasureError("classify_pair: value/name/tolerance length mismatch");
    OrderingClass cls;
    cls.pattern.reserve(names.size());
    for (std::size_t i = 0; i < names.size(); ++i)
        cls.pattern.emplace_back(names[i], compare(values1[i], values2[i], tols[i]));
    return cls;
}

std::vector<CensusEntry> census(const std::vector<std::vector<double>>& records,
                                std::span<const std::string> names, std::span<const double> tols,
                                const std::vector<std::vector<double>>& record_tols) {
    if (!record_tols.empty() && record_tols.size() != records.size())
        throw MissingMeasureError("census: record tolerance shape mismatch");
    std::map<std::string, std::pair<OrderingClass, std::size_t>> counts;
    std::vector<double> pair_tols(names.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        for (std::size_t j = i + 1; j < records.size(); ++j) {
            for (std::size_t m = 0; m < names.size(); ++m) {
                pair_tols[m] = tols[m];
                if (!record_tols.empty())
                    pair_tols[m] =
                        std::max({pair_tols[m], record_tols[i][m], record_tols[j][m]});
            }
            OrderingClass cls = classify_pair(records[i], records[j], names, pair_tols);
            OrderingClass mir = cls.mirrored();
            // canonical orientation: lexicographically smaller pattern string
            OrderingClass canon = mir < cls ? std::move(mir) : std::move(cls);
            auto [it, inserted] = counts.try_emplace(canon.to_string(), canon, 0);
            ++it->second.second;
        }
    }
    std::vector<CensusEntry> out;
    out.reserve(counts.size());
    for (auto& [key, val] : counts) out.push_back(CensusEntry{val.first, val.second});
    return out;
}

std::vector<EnvelopeBin> scatter_bounds(std::span<const double> xs, std::span<const double> ys,
                                        std::size_t bins) {
    if (xs.size() != ys.size()) throw MissingMeasureError("scatter_bounds: length mismatch");
    if (xs.empty() || bins == 0) return {};

    const auto [lo_it, hi_it] = std::minmax_element(xs.begin(), xs.end());
    const double lo = *lo_it, hi = *hi_it;
    const double width = hi > lo ? (hi - lo) / static_cast<double>(bins) : 1.0;

    struct Acc {
        double y_min = 0.0, y_max = 0.0;
        std::size_t count = 0;
    };
    std::vector<Acc> acc(bins);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::size_t b = hi > lo ? static_cast<std::size_t>((xs[i] - lo) / width) : 0;
        b = std::min(b, bins - 1);
        if (acc[b].count == 0) {
            acc[b].y_min = acc[b].y_max = ys[i];
        } else {
            acc[b].y_min = std::min(acc[b].y_min, ys[i]);
            acc[b].y_max = std::max(acc[b].y_max, ys[i]);
        }
        ++acc[b].count;
    }

    std::vector<EnvelopeBin> out;
    for (std::size_t b = 0; b < bins; ++b) {
        if (acc[b].count == 0) continue;
        out.push_back(EnvelopeBin{lo + static_cast<double>(b) * width,
                                  lo + static_cast<double>(b + 1) * width, acc[b].y_min,
                                  acc[b].y_max, acc[b].count});
    }
    return out;
}

}  // namespace entb
