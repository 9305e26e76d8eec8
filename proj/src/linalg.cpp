#include "ainf/linalg.hpp"

#include <stdexcept>

namespace ainf {

void sparse_add(SparseVec& target, const SparseVec& other, const Scalar& c) {
    if (c == 0) return;
    for (const auto& [k, v] : other) {
        auto it = target.find(k);
        if (it == target.end()) {
            target.emplace(k, c * v);
        } else {
            it->second += c * v;
            if (it->second == 0) target.erase(it);
        }
    }
}

bool sparse_is_zero(const SparseVec& v) { return v.empty(); }

SparseVec ColumnEchelon::reduce(SparseVec v) const {
    while (!v.empty()) {
        int lead = v.begin()->first;
        auto it = by_pivot_.find(lead);
        if (it == by_pivot_.end()) break;
        Scalar factor = -v.begin()->second / it->second.at(lead);
        sparse_add(v, it->second, factor);
    }
    return v;
}

bool ColumnEchelon::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    int pivot = v.begin()->first;
    by_pivot_.emplace(pivot, std::move(v));
    return true;
}

Subquotient::Subquotient(const std::vector<SparseVec>& boundaries,
                         const std::vector<SparseVec>& cocycles) {
    auto reduce_in = [&](SparseVec v) {
        std::vector<Scalar> coords(reps_.size(), Scalar(0));
        while (!v.empty()) {
            int lead = v.begin()->first;
            auto it = by_pivot_.find(lead);
            if (it == by_pivot_.end()) break;
            Scalar factor = -v.begin()->second / it->second.column.at(lead);
            sparse_add(v, it->second.column, factor);
            for (size_t k = 0; k < it->second.rep_coords.size(); ++k)
                coords[k] += factor * it->second.rep_coords[k];
        }
        return std::pair{std::move(v), std::move(coords)};
    };

    for (const auto& b : boundaries) {
        auto [res, coords] = reduce_in(b);
        if (!res.empty()) {
            int pivot = res.begin()->first;
            by_pivot_.emplace(pivot, TaggedColumn{std::move(res), {}});
        }
    }
    // pad boundary tags once rep count is known: tags are resized lazily in
    // project(); boundary columns keep empty (all-zero) tags.
    for (const auto& z : cocycles) {
        auto [res, coords] = reduce_in(z);
        if (res.empty()) continue;
        int pivot = res.begin()->first;
        size_t id = reps_.size();
        reps_.push_back(z);
        // class(res) = [z] + sum_k coords[k]*[rep_k]
        std::vector<Scalar> tag(id + 1, Scalar(0));
        tag[id] = 1;
        for (size_t k = 0; k < coords.size(); ++k) tag[k] = coords[k];
        by_pivot_.emplace(pivot, TaggedColumn{std::move(res), std::move(tag)});
    }
}

std::vector<Scalar> Subquotient::reduce_tracked(SparseVec x, bool must_vanish) const {
    std::vector<Scalar> coords(reps_.size(), Scalar(0));
    while (!x.empty()) {
        int lead = x.begin()->first;
        auto it = by_pivot_.find(lead);
        if (it == by_pivot_.end()) {
            if (must_vanish)
                throw std::domain_error("vector lies outside the recorded span");
            break;
        }
        Scalar factor = -x.begin()->second / it->second.column.at(lead);
        sparse_add(x, it->second.column, factor);
        for (size_t k = 0; k < it->second.rep_coords.size(); ++k)
            coords[k] -= factor * it->second.rep_coords[k];
    }
    return coords;
}

std::vector<Scalar> Subquotient::project(const SparseVec& x) const {
    return reduce_tracked(x, true);
}

std::vector<SparseVec> kernel_combinations(const std::vector<SparseVec>& columns) {
    // column elimination with combination tracking
    std::map<int, std::pair<SparseVec, SparseVec>> by_pivot; // pivot -> (col, combo)
    std::vector<SparseVec> kernel;
    for (size_t j = 0; j < columns.size(); ++j) {
        SparseVec col = columns[j];
        SparseVec combo{{static_cast<int>(j), Scalar(1)}};
        while (!col.empty()) {
            int lead = col.begin()->first;
            auto it = by_pivot.find(lead);
            if (it == by_pivot.end()) break;
            Scalar factor = -col.begin()->second / it->second.first.at(lead);
            sparse_add(col, it->second.first, factor);
            sparse_add(combo, it->second.second, factor);
        }
        if (col.empty()) {
            kernel.push_back(std::move(combo));
        } else {
            int pivot = col.begin()->first;
            by_pivot.emplace(pivot, std::pair{std::move(col), std::move(combo)});
        }
    }
    return kernel;
}

} // namespace ainf
