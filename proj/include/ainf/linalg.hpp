#pragma once

#include "ainf/scalar.hpp"

#include <map>
#include <optional>
#include <vector>

namespace ainf {

// Sparse column over integer coordinates.
using SparseVec = std::map<int, Scalar>;

void sparse_add(SparseVec& target, const SparseVec& other, const Scalar& c);
bool sparse_is_zero(const SparseVec& v);

// Column echelon form over exact rationals. Each stored column's least
// coordinate is its pivot; pivots are unique. Insertion order is the
// deterministic tie-break ("lowest index first").
class ColumnEchelon {
public:
    // Reduces v against the stored columns; the residual's least coordinate
    // (if any) has no pivot yet.
    SparseVec reduce(SparseVec v) const;

    // Reduce-and-store; returns true when v was independent (stored).
    bool insert(SparseVec v);

    int rank() const { return static_cast<int>(by_pivot_.size()); }
    bool contains(const SparseVec& v) const { return sparse_is_zero(reduce(v)); }

private:
    std::map<int, SparseVec> by_pivot_;
};

// Exact subquotient span(cocycles) / span(boundaries) with chosen
// representatives and a projector onto class coordinates.
class Subquotient {
public:
    // Representative choice: boundaries are installed first, then cocycle
    // candidates in the given order; a candidate whose reduction is nonzero
    // becomes the next class representative.
    Subquotient(const std::vector<SparseVec>& boundaries,
                const std::vector<SparseVec>& cocycles);

    int dim() const { return static_cast<int>(reps_.size()); }
    const std::vector<SparseVec>& representatives() const { return reps_; }

    // Class coordinates of x, which must lie in span(boundaries) + span(reps);
    // throws std::domain_error otherwise. Kills boundaries by construction.
    std::vector<Scalar> project(const SparseVec& x) const;

private:
    struct TaggedColumn {
        SparseVec column;
        std::vector<Scalar> rep_coords;
    };
    // reduce x, accumulating representative coordinates
    std::vector<Scalar> reduce_tracked(SparseVec x, bool must_vanish) const;

    std::map<int, TaggedColumn> by_pivot_;
    std::vector<SparseVec> reps_;
};

// Kernel basis of a linear map given by its columns (image of coordinate j),
// as combination vectors over the domain coordinates, in deterministic order.
std::vector<SparseVec> kernel_combinations(const std::vector<SparseVec>& columns);

} // namespace ainf
