#pragma once

#include "ainf/basis.hpp"

#include <map>
#include <span>
#include <vector>

namespace ainf {

// (-1)^(op_degree * sum(passed_degrees)). The single source of Koszul signs
// in this codebase.
int koszul_sign(long long op_degree, std::span<const int> passed_degrees);

// Homogeneous multilinear operation of fixed arity and degree, tabulated on
// basis tuples. Absent tuples mean zero.
class MultiOp {
public:
    MultiOp() = default;
    MultiOp(BasisPtr basis, int arity, int degree)
        : basis_(std::move(basis)), arity_(arity), degree_(degree) {}

    const BasisPtr& basis() const { return basis_; }
    int arity() const { return arity_; }
    int degree() const { return degree_; }

    void set_value(std::vector<int> indices, Element value);
    const Element& value(std::span<const int> indices) const;
    const std::map<std::vector<int>, Element>& table() const { return table_; }

    bool is_zero() const { return table_.empty(); }

    // Multilinear evaluation on arbitrary elements.
    Element apply(std::span<const Element> args) const;

    MultiOp& add_scaled(const MultiOp& other, const Scalar& c);

    // Lexicographically first nonzero entry, for witnesses.
    struct Entry {
        std::vector<int> indices;
        Element value;
    };
    std::optional<Entry> first_nonzero() const;

    bool operator==(const MultiOp& other) const;

private:
    BasisPtr basis_;
    int arity_ = 0;
    int degree_ = 0;
    std::map<std::vector<int>, Element> table_;
};

// Evaluates id^i (x) inner (x) id^j on homogeneous elements: returns the
// outer tuple with the Koszul sign of `inner` passing the first `slot`
// arguments multiplied into the inner result. Throws on inhomogeneous input.
std::vector<Element> apply_tensor_slot(int outer_arity, int slot, const MultiOp& inner,
                                       std::span<const Element> args);

} // namespace ainf
