#pragma once

#include "ainf/scalar.hpp"

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ainf {

// Ordered basis of a finite-dimensional Z-graded vector space. The sequence
// order is fixed and defines the index <-> name bijection.
class GradedBasis {
public:
    struct Entry {
        std::string name;
        int degree = 0;
    };

    // Throws std::invalid_argument on duplicate names.
    static std::shared_ptr<const GradedBasis> make(std::vector<Entry> entries);

    int size() const { return static_cast<int>(entries_.size()); }
    int degree(int i) const { return entries_[static_cast<size_t>(i)].degree; }
    const std::string& name(int i) const { return entries_[static_cast<size_t>(i)].name; }
    const std::vector<Entry>& entries() const { return entries_; }
    std::optional<int> index_of(std::string_view name) const;

    // All degrees that occur, ascending.
    std::vector<int> degrees_present() const;

    bool operator==(const GradedBasis& other) const;

private:
    explicit GradedBasis(std::vector<Entry> entries);
    std::vector<Entry> entries_;
    std::map<std::string, int, std::less<>> index_;
};

using BasisPtr = std::shared_ptr<const GradedBasis>;

// True when both refer to the same basis (pointer identity or equal content).
bool same_basis(const BasisPtr& a, const BasisPtr& b);

// Sparse vector over a GradedBasis; zero coefficients are never stored, so
// equality is structural.
class Element {
public:
    Element() = default;
    explicit Element(BasisPtr basis) : basis_(std::move(basis)) {}

    static Element basis_vector(BasisPtr basis, int index);
    static Element zero(BasisPtr basis) { return Element(std::move(basis)); }

    const BasisPtr& basis() const { return basis_; }
    const std::map<int, Scalar>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Scalar coeff(int index) const;

    // Degree when homogeneous and nonzero; nullopt for zero or mixed.
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous() const { return coeffs_.empty() || homogeneous_degree().has_value(); }
    std::map<int, Element> homogeneous_components() const;

    Element& add_scaled(const Element& other, const Scalar& c);
    Element& operator+=(const Element& other) { return add_scaled(other, 1); }
    Element& operator-=(const Element& other) { return add_scaled(other, -1); }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Scalar& c, Element a) { return a.scale(c); }
    Element& scale(const Scalar& c);
    Element operator-() const;

    void set_coeff(int index, Scalar c);

    bool operator==(const Element& other) const;
    bool operator!=(const Element& other) const { return !(*this == other); }

    // "e11 - 2*e12", "0", deterministic (ascending basis index).
    std::string to_string() const;

private:
    void check_same_basis(const Element& other) const;
    BasisPtr basis_;
    std::map<int, Scalar> coeffs_;
};

} // namespace ainf
