#pragma once

#include "ainf/basis.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ainf {

// Degree-homogeneous linear operator given by its images on basis vectors.
class LinearOperator {
public:
    LinearOperator() = default;
    LinearOperator(BasisPtr basis, int degree) : basis_(std::move(basis)), degree_(degree) {}

    const BasisPtr& basis() const { return basis_; }
    int degree() const { return degree_; }

    void set_image(int index, Element value);
    const Element& image_of(int index) const;
    const std::map<int, Element>& images() const { return images_; }

    Element apply(const Element& x) const;
    bool is_zero() const;

    // Every image homogeneous of degree (input degree + operator degree)?
    bool degrees_consistent() const;

private:
    BasisPtr basis_;
    int degree_ = 0;
    std::map<int, Element> images_;
};

// compose(f, g) applies g first; degree adds.
LinearOperator compose(const LinearOperator& f, const LinearOperator& g);

LinearOperator zero_operator(BasisPtr basis, int degree);

struct Violation {
    std::string rule;
    std::string witness;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    void add(std::string rule, std::string witness);
};

// Finite-dimensional graded associative algebra tabulated by structure
// constants, with optional unit, optional degree +1 operator and optional
// bilinear pairing.
class GradedAlgebra {
public:
    GradedAlgebra() = default;
    explicit GradedAlgebra(BasisPtr basis) : basis_(std::move(basis)) {}

    const BasisPtr& basis() const { return basis_; }

    void set_product(int i, int j, Element value);
    const Element& product(int i, int j) const;
    const std::map<std::pair<int, int>, Element>& products() const { return products_; }

    void set_unit(Element unit) { unit_ = std::move(unit); }
    const std::optional<Element>& unit() const { return unit_; }

    void set_delta(LinearOperator delta) { delta_ = std::move(delta); }
    const std::optional<LinearOperator>& delta() const { return delta_; }
    GradedAlgebra without_delta() const;

    void set_pairing(int i, int j, Scalar value);
    bool has_pairing() const { return has_pairing_; }
    Scalar pairing(int i, int j) const;
    Scalar pairing(const Element& a, const Element& b) const;
    const std::map<std::pair<int, int>, Scalar>& pairing_table() const { return pairing_; }

    Element multiply(const Element& a, const Element& b) const;

    std::string name;

private:
    BasisPtr basis_;
    std::map<std::pair<int, int>, Element> products_;
    std::optional<Element> unit_;
    std::optional<LinearOperator> delta_;
    std::map<std::pair<int, int>, Scalar> pairing_;
    bool has_pairing_ = false;
};

// Left-to-right iterated product; a single argument is returned unchanged.
Element iterated_product(const GradedAlgebra& alg, std::span<const Element> args);

// Checks grading of products, associativity on basis triples, unit laws,
// delta degree and delta^2 = 0 (when a delta is present). Violations are
// report entries, never exceptions.
ValidationReport validate_algebra(const GradedAlgebra& alg);

// Left multiplication by xi as a LinearOperator of degree deg(xi).
LinearOperator left_multiplication(const GradedAlgebra& alg, const Element& xi);

bool delta_square_is_zero(const GradedAlgebra& alg);

} // namespace ainf
