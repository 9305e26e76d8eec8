#include "ainf/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace ainf {

namespace {
const Element& zero_of(const BasisPtr& basis) {
    static thread_local std::map<const GradedBasis*, Element> cache;
    auto [it, fresh] = cache.try_emplace(basis.get(), Element(basis));
    return it->second;
}
} // namespace

void LinearOperator::set_image(int index, Element value) {
    if (value.is_zero())
        images_.erase(index);
    else
        images_[index] = std::move(value);
}

const Element& LinearOperator::image_of(int index) const {
    auto it = images_.find(index);
    return it == images_.end() ? zero_of(basis_) : it->second;
}

Element LinearOperator::apply(const Element& x) const {
    if (!same_basis(basis_, x.basis()) && !x.is_zero())
        throw std::invalid_argument("basis mismatch in operator application");
    Element out(basis_);
    for (const auto& [i, c] : x.coeffs()) out.add_scaled(image_of(i), c);
    return out;
}

bool LinearOperator::is_zero() const {
    for (const auto& [i, v] : images_)
        if (!v.is_zero()) return false;
    return true;
}

bool LinearOperator::degrees_consistent() const {
    for (const auto& [i, v] : images_) {
        if (v.is_zero()) continue;
        auto d = v.homogeneous_degree();
        if (!d || *d != basis_->degree(i) + degree_) return false;
    }
    return true;
}

LinearOperator compose(const LinearOperator& f, const LinearOperator& g) {
    if (!same_basis(f.basis(), g.basis()))
        throw std::invalid_argument("basis mismatch in operator composition");
    LinearOperator out(f.basis(), f.degree() + g.degree());
    for (int i = 0; i < f.basis()->size(); ++i) {
        Element img = f.apply(g.image_of(i));
        if (!img.is_zero()) out.set_image(i, std::move(img));
    }
    return out;
}

LinearOperator zero_operator(BasisPtr basis, int degree) {
    return LinearOperator(std::move(basis), degree);
}

void ValidationReport::add(std::string rule, std::string witness) {
    violations.push_back({std::move(rule), std::move(witness)});
}

void GradedAlgebra::set_product(int i, int j, Element value) {
    if (value.is_zero())
        products_.erase({i, j});
    else
        products_[{i, j}] = std::move(value);
}

const Element& GradedAlgebra::product(int i, int j) const {
    auto it = products_.find({i, j});
    return it == products_.end() ? zero_of(basis_) : it->second;
}

GradedAlgebra GradedAlgebra::without_delta() const {
    GradedAlgebra out = *this;
    out.delta_.reset();
    return out;
}

void GradedAlgebra::set_pairing(int i, int j, Scalar value) {
    has_pairing_ = true;
    if (value == 0) {
        pairing_.erase({i, j});
    } else {
        pairing_[{i, j}] = std::move(value);
    }
}

Scalar GradedAlgebra::pairing(int i, int j) const {
    auto it = pairing_.find({i, j});
    return it == pairing_.end() ? Scalar(0) : it->second;
}

Scalar GradedAlgebra::pairing(const Element& a, const Element& b) const {
    Scalar out = 0;
    for (const auto& [i, ci] : a.coeffs())
        for (const auto& [j, cj] : b.coeffs()) out += ci * cj * pairing(i, j);
    return out;
}

Element GradedAlgebra::multiply(const Element& a, const Element& b) const {
    if ((!same_basis(basis_, a.basis()) && !a.is_zero()) ||
        (!same_basis(basis_, b.basis()) && !b.is_zero()))
        throw std::invalid_argument("basis mismatch in multiplication");
    Element out(basis_);
    for (const auto& [i, ci] : a.coeffs())
        for (const auto& [j, cj] : b.coeffs()) out.add_scaled(product(i, j), ci * cj);
    return out;
}

Element iterated_product(const GradedAlgebra& alg, std::span<const Element> args) {
    if (args.empty()) throw std::invalid_argument("iterated product needs arguments");
    Element out = args[0];
    for (size_t k = 1; k < args.size(); ++k) out = alg.multiply(out, args[k]);
    return out;
}

ValidationReport validate_algebra(const GradedAlgebra& alg) {
    ValidationReport report;
    const auto& basis = alg.basis();
    int n = basis->size();
    auto bname = [&](int i) { return basis->name(i); };

    for (const auto& [ij, v] : alg.products()) {
        if (v.is_zero()) continue;
        auto d = v.homogeneous_degree();
        int want = basis->degree(ij.first) + basis->degree(ij.second);
        if (!d || *d != want) {
            std::ostringstream os;
            os << bname(ij.first) << "*" << bname(ij.second) << " = " << v.to_string()
               << " (degree " << (d ? std::to_string(*d) : std::string("mixed")) << " vs "
               << want << ")";
            report.add("product_grading", os.str());
        }
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Element l = alg.multiply(alg.product(i, j), Element::basis_vector(basis, k));
                Element r = alg.multiply(Element::basis_vector(basis, i), alg.product(j, k));
                if (!(l == r)) {
                    std::ostringstream os;
                    os << "(" << bname(i) << "," << bname(j) << "," << bname(k) << "): "
                       << l.to_string() << " vs " << r.to_string();
                    report.add("associativity", os.str());
                }
            }

    if (alg.unit()) {
        for (int i = 0; i < n; ++i) {
            Element e = Element::basis_vector(basis, i);
            if (!(alg.multiply(*alg.unit(), e) == e) || !(alg.multiply(e, *alg.unit()) == e))
                report.add("unit_law", bname(i));
        }
    }

    if (alg.delta()) {
        const auto& delta = *alg.delta();
        if (delta.degree() != 1)
            report.add("delta_degree", "declared degree " + std::to_string(delta.degree()));
        for (const auto& [i, v] : delta.images()) {
            if (v.is_zero()) continue;
            auto d = v.homogeneous_degree();
            if (!d || *d != basis->degree(i) + 1)
                report.add("delta_degree", "delta " + bname(i) + " = " + v.to_string());
        }
        LinearOperator sq = compose(delta, delta);
        for (int i = 0; i < n; ++i) {
            Element v = sq.image_of(i);
            if (!v.is_zero())
                report.add("delta_square", "delta^2 " + bname(i) + " = " + v.to_string());
        }
    }

    if (alg.has_pairing()) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (alg.pairing(i, j) != alg.pairing(j, i))
                    report.add("pairing_symmetry", bname(i) + "." + bname(j));
    }

    return report;
}

LinearOperator left_multiplication(const GradedAlgebra& alg, const Element& xi) {
    auto deg = xi.homogeneous_degree();
    if (!deg && !xi.is_zero())
        throw std::invalid_argument("left multiplication needs a homogeneous element");
    LinearOperator out(alg.basis(), xi.is_zero() ? 1 : *deg);
    for (int i = 0; i < alg.basis()->size(); ++i) {
        Element img = alg.multiply(xi, Element::basis_vector(alg.basis(), i));
        if (!img.is_zero()) out.set_image(i, std::move(img));
    }
    return out;
}

bool delta_square_is_zero(const GradedAlgebra& alg) {
    if (!alg.delta()) return true;
    return compose(*alg.delta(), *alg.delta()).is_zero();
}

} // namespace ainf
