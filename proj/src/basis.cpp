#include "ainf/basis.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ainf {

GradedBasis::GradedBasis(std::vector<Entry> entries) : entries_(std::move(entries)) {
    for (size_t i = 0; i < entries_.size(); ++i) {
        auto [it, fresh] = index_.emplace(entries_[i].name, static_cast<int>(i));
        if (!fresh)
            throw std::invalid_argument("duplicate basis name: " + entries_[i].name);
    }
}

std::shared_ptr<const GradedBasis> GradedBasis::make(std::vector<Entry> entries) {
    return std::shared_ptr<const GradedBasis>(new GradedBasis(std::move(entries)));
}

std::optional<int> GradedBasis::index_of(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> GradedBasis::degrees_present() const {
    std::set<int> degs;
    for (const auto& e : entries_) degs.insert(e.degree);
    return {degs.begin(), degs.end()};
}

bool GradedBasis::operator==(const GradedBasis& other) const {
    if (entries_.size() != other.entries_.size()) return false;
    for (size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].name != other.entries_[i].name ||
            entries_[i].degree != other.entries_[i].degree)
            return false;
    return true;
}

bool same_basis(const BasisPtr& a, const BasisPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

Element Element::basis_vector(BasisPtr basis, int index) {
    Element e(std::move(basis));
    e.coeffs_[index] = 1;
    return e;
}

Scalar Element::coeff(int index) const {
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? Scalar(0) : it->second;
}

std::optional<int> Element::homogeneous_degree() const {
    if (coeffs_.empty()) return std::nullopt;
    int deg = basis_->degree(coeffs_.begin()->first);
    for (const auto& [i, c] : coeffs_)
        if (basis_->degree(i) != deg) return std::nullopt;
    return deg;
}

std::map<int, Element> Element::homogeneous_components() const {
    std::map<int, Element> out;
    for (const auto& [i, c] : coeffs_) {
        auto [it, fresh] = out.try_emplace(basis_->degree(i), Element(basis_));
        it->second.coeffs_[i] = c;
    }
    return out;
}

void Element::check_same_basis(const Element& other) const {
    if (!same_basis(basis_, other.basis_))
        throw std::invalid_argument("basis mismatch between elements");
}

Element& Element::add_scaled(const Element& other, const Scalar& c) {
    if (other.is_zero() || c == 0) return *this;
    if (!basis_) basis_ = other.basis_;
    check_same_basis(other);
    for (const auto& [i, v] : other.coeffs_) {
        auto it = coeffs_.find(i);
        if (it == coeffs_.end()) {
            coeffs_.emplace(i, c * v);
        } else {
            it->second += c * v;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

Element& Element::scale(const Scalar& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [i, v] : coeffs_) v *= c;
    return *this;
}

Element Element::operator-() const {
    Element out = *this;
    out.scale(-1);
    return out;
}

void Element::set_coeff(int index, Scalar c) {
    if (c == 0)
        coeffs_.erase(index);
    else
        coeffs_[index] = std::move(c);
}

bool Element::operator==(const Element& other) const {
    if (is_zero() && other.is_zero()) return true;
    if (!same_basis(basis_, other.basis_)) return false;
    return coeffs_ == other.coeffs_;
}

std::string Element::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : coeffs_) {
        Scalar a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1) os << format_scalar(a) << "*";
        os << basis_->name(i);
        first = false;
    }
    return os.str();
}

} // namespace ainf
