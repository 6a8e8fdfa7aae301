#include "finitea/a_element.hpp"

#include "finitea/residue.hpp"

#include <algorithm>
#include <stdexcept>

namespace finitea {

AElement::AElement(std::vector<u64> window)
    : window_(std::move(window)), components_(window_.size()) {
    if (!std::is_sorted(window_.begin(), window_.end()))
        throw std::invalid_argument("AElement: window must be ascending");
}

AElement AElement::build(std::vector<u64> window, const std::function<Component(u64)>& f) {
    AElement a(std::move(window));
    for (std::size_t i = 0; i < a.size(); ++i) a.set(i, f(a.window_[i]));
    return a;
}

AElement AElement::zero(std::vector<u64> window) {
    return build(std::move(window), [](u64) -> Component { return 0; });
}

AElement AElement::constant(std::vector<u64> window, const Rational& q) {
    return build(std::move(window), [&q](u64 p) { return rational_mod(q, p); });
}

AElement::Component AElement::at(u64 p) const {
    auto it = std::lower_bound(window_.begin(), window_.end(), p);
    if (it == window_.end() || *it != p) return std::nullopt;
    return components_[static_cast<std::size_t>(it - window_.begin())];
}

void AElement::set(std::size_t i, Component value) {
    if (value) *value %= window_[i];
    components_[i] = value;
    if (!value) exceptional_bound_ = std::max(exceptional_bound_, window_[i]);
}

void AElement::raise_bound(u64 bound) { exceptional_bound_ = std::max(exceptional_bound_, bound); }

void AElement::check_window(const AElement& other) const {
    if (window_ != other.window_) throw std::invalid_argument("AElement: windows differ");
}

template <class Op>
AElement& AElement::combine(const AElement& other, Op op) {
    check_window(other);
    for (std::size_t i = 0; i < size(); ++i) {
        const auto& b = other.components_[i];
        auto& a = components_[i];
        if (a && b)
            a = op(*a, *b, window_[i]);
        else
            set(i, std::nullopt);
    }
    exceptional_bound_ = std::max(exceptional_bound_, other.exceptional_bound_);
    return *this;
}

AElement& AElement::operator+=(const AElement& other) { return combine(other, add_mod); }
AElement& AElement::operator-=(const AElement& other) { return combine(other, sub_mod); }

AElement AElement::operator-() const {
    AElement out = *this;
    for (std::size_t i = 0; i < size(); ++i)
        if (out.components_[i]) out.components_[i] = neg_mod(*out.components_[i], window_[i]);
    return out;
}

AElement AElement::scaled(const Rational& c) const {
    AElement out = *this;
    for (std::size_t i = 0; i < size(); ++i) {
        if (!out.components_[i]) continue;
        auto cr = rational_mod(c, window_[i]);
        out.set(i, cr ? Component(mul_mod(*cr, *out.components_[i], window_[i])) : std::nullopt);
    }
    return out;
}

std::vector<u64> AElement::mismatches(const AElement& other) const {
    check_window(other);
    const u64 bound = std::max(exceptional_bound_, other.exceptional_bound_);
    std::vector<u64> out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (window_[i] <= bound) continue;
        if (components_[i] != other.components_[i]) out.push_back(window_[i]);
    }
    return out;
}

bool AElement::equals(const AElement& other) const { return mismatches(other).empty(); }

}  // namespace finitea
