#pragma once

// Windowed representative of an element of the ring A = prod Z/pZ / sum Z/pZ.
// Each window prime carries a residue or nothing (an exceptional prime).
// Equality only looks at primes strictly above the exceptional bound.

#include "finitea/modular.hpp"
#include "finitea/rational.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace finitea {

class AElement {
public:
    using Component = std::optional<u64>;

    AElement() = default;
    /// All components undefined until set.
    explicit AElement(std::vector<u64> window);

    /// Evaluates f at each window prime; undefined results raise the bound.
    static AElement build(std::vector<u64> window, const std::function<Component(u64 p)>& f);
    static AElement zero(std::vector<u64> window);
    /// The diagonal image of a rational; primes dividing its denominator are exceptional.
    static AElement constant(std::vector<u64> window, const Rational& q);

    const std::vector<u64>& window() const { return window_; }
    std::size_t size() const { return window_.size(); }
    const Component& operator[](std::size_t i) const { return components_[i]; }
    /// Component at prime p; nullopt if p is not in the window or undefined there.
    Component at(u64 p) const;

    void set(std::size_t i, Component value);

    u64 exceptional_bound() const { return exceptional_bound_; }
    /// Marks every prime <= bound as carrying no meaning.
    void raise_bound(u64 bound);

    /// True when the component at index i takes part in equality tests.
    bool admissible(std::size_t i) const {
        return components_[i].has_value() && window_[i] > exceptional_bound_;
    }

    AElement& operator+=(const AElement& other);
    AElement& operator-=(const AElement& other);
    friend AElement operator+(AElement a, const AElement& b) { return a += b; }
    friend AElement operator-(AElement a, const AElement& b) { return a -= b; }
    AElement operator-() const;
    /// Multiplies by a rational constant; primes dividing its denominator become exceptional.
    AElement scaled(const Rational& c) const;

    /// A-equality: agreement at every window prime above both bounds.
    bool equals(const AElement& other) const;
    /// Window primes above both bounds where the two elements differ.
    std::vector<u64> mismatches(const AElement& other) const;

private:
    template <class Op>
    AElement& combine(const AElement& other, Op op);
    void check_window(const AElement& other) const;

    std::vector<u64> window_;
    std::vector<Component> components_;
    u64 exceptional_bound_ = 0;
};

}  // namespace finitea
