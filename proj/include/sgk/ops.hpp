#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <type_traits>
#include <utility>

#include "sgk/domain.hpp"

namespace sgk {

/// Named binary operator closed over one domain.
template <Scalar T>
struct BinaryOp {
    std::string name;
    std::function<T(const T&, const T&)> fn;

    static constexpr Domain domain = domain_of<T>;

    T operator()(const T& a, const T& b) const { return fn(a, b); }
};

/// Named unary operator; input and output domains may differ.
template <Scalar In, Scalar Out = In>
struct UnaryOp {
    std::string name;
    std::function<Out(const In&)> fn;

    static constexpr Domain input_domain = domain_of<In>;
    static constexpr Domain output_domain = domain_of<Out>;

    Out operator()(const In& a) const { return fn(a); }
};

/// Commutative, associative operator with an identity.
template <Scalar T>
struct Monoid {
    BinaryOp<T> op;
    T identity;

    T operator()(const T& a, const T& b) const { return op(a, b); }
};

/// (add, mul, zero) algebra that parameterizes the multiplication kernels. `zero()` is the
/// additive identity, which must annihilate under `mul`.
template <Scalar T>
struct Semiring {
    std::string name;
    Monoid<T> add;
    BinaryOp<T> mul;

    static constexpr Domain domain = domain_of<T>;

    const T& zero() const noexcept { return add.identity; }
};

namespace ops {

namespace detail {

template <class T>
using wide_unsigned_t =
    std::conditional_t<(sizeof(T) < sizeof(unsigned)), unsigned, std::make_unsigned_t<T>>;

// Two's complement wrap-around; avoids signed overflow and integer promotion traps.
template <class T>
T wrapping_add(T a, T b) {
    if constexpr (std::is_integral_v<T> && !std::is_same_v<T, bool>) {
        using W = wide_unsigned_t<T>;
        return static_cast<T>(static_cast<W>(static_cast<W>(a) + static_cast<W>(b)));
    } else {
        return a + b;
    }
}

template <class T>
T wrapping_mul(T a, T b) {
    if constexpr (std::is_integral_v<T> && !std::is_same_v<T, bool>) {
        using W = wide_unsigned_t<T>;
        return static_cast<T>(static_cast<W>(static_cast<W>(a) * static_cast<W>(b)));
    } else {
        return a * b;
    }
}

template <class T>
T saturating_add(T a, T b) {
    if constexpr (std::is_floating_point_v<T>) {
        return a + b;
    } else {
        T out{};
        if (__builtin_add_overflow(a, b, &out)) {
            return (std::is_signed_v<T> && a < T{0}) ? std::numeric_limits<T>::lowest()
                                                     : std::numeric_limits<T>::max();
        }
        return out;
    }
}

}  // namespace detail

template <Scalar T>
    requires(!std::is_same_v<T, bool> && !std::is_same_v<T, OpaqueHandle>)
BinaryOp<T> plus() {
    return {"plus", [](const T& a, const T& b) { return detail::wrapping_add(a, b); }};
}

template <Scalar T>
    requires(!std::is_same_v<T, bool> && !std::is_same_v<T, OpaqueHandle>)
BinaryOp<T> times() {
    return {"times", [](const T& a, const T& b) { return detail::wrapping_mul(a, b); }};
}

template <OrderedScalar T>
BinaryOp<T> min() {
    return {"min", [](const T& a, const T& b) { return std::min(a, b); }};
}

template <OrderedScalar T>
BinaryOp<T> max() {
    return {"max", [](const T& a, const T& b) { return std::max(a, b); }};
}

inline BinaryOp<bool> lor() {
    return {"lor", [](const bool& a, const bool& b) { return a || b; }};
}

inline BinaryOp<bool> land() {
    return {"land", [](const bool& a, const bool& b) { return a && b; }};
}

template <Scalar T>
BinaryOp<T> first() {
    return {"first", [](const T& a, const T&) { return a; }};
}

template <Scalar T>
BinaryOp<T> second() {
    return {"second", [](const T&, const T& b) { return b; }};
}

/// Addition that saturates at the encoded infinities and treats `absorbing` as annihilating.
/// This is the multiplicative operator of the tropical semirings.
template <WeightScalar T>
BinaryOp<T> tropical_plus(T absorbing) {
    return {"plus", [absorbing](const T& a, const T& b) {
                if (a == absorbing || b == absorbing) return absorbing;
                return detail::saturating_add(a, b);
            }};
}

/// (a, b) -> b, except that `absorbing` on either side yields `absorbing`.
template <OrderedScalar T>
BinaryOp<T> select_second(T absorbing) {
    return {"select2nd", [absorbing](const T& a, const T& b) {
                if (a == absorbing || b == absorbing) return absorbing;
                return b;
            }};
}

template <Scalar T>
    requires(!std::is_same_v<T, bool> && !std::is_same_v<T, OpaqueHandle>)
BinaryOp<T> minus() {
    return {"minus", [](const T& a, const T& b) { return a - b; }};
}

template <Scalar T>
    requires(!std::is_same_v<T, bool> && !std::is_same_v<T, OpaqueHandle>)
BinaryOp<T> divide() {
    return {"div", [](const T& a, const T& b) { return a / b; }};
}

/// |a - b| for ordered domains; used for L1 residuals.
template <WeightScalar T>
BinaryOp<T> abs_diff() {
    return {"absdiff", [](const T& a, const T& b) { return a > b ? T(a - b) : T(b - a); }};
}

/// 1 when the operands differ, 0 otherwise (in the operand domain).
template <OrderedScalar T>
BinaryOp<T> not_equal() {
    return {"ne", [](const T& a, const T& b) { return static_cast<T>(a != b); }};
}

template <Scalar T>
    requires(!std::is_same_v<T, bool> && !std::is_same_v<T, OpaqueHandle>)
Monoid<T> plus_monoid() {
    return {plus<T>(), T{0}};
}

template <Scalar T>
    requires(!std::is_same_v<T, bool> && !std::is_same_v<T, OpaqueHandle>)
Monoid<T> times_monoid() {
    return {times<T>(), T{1}};
}

template <OrderedScalar T>
Monoid<T> min_monoid() {
    return {min<T>(), encoded_max<T>()};
}

template <OrderedScalar T>
Monoid<T> max_monoid() {
    return {max<T>(), encoded_min<T>()};
}

inline Monoid<bool> lor_monoid() { return {lor(), false}; }
inline Monoid<bool> land_monoid() { return {land(), true}; }

/// Natural duplicate-collapsing monoid for a domain: plus for numbers, logical or for booleans.
template <Scalar T>
Monoid<T> sum_monoid() {
    if constexpr (std::is_same_v<T, bool>) {
        return lor_monoid();
    } else if constexpr (std::is_same_v<T, OpaqueHandle>) {
        // Opaque values carry no arithmetic; keep the first occurrence.
        return {first<T>(), OpaqueHandle{}};
    } else {
        return plus_monoid<T>();
    }
}

template <Scalar In, Scalar Out = In>
UnaryOp<In, Out> identity_op() {
    return {"identity", [](const In& a) { return static_cast<Out>(a); }};
}

/// Maps every value to `value`; turns a weighted matrix into its pattern.
template <Scalar In, Scalar Out>
UnaryOp<In, Out> constant(Out value) {
    return {"constant", [value](const In&) { return value; }};
}

}  // namespace ops
}  // namespace sgk
