#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "redhom/rational.hpp"

namespace redhom {

// Cubical rank-3 array over Rational, flat index (i*n + j)*n + k.
struct Tensor3 {
    std::size_t n = 0;
    std::vector<Rational> v;

    Tensor3() = default;
    explicit Tensor3(std::size_t dim) : n(dim), v(dim * dim * dim) {}

    Rational& at(std::size_t i, std::size_t j, std::size_t k) {
        assert(i < n && j < n && k < n);
        return v[(i * n + j) * n + k];
    }
    const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
        assert(i < n && j < n && k < n);
        return v[(i * n + j) * n + k];
    }

    bool is_zero() const {
        for (const Rational& x : v)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Tensor3&, const Tensor3&) = default;
};

// Cubical rank-4 array over Rational, flat index ((i*n + j)*n + k)*n + l.
struct Tensor4 {
    std::size_t n = 0;
    std::vector<Rational> v;

    Tensor4() = default;
    explicit Tensor4(std::size_t dim) : n(dim), v(dim * dim * dim * dim) {}

    Rational& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        assert(i < n && j < n && k < n && l < n);
        return v[((i * n + j) * n + k) * n + l];
    }
    const Rational& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        assert(i < n && j < n && k < n && l < n);
        return v[((i * n + j) * n + k) * n + l];
    }

    bool is_zero() const {
        for (const Rational& x : v)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Tensor4&, const Tensor4&) = default;
};

} // namespace redhom
