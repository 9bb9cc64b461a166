#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "mtop/errors.hpp"

namespace mtop {

// Ground set X together with the global multiplicity bound omega. Element
// order is the sorted name order; every other type addresses elements by
// their index into it.
class Universe {
public:
    Universe(std::vector<std::string> elements, int omega)
        : elements_(std::move(elements)), omega_(omega) {
        if (elements_.empty()) fail(errc::bad_input, "universe needs at least one element");
        if (omega_ < 1) fail(errc::bad_input, "omega must be >= 1");
        std::sort(elements_.begin(), elements_.end());
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            if (elements_[i].empty()) fail(errc::bad_input, "element names must be nonempty");
            if (i > 0 && elements_[i] == elements_[i - 1])
                fail(errc::bad_input, "duplicate element: " + elements_[i]);
        }
    }

    int size() const { return static_cast<int>(elements_.size()); }
    int omega() const { return omega_; }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& name(int i) const { return elements_[static_cast<std::size_t>(i)]; }

    // -1 when the name is not an element.
    int find(const std::string& name) const {
        auto it = std::lower_bound(elements_.begin(), elements_.end(), name);
        if (it == elements_.end() || *it != name) return -1;
        return static_cast<int>(it - elements_.begin());
    }

    int index_of(const std::string& name) const {
        int i = find(name);
        if (i < 0) fail(errc::unknown_element, "unknown element: " + name);
        return i;
    }

    friend bool operator==(const Universe& a, const Universe& b) {
        return a.omega_ == b.omega_ && a.elements_ == b.elements_;
    }
    friend bool operator!=(const Universe& a, const Universe& b) { return !(a == b); }

private:
    std::vector<std::string> elements_;
    int omega_;
};

using UniversePtr = std::shared_ptr<const Universe>;

inline UniversePtr make_universe(std::vector<std::string> elements, int omega) {
    return std::make_shared<Universe>(std::move(elements), omega);
}

// Deterministic element names for generated universes: x, y, z, then za..zz.
// Creation order coincides with sorted order, which the enumeration relies on.
inline std::vector<std::string> canonical_elements(int n) {
    if (n < 1 || n > 29) fail(errc::bad_input, "canonical universes support 1..29 elements");
    static const char* first[] = {"x", "y", "z"};
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (i < 3)
            out.emplace_back(first[i]);
        else
            out.push_back(std::string("z") + static_cast<char>('a' + (i - 3)));
    }
    return out;
}

inline UniversePtr canonical_universe(int n, int omega) {
    return make_universe(canonical_elements(n), omega);
}

inline bool same_universe(const UniversePtr& a, const UniversePtr& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_universe(const UniversePtr& a, const UniversePtr& b) {
    if (!same_universe(a, b)) fail(errc::universe_mismatch, "operands live in different universes");
}

}  // namespace mtop
