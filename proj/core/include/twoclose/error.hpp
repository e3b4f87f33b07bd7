#pragma once

#include <stdexcept>
#include <string>

namespace twoclose {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration (elements, subgroups, candidates) would exceed its cap.
struct cap_exceeded : error {
    explicit cap_exceeded(const std::string& what) : error(what) {}
};

// Two objects that must act on the same point set do not.
struct degree_mismatch : error {
    explicit degree_mismatch(const std::string& what) : error(what) {}
};

// Bad user input: group spec grammar, parameter ranges, malformed files.
struct spec_error : error {
    explicit spec_error(const std::string& what) : error(what) {}
};

// An internal invariant that must hold by construction was observed broken.
struct invariant_violation : error {
    explicit invariant_violation(const std::string& what) : error(what) {}
};

} // namespace twoclose
