#pragma once

#include <stdexcept>
#include <string>

namespace ness {

/// Invalid argument or precondition violation (bad spin pairing, part size
/// out of range, malformed grid, ...).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// A computation left the representable range (non-finite intermediate
/// despite log-domain scaling).
class numeric_range_error : public std::range_error {
public:
    explicit numeric_range_error(const std::string& what) : std::range_error(what) {}
};

/// A density matrix failed a structural invariant (Hermiticity, unit trace).
class invariant_error : public std::runtime_error {
public:
    explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

/// An eigenvalue fell below the positivity floor; signals an upstream bug.
class positivity_error : public std::runtime_error {
public:
    explicit positivity_error(const std::string& what) : std::runtime_error(what) {}
};

/// Liouvillian null space is not one-dimensional where it must be.
class degeneracy_error : public std::runtime_error {
public:
    explicit degeneracy_error(const std::string& what) : std::runtime_error(what) {}
};

/// Time integration became unstable; the message names the offending time.
class integration_error : public std::runtime_error {
public:
    explicit integration_error(const std::string& what) : std::runtime_error(what) {}
};

/// Request exceeds a hard size guard (dense superoperator scale).
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ness
