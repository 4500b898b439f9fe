#pragma once

#include <stdexcept>
#include <string>

namespace nischeck {

/// Base class for all recoverable engine errors. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A second EquivalentClasses axiom was added for a class that already has one.
class DuplicateDefinitionError : public Error {
public:
    using Error::Error;
};

/// Adding a SubPropertyOf axiom would close a non-trivial cycle.
class CyclicPropertyHierarchyError : public Error {
public:
    using Error::Error;
};

class UnknownPrefixError : public Error {
public:
    using Error::Error;
};

class UnknownIndividualError : public Error {
public:
    using Error::Error;
};

/// Gap analysis was asked about a target class with no EquivalentClasses definition.
class UndefinedTargetError : public Error {
public:
    using Error::Error;
};

/// A query pattern uses a feature outside the supported subset.
class UnsupportedFeatureError : public Error {
public:
    using Error::Error;
};

} // namespace nischeck
