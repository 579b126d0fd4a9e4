#pragma once

#include <stdexcept>
#include <string>

namespace finhtop {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CycleError : public Error {
public:
    using Error::Error;
};

class UnknownElement : public Error {
public:
    explicit UnknownElement(const std::string& id)
        : Error("unknown element '" + id + "'"), element_(id) {}
    const std::string& element() const noexcept { return element_; }

private:
    std::string element_;
};

class DuplicateElement : public Error {
public:
    using Error::Error;
};

class InvalidIdentifier : public Error {
public:
    using Error::Error;
};

class NotOrderPreserving : public Error {
public:
    using Error::Error;
};

class NotSimplicial : public Error {
public:
    using Error::Error;
};

class DomainMismatch : public Error {
public:
    using Error::Error;
};

class SizeLimitExceeded : public Error {
public:
    using Error::Error;
};

class EmptyPoset : public Error {
public:
    EmptyPoset() : Error("operation requires a nonempty poset") {}
};

class EmptyComplex : public Error {
public:
    EmptyComplex() : Error("operation requires a nonempty simplicial complex") {}
};

class InvalidComplex : public Error {
public:
    using Error::Error;
};

class MissingFiber : public Error {
public:
    using Error::Error;
};

class MissingTransition : public Error {
public:
    using Error::Error;
};

/// Two chains between the same pair of index elements compose to different maps.
class FunctorialityError : public Error {
public:
    FunctorialityError(std::string p, std::string q, std::string r)
        : Error("diagram is not functorial along (" + p + ", " + q + ", " + r + ")"),
          p_(std::move(p)), q_(std::move(q)), r_(std::move(r)) {}
    const std::string& p() const noexcept { return p_; }
    const std::string& q() const noexcept { return q_; }
    const std::string& r() const noexcept { return r_; }

private:
    std::string p_, q_, r_;
};

class NotNatural : public Error {
public:
    using Error::Error;
};

class HypothesisFailed : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace finhtop
