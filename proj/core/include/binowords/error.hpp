#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace binowords {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live over different alphabets.
class AlphabetMismatch : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Malformed morphism text, generator spec or config file.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A word cannot be decoded as a suffix of an iterated Thue-Morse image.
class DecodeError : public Error {
public:
    using Error::Error;
};

/// A checked identity failed; signals a bug or a false conjecture.
class IdentityViolation : public Error {
public:
    using Error::Error;
};

/// The factor set of length n did not stabilize before the prefix cap.
class StabilizationError : public Error {
public:
    StabilizationError(std::size_t n, std::uint64_t before, std::uint64_t after, std::size_t cap)
        : Error("factors of length " + std::to_string(n) + " did not stabilize within a prefix of " +
                std::to_string(cap) + " symbols (counts " + std::to_string(before) + " -> " +
                std::to_string(after) + "); raise the prefix cap"),
          n_(n), before_(before), after_(after), cap_(cap) {}

    std::size_t length() const noexcept { return n_; }
    std::uint64_t count_before() const noexcept { return before_; }
    std::uint64_t count_after() const noexcept { return after_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t n_;
    std::uint64_t before_;
    std::uint64_t after_;
    std::size_t cap_;
};

} // namespace binowords
