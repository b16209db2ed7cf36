#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace lcf {

/// Arbitrary-precision integer used for every count in the library.
using Count = mpz_class;

/// Colors are positive integers.
using Color = int;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad arguments or violated preconditions.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An exhaustive computation ran past its configured budget.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

/// A list assignment whose shape does not match the graph.
class ShapeMismatch : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// Closed form requested for a family it does not cover.
class UnsupportedFamily : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// A list assignment not of the fixed K_{2,l} shape used by balanced profiles.
class StructuralError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// A certificate failed its own re-verification.
class VerificationError : public Error {
public:
    using Error::Error;
};

/// Limits for the brute-force oracles. Exceeding one raises ResourceLimitError.
struct Budget {
    std::uint64_t max_nodes = 50'000'000;       // backtracking / deletion-contraction calls
    std::uint64_t max_assignments = 20'000'000; // canonical list assignments visited
    unsigned workers = 1;                       // threads for canonical minimization

    /// Defaults, with both limits replaced by $LCF_BUDGET when it is set.
    static Budget from_env();
};

/// Counts calls against a limit; throws once the limit is passed.
class NodeMeter {
public:
    NodeMeter(std::uint64_t limit, const char* what) : limit_(limit), what_(what) {}

    void tick()
    {
        if (++used_ > limit_)
            throw ResourceLimitError(std::string(what_) + ": budget of " + std::to_string(limit_) +
                                     " exceeded");
    }
    std::uint64_t used() const { return used_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
    const char* what_;
};

inline Count pow(const Count& base, unsigned long exp)
{
    Count r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Count pow(long base, unsigned long exp)
{
    return pow(Count(base), exp);
}

inline std::string to_decimal(const Count& c)
{
    return c.get_str(10);
}

Count parse_decimal(const std::string& s);

} // namespace lcf
