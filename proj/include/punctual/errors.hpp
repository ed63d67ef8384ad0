#ifndef PUNCTUAL_ERRORS_HPP
#define PUNCTUAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace punctual {

// Base class for every error this library raises on purpose. `kind()` is the
// stable machine-readable name surfaced by the CLI.
class calc_error : public std::runtime_error {
public:
    calc_error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

struct not_divisible : calc_error {
    explicit not_divisible(const std::string& msg) : calc_error("NotDivisible", msg) {}
};

struct negative_exponent : calc_error {
    explicit negative_exponent(const std::string& msg) : calc_error("NegativeExponent", msg) {}
};

struct order_mismatch : calc_error {
    explicit order_mismatch(const std::string& msg) : calc_error("OrderMismatch", msg) {}
};

struct non_unit_constant : calc_error {
    explicit non_unit_constant(const std::string& msg) : calc_error("NonUnitConstant", msg) {}
};

struct nonzero_constant : calc_error {
    explicit nonzero_constant(const std::string& msg) : calc_error("NonzeroConstant", msg) {}
};

// Requests past the data boundary of the known fundamental strata (d >= 9).
struct unknown_stratum : calc_error {
    explicit unknown_stratum(const std::string& msg) : calc_error("UnknownStratum", msg) {}
};

struct out_of_range_error : calc_error {
    explicit out_of_range_error(const std::string& msg) : calc_error("OutOfRange", msg) {}
};

struct resource_limit : calc_error {
    explicit resource_limit(const std::string& msg) : calc_error("ResourceLimit", msg) {}
};

struct parse_error : calc_error {
    explicit parse_error(const std::string& msg) : calc_error("ParseError", msg) {}
};

// A stated internal invariant failed; indicates a bug or bad data, never user input.
struct invariant_violation : calc_error {
    explicit invariant_violation(const std::string& msg) : calc_error("InvariantViolation", msg) {}
};

} // namespace punctual

#endif
