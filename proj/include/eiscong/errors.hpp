#ifndef EISCONG_ERRORS_HPP
#define EISCONG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eiscong {

/// A p-adic computation could not decide its answer below the precision cap.
class PrecisionExhausted : public std::runtime_error {
public:
    explicit PrecisionExhausted(int precision)
        : std::runtime_error("undecided at precision " + std::to_string(precision)),
          precision_(precision) {}
    int precision() const { return precision_; }

private:
    int precision_;
};

/// A finite scan ended before it could certify its result.
class InconclusiveScan : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parsed and understood, but outside what the library computes.
class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace eiscong

#endif
