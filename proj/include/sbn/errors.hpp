#pragma once

#include <stdexcept>
#include <string>

namespace sbn {

/// Malformed external input: graph6 lines, edge lists, assignment strings,
/// family parameter text.
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation was asked to run on a graph larger than its configured limit.
class cap_exceeded : public std::length_error {
public:
    cap_exceeded(const std::string& what, int order, int cap)
        : std::length_error(what + ": order " + std::to_string(order) + " exceeds cap " + std::to_string(cap)),
          order_(order),
          cap_(cap) {}

    int order() const noexcept { return order_; }
    int cap() const noexcept { return cap_; }

private:
    int order_;
    int cap_;
};

}  // namespace sbn
