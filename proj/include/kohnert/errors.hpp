#pragma once

#include <stdexcept>
#include <string>

namespace kohnert {

// Input text could not be parsed; carries a 1-based position when known.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line = 0, int column = 0)
        : std::runtime_error(what), line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

// A configured cap (node count, chain enumeration, corpus size) was exceeded.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace kohnert
