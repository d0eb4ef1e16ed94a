#ifndef OHMCURVE_ERRORS_HPP
#define OHMCURVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ohmcurve {

// Malformed textual input (graph6, edge list, rational strings).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class SingularMatrixError : public std::runtime_error {
public:
    enum class Kind { structural, numerical };

    SingularMatrixError(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

} // namespace ohmcurve

#endif
