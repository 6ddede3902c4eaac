#pragma once

#include <stdexcept>
#include <string>

namespace zetamoment {

// Malformed or inconsistent input data (zero tables, bundled constants).
class data_error : public std::runtime_error {
public:
    explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

// A requested precision could not be certified with the given configuration.
class precision_error : public std::runtime_error {
public:
    precision_error(const std::string& what, double achieved_bits)
        : std::runtime_error(what), achieved_bits_(achieved_bits) {}

    double achieved_bits() const { return achieved_bits_; }

private:
    double achieved_bits_;
};

} // namespace zetamoment
