#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace spdcoam {

// Input lies outside the range an operation is built to handle: degree
// guards, aliasing limits, mask-separation requirements and the like.
class BoundedDomainError : public std::domain_error {
public:
    explicit BoundedDomainError(const std::string& what) : std::domain_error(what) {}
};

// A computation produced no usable result, e.g. an angular spectrum whose
// orders all vanish on the supplied grid.
class NumericDegeneracyError : public std::runtime_error {
public:
    explicit NumericDegeneracyError(const std::string& what) : std::runtime_error(what) {}
};

// Configuration rejected; key_path() names the offending key so callers can
// report "crystal.K_bar: ..." style diagnostics.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key_path, const std::string& what)
        : std::runtime_error(key_path.empty() ? what : key_path + ": " + what),
          key_path_(std::move(key_path)) {}

    const std::string& key_path() const { return key_path_; }

private:
    std::string key_path_;
};

}  // namespace spdcoam
