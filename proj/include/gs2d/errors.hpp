#pragma once

#include <stdexcept>
#include <string>

namespace gs2d {

// Malformed serialized data (bad magic, inconsistent structure).
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid container with a damaged payload (e.g. truncation).
struct CorruptError : std::runtime_error {
    explicit CorruptError(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedVersionError : std::runtime_error {
    explicit UnsupportedVersionError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

struct NearSingularError : std::runtime_error {
    explicit NearSingularError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gs2d
