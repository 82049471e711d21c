#pragma once

#include <stdexcept>
#include <string>

namespace vexha {

// Invalid run configuration or spec document (CLI maps this to exit code 2).
class config_error : public std::runtime_error {
  public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// A solver left its numeric envelope (bracket failure, non-finite intermediate).
class numeric_error : public std::runtime_error {
  public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// A dense/exhaustive code path was asked to exceed its size cap.
class resource_error : public std::runtime_error {
  public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace vexha
