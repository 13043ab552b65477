#pragma once

#include <stdexcept>
#include <string>

namespace dpsn {

enum class ErrorKind { Config, Data, Runtime };

/// Exception carrying a coarse category so the CLI can map failures to
/// distinct exit codes (config=2, data=3, runtime=4).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    int exit_code() const noexcept {
        switch (kind_) {
            case ErrorKind::Config: return 2;
            case ErrorKind::Data: return 3;
            case ErrorKind::Runtime: return 4;
        }
        return 4;
    }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_config(const std::string& msg) { throw Error(ErrorKind::Config, msg); }
[[noreturn]] inline void throw_data(const std::string& msg) { throw Error(ErrorKind::Data, msg); }
[[noreturn]] inline void throw_runtime(const std::string& msg) { throw Error(ErrorKind::Runtime, msg); }

}  // namespace dpsn
