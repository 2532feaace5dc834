#pragma once

#include <stdexcept>
#include <string>

namespace cfic {

// Every failure the library reports deliberately falls in one of three buckets;
// the CLI maps them to exit codes (domain/parse -> 1, budget -> 2).
enum class ErrorKind { domain, parse, budget };

struct Error : std::runtime_error {
    ErrorKind kind;
    Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail_domain(const std::string& msg) {
    throw Error(ErrorKind::domain, msg);
}

[[noreturn]] inline void fail_parse(int line, const std::string& msg) {
    throw Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + msg);
}

[[noreturn]] inline void fail_budget(const std::string& msg) {
    throw Error(ErrorKind::budget, msg);
}

} // namespace cfic
