#pragma once

#include <optional>
#include <string>

#include <ubkit/certifiers.hpp>

namespace ubkit::cli {

// Exit codes: 0 positive verdict / success, 3 negative (or heuristic-negative)
// verdict, 1 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNegative = 3;

struct ConstructArgs {
    std::string family;
    std::string shape = "2,2";
    std::optional<std::string> indices;
    std::optional<std::string> points;
    int parties = 2;          // --k
    std::string bits = "01";  // --x
    int d = 2;                // --d
    int m = 0;
    int n = 0;
    std::optional<std::string> output;
};

struct CertifyArgs {
    std::string mode;
    std::string input;
    SeesawOptions opts;
    std::optional<std::string> output;
};

struct ReciprocalArgs {
    std::string input;
    SeesawOptions opts;
    std::optional<std::string> output;
};

struct DemoArgs {
    std::string name;
    std::string shape = "2,2";
    int parties = 2;
    std::string bits = "01";
    int d = 2;
    SeesawOptions opts;
    std::optional<std::string> output;
};

int cmd_construct(const ConstructArgs& args);
int cmd_certify(const CertifyArgs& args);
int cmd_reciprocal(const ReciprocalArgs& args);
int cmd_demo(const DemoArgs& args);

}  // namespace ubkit::cli
