#ifndef CHARSUB_CLI_H_
#define CHARSUB_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace charsub {

// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;

// args excludes the program name. Caps come from the environment.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace charsub

#endif  // CHARSUB_CLI_H_
