#ifndef DEGENLIFT_COMMANDS_HPP
#define DEGENLIFT_COMMANDS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "degenlift/family.hpp"
#include "degenlift/lines.hpp"
#include "degenlift/report.hpp"

namespace degenlift {

struct CommandOptions {
    int order = 1;
    std::string component;  // factor index or coordinate name; empty = all
    std::string chart;
    bool expect_liftable = false;
    std::uint64_t seed = 1;
    int samples = 20;
    std::string line;                // "p0,p1,...;q0,q1,..."
    std::map<std::string, Rat> set;  // parameter specialization
    bool partial = false;            // tolerate irrational singular points
    int n = 3;                       // disk-profile dimension
    std::string census;              // census kind
};

struct CommandOutcome {
    Report report;
    int exit_code = 0;
};

const std::vector<std::string>& command_names();

// Canonical rendering of the options relevant to a command, used as the
// provenance command line.
std::string canonical_command(const std::string& command, const CommandOptions& opts);

// Runs one subcommand. Commands that read a family throw InvalidArgument
// when spec is absent; verify-example falls back to the built-in quartic.
CommandOutcome run_command(const std::string& command, const std::optional<FamilySpec>& spec,
                           const CommandOptions& opts);

// "1,0,0,1;0,0,-1,1" -> the line through the two points.
Line parse_line_option(const std::string& text, std::size_t dim);
// "a=1/2" -> ("a", 1/2).
std::pair<std::string, Rat> parse_assignment(const std::string& text);

}  // namespace degenlift

#endif
