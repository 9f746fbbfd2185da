#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kshell::cli {

// Parsed command line. Exactly one command per invocation.
struct RunConfig {
    std::string command;
    std::string input;             // path of the complex/graph/ideal file
    int k = 1;
    std::vector<int> alpha;        // per-vertex multiplicities; empty = use k
    std::vector<int> order;        // facet order for check-order / stanley
    bool has_order = false;
    int max_degree = 5;
    int target = -1;               // -1 = derive from the input
    std::string strategy = "direct";
    double timeout_seconds = 60.0;
    std::string format = "text";   // text | json
    bool deterministic = true;
};

// Exit status: 0 accept/success, 1 reject/none, 2 input error,
// 3 timeout/undecided.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace kshell::cli
