#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace ainf {

struct Check {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    bool pass = false;
    std::string note; // "order=2" on pass, witness on failure
};

struct Report {
    std::string command;
    std::string input;
    unsigned long seed = 0;
    std::vector<Check> checks;
    std::vector<std::pair<std::string, std::string>> ledger;

    bool all_pass() const;
    Check& add(std::string name);
    void pin(std::string key, std::string value);
};

// One "CHECK <name> <k=v>... <PASS|FAIL> [note]" line per check, then
// "LEDGER <key>=<value>" lines; byte-identical across runs with equal inputs.
void emit_report(const Report& report, std::ostream& os);

} // namespace ainf
