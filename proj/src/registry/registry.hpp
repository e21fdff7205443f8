#pragma once

#include <functional>
#include <string>
#include <vector>

namespace lamext {

// Named identity registry: every verifiable claim in the workbench is a named
// recipe producing a report. The CLI `verify` subcommand and the acceptance
// suite both run through this table.
struct IdentityReport {
    std::string name;
    int order = 0;              // truncation order the check ran at
    bool verified = false;
    int first_mismatch = -1;    // -1 when verified
    std::string detail;         // human-readable summary
};

struct IdentityEntry {
    std::string name;
    std::string summary;
    int default_order = 0;
    std::function<IdentityReport(int order)> run;
};

const std::vector<std::string>& identity_names();
const IdentityEntry& identity(const std::string& name);
IdentityReport run_identity(const std::string& name, int order = 0);  // 0 = default order

}  // namespace lamext
