#include "ainf/report.hpp"

namespace ainf {

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

Check& Report::add(std::string name) {
    checks.push_back(Check{std::move(name), {}, false, ""});
    return checks.back();
}

void Report::pin(std::string key, std::string value) {
    for (auto& [k, v] : ledger)
        if (k == key) {
            v = std::move(value);
            return;
        }
    ledger.emplace_back(std::move(key), std::move(value));
}

void emit_report(const Report& report, std::ostream& os) {
    os << "# ainf report command=" << report.command << " input=" << report.input
       << " seed=" << report.seed << "\n";
    for (const auto& c : report.checks) {
        os << "CHECK " << c.name;
        for (const auto& [k, v] : c.params) os << " " << k << "=" << v;
        os << (c.pass ? " PASS" : " FAIL");
        if (!c.note.empty()) os << " " << c.note;
        os << "\n";
    }
    for (const auto& [k, v] : report.ledger) os << "LEDGER " << k << "=" << v << "\n";
}

} // namespace ainf
