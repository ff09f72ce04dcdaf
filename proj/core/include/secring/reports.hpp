#ifndef SECRING_REPORTS_HPP
#define SECRING_REPORTS_HPP

#include <cstdint>
#include <string>

#include <secring/cover.hpp>
#include <secring/graded.hpp>
#include <secring/scenarios.hpp>
#include <secring/section_ring.hpp>

namespace secring {

struct ReportOptions {
    std::int64_t window_lo = -20;
    std::int64_t window_hi = 20;
    long bound = 60;
    long max_basis = 50'000;
    long max_degree = 12;
    bool json = false;
    bool dump_basis = false;
    int indent = 2;
};

// Reports state their window; conclusions marked "certified" are
// window-independent, table entries are window-scoped. JSON output has
// stable key order and exact fraction strings (byte-identical for
// identical inputs).
std::string divisor_report(const QDivisor& D, const ReportOptions& opts);
std::string ring_report(const SectionRing& R, const ReportOptions& opts);
std::string cover_report(const CoverDescriptor& C, const ReportOptions& opts);
std::string segre_report(const GradedObject& left, const GradedObject& right,
                         const ReportOptions& opts);
std::string sections_report(const SectionRing& R, const ReportOptions& opts);
std::string scenario_report(const ScenarioReport& rep, const ReportOptions& opts);

} // namespace secring

#endif
