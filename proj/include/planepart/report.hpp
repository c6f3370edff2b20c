#pragma once

// Verdict records shared by all verification sweeps.
//
// Exact checks can only produce HOLDS / FAILS / EQUALITY; UNCERTAIN is
// reserved for interval-backed checks whose enclosures overlap.

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace planepart {

enum class Verdict { HOLDS, FAILS, EQUALITY, UNCERTAIN };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::HOLDS: return "HOLDS";
        case Verdict::FAILS: return "FAILS";
        case Verdict::EQUALITY: return "EQUALITY";
        case Verdict::UNCERTAIN: return "UNCERTAIN";
    }
    return "?";
}

enum class ReportKind { BO_PP, BO_POLY, LOGCONCAVE_PP, TURAN_POLY, CFT_POLY, STEP, CUSTOM };

inline const char* to_string(ReportKind k) {
    switch (k) {
        case ReportKind::BO_PP: return "BO_PP";
        case ReportKind::BO_POLY: return "BO_POLY";
        case ReportKind::LOGCONCAVE_PP: return "LOGCONCAVE_PP";
        case ReportKind::TURAN_POLY: return "TURAN_POLY";
        case ReportKind::CFT_POLY: return "CFT_POLY";
        case ReportKind::STEP: return "STEP";
        case ReportKind::CUSTOM: return "CUSTOM";
    }
    return "?";
}

struct ReportEntry {
    static constexpr long no_index = std::numeric_limits<long>::min();

    long i = no_index;   // primary index (n, or a)
    long j = no_index;   // secondary index (b), when the check is over pairs
    Verdict verdict = Verdict::HOLDS;
    std::optional<std::string> witness;  // exact value or interval, as text

    bool has_pair() const { return j != no_index; }
};

class IneqReport {
public:
    IneqReport() = default;
    IneqReport(ReportKind kind, std::string range)
        : kind_(kind), range_(std::move(range)) {}

    ReportKind kind() const { return kind_; }
    const std::string& range() const { return range_; }
    const std::vector<ReportEntry>& entries() const { return entries_; }

    void add(long i, Verdict v, std::optional<std::string> witness = std::nullopt) {
        push({i, ReportEntry::no_index, v, std::move(witness)});
    }
    void add(long i, long j, Verdict v, std::optional<std::string> witness = std::nullopt) {
        push({i, j, v, std::move(witness)});
    }

    bool all_hold() const {
        for (const auto& e : entries_)
            if (e.verdict != Verdict::HOLDS) return false;
        return true;
    }

    std::size_t count(Verdict v) const {
        std::size_t c = 0;
        for (const auto& e : entries_)
            if (e.verdict == v) ++c;
        return c;
    }

    std::vector<ReportEntry> with_verdict(Verdict v) const {
        std::vector<ReportEntry> out;
        for (const auto& e : entries_)
            if (e.verdict == v) out.push_back(e);
        return out;
    }

private:
    void push(ReportEntry e) {
        // A failing or equality verdict is only as good as its evidence.
        if ((e.verdict == Verdict::FAILS || e.verdict == Verdict::EQUALITY) && !e.witness)
            throw std::logic_error("FAILS/EQUALITY entry without witness");
        entries_.push_back(std::move(e));
    }

    ReportKind kind_ = ReportKind::CUSTOM;
    std::string range_;
    std::vector<ReportEntry> entries_;
};

}  // namespace planepart
