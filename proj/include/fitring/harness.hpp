#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "fitring/modpres.hpp"

namespace fitring {

struct CampaignConfig {
    std::uint64_t p = 2;
    unsigned d = 1;
    unsigned nprec = 0; // 0 = auto: e * t_max + e + 2
    unsigned t_min = 1;
    unsigned t_max = 1;
    unsigned s_min = 0;
    unsigned s_max = 2;
    unsigned kill_exp = 2;
    std::uint64_t samples = 0; // random mode only
    std::uint64_t seed = 0;
    unsigned parallelism = 1;
    std::uint64_t minor_cap = 100000;
    std::uint64_t enum_cap = 200000;
    std::string out_path; // empty = no files written
    // custom coefficient value set as raw coordinates (p x d integers);
    // empty = default {0, 1, p, T, 1+T, p+T}
    std::vector<std::vector<std::vector<std::uint64_t>>> custom_values;

    unsigned effective_nprec() const {
        return nprec != 0 ? nprec : kill_exp * t_max + kill_exp + 2;
    }
};

struct CaseRecord {
    std::uint64_t index = 0;
    unsigned retries = 0;
    bool indeterminate = false;
    ModuleReport report;
};

struct CampaignSummary {
    std::uint64_t cases = 0;
    std::uint64_t equality_cases = 0;
    std::uint64_t principal_cases = 0;
    std::uint64_t equality_nonprincipal_cases = 0;
    std::uint64_t precision_retries = 0;
    std::uint64_t indeterminate_cases = 0;
    std::vector<std::string> violations;
    std::map<std::string, std::uint64_t> flag_pass;
    std::map<std::string, std::uint64_t> flag_fail;
    double wall_seconds = 0.0;
    std::vector<CaseRecord> rows;
};

std::vector<GroupRingElem> default_value_set(const Cfg& cfg);
std::vector<GroupRingElem> campaign_value_set(const CampaignConfig& cc, const Cfg& cfg);

// Full per-presentation dossier with every invariant flag evaluated.
ModuleReport analyze(const Presentation& P, std::uint64_t minor_cap = 100000);

// analyze with the precision-retry policy: on PrecisionExhausted, lift the
// presentation to doubled Nprec, at most max_retries times; if still
// exhausted, the record is marked indeterminate.
CaseRecord analyze_with_retry(const Presentation& P, std::uint64_t minor_cap,
                              unsigned max_retries = 2);

// Every t x s matrix over the value set (kill columns appended), in a
// deterministic order. Throws CapacityExceeded past cc.enum_cap.
std::vector<Presentation> enumerate_presentations(const CampaignConfig& cc);

// Deterministic function of (seed, index).
Presentation random_presentation(const CampaignConfig& cc, const Cfg& cfg, std::uint64_t index);

// Brute-force coset/ideal enumeration cross-check; d = 1 and a total
// module size of at most 2^16 are required.
bool oracle_check(const Presentation& P);

CampaignSummary campaign(const CampaignConfig& cc, bool exhaustive);

// 0 = clean, 1 = violations, 3 = indeterminate cases present
int summary_exit_code(const CampaignSummary& s);

void write_summary_files(const CampaignSummary& s, const std::string& out_path);

} // namespace fitring
