#pragma once

#include <string>
#include <vector>

namespace qrabi::validate {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string details;  // one line per sub-check
    double seconds = 0.0;
};

// Criterion ids are 1..10. quick drops 9 (the long-integration spectra).
std::vector<int> criteria_ids(bool quick);

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run(const std::vector<int>& ids);

std::string format_result(const CriterionResult& r);

}  // namespace qrabi::validate
