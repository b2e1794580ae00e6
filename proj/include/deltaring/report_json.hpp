#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "deltaring/harness.hpp"
#include "deltaring/predicates.hpp"
#include "deltaring/profile.hpp"

namespace deltaring {

using Json = nlohmann::ordered_json;

// Every top-level report carries "kind" so one schema covers all commands.

Json report_to_json(const CheckReport& report);
Json outcome_to_json(const CheckOutcome& outcome);

/// {"kind":"check", ...CheckReport}
Json check_json(const CheckReport& report);
/// Sets of the ring plus every class verdict.
Json info_json(const RingProfile& profile);
/// {"kind":"verify", all_passed, checks:[outcome...]}
Json verify_json(const std::vector<CheckOutcome>& outcomes);
Json search_json(const std::vector<std::string>& include, const std::vector<std::string>& exclude,
                 std::size_t max_order, const std::vector<std::string>& rings);
Json classes_json();

std::string info_text(const RingProfile& profile);
std::string check_text(const CheckReport& report);
/// One row per check, then the counterexamples of failing checks.
std::string verify_text(const std::vector<CheckOutcome>& outcomes);
std::string search_text(const std::vector<std::string>& rings);
std::string classes_text();

}  // namespace deltaring
