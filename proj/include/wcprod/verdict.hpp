#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace wcprod {

enum class ClaimStatus { holds, vacuous, counterexample };

std::string_view to_string(ClaimStatus status) noexcept;

/// Outcome of checking one claim on one instance.
///
/// A counterexample always carries a witness with enough data to re-check it
/// by hand; a vacuous verdict records which hypothesis failed in `witness`.
struct ClaimVerdict {
    std::string claim_id;
    std::string instance;
    ClaimStatus status = ClaimStatus::holds;
    nlohmann::json witness;

    bool holds() const noexcept { return status == ClaimStatus::holds; }
    bool vacuous() const noexcept { return status == ClaimStatus::vacuous; }
    bool counterexample() const noexcept { return status == ClaimStatus::counterexample; }
};

nlohmann::json to_json(const ClaimVerdict& verdict);

}  // namespace wcprod
